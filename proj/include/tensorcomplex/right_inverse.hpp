#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensorcomplex/ballpair.hpp"
#include "tensorcomplex/check.hpp"
#include "tensorcomplex/diffops.hpp"

namespace tensorcomplex {

enum class RightInverseId {
  Dcc,
  RggTilde,
  Dgg,
  Ddd,
  RccTilde,
  Dcd,
  RgcTilde,
  DgcTilde,
  Rgc,
  Dgc,
  Dgd,
  Rgg,
  Rgd,
  RgcT,
  Rcc,
  Rcd,
  Rg,
  RcPlain,
  RdPlain,
};

struct RightInverseInfo {
  RightInverseId id;
  std::string name;
  FieldKind input;
  /// The input must lie in the kernel of each of these operators.
  std::vector<OpName> kernel;
  /// Moment space the input must be orthogonal to under strict preconditions.
  std::optional<MomentSpace> moments;
  FieldKind output;
  std::string identity;
};

const std::vector<RightInverseInfo>& right_inverse_catalog();
const RightInverseInfo& right_inverse_info(RightInverseId id);
std::optional<RightInverseId> parse_right_inverse(std::string_view name);

/// Raised when an input violates a kernel or moment constraint.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string constraint, TypedField witness);
  const std::string& constraint() const { return constraint_; }
  /// The nonzero field proving the violation.
  const TypedField& witness() const { return witness_; }

 private:
  std::string constraint_;
  TypedField witness_;
};

struct RightInverseOptions {
  /// Also require the moment orthogonality conditions (see RightInverseInfo::moments).
  bool strict_moments = false;
};

/// Throws PreconditionError if f violates the id's constraints.
void check_preconditions(RightInverseId id, const TypedField& f, const RightInverseOptions& options = {});

/// Verifies preconditions, then runs the Koszul construction.
TypedField right_inverse(RightInverseId id, const TypedField& f, const RightInverseOptions& options = {});

/// Field that vanishes iff the defining identity holds for (input, output). Rgc_tilde and
/// Dgc_tilde are only meaningful together and are checked through defining_residual_pair.
TypedField defining_residual(RightInverseId id, const TypedField& input, const TypedField& output);
/// curl(Rgc_tilde t + deff Dgc_tilde t) - t.
TypedField defining_residual_pair(const TypedField& input, const TypedField& rgc_tilde, const TypedField& dgc_tilde);

/// A verification case: one defining identity, checked on every id it involves.
struct RightInverseCase {
  std::string name;
  std::vector<RightInverseId> ids;
};

/// 17 cases; the Rgc_tilde/Dgc_tilde pair and the two plain bottom-row inverses are grouped.
const std::vector<RightInverseCase>& right_inverse_cases();

/// Runs the case on `samples` kernel-sampled inputs. Precondition violations are
/// reported with status error and the violating field as witness.
CheckOutcome check_right_inverse_case(const RightInverseCase& c, std::size_t samples, int degree, std::uint64_t seed,
                                      const RightInverseOptions& options = {});

/// A kernel-respecting random input for the id.
/// Under strict moments the sample is projected orthogonal to the moment space, which keeps it in the kernel.
TypedField sample_right_inverse_input(RightInverseId id, int degree, std::uint64_t seed,
                                      const RightInverseOptions& options = {});

}  // namespace tensorcomplex
