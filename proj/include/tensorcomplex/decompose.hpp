#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcomplex/check.hpp"
#include "tensorcomplex/diffops.hpp"
#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

enum class DecompositionKind { Cc, Dd, Cd };

std::string_view decomposition_kind_name(DecompositionKind k);
std::optional<DecompositionKind> parse_decomposition_kind(std::string_view name);

struct DecompositionPart {
  std::string label;
  TypedField potential;
  /// Operator mapping the potential back into the input space; nullopt is the identity.
  std::optional<OpName> reassembly;

  TypedField contribution() const;
};

struct Decomposition {
  std::string name;
  TypedField input;
  std::vector<DecompositionPart> parts;
  /// Sum of all part contributions.
  TypedField reassembled;

  bool exact() const { return reassembled.same_values(input); }
};

/// g = S0 + deff S1 + hess S2 for symmetric g.
Decomposition regdec_cc(const TypedField& g);
/// s = S0 + sym curl S1 + inc S2 for symmetric s; S1 is trace-free.
Decomposition regdec_dd(const TypedField& s);
/// t = S0 + curl S1 + T_dev_grad S2 + curl deff S3 for trace-free t.
Decomposition regdec_cd(const TypedField& t);
/// Two-part cc/dd variants and the three-part cd variant.
Decomposition regdec_short(const TypedField& f, DecompositionKind which);

Decomposition decompose(const TypedField& f, DecompositionKind which, bool short_variant);

/// Field text of the input and every potential, each preceded by a header line.
std::string decomposition_to_text(const Decomposition& d);

struct DecompositionCase {
  std::string name;
  DecompositionKind kind;
  bool short_variant;
};

/// The three full and three short decompositions.
const std::vector<DecompositionCase>& decomposition_cases();

/// Exact reconstruction and part kinds on `samples` random inputs.
CheckOutcome check_decomposition_case(const DecompositionCase& c, std::size_t samples, int degree,
                                      std::uint64_t seed);

}  // namespace tensorcomplex
