#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcomplex/check.hpp"
#include "tensorcomplex/pi_scalar.hpp"
#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

// All integrals are over the open unit ball.

/// Exact integral; always a rational multiple of pi.
PiScalar integrate_ball(const Poly3& p);

/// Integral of the pointwise product (scalar, dot or Frobenius).
PiScalar l2_pair(const TypedField& a, const TypedField& b);

/// (1 - |x|^2)^k
Poly3 bump(unsigned k);

enum class MomentSpace { Constants, P1, RT, ND };

std::string_view moment_space_name(MomentSpace s);

/// Basis of the moment space for fields of the given kind. Constants exist for
/// scalars and vectors, P1 for scalars, RT and ND for vectors; otherwise KindError.
std::vector<TypedField> moment_basis(MomentSpace s, FieldKind kind);

struct MomentCheck {
  bool orthogonal = true;
  /// First basis element with a nonzero pairing, and that pairing.
  std::optional<TypedField> offending;
  PiScalar value;
};

MomentCheck moment_orthogonal(const TypedField& f, MomentSpace s);

/// f - weight * r with r in the moment space chosen so that the result is orthogonal to it.
TypedField orthogonalize(const TypedField& f, MomentSpace s, const Poly3& weight);

enum class PairingId { QGrad, SigmaDeff, SigmaHess, GSymCurl, GInc, TauCurl, TauDevGrad, TauCurlDeff };

const std::vector<PairingId>& all_pairings();
std::string_view pairing_name(PairingId id);
std::optional<PairingId> parse_pairing(std::string_view name);
std::string_view pairing_statement(PairingId id);
/// Smallest bump order for which boundary terms vanish: the derivative order on the test field.
unsigned min_bump_order(PairingId id);

/// Left and right side of the pairing for a field and a compactly supported test field.
std::pair<PiScalar, PiScalar> pairing_sides(PairingId id, const TypedField& field, const TypedField& test);

/// Checks the pairing with test fields bump(bump_order) * (random polynomial).
/// Throws std::invalid_argument if bump_order < min_bump_order(id).
CheckOutcome verify_ibp(PairingId id, std::size_t samples, int degree, unsigned bump_order, std::uint64_t seed);

/// Integral of d_i(bump(k) p) vanishes for k >= 1.
CheckOutcome verify_master_ibp(std::size_t samples, int degree, unsigned bump_order, std::uint64_t seed);

/// Orthogonality steps used to show that divergence, curl and gradient land in the
/// moment-constrained spaces, plus a negative control.
std::vector<NamedOutcome> verify_membership_steps(std::size_t samples, int degree, std::uint64_t seed);

}  // namespace tensorcomplex
