#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcomplex/check.hpp"

namespace tensorcomplex {

struct IdentityInfo {
  std::string name;
  std::string statement;
};

/// The pointwise/first-order identities (div-mskw, mskw-grad, mskw-curl, skw-curl,
/// S-grad, tr-curl) followed by the commutation identities (div-T-curl, curl-T-grad,
/// div-sym-curl-T, curl-deff, div-T-dev-grad).
const std::vector<IdentityInfo>& identity_catalog();

/// Checks the named identity on `samples` random fields of degree <= degree.
/// Throws std::invalid_argument for an unknown name.
CheckOutcome verify_identity(std::string_view name, std::size_t samples, int degree, std::uint64_t seed);

}  // namespace tensorcomplex
