#pragma once

#include <string>
#include <string_view>

#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

/// Plain-text field format:
///
///   kind sym
///   1 1 : 1/12 * x1^2
///   1 2 : 1/12 * x1^1 x2^1
///   ...
///
/// One line per stored component with 1-based indices (scalars use "1 1", vectors "i 1").
std::string to_text(const TypedField& f);

/// Inverse of to_text. Throws std::invalid_argument on malformed input and KindError
/// when the components violate the declared kind.
TypedField from_text(std::string_view text);

}  // namespace tensorcomplex
