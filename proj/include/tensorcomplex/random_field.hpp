#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

/// Mixes a base seed with stream identifiers (splitmix64), so that every
/// (seed, stream, index) triple gets its own reproducible generator.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);
/// Stable 64-bit hash of a stream label.
std::uint64_t stream_id(std::string_view label);

/// Random polynomial fields with integer coefficients in [-9, 9] on every monomial
/// of degree <= bound, projected onto the requested kind.
class FieldSampler {
 public:
  explicit FieldSampler(std::uint64_t seed) : engine_(seed) {}
  FieldSampler(std::uint64_t seed, std::string_view stream, std::uint64_t index)
      : engine_(derive_seed(seed, stream_id(stream), index)) {}

  long integer(long lo, long hi);
  Poly3 poly(int degree);
  TypedField field(FieldKind kind, int degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tensorcomplex
