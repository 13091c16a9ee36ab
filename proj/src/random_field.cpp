#include "tensorcomplex/random_field.hpp"

#include "tensorcomplex/pointwise.hpp"

namespace tensorcomplex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

std::uint64_t stream_id(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

long FieldSampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Poly3 FieldSampler::poly(int degree) {
  Poly3 p;
  for (const auto& m : monomials_up_to(degree)) p.add_term(m, integer(-9, 9));
  return p;
}

TypedField FieldSampler::field(FieldKind kind, int degree) {
  std::vector<Poly3> comps(component_count(kind));
  for (auto& c : comps) c = poly(degree);
  TypedField raw(is_matrix_kind(kind) ? FieldKind::Matrix : kind, std::move(comps));
  switch (kind) {
    case FieldKind::SymMatrix: return sym(raw);
    case FieldKind::TraceFree: return dev(raw);
    case FieldKind::Skew: return skw(raw);
    default: return raw;
  }
}

}  // namespace tensorcomplex
