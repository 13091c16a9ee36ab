#include "tensorcomplex/typed_field.hpp"

#include <algorithm>

namespace tensorcomplex {

std::size_t component_count(FieldKind k) {
  switch (k) {
    case FieldKind::Scalar: return 1;
    case FieldKind::Vector: return 3;
    default: return 9;
  }
}

std::string_view kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Scalar: return "scalar";
    case FieldKind::Vector: return "vector";
    case FieldKind::Matrix: return "matrix";
    case FieldKind::SymMatrix: return "sym";
    case FieldKind::TraceFree: return "tracefree";
    case FieldKind::Skew: return "skew";
  }
  return "?";
}

std::optional<FieldKind> parse_kind(std::string_view name) {
  for (auto k : {FieldKind::Scalar, FieldKind::Vector, FieldKind::Matrix, FieldKind::SymMatrix, FieldKind::TraceFree,
                 FieldKind::Skew})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

bool kind_accepts(FieldKind required, FieldKind actual) {
  return required == actual || (required == FieldKind::Matrix && is_matrix_kind(actual));
}

FieldKind join_kinds(FieldKind a, FieldKind b) {
  if (a == b) return a;
  if (is_matrix_kind(a) && is_matrix_kind(b)) return FieldKind::Matrix;
  throw KindError(std::string("cannot combine ") + std::string(kind_name(a)) + " and " + std::string(kind_name(b)) +
                  " fields");
}

TypedField::TypedField(FieldKind kind, std::vector<Poly3> components) : kind_(kind), comps_(std::move(components)) {
  if (comps_.size() != component_count(kind_))
    throw KindError(std::string(kind_name(kind_)) + " field needs " + std::to_string(component_count(kind_)) +
                    " components, got " + std::to_string(comps_.size()));
  auto m = [&](int i, int j) -> const Poly3& { return comps_[3 * i + j]; };
  switch (kind_) {
    case FieldKind::SymMatrix:
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (m(i, j) != m(j, i)) throw KindError("sym field is not symmetric");
      break;
    case FieldKind::TraceFree:
      if (!(m(0, 0) + m(1, 1) + m(2, 2)).is_zero()) throw KindError("tracefree field has nonzero trace");
      break;
    case FieldKind::Skew:
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          if (m(i, j) != -m(j, i)) throw KindError("skew field is not antisymmetric");
      break;
    default: break;
  }
}

TypedField TypedField::scalar(Poly3 p) { return TypedField(FieldKind::Scalar, {std::move(p)}); }

TypedField TypedField::vector(Poly3 a, Poly3 b, Poly3 c) {
  return TypedField(FieldKind::Vector, {std::move(a), std::move(b), std::move(c)});
}

TypedField TypedField::matrix(std::array<Poly3, 9> entries, FieldKind kind) {
  return TypedField(kind, std::vector<Poly3>(std::make_move_iterator(entries.begin()),
                                             std::make_move_iterator(entries.end())));
}

TypedField TypedField::zero(FieldKind kind) { return TypedField(kind, std::vector<Poly3>(component_count(kind))); }

TypedField TypedField::unit_vector(int i) {
  std::vector<Poly3> c(3);
  c.at(i) = Poly3(1);
  return TypedField(FieldKind::Vector, std::move(c));
}

TypedField TypedField::position() { return vector(Poly3::var(0), Poly3::var(1), Poly3::var(2)); }

TypedField TypedField::identity() {
  std::vector<Poly3> c(9);
  c[0] = c[4] = c[8] = Poly3(1);
  return TypedField(FieldKind::SymMatrix, std::move(c));
}

const Poly3& TypedField::at(int i) const {
  if (kind_ != FieldKind::Vector) throw KindError("vector component requested from a non-vector field");
  return comps_.at(i);
}

const Poly3& TypedField::at(int i, int j) const {
  if (!is_matrix_kind(kind_)) throw KindError("matrix entry requested from a non-matrix field");
  return comps_.at(3 * i + j);
}

bool TypedField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly3& p) { return p.is_zero(); });
}

int TypedField::degree() const {
  int d = -1;
  for (const auto& p : comps_) d = std::max(d, p.degree());
  return d;
}

TypedField TypedField::operator-() const {
  TypedField out(*this);
  for (auto& p : out.comps_) p = -p;
  return out;
}

TypedField& TypedField::operator+=(const TypedField& o) {
  kind_ = join_kinds(kind_, o.kind_);
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

TypedField& TypedField::operator-=(const TypedField& o) {
  kind_ = join_kinds(kind_, o.kind_);
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

TypedField operator*(const Rational& r, const TypedField& f) {
  TypedField out(f);
  for (auto& p : out.comps_) p *= r;
  return out;
}

TypedField operator*(const Poly3& s, const TypedField& f) {
  TypedField out(f);
  for (auto& p : out.comps_) p = s * p;
  return out;
}

}  // namespace tensorcomplex
