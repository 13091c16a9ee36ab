#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcomplex/poly3.hpp"

namespace tensorcomplex {

enum class FieldKind { Scalar, Vector, Matrix, SymMatrix, TraceFree, Skew };

inline bool is_matrix_kind(FieldKind k) { return k != FieldKind::Scalar && k != FieldKind::Vector; }
std::size_t component_count(FieldKind k);
/// "scalar", "vector", "matrix", "sym", "tracefree", "skew".
std::string_view kind_name(FieldKind k);
std::optional<FieldKind> parse_kind(std::string_view name);
/// True if a field tagged `actual` may be used where `required` is expected.
/// Every matrix kind is accepted where a general Matrix is required.
bool kind_accepts(FieldKind required, FieldKind actual);

class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial scalar, vector or 3x3 matrix field (row-major) carrying a kind tag
/// whose predicate is checked exactly on construction.
class TypedField {
 public:
  TypedField(FieldKind kind, std::vector<Poly3> components);

  static TypedField scalar(Poly3 p);
  static TypedField vector(Poly3 a, Poly3 b, Poly3 c);
  static TypedField matrix(std::array<Poly3, 9> entries, FieldKind kind = FieldKind::Matrix);
  static TypedField zero(FieldKind kind);
  /// Constant field e_{i+1}.
  static TypedField unit_vector(int i);
  /// The position field x = (x1, x2, x3).
  static TypedField position();
  static TypedField identity();

  FieldKind kind() const { return kind_; }
  const std::vector<Poly3>& components() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  const Poly3& operator[](std::size_t k) const { return comps_[k]; }
  /// Vector component i (0-based).
  const Poly3& at(int i) const;
  /// Matrix entry (i, j), 0-based.
  const Poly3& at(int i, int j) const;

  bool is_zero() const;
  /// Maximum component degree; -1 for the zero field.
  int degree() const;
  /// Same components, regardless of kind tags.
  bool same_values(const TypedField& o) const { return comps_ == o.comps_; }
  /// Re-tags the same components; throws KindError if the predicate fails.
  TypedField with_kind(FieldKind k) const { return TypedField(k, comps_); }

  TypedField operator-() const;
  TypedField& operator+=(const TypedField& o);
  TypedField& operator-=(const TypedField& o);
  friend TypedField operator+(TypedField a, const TypedField& b) { return a += b; }
  friend TypedField operator-(TypedField a, const TypedField& b) { return a -= b; }
  friend TypedField operator*(const Rational& r, const TypedField& f);
  /// Pointwise multiplication by a scalar polynomial; keeps the kind.
  friend TypedField operator*(const Poly3& p, const TypedField& f);
  friend bool operator==(const TypedField&, const TypedField&) = default;

 private:
  FieldKind kind_;
  std::vector<Poly3> comps_;
};

/// Joined kind of a sum: equal kinds are kept, mixed matrix kinds become Matrix.
FieldKind join_kinds(FieldKind a, FieldKind b);

}  // namespace tensorcomplex
