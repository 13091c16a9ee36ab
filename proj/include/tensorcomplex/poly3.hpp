#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcomplex/rational.hpp"

namespace tensorcomplex {

/// x1^e[0] x2^e[1] x3^e[2]. Ordered by total degree, then with x1 before x2 before x3.
struct Monomial {
  std::array<unsigned, 3> e{0, 0, 0};

  unsigned degree() const { return e[0] + e[1] + e[2]; }
  Monomial times(const Monomial& o) const { return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = 0; i < 3; ++i)
      if (a.e[i] != b.e[i]) return b.e[i] <=> a.e[i];
    return std::strong_ordering::equal;
  }
};

/// Sparse polynomial in x1, x2, x3 with exact rational coefficients. Zero coefficients are never stored.
class Poly3 {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly3() = default;
  Poly3(const Rational& constant);
  template <std::integral T>
  explicit Poly3(T constant) : Poly3(Rational(constant)) {}

  static Poly3 monomial(const Monomial& m, const Rational& c = 1);
  /// x_{i+1}, i in {0,1,2}.
  static Poly3 var(int i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  /// Sum of the terms of total degree k.
  Poly3 homogeneous_part(unsigned k) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  Poly3 operator-() const;
  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& r);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& r) { return a *= r; }
  friend Poly3 operator*(const Rational& r, Poly3 a) { return a *= r; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend bool operator==(const Poly3&, const Poly3&) = default;

  /// Formal derivative with respect to x_{i+1}.
  Poly3 partial(int i) const;
  /// Multiplication by x_{i+1}.
  Poly3 times_var(int i) const;
  Rational evaluate(const std::array<Rational, 3>& x) const;

  std::string str() const;

 private:
  Terms terms_;
};

/// All monomials of total degree <= degree, in Monomial order.
std::vector<Monomial> monomials_up_to(int degree);

enum class PolyOp { Add, Sub, Mul };
Poly3 poly_arith(const Poly3& p, const Poly3& q, PolyOp op);

/// Parses the term syntax written by Poly3::str(), e.g. "3/2 * x1^2 x3^1 + -1". Throws std::invalid_argument.
Poly3 parse_poly(std::string_view text);

}  // namespace tensorcomplex
