#pragma once

#include <string>

#include "tensorcomplex/rational.hpp"

namespace tensorcomplex {

/// A rational multiple of pi. Products of two such values are not representable.
class PiScalar {
 public:
  PiScalar() = default;
  explicit PiScalar(Rational coefficient) : coefficient_(std::move(coefficient)) {}

  const Rational& coefficient() const { return coefficient_; }
  bool is_zero() const { return coefficient_.is_zero(); }

  PiScalar operator-() const { return PiScalar(-coefficient_); }
  PiScalar& operator+=(const PiScalar& o) {
    coefficient_ += o.coefficient_;
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) {
    coefficient_ -= o.coefficient_;
    return *this;
  }
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(const Rational& r, const PiScalar& p) { return PiScalar(r * p.coefficient_); }
  friend PiScalar operator*(const PiScalar& p, const Rational& r) { return PiScalar(p.coefficient_ * r); }
  friend PiScalar operator*(const PiScalar&, const PiScalar&) = delete;
  friend bool operator==(const PiScalar& a, const PiScalar& b) = default;

  /// a / b as a rational; throws DivisionByZero if b is zero.
  friend Rational ratio(const PiScalar& a, const PiScalar& b) { return a.coefficient_ / b.coefficient_; }

  /// "p/q*pi"
  std::string str() const { return coefficient_.str() + "*pi"; }

 private:
  Rational coefficient_;
};

inline std::ostream& operator<<(std::ostream& os, const PiScalar& p) { return os << p.str(); }

}  // namespace tensorcomplex
