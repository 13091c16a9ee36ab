#include "tensorcomplex/poly3.hpp"

#include <cctype>
#include <stdexcept>

namespace tensorcomplex {

Poly3::Poly3(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Poly3 Poly3::monomial(const Monomial& m, const Rational& c) {
  Poly3 p;
  p.add_term(m, c);
  return p;
}

Poly3 Poly3::var(int i) {
  Monomial m;
  m.e.at(i) = 1;
  return monomial(m);
}

int Poly3::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Poly3::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

Poly3 Poly3::homogeneous_part(unsigned k) const {
  Poly3 out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

void Poly3::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly3 Poly3::operator-() const {
  Poly3 out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Poly3 Poly3::partial(int i) const {
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    if (m.e.at(i) == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(m.e[i])));
  }
  return out;
}

Poly3 Poly3::times_var(int i) const {
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d.e.at(i) += 1;
    out.terms_.emplace(d, c);
  }
  return out;
}

Rational Poly3::evaluate(const std::array<Rational, 3>& x) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    if (m.degree() == 0) continue;
    out += " *";
    for (int i = 0; i < 3; ++i)
      if (m.e[i] != 0) out += " x" + std::to_string(i + 1) + "^" + std::to_string(m.e[i]);
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b)
        out.push_back({{static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(d - a - b)}});
  return out;
}

Poly3 poly_arith(const Poly3& p, const Poly3& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  throw std::invalid_argument("unknown polynomial op");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_term(std::string_view term) {
  throw std::invalid_argument("malformed polynomial term '" + std::string(term) + "'");
}

// One factor: a coefficient, or "x<i>" with optional "^<n>".
void parse_factor(std::string_view f, Rational& coeff, Monomial& m, std::string_view term) {
  if (f.empty()) bad_term(term);
  if (f.front() != 'x') {
    coeff *= Rational::parse(f);
    return;
  }
  if (f.size() < 2 || f[1] < '1' || f[1] > '3') bad_term(term);
  int var = f[1] - '1';
  unsigned exp = 1;
  if (f.size() > 2) {
    if (f[2] != '^' || f.size() == 3) bad_term(term);
    exp = 0;
    for (char ch : f.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad_term(term);
      exp = exp * 10 + static_cast<unsigned>(ch - '0');
    }
  }
  m.e[var] += exp;
}

Poly3 parse_term(std::string_view term) {
  Rational coeff = 1;
  Monomial m;
  std::string_view rest = term;
  // Factors are separated by whitespace and/or '*'.
  while (true) {
    while (!rest.empty() && (std::isspace(static_cast<unsigned char>(rest.front())) || rest.front() == '*'))
      rest.remove_prefix(1);
    if (rest.empty()) break;
    std::size_t end = 0;
    while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end])) && rest[end] != '*') ++end;
    std::string_view factor = rest.substr(0, end);
    if (factor.size() > 1 && factor.front() == '-' && factor[1] == 'x') {
      coeff = -coeff;
      factor.remove_prefix(1);
    }
    parse_factor(factor, coeff, m, term);
    rest.remove_prefix(end);
  }
  return Poly3::monomial(m, coeff);
}

}  // namespace

Poly3 parse_poly(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  Poly3 out;
  // A '+' or '-' separates terms unless it follows an operator or starts the text, in which case it is a sign.
  std::size_t term_start = 0;
  bool negate = false;
  char prev = 0;
  auto flush = [&](std::size_t end) {
    std::string_view term = trim(text.substr(term_start, end - term_start));
    if (term.empty()) bad_term(text);
    Poly3 t = parse_term(term);
    out += negate ? -t : t;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    bool binary = (ch == '+' || ch == '-') && prev != 0 && prev != '+' && prev != '-' && prev != '*' &&
                  prev != '/' && prev != '^';
    if (binary) {
      flush(i);
      negate = ch == '-';
      term_start = i + 1;
    }
    prev = ch;
  }
  flush(text.size());
  return out;
}

}  // namespace tensorcomplex
