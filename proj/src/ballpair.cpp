#include "tensorcomplex/ballpair.hpp"

#include <stdexcept>

#include "tensorcomplex/diffops.hpp"
#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"
#include "tensorcomplex/rat_matrix.hpp"

namespace tensorcomplex {

namespace {

/// coefficient * sqrt(pi)^power
struct SqrtPiMultiple {
  Rational coefficient;
  int power = 0;

  SqrtPiMultiple operator*(const SqrtPiMultiple& o) const { return {coefficient * o.coefficient, power + o.power}; }
  SqrtPiMultiple operator/(const SqrtPiMultiple& o) const { return {coefficient / o.coefficient, power - o.power}; }
};

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
SqrtPiMultiple gamma_half_integer(unsigned n) {
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, n);
  return {Rational(mpq_class(factorial(2 * n), four_pow * factorial(n))), 1};
}

PiScalar integrate_monomial(const Monomial& m) {
  for (unsigned e : m.e)
    if (e % 2 != 0) return PiScalar();
  unsigned total = 0;
  SqrtPiMultiple numerator{Rational(1), 0};
  for (unsigned e : m.e) {
    numerator = numerator * gamma_half_integer(e / 2);
    total += e / 2;
  }
  // Gamma(beta1 + beta2 + beta3) with beta_i = e_i/2 + 1/2 sums to total + 3/2.
  SqrtPiMultiple ratio = numerator / gamma_half_integer(total + 1);
  if (ratio.power != 2) throw std::logic_error("sqrt(pi) factors did not cancel to a single pi");
  return PiScalar(Rational(2, static_cast<long>(m.degree() + 3)) * ratio.coefficient);
}

}  // namespace

PiScalar integrate_ball(const Poly3& p) {
  PiScalar sum;
  for (const auto& [m, c] : p.terms()) sum += c * integrate_monomial(m);
  return sum;
}

PiScalar l2_pair(const TypedField& a, const TypedField& b) {
  const bool both_matrix = is_matrix_kind(a.kind()) && is_matrix_kind(b.kind());
  if (a.kind() != b.kind() && !both_matrix)
    throw KindError("cannot pair " + std::string(kind_name(a.kind())) + " with " + std::string(kind_name(b.kind())));
  Poly3 product;
  for (std::size_t k = 0; k < a.size(); ++k) product += a[k] * b[k];
  return integrate_ball(product);
}

Poly3 bump(unsigned k) {
  Poly3 base = Poly3(Rational(1)) - Poly3::var(0) * Poly3::var(0) - Poly3::var(1) * Poly3::var(1) -
               Poly3::var(2) * Poly3::var(2);
  Poly3 out(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * base;
  return out;
}

std::string_view moment_space_name(MomentSpace s) {
  switch (s) {
    case MomentSpace::Constants: return "constants";
    case MomentSpace::P1: return "P1";
    case MomentSpace::RT: return "RT";
    case MomentSpace::ND: return "ND";
  }
  return "?";
}

std::vector<TypedField> moment_basis(MomentSpace s, FieldKind kind) {
  auto mismatch = [&] {
    return KindError(std::string(moment_space_name(s)) + " has no " + std::string(kind_name(kind)) + " basis");
  };
  std::vector<TypedField> out;
  switch (s) {
    case MomentSpace::Constants:
      if (kind == FieldKind::Scalar) return {TypedField::scalar(Poly3(Rational(1)))};
      if (kind != FieldKind::Vector) throw mismatch();
      for (int i = 0; i < 3; ++i) out.push_back(TypedField::unit_vector(i));
      return out;
    case MomentSpace::P1:
      if (kind != FieldKind::Scalar) throw mismatch();
      out.push_back(TypedField::scalar(Poly3(Rational(1))));
      for (int i = 0; i < 3; ++i) out.push_back(TypedField::scalar(Poly3::var(i)));
      return out;
    case MomentSpace::RT:
      if (kind != FieldKind::Vector) throw mismatch();
      for (int i = 0; i < 3; ++i) out.push_back(TypedField::unit_vector(i));
      out.push_back(TypedField::position());
      return out;
    case MomentSpace::ND:
      if (kind != FieldKind::Vector) throw mismatch();
      for (int i = 0; i < 3; ++i) out.push_back(TypedField::unit_vector(i));
      for (int i = 0; i < 3; ++i) out.push_back(cross(TypedField::unit_vector(i), TypedField::position()));
      return out;
  }
  throw mismatch();
}

MomentCheck moment_orthogonal(const TypedField& f, MomentSpace s) {
  MomentCheck result;
  for (auto& b : moment_basis(s, f.kind())) {
    PiScalar v = l2_pair(f, b);
    if (!v.is_zero()) {
      result.orthogonal = false;
      result.offending = std::move(b);
      result.value = v;
      return result;
    }
  }
  return result;
}

TypedField orthogonalize(const TypedField& f, MomentSpace s, const Poly3& weight) {
  auto basis = moment_basis(s, f.kind());
  const std::size_t n = basis.size();
  // Gram system (weight b_j, b_i) c_j = (f, b_i); all entries are multiples of pi.
  RatMatrix augmented(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented.at(i, j) = l2_pair(weight * basis[j], basis[i]).coefficient();
    augmented.at(i, n) = l2_pair(f, basis[i]).coefficient();
  }
  Echelon e = rref(augmented);
  if (e.pivot_cols.size() != n || e.pivot_cols.back() != n - 1)
    throw std::logic_error("moment Gram matrix is singular");
  TypedField out = f;
  for (std::size_t j = 0; j < n; ++j) out -= e.reduced.at(j, n) * (weight * basis[j]);
  return out;
}

const std::vector<PairingId>& all_pairings() {
  static const std::vector<PairingId> ids = {PairingId::QGrad,  PairingId::SigmaDeff, PairingId::SigmaHess,
                                             PairingId::GSymCurl, PairingId::GInc,     PairingId::TauCurl,
                                             PairingId::TauDevGrad, PairingId::TauCurlDeff};
  return ids;
}

std::string_view pairing_name(PairingId id) {
  switch (id) {
    case PairingId::QGrad: return "q-grad";
    case PairingId::SigmaDeff: return "sigma-deff";
    case PairingId::SigmaHess: return "sigma-hess";
    case PairingId::GSymCurl: return "g-sym-curl";
    case PairingId::GInc: return "g-inc";
    case PairingId::TauCurl: return "tau-curl";
    case PairingId::TauDevGrad: return "tau-dev-grad";
    case PairingId::TauCurlDeff: return "tau-curl-deff";
  }
  return "?";
}

std::optional<PairingId> parse_pairing(std::string_view name) {
  for (auto id : all_pairings())
    if (pairing_name(id) == name) return id;
  return std::nullopt;
}

std::string_view pairing_statement(PairingId id) {
  switch (id) {
    case PairingId::QGrad: return "(q, grad w) = -(div q, w)";
    case PairingId::SigmaDeff: return "(s, deff u) = -(div s, u)";
    case PairingId::SigmaHess: return "(s, hess w) = (div div s, w)";
    case PairingId::GSymCurl: return "(g, sym curl e) = (curl g, e)";
    case PairingId::GInc: return "(g, inc c) = (inc g, c)";
    case PairingId::TauCurl: return "(t, curl c) = (sym curl t, c)";
    case PairingId::TauDevGrad: return "(t, dev grad u) = -(div t, u)";
    case PairingId::TauCurlDeff: return "(t, curl deff u) = -1/2 (curl div t^T, u)";
  }
  return "?";
}

unsigned min_bump_order(PairingId id) {
  switch (id) {
    case PairingId::SigmaHess:
    case PairingId::GInc:
    case PairingId::TauCurlDeff: return 2;
    default: return 1;
  }
}

namespace {

struct PairingKinds {
  FieldKind field;
  FieldKind test;
};

PairingKinds pairing_kinds(PairingId id) {
  using K = FieldKind;
  switch (id) {
    case PairingId::QGrad: return {K::Vector, K::Scalar};
    case PairingId::SigmaDeff: return {K::SymMatrix, K::Vector};
    case PairingId::SigmaHess: return {K::SymMatrix, K::Scalar};
    case PairingId::GSymCurl: return {K::SymMatrix, K::TraceFree};
    case PairingId::GInc: return {K::SymMatrix, K::SymMatrix};
    case PairingId::TauCurl: return {K::TraceFree, K::SymMatrix};
    case PairingId::TauDevGrad: return {K::TraceFree, K::Vector};
    case PairingId::TauCurlDeff: return {K::TraceFree, K::Vector};
  }
  throw std::invalid_argument("unknown pairing");
}

}  // namespace

std::pair<PiScalar, PiScalar> pairing_sides(PairingId id, const TypedField& f, const TypedField& t) {
  PairingKinds kinds = pairing_kinds(id);
  if (!kind_accepts(kinds.field, f.kind()) || !kind_accepts(kinds.test, t.kind()))
    throw KindError("pairing " + std::string(pairing_name(id)) + " received fields of the wrong kind");
  const Rational half(1, 2);
  switch (id) {
    case PairingId::QGrad: return {l2_pair(f, grad(t)), -l2_pair(div(f), t)};
    case PairingId::SigmaDeff: return {l2_pair(f, deff(t)), -l2_pair(div(f), t)};
    case PairingId::SigmaHess: return {l2_pair(f, hess(t)), l2_pair(div_div(f), t)};
    case PairingId::GSymCurl: return {l2_pair(f, sym_curl(t)), l2_pair(curl(f), t)};
    case PairingId::GInc: return {l2_pair(f, inc(t)), l2_pair(inc(f), t)};
    case PairingId::TauCurl: return {l2_pair(f, curl(t)), l2_pair(sym_curl(f), t)};
    case PairingId::TauDevGrad: return {l2_pair(f, dev_grad(t)), -l2_pair(div(f), t)};
    case PairingId::TauCurlDeff: return {l2_pair(f, curl_deff(t)), -half * l2_pair(curl_div_t(f), t)};
  }
  throw std::invalid_argument("unknown pairing");
}

namespace {

template <class Check>
CheckOutcome run_samples(const std::string& stream, std::size_t samples, std::uint64_t seed, Check check) {
  auto results = parallel_map(samples, [&](std::size_t i) {
    CheckOutcome o;
    FieldSampler sampler(seed, stream, i);
    check(sampler, o);
    return o;
  });
  CheckOutcome total;
  for (const auto& r : results) total.merge(r);
  return total;
}

}  // namespace

CheckOutcome verify_ibp(PairingId id, std::size_t samples, int degree, unsigned bump_order, std::uint64_t seed) {
  if (bump_order < min_bump_order(id))
    throw std::invalid_argument("pairing " + std::string(pairing_name(id)) + " needs bump order >= " +
                                std::to_string(min_bump_order(id)));
  PairingKinds kinds = pairing_kinds(id);
  Poly3 weight = bump(bump_order);
  auto out = run_samples("pairing/" + std::string(pairing_name(id)), samples, seed,
                         [&](FieldSampler& s, CheckOutcome& o) {
                           TypedField f = s.field(kinds.field, degree);
                           TypedField t = weight * s.field(kinds.test, degree);
                           auto [lhs, rhs] = pairing_sides(id, f, t);
                           if (lhs == rhs)
                             o.record_pass();
                           else
                             o.record_failure(std::string(pairing_statement(id)) + " fails: " + lhs.str() +
                                                  " != " + rhs.str(),
                                              f);
                         });
  if (out.passed()) out.message = std::string(pairing_statement(id));
  return out;
}

CheckOutcome verify_master_ibp(std::size_t samples, int degree, unsigned bump_order, std::uint64_t seed) {
  if (bump_order < 1) throw std::invalid_argument("the boundary term only vanishes for bump order >= 1");
  Poly3 weight = bump(bump_order);
  return run_samples("master-ibp", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
    Poly3 p = s.poly(degree);
    Poly3 bumped = weight * p;
    for (int i = 0; i < 3; ++i) {
      if (!integrate_ball(bumped.partial(i)).is_zero()) {
        o.record_failure("integral of d" + std::to_string(i + 1) + "(bump p) is nonzero", TypedField::scalar(p));
        return;
      }
    }
    o.record_pass();
  });
}

std::vector<NamedOutcome> verify_membership_steps(std::size_t samples, int degree, std::uint64_t seed) {
  const Poly3 b = bump(1);
  auto orthogonal = [](const TypedField& f, MomentSpace s) { return moment_orthogonal(f, s).orthogonal; };
  std::vector<NamedOutcome> out;

  out.push_back({"div of bumped tracefree field is orthogonal to RT",
                 run_samples("membership/div-T", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
                   TypedField t = b * s.field(FieldKind::TraceFree, degree);
                   orthogonal(div(t), MomentSpace::RT) ? o.record_pass() : o.record_failure("not orthogonal", t);
                 })});
  out.push_back({"div of bumped symmetric field is orthogonal to ND",
                 run_samples("membership/div-S", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
                   TypedField t = b * s.field(FieldKind::SymMatrix, degree);
                   orthogonal(div(t), MomentSpace::ND) ? o.record_pass() : o.record_failure("not orthogonal", t);
                 })});
  out.push_back({"div of bumped vector orthogonal to ND is orthogonal to P1",
                 run_samples("membership/div-V", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
                   TypedField v = orthogonalize(b * s.field(FieldKind::Vector, degree), MomentSpace::ND, b);
                   if (!orthogonal(v, MomentSpace::ND)) return o.record_error("projection onto ND complement failed", v);
                   orthogonal(div(v), MomentSpace::P1) ? o.record_pass() : o.record_failure("not orthogonal", v);
                 })});
  out.push_back({"curl of bumped vector orthogonal to RT is orthogonal to ND",
                 run_samples("membership/curl-V", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
                   TypedField v = orthogonalize(b * s.field(FieldKind::Vector, degree), MomentSpace::RT, b);
                   if (!orthogonal(v, MomentSpace::RT)) return o.record_error("projection onto RT complement failed", v);
                   orthogonal(curl(v), MomentSpace::ND) ? o.record_pass() : o.record_failure("not orthogonal", v);
                 })});
  out.push_back({"grad of bumped mean-zero scalar is orthogonal to RT",
                 run_samples("membership/grad-R", samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
                   TypedField w = orthogonalize(b * s.field(FieldKind::Scalar, degree), MomentSpace::Constants, b);
                   if (!orthogonal(w, MomentSpace::Constants)) return o.record_error("mean removal failed", w);
                   orthogonal(grad(w), MomentSpace::RT) ? o.record_pass() : o.record_failure("not orthogonal", w);
                 })});

  CheckOutcome control;
  for (auto [f, space] : {std::pair{TypedField::scalar(Poly3(Rational(1))), MomentSpace::P1},
                          std::pair{TypedField::scalar(Poly3(Rational(1))), MomentSpace::Constants},
                          std::pair{TypedField::unit_vector(0), MomentSpace::RT},
                          std::pair{TypedField::unit_vector(2), MomentSpace::ND}}) {
    if (orthogonal(f, space))
      control.record_failure("constant field reported orthogonal to " + std::string(moment_space_name(space)), f);
    else
      control.record_pass();
  }
  out.push_back({"constant fields are not orthogonal to spaces containing them", control});
  return out;
}

}  // namespace tensorcomplex
