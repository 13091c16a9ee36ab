#include "tensorcomplex/right_inverse.hpp"

#include <stdexcept>

#include "tensorcomplex/field_text.hpp"
#include "tensorcomplex/koszul.hpp"
#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"

namespace tensorcomplex {

namespace {

using K = FieldKind;
using O = OpName;

const Rational half(1, 2);
const Rational third(1, 3);

void side_condition(bool holds, const char* what) {
  if (!holds) throw std::logic_error(std::string("side condition failed: ") + what);
}

}  // namespace

const std::vector<RightInverseInfo>& right_inverse_catalog() {
  using R = RightInverseId;
  static const std::vector<RightInverseInfo> catalog = {
      {R::Dcc, "Dcc", K::SymMatrix, {O::Div}, std::nullopt, K::SymMatrix, "inc Dcc s = s"},
      {R::RggTilde, "Rgg_tilde", K::SymMatrix, {O::Inc}, std::nullopt, K::Vector, "curl deff Rgg_tilde g = curl g"},
      {R::Dgg, "Dgg", K::SymMatrix, {O::Curl}, std::nullopt, K::Scalar, "hess Dgg g = g"},
      {R::Ddd, "Ddd", K::Scalar, {}, MomentSpace::P1, K::SymMatrix, "div div Ddd w = w"},
      {R::RccTilde, "Rcc_tilde", K::SymMatrix, {O::DivDiv}, std::nullopt, K::TraceFree,
       "div sym curl Rcc_tilde s = div s"},
      {R::Dcd, "Dcd", K::Vector, {O::Div}, MomentSpace::ND, K::TraceFree, "curl div Dcd v = v"},
      {R::RgcTilde, "Rgc_tilde", K::TraceFree, {O::Div}, std::nullopt, K::SymMatrix,
       "curl(Rgc_tilde t + deff Dgc_tilde t) = t"},
      {R::DgcTilde, "Dgc_tilde", K::TraceFree, {O::Div}, std::nullopt, K::Vector,
       "curl(Rgc_tilde t + deff Dgc_tilde t) = t"},
      {R::Rgc, "Rgc", K::TraceFree, {O::Div}, std::nullopt, K::SymMatrix, "curl Rgc t = t"},
      {R::Dgc, "Dgc", K::TraceFree, {O::Div, O::SymCurlT}, std::nullopt, K::Vector, "curl deff Dgc t = t"},
      {R::Dgd, "Dgd", K::Vector, {O::Curl}, MomentSpace::RT, K::Vector, "1/3 grad div Dgd v = v"},
      {R::Rgg, "Rgg", K::SymMatrix, {O::Inc}, std::nullopt, K::Vector, "deff Rgg g = g"},
      {R::Rgd, "Rgd", K::Vector, {}, MomentSpace::RT, K::TraceFree, "div Rgd v = v"},
      {R::RgcT, "RgcT", K::TraceFree, {O::SymCurl}, std::nullopt, K::Vector, "1/2 dev grad RgcT t = t"},
      {R::Rcc, "Rcc", K::SymMatrix, {O::DivDiv}, std::nullopt, K::TraceFree, "sym curl Rcc s = s"},
      {R::Rcd, "Rcd", K::Vector, {}, MomentSpace::ND, K::SymMatrix, "div Rcd q = q"},
      {R::Rg, "Rg", K::Vector, {O::Curl}, std::nullopt, K::Scalar, "1/3 grad Rg v = v"},
      {R::RcPlain, "Rc_plain", K::Vector, {O::Div}, std::nullopt, K::Vector, "1/2 curl Rc_plain q = q"},
      {R::RdPlain, "Rd_plain", K::Scalar, {}, std::nullopt, K::Vector, "div Rd_plain w = w"},
  };
  return catalog;
}

const RightInverseInfo& right_inverse_info(RightInverseId id) {
  for (const auto& info : right_inverse_catalog())
    if (info.id == id) return info;
  throw std::invalid_argument("unknown right inverse");
}

std::optional<RightInverseId> parse_right_inverse(std::string_view name) {
  for (const auto& info : right_inverse_catalog())
    if (info.name == name) return info.id;
  return std::nullopt;
}

PreconditionError::PreconditionError(std::string constraint, TypedField witness)
    : std::invalid_argument("precondition violated: " + constraint),
      constraint_(std::move(constraint)),
      witness_(std::move(witness)) {}

void check_preconditions(RightInverseId id, const TypedField& f, const RightInverseOptions& options) {
  const RightInverseInfo& info = right_inverse_info(id);
  if (f.kind() != info.input)
    throw KindError(info.name + " expects a " + std::string(kind_name(info.input)) + " field, got " +
                    std::string(kind_name(f.kind())));
  for (auto op : info.kernel) {
    TypedField image = apply(op, f);
    if (!image.is_zero()) throw PreconditionError(std::string(op_name(op)) + " of the input must vanish", image);
  }
  if (options.strict_moments && info.moments) {
    MomentCheck m = moment_orthogonal(f, *info.moments);
    if (!m.orthogonal)
      throw PreconditionError("input must be orthogonal to " + std::string(moment_space_name(*info.moments)) +
                                  " (pairing " + m.value.str() + ")",
                              *m.offending);
  }
}

namespace {

TypedField dcc(const TypedField& s) {
  TypedField eta = Tc(s);
  TypedField s_eta = S(eta);
  side_condition(div(s_eta).is_zero(), "div S eta = 0");
  return sym(Tc(s_eta));
}

TypedField rgg_tilde(const TypedField& g) {
  // Rows of (curl g)^T are curl-free since their curl is inc g = 0.
  TypedField q = Tg(t_curl(g));
  return Rational(2) * Tc(q);
}

TypedField dgg(const TypedField& g) {
  TypedField u = constant_curl_correction(Tg(g));
  return Tg(u);
}

TypedField ddd(const TypedField& w) { return sym(Td(Td(w))); }

TypedField rcc_tilde(const TypedField& s) {
  TypedField u = Tc(div(s));
  return transpose(dev(Td(Rational(2) * u)));
}

TypedField dcd(const TypedField& v) { return dev(Td(Tc(v))); }

std::pair<TypedField, TypedField> rgc_dgc_tilde(const TypedField& t) {
  TypedField gamma = Tc(t);
  TypedField v = vskw(gamma);
  side_condition(div(v).is_zero(), "div vskw gamma = 0");
  return {sym(gamma), Rational(-2) * Tc(v)};
}

TypedField rgc(const TypedField& t) {
  auto [r, d] = rgc_dgc_tilde(t);
  return r + deff(d);
}

TypedField dgc(const TypedField& t) {
  auto [r, d] = rgc_dgc_tilde(t);
  return rgg_tilde(r) + d;
}

TypedField dgd(const TypedField& v) { return Td(Rational(3) * Tg(v)); }

TypedField rgg(const TypedField& g) {
  TypedField u = rgg_tilde(g);
  TypedField v = constant_curl_correction(Tg(g - deff(u)));
  return u + v;
}

TypedField rgd(const TypedField& v) {
  TypedField t = Td(v);
  TypedField q = Td(tr(t));
  return dev(t) + half * t_dev_grad(q);
}

TypedField rgc_t(const TypedField& t) {
  TypedField w = Tg(div_t(t));
  TypedField q = Rational(2) * Tg(t + half * scalar_identity(w));
  side_condition(div(q).same_values(Rational(3) * w), "div q = 3 w");
  return q;
}

TypedField rcc(const TypedField& s) {
  TypedField r = rcc_tilde(s);
  TypedField rho = Tc(s - sym_curl(r));
  return r + dev(rho);
}

TypedField rcd(const TypedField& q) {
  TypedField gamma = Td(q);
  TypedField t = Td(Rational(-2) * vskw(gamma));
  return sym(gamma) + sym_curl_t(dev(t));
}

}  // namespace

TypedField right_inverse(RightInverseId id, const TypedField& f, const RightInverseOptions& options) {
  check_preconditions(id, f, options);
  using R = RightInverseId;
  switch (id) {
    case R::Dcc: return dcc(f);
    case R::RggTilde: return rgg_tilde(f);
    case R::Dgg: return dgg(f);
    case R::Ddd: return ddd(f);
    case R::RccTilde: return rcc_tilde(f);
    case R::Dcd: return dcd(f);
    case R::RgcTilde: return rgc_dgc_tilde(f).first;
    case R::DgcTilde: return rgc_dgc_tilde(f).second;
    case R::Rgc: return rgc(f);
    case R::Dgc: return dgc(f);
    case R::Dgd: return dgd(f);
    case R::Rgg: return rgg(f);
    case R::Rgd: return rgd(f);
    case R::RgcT: return rgc_t(f);
    case R::Rcc: return rcc(f);
    case R::Rcd: return rcd(f);
    case R::Rg: return Rational(3) * Tg(f);
    case R::RcPlain: return Rational(2) * Tc(f);
    case R::RdPlain: return Td(f);
  }
  throw std::invalid_argument("unknown right inverse");
}

TypedField defining_residual(RightInverseId id, const TypedField& in, const TypedField& out) {
  using R = RightInverseId;
  switch (id) {
    case R::Dcc: return inc(out) - in;
    case R::RggTilde: return curl_deff(out) - curl(in);
    case R::Dgg: return hess(out) - in;
    case R::Ddd: return div_div(out) - in;
    case R::RccTilde: return div(sym_curl(out)) - div(in);
    case R::Dcd: return curl_div(out) - in;
    case R::Rgc: return curl(out) - in;
    case R::Dgc: return curl_deff(out) - in;
    case R::Dgd: return third * grad_div(out) - in;
    case R::Rgg: return deff(out) - in;
    case R::Rgd: return div(out) - in;
    case R::RgcT: return half * dev_grad(out) - in;
    case R::Rcc: return sym_curl(out) - in;
    case R::Rcd: return div(out) - in;
    case R::Rg: return third * grad(out) - in;
    case R::RcPlain: return half * curl(out) - in;
    case R::RdPlain: return div(out) - in;
    case R::RgcTilde:
    case R::DgcTilde: throw std::invalid_argument("Rgc_tilde and Dgc_tilde are checked together");
  }
  throw std::invalid_argument("unknown right inverse");
}

TypedField defining_residual_pair(const TypedField& in, const TypedField& r, const TypedField& d) {
  return curl(r + deff(d)) - in;
}

const std::vector<RightInverseCase>& right_inverse_cases() {
  using R = RightInverseId;
  static const std::vector<RightInverseCase> cases = {
      {"Dcc", {R::Dcc}},          {"Rgg_tilde", {R::RggTilde}},
      {"Dgg", {R::Dgg}},          {"Ddd", {R::Ddd}},
      {"Rcc_tilde", {R::RccTilde}}, {"Dcd", {R::Dcd}},
      {"Rgc_tilde+Dgc_tilde", {R::RgcTilde, R::DgcTilde}},
      {"Rgc", {R::Rgc}},          {"Dgc", {R::Dgc}},
      {"Dgd", {R::Dgd}},          {"Rgg", {R::Rgg}},
      {"Rgd", {R::Rgd}},          {"RgcT", {R::RgcT}},
      {"Rcc", {R::Rcc}},          {"Rcd", {R::Rcd}},
      {"Rg", {R::Rg}},            {"Rc_plain+Rd_plain", {R::RcPlain, R::RdPlain}},
  };
  return cases;
}

TypedField sample_right_inverse_input(RightInverseId id, int degree, std::uint64_t seed,
                                      const RightInverseOptions& options) {
  const RightInverseInfo& info = right_inverse_info(id);
  TypedField f = info.kernel.empty() ? FieldSampler(seed, "right-inverse/" + info.name, 0).field(info.input, degree)
                                     : sample_kernel(info.kernel, info.input, degree, seed);
  if (options.strict_moments && info.moments) f = orthogonalize(f, *info.moments, Poly3(Rational(1)));
  return f;
}

CheckOutcome check_right_inverse_case(const RightInverseCase& c, std::size_t samples, int degree, std::uint64_t seed,
                                      const RightInverseOptions& options) {
  const bool paired = c.ids.size() == 2 && c.ids[0] == RightInverseId::RgcTilde;
  auto results = parallel_map(samples, [&](std::size_t i) {
    CheckOutcome o;
    std::uint64_t sample_seed = derive_seed(seed, stream_id("right-inverse/" + c.name), i);
    for (auto id : c.ids) {
      const RightInverseInfo& info = right_inverse_info(id);
      TypedField input = sample_right_inverse_input(id, degree, sample_seed, options);
      try {
        bool holds;
        if (paired) {
          TypedField r = right_inverse(RightInverseId::RgcTilde, input, options);
          TypedField d = right_inverse(RightInverseId::DgcTilde, input, options);
          holds = defining_residual_pair(input, r, d).is_zero();
        } else {
          TypedField out = right_inverse(id, input, options);
          if (out.kind() != info.output) {
            o.record_failure(info.name + " returned a " + std::string(kind_name(out.kind())) + " field", input);
            return o;
          }
          holds = defining_residual(id, input, out).is_zero();
        }
        if (!holds) {
          o.record_failure(info.identity + " fails", input);
          return o;
        }
      } catch (const PreconditionError& e) {
        o.record_error(info.name + ": " + e.what(), input);
        return o;
      } catch (const std::logic_error& e) {
        o.record_error(info.name + ": " + e.what(), input);
        return o;
      }
      if (paired) break;
    }
    o.record_pass();
    return o;
  });
  CheckOutcome total;
  for (const auto& r : results) total.merge(r);
  if (total.passed()) {
    for (auto id : c.ids) {
      if (!total.message.empty()) total.message += "; ";
      total.message += right_inverse_info(id).identity;
      if (paired) break;
    }
  }
  return total;
}

}  // namespace tensorcomplex
