#include "tensorcomplex/decompose.hpp"

#include <stdexcept>

#include "tensorcomplex/field_text.hpp"
#include "tensorcomplex/koszul.hpp"
#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"
#include "tensorcomplex/right_inverse.hpp"

namespace tensorcomplex {

namespace {

using R = RightInverseId;

FieldKind input_kind(DecompositionKind k) {
  return k == DecompositionKind::Cd ? FieldKind::TraceFree : FieldKind::SymMatrix;
}

void require_kind(const TypedField& f, DecompositionKind k) {
  if (f.kind() != input_kind(k))
    throw KindError("regdec_" + std::string(decomposition_kind_name(k)) + " expects a " +
                    std::string(kind_name(input_kind(k))) + " field, got " + std::string(kind_name(f.kind())));
}

Decomposition assemble(std::string name, const TypedField& input, std::vector<DecompositionPart> parts) {
  TypedField sum = TypedField::zero(input.kind());
  for (const auto& p : parts) sum = sum + p.contribution();
  return {std::move(name), input, std::move(parts), sum};
}

struct CcParts {
  TypedField s0, s1, s2;
};

CcParts cc_parts(const TypedField& g) {
  TypedField s0 = right_inverse(R::Dcc, inc(g));
  TypedField r = g - s0;
  TypedField s1 = right_inverse(R::RggTilde, r);
  TypedField s2 = right_inverse(R::Dgg, (r - deff(s1)).with_kind(FieldKind::SymMatrix));
  return {s0, s1, s2};
}

struct DdParts {
  TypedField s0, s1, s2;
};

DdParts dd_parts(const TypedField& s) {
  TypedField s0 = right_inverse(R::Ddd, div_div(s));
  TypedField r = s - s0;
  TypedField s1 = right_inverse(R::RccTilde, r);
  TypedField s2 = right_inverse(R::Dcc, (r - sym_curl(s1)).with_kind(FieldKind::SymMatrix));
  return {s0, s1, s2};
}

struct CdParts {
  TypedField s0, g, q;
};

// The short chain; the full one splits q further.
CdParts cd_parts(const TypedField& t) {
  TypedField s0 = right_inverse(R::Dcd, curl_div(t));
  TypedField r = (t - s0).with_kind(FieldKind::TraceFree);
  TypedField w = Tg(div(r));
  TypedField g = right_inverse(R::Dcc, sym_curl_t(r).with_kind(FieldKind::SymMatrix));
  TypedField m = transpose(r) - t_curl(g) + Rational(1, 2) * scalar_identity(w);
  return {s0, g, Tg(m)};
}

}  // namespace

std::string_view decomposition_kind_name(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::Cc: return "cc";
    case DecompositionKind::Dd: return "dd";
    case DecompositionKind::Cd: return "cd";
  }
  return "?";
}

std::optional<DecompositionKind> parse_decomposition_kind(std::string_view name) {
  for (auto k : {DecompositionKind::Cc, DecompositionKind::Dd, DecompositionKind::Cd})
    if (decomposition_kind_name(k) == name) return k;
  return std::nullopt;
}

TypedField DecompositionPart::contribution() const { return reassembly ? apply(*reassembly, potential) : potential; }

Decomposition regdec_cc(const TypedField& g) {
  require_kind(g, DecompositionKind::Cc);
  auto [s0, s1, s2] = cc_parts(g);
  return assemble("regdec_cc", g,
                  {{"S0", s0, std::nullopt}, {"S1", s1, OpName::Deff}, {"S2", s2, OpName::Hess}});
}

Decomposition regdec_dd(const TypedField& s) {
  require_kind(s, DecompositionKind::Dd);
  auto [s0, s1, s2] = dd_parts(s);
  return assemble("regdec_dd", s,
                  {{"S0", s0, std::nullopt}, {"S1", s1, OpName::SymCurl}, {"S2", s2, OpName::Inc}});
}

Decomposition regdec_cd(const TypedField& t) {
  require_kind(t, DecompositionKind::Cd);
  auto [s0, g, q] = cd_parts(t);
  TypedField r = Td(div(q));
  TypedField u = Rational(2) * Tc(q - r);
  return assemble("regdec_cd", t,
                  {{"S0", s0, std::nullopt},
                   {"S1", g, OpName::Curl},
                   {"S2", r, OpName::TDevGrad},
                   {"S3", u, OpName::CurlDeff}});
}

Decomposition regdec_short(const TypedField& f, DecompositionKind which) {
  require_kind(f, which);
  switch (which) {
    case DecompositionKind::Cc: {
      auto [s0, s1, s2] = cc_parts(f);
      return assemble("regdec_short_cc", f, {{"S0", s0, std::nullopt}, {"S1~", s1 + grad(s2), OpName::Deff}});
    }
    case DecompositionKind::Dd: {
      auto [s0, s1, s2] = dd_parts(f);
      return assemble("regdec_short_dd", f,
                      {{"S0", s0, std::nullopt}, {"S1~", (s1 + t_curl(s2)).with_kind(FieldKind::TraceFree),
                                                  OpName::SymCurl}});
    }
    case DecompositionKind::Cd: {
      auto [s0, g, q] = cd_parts(f);
      return assemble("regdec_short_cd", f,
                      {{"S0", s0, std::nullopt}, {"S1", g, OpName::Curl}, {"S2~", q, OpName::TDevGrad}});
    }
  }
  throw std::invalid_argument("unknown decomposition");
}

Decomposition decompose(const TypedField& f, DecompositionKind which, bool short_variant) {
  if (short_variant) return regdec_short(f, which);
  switch (which) {
    case DecompositionKind::Cc: return regdec_cc(f);
    case DecompositionKind::Dd: return regdec_dd(f);
    case DecompositionKind::Cd: return regdec_cd(f);
  }
  throw std::invalid_argument("unknown decomposition");
}

std::string decomposition_to_text(const Decomposition& d) {
  std::string out = "decomposition " + d.name + "\n";
  out += "input\n" + to_text(d.input);
  for (const auto& p : d.parts) {
    out += "part " + p.label + " " + (p.reassembly ? std::string(op_name(*p.reassembly)) : "id") + "\n";
    out += to_text(p.potential);
  }
  return out;
}

const std::vector<DecompositionCase>& decomposition_cases() {
  static const std::vector<DecompositionCase> cases = {
      {"regdec_cc", DecompositionKind::Cc, false},       {"regdec_dd", DecompositionKind::Dd, false},
      {"regdec_cd", DecompositionKind::Cd, false},       {"regdec_short_cc", DecompositionKind::Cc, true},
      {"regdec_short_dd", DecompositionKind::Dd, true},  {"regdec_short_cd", DecompositionKind::Cd, true},
  };
  return cases;
}

namespace {

std::vector<FieldKind> expected_part_kinds(const DecompositionCase& c) {
  using F = FieldKind;
  switch (c.kind) {
    case DecompositionKind::Cc:
      return c.short_variant ? std::vector{F::SymMatrix, F::Vector} : std::vector{F::SymMatrix, F::Vector, F::Scalar};
    case DecompositionKind::Dd:
      return c.short_variant ? std::vector{F::SymMatrix, F::TraceFree}
                             : std::vector{F::SymMatrix, F::TraceFree, F::SymMatrix};
    case DecompositionKind::Cd:
      return c.short_variant ? std::vector{F::TraceFree, F::SymMatrix, F::Vector}
                             : std::vector{F::TraceFree, F::SymMatrix, F::Vector, F::Vector};
  }
  return {};
}

}  // namespace

CheckOutcome check_decomposition_case(const DecompositionCase& c, std::size_t samples, int degree,
                                      std::uint64_t seed) {
  const std::vector<FieldKind> kinds = expected_part_kinds(c);
  auto results = parallel_map(samples, [&](std::size_t i) {
    CheckOutcome o;
    TypedField input = FieldSampler(seed, "decomposition/" + c.name, i).field(input_kind(c.kind), degree);
    try {
      Decomposition d = decompose(input, c.kind, c.short_variant);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        if (k >= d.parts.size() || d.parts[k].potential.kind() != kinds[k]) {
          o.record_failure("part " + std::to_string(k) + " has the wrong kind", input);
          return o;
        }
      }
      if (!d.exact()) {
        o.record_failure("reconstruction differs from the input", input);
        return o;
      }
    } catch (const std::logic_error& e) {
      o.record_error(e.what(), input);
      return o;
    }
    o.record_pass();
    return o;
  });
  CheckOutcome total;
  for (const auto& r : results) total.merge(r);
  if (total.passed()) total.message = "input reconstructed exactly from its parts";
  return total;
}

}  // namespace tensorcomplex
