#include "tensorcomplex/identities.hpp"

#include <functional>
#include <stdexcept>

#include "tensorcomplex/diffops.hpp"
#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"

namespace tensorcomplex {

namespace {

using Sides = std::vector<std::pair<TypedField, TypedField>>;

struct Identity {
  IdentityInfo info;
  FieldKind input;
  std::function<Sides(const TypedField&)> sides;
};

const Rational half(1, 2);
const Rational third(1, 3);

const std::vector<Identity>& identities() {
  static const std::vector<Identity> list = {
      {{"div-mskw", "div mskw v = -curl v"}, FieldKind::Vector,
       [](const TypedField& v) { return Sides{{div(mskw(v)), -curl(v)}}; }},
      {{"mskw-grad", "mskw grad w = -curl(w id)"}, FieldKind::Scalar,
       [](const TypedField& w) { return Sides{{mskw(grad(w)), -curl(scalar_identity(w))}}; }},
      {{"mskw-curl", "mskw curl v = 2 skw grad v"}, FieldKind::Vector,
       [](const TypedField& v) { return Sides{{mskw(curl(v)), Rational(2) * skw(grad(v))}}; }},
      {{"skw-curl", "2 skw curl t = mskw div S t"}, FieldKind::Matrix,
       [](const TypedField& t) { return Sides{{Rational(2) * skw(curl(t)), mskw(div(S(t)))}}; }},
      {{"S-grad", "S grad v = -curl mskw v"}, FieldKind::Vector,
       [](const TypedField& v) { return Sides{{S(grad(v)), -curl(mskw(v))}}; }},
      {{"tr-curl", "tr curl t = 2 div vskw t"}, FieldKind::Matrix,
       [](const TypedField& t) { return Sides{{tr(curl(t)), Rational(2) * div(vskw(t))}}; }},
      {{"div-T-curl", "div (curl t)^T = curl div t^T"}, FieldKind::Matrix,
       [](const TypedField& t) { return Sides{{div(t_curl(t)), curl(div_t(t))}}; }},
      {{"curl-T-grad", "curl (grad u)^T = (grad curl u)^T = (dev grad curl u)^T"}, FieldKind::Vector,
       [](const TypedField& u) {
         TypedField gc = grad(curl(u));
         return Sides{{curl(transpose(grad(u))), transpose(gc)}, {transpose(gc), transpose(dev(gc))}};
       }},
      {{"div-sym-curl-T", "div sym curl t^T = 1/2 curl div t"}, FieldKind::Matrix,
       [](const TypedField& t) { return Sides{{div(sym_curl_t(t)), half * curl(div(t))}}; }},
      {{"curl-deff", "curl deff u = 1/2 (grad curl u)^T = 1/2 (dev grad curl u)^T"}, FieldKind::Vector,
       [](const TypedField& u) {
         TypedField gc = grad(curl(u));
         return Sides{{curl(deff(u)), half * transpose(gc)}, {half * transpose(gc), half * transpose(dev(gc))}};
       }},
      {{"div-T-dev-grad", "1/2 div (dev grad u)^T = 1/3 grad div u"}, FieldKind::Vector,
       [](const TypedField& u) { return Sides{{half * div(t_dev_grad(u)), third * grad(div(u))}}; }},
  };
  return list;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& id : identities()) out.push_back(id.info);
    return out;
  }();
  return infos;
}

CheckOutcome verify_identity(std::string_view name, std::size_t samples, int degree, std::uint64_t seed) {
  const Identity* id = nullptr;
  for (const auto& candidate : identities())
    if (candidate.info.name == name) id = &candidate;
  if (!id) throw std::invalid_argument("unknown identity '" + std::string(name) + "'");

  auto results = parallel_map(samples, [&](std::size_t i) {
    CheckOutcome o;
    FieldSampler sampler(seed, "identity/" + id->info.name, i);
    TypedField input = sampler.field(id->input, degree);
    for (const auto& [lhs, rhs] : id->sides(input)) {
      if (!lhs.same_values(rhs)) {
        o.record_failure(id->info.statement + " fails", input);
        return o;
      }
    }
    o.record_pass();
    return o;
  });
  CheckOutcome total;
  for (const auto& r : results) total.merge(r);
  if (total.passed()) total.message = id->info.statement;
  return total;
}

}  // namespace tensorcomplex
