#include "tensorcomplex/koszul.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"
#include "tensorcomplex/rat_matrix.hpp"

namespace tensorcomplex {

namespace {

Monomial shifted(Monomial m, int i) {
  m.e[i] += 1;
  return m;
}

Poly3 tg_poly(const TypedField& v) {
  Poly3 out;
  for (int i = 0; i < 3; ++i)
    for (const auto& [m, c] : v.at(i).terms()) out.add_term(shifted(m, i), c / Rational(static_cast<long>(m.degree() + 1)));
  return out;
}

TypedField tc_vector(const TypedField& q) {
  std::array<Poly3, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int s = epsilon(i, j, k);
        if (s == 0) continue;
        for (const auto& [m, c] : q.at(j).terms())
          out[i].add_term(shifted(m, k), Rational(s) * c / Rational(static_cast<long>(m.degree() + 2)));
      }
  return TypedField::vector(out[0], out[1], out[2]);
}

TypedField td_scalar(const Poly3& u) {
  std::array<Poly3, 3> out;
  for (int i = 0; i < 3; ++i)
    for (const auto& [m, c] : u.terms()) out[i].add_term(shifted(m, i), c / Rational(static_cast<long>(m.degree() + 3)));
  return TypedField::vector(out[0], out[1], out[2]);
}

[[noreturn]] void reject(const char* op, const TypedField& f) {
  throw KindError(std::string(op) + " does not accept a " + std::string(kind_name(f.kind())) + " field");
}

}  // namespace

TypedField koszul_apply(KoszulOp which, const TypedField& f) {
  switch (which) {
    case KoszulOp::Tg:
      if (f.kind() == FieldKind::Vector) return TypedField::scalar(tg_poly(f));
      if (!is_matrix_kind(f.kind())) reject("Tg", f);
      return TypedField::vector(tg_poly(row(f, 0)), tg_poly(row(f, 1)), tg_poly(row(f, 2)));
    case KoszulOp::Tc:
      if (f.kind() == FieldKind::Vector) return tc_vector(f);
      if (!is_matrix_kind(f.kind())) reject("Tc", f);
      return from_rows(tc_vector(row(f, 0)), tc_vector(row(f, 1)), tc_vector(row(f, 2)));
    case KoszulOp::Td:
      if (f.kind() == FieldKind::Scalar) return td_scalar(f[0]);
      if (f.kind() != FieldKind::Vector) reject("Td", f);
      return from_rows(td_scalar(f.at(0)), td_scalar(f.at(1)), td_scalar(f.at(2)));
  }
  throw std::invalid_argument("unknown Koszul operator");
}

TypedField Tg(const TypedField& f) { return koszul_apply(KoszulOp::Tg, f); }
TypedField Tc(const TypedField& f) { return koszul_apply(KoszulOp::Tc, f); }
TypedField Td(const TypedField& f) { return koszul_apply(KoszulOp::Td, f); }

std::vector<NamedOutcome> homotopy_check(std::size_t samples, int degree, std::uint64_t seed) {
  struct Case {
    std::string name;
    FieldKind kind;
    std::function<bool(const TypedField&)> holds;
  };
  const std::vector<Case> cases = {
      {"Tg grad w = w - w(0)", FieldKind::Scalar,
       [](const TypedField& w) {
         return Tg(grad(w)).same_values(w - TypedField::scalar(Poly3(w[0].constant_term())));
       }},
      {"grad Tg v + Tc curl v = v", FieldKind::Vector,
       [](const TypedField& v) { return (grad(Tg(v)) + Tc(curl(v))).same_values(v); }},
      {"curl Tc q + Td div q = q", FieldKind::Vector,
       [](const TypedField& q) { return (curl(Tc(q)) + Td(div(q))).same_values(q); }},
      {"div Td u = u", FieldKind::Scalar, [](const TypedField& u) { return div(Td(u)).same_values(u); }},
  };
  std::vector<NamedOutcome> out;
  for (const auto& c : cases) {
    auto results = parallel_map(samples, [&](std::size_t i) {
      CheckOutcome o;
      FieldSampler sampler(seed, "homotopy/" + c.name, i);
      TypedField f = sampler.field(c.kind, degree);
      c.holds(f) ? o.record_pass() : o.record_failure(c.name + " fails", f);
      return o;
    });
    CheckOutcome total;
    for (const auto& r : results) total.merge(r);
    if (total.passed()) total.message = c.name;
    out.push_back({c.name, total});
  }
  return out;
}

TypedField constant_curl_correction(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("constant_curl_correction", u);
  TypedField b = curl(u);
  if (b.degree() > 0) throw std::invalid_argument("constant_curl_correction: curl u is not constant");
  if (b.is_zero()) return u;
  return u - Rational(1, 2) * cross(b, TypedField::position());
}

namespace {

/// Constant basis of the kind's value space.
std::vector<std::vector<Rational>> value_basis(FieldKind kind) {
  std::vector<std::vector<Rational>> out;
  auto unit = [](std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
    std::vector<Rational> v(n);
    for (auto [k, val] : entries) v[k] = val;
    return v;
  };
  switch (kind) {
    case FieldKind::Scalar: return {unit(1, {{0, 1}})};
    case FieldKind::Vector:
      for (std::size_t i = 0; i < 3; ++i) out.push_back(unit(3, {{i, 1}}));
      return out;
    case FieldKind::Matrix:
      for (std::size_t k = 0; k < 9; ++k) out.push_back(unit(9, {{k, 1}}));
      return out;
    case FieldKind::SymMatrix:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) out.push_back(unit(9, {{3 * i + j, 1}, {3 * j + i, 1}}));
      return out;
    case FieldKind::TraceFree:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) out.push_back(unit(9, {{3 * i + j, 1}}));
      out.push_back(unit(9, {{0, 1}, {8, -1}}));
      out.push_back(unit(9, {{4, 1}, {8, -1}}));
      return out;
    case FieldKind::Skew:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) out.push_back(unit(9, {{3 * i + j, 1}, {3 * j + i, -1}}));
      return out;
  }
  return out;
}

using KernelKey = std::tuple<std::vector<OpName>, FieldKind, int>;

std::shared_ptr<const std::vector<TypedField>> compute_kernel(const std::vector<OpName>& ops, FieldKind kind,
                                                              int degree) {
  std::vector<TypedField> columns;
  for (const auto& m : monomials_up_to(degree))
    for (const auto& value : value_basis(kind)) {
      std::vector<Poly3> comps(value.size());
      for (std::size_t k = 0; k < value.size(); ++k) comps[k] = Poly3::monomial(m, value[k]);
      columns.emplace_back(kind, std::move(comps));
    }
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::size_t> row_index;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(columns.size());
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (std::size_t o = 0; o < ops.size(); ++o) {
      TypedField image = apply(ops[o], columns[col]);
      for (std::size_t k = 0; k < image.size(); ++k)
        for (const auto& [mono, c] : image[k].terms()) {
          auto [it, inserted] = row_index.try_emplace({o, k, mono}, row_index.size());
          entries[col].emplace_back(it->second, c);
        }
    }
  RatMatrix m(row_index.size(), columns.size());
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [r, c] : entries[col]) m.at(r, col) = c;
  auto basis = std::make_shared<std::vector<TypedField>>();
  for (const auto& v : nullspace(m)) {
    TypedField f = TypedField::zero(kind);
    for (std::size_t col = 0; col < v.size(); ++col)
      if (!v[col].is_zero()) f += v[col] * columns[col];
    basis->push_back(std::move(f));
  }
  return basis;
}

}  // namespace

std::shared_ptr<const std::vector<TypedField>> kernel_basis(const std::vector<OpName>& ops, FieldKind kind,
                                                             int degree) {
  if (degree < 0) throw std::invalid_argument("kernel degree must be non-negative");
  static std::shared_mutex mutex;
  static std::map<KernelKey, std::shared_ptr<const std::vector<TypedField>>> cache;
  KernelKey key{ops, kind, degree};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto basis = compute_kernel(ops, kind, degree);
  cache.emplace(std::move(key), basis);
  return basis;
}

TypedField sample_kernel(const std::vector<OpName>& ops, FieldKind kind, int degree, std::uint64_t seed) {
  auto basis = kernel_basis(ops, kind, degree);
  if (basis->empty()) throw std::runtime_error("kernel is trivial at this degree");
  std::string stream = "kernel/" + std::string(kind_name(kind)) + "/" + std::to_string(degree);
  for (auto op : ops) stream += "/" + std::string(op_name(op));
  FieldSampler sampler(seed, stream, 0);
  while (true) {
    TypedField f = TypedField::zero(kind);
    for (const auto& b : *basis) f += Rational(sampler.integer(-9, 9)) * b;
    if (!f.is_zero()) return f;
  }
}

TypedField sample_kernel(const OperatorId& op, FieldKind kind, int degree, std::uint64_t seed) {
  return sample_kernel(std::vector<OpName>{op.name}, kind, degree, seed);
}

}  // namespace tensorcomplex
