#include "tensorcomplex/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "tensorcomplex/ballpair.hpp"
#include "tensorcomplex/complexgraph.hpp"
#include "tensorcomplex/decompose.hpp"
#include "tensorcomplex/field_text.hpp"
#include "tensorcomplex/identities.hpp"
#include "tensorcomplex/koszul.hpp"

namespace tensorcomplex {

namespace {

constexpr unsigned kBumpOrder = 2;

struct Runner {
  const SuiteConfig& config;
  std::vector<CaseResult>& out;
  std::string suite;

  void add(std::string name, std::string anchor, const std::function<CheckOutcome()>& check) {
    auto start = std::chrono::steady_clock::now();
    CheckOutcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.record_error(e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back({suite, std::move(name), std::move(anchor), o.status, o.evaluations, o.message, o.witness, ms});
  }
};

CheckOutcome pass_with(std::string message) {
  CheckOutcome o;
  o.record_pass();
  o.message = std::move(message);
  return o;
}

void run_identities(Runner& r) {
  for (const auto& info : identity_catalog())
    r.add(info.name, "pointwise differential identity: " + info.statement, [&] {
      return verify_identity(info.name, r.config.samples, r.config.degree, r.config.seed);
    });
}

void run_cells(Runner& r) {
  DiagramGraph g = build_diagram(Flavor::WithBc);
  for (NodePos cell : g.cells())
    r.add("cell " + to_string(cell), "commuting square of the operator diagram", [&, cell] {
      return check_cell(g, cell, r.config.samples, r.config.degree, r.config.seed);
    });
}

void run_two_complex(Runner& r) {
  DiagramGraph g = build_diagram(Flavor::WithBc);
  for (const Path& p : enumerate_paths(g, 3))
    r.add(p.str(), "three successive operators compose to zero", [&, p] {
      return check_path_vanishes(g, p, r.config.samples, r.config.degree, r.config.seed);
    });
}

void run_derived(Runner& r) {
  for (const auto& name : derived_complex_names())
    r.add(name, "derived second-order complex", [&, name] {
      return check_derived_complex(name, r.config.samples, r.config.degree, r.config.seed);
    });
}

void run_right_inverses(Runner& r) {
  RightInverseOptions options{r.config.strict_preconditions};
  for (const auto& c : right_inverse_cases())
    r.add(c.name, "Koszul right inverse", [&, c] {
      return check_right_inverse_case(c, r.config.samples, r.config.degree, r.config.seed, options);
    });
  std::vector<NamedOutcome> homotopy;
  try {
    homotopy = homotopy_check(r.config.samples, r.config.degree, r.config.seed);
  } catch (const std::exception& e) {
    CheckOutcome o;
    o.record_error(e.what());
    homotopy.push_back({"homotopy", o});
  }
  for (const auto& h : homotopy) r.add(h.name, "Koszul homotopy identity", [&] { return h.outcome; });
  r.add("Ddd(1) = x x^T / 12", "explicit right inverse witness", [] {
    TypedField one = TypedField::scalar(Poly3(Rational(1)));
    TypedField out = right_inverse(RightInverseId::Ddd, one);
    std::array<Poly3, 9> expected;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) expected[3 * i + j] = Poly3::var(i) * Poly3::var(j) * Rational(1, 12);
    CheckOutcome o;
    if (!out.same_values(TypedField::matrix(expected, FieldKind::SymMatrix)))
      o.record_failure("Ddd(1) differs from x x^T / 12", out);
    else if (!div_div(out).same_values(one))
      o.record_failure("div div Ddd(1) differs from 1", out);
    else
      o = pass_with("Ddd(1) = x x^T / 12 and div div Ddd(1) = 1");
    return o;
  });
}

void run_decompositions(Runner& r) {
  for (const auto& c : decomposition_cases())
    r.add(c.name, c.short_variant ? "short regular decomposition" : "regular decomposition", [&, c] {
      return check_decomposition_case(c, r.config.samples, r.config.degree, r.config.seed);
    });
}

void run_pairings(Runner& r) {
  for (PairingId id : all_pairings())
    r.add(std::string(pairing_name(id)), "integration by parts: " + std::string(pairing_statement(id)), [&, id] {
      return verify_ibp(id, r.config.samples, r.config.degree, kBumpOrder, r.config.seed);
    });
  r.add("master", "integration by parts against the bump weight", [&] {
    return verify_master_ibp(r.config.samples, r.config.degree, kBumpOrder, r.config.seed);
  });
  std::vector<NamedOutcome> steps;
  try {
    steps = verify_membership_steps(r.config.samples, r.config.degree, r.config.seed);
  } catch (const std::exception& e) {
    CheckOutcome o;
    o.record_error(e.what());
    steps.push_back({"membership", o});
  }
  for (const auto& s : steps) r.add(s.name, "moment membership", [&] { return s.outcome; });
  auto integral = [&](std::string name, Poly3 p, PiScalar expected) {
    r.add(name, "exact integral over the unit ball", [p, expected] {
      PiScalar got = integrate_ball(p);
      CheckOutcome o;
      if (got == expected) return pass_with("= " + got.str());
      o.record_failure("got " + got.str() + ", expected " + expected.str(), TypedField::scalar(p));
      return o;
    });
  };
  integral("integral of 1", Poly3(Rational(1)), PiScalar(Rational(4, 3)));
  Poly3 x1 = Poly3::var(0);
  integral("integral of x1^2", x1 * x1, PiScalar(Rational(4, 15)));
}

void run_one(Suite s, Runner& r) {
  switch (s) {
    case Suite::Identities: return run_identities(r);
    case Suite::Cells: return run_cells(r);
    case Suite::TwoComplex: return run_two_complex(r);
    case Suite::DerivedComplexes: return run_derived(r);
    case Suite::RightInverses: return run_right_inverses(r);
    case Suite::Decompositions: return run_decompositions(r);
    case Suite::Pairings: return run_pairings(r);
    case Suite::All: break;
  }
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Identities: return "identities";
    case Suite::Cells: return "cells";
    case Suite::TwoComplex: return "two-complex";
    case Suite::DerivedComplexes: return "derived-complexes";
    case Suite::RightInverses: return "right-inverses";
    case Suite::Decompositions: return "decompositions";
    case Suite::Pairings: return "pairings";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : concrete_suites())
    if (suite_name(s) == name) return s;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const std::vector<Suite>& concrete_suites() {
  static const std::vector<Suite> suites = {Suite::Identities,       Suite::Cells,         Suite::TwoComplex,
                                            Suite::DerivedComplexes, Suite::RightInverses, Suite::Decompositions,
                                            Suite::Pairings};
  return suites;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.status == s;
  return n;
}

int Report::exit_code() const {
  if (count(Status::Error) > 0) return 2;
  if (count(Status::Fail) > 0) return 1;
  return 0;
}

Report run_suites(const SuiteConfig& config) {
  Report report{config, {}};
  std::vector<Suite> suites = config.suite == Suite::All ? concrete_suites() : std::vector<Suite>{config.suite};
  for (Suite s : suites) {
    Runner r{config, report.cases, std::string(suite_name(s))};
    run_one(s, r);
  }
  return report;
}

CaseResult run_right_inverse_on(RightInverseId id, const TypedField& input, const RightInverseOptions& options) {
  const RightInverseInfo& info = right_inverse_info(id);
  CaseResult c;
  c.suite = "right-inverses";
  c.name = info.name + " on supplied input";
  c.anchor = "Koszul right inverse";
  CheckOutcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    if (id == RightInverseId::RgcTilde || id == RightInverseId::DgcTilde) {
      TypedField rt = right_inverse(RightInverseId::RgcTilde, input, options);
      TypedField dt = right_inverse(RightInverseId::DgcTilde, input, options);
      if (defining_residual_pair(input, rt, dt).is_zero())
        o = pass_with(info.identity);
      else
        o.record_failure(info.identity + " fails", input);
    } else {
      TypedField out = right_inverse(id, input, options);
      if (defining_residual(id, input, out).is_zero())
        o = pass_with(info.identity);
      else
        o.record_failure(info.identity + " fails", input);
    }
  } catch (const PreconditionError& e) {
    o.record_error(info.name + ": " + e.what(), e.witness());
  } catch (const std::exception& e) {
    o.record_error(info.name + ": " + e.what());
  }
  c.status = o.status;
  c.evaluations = o.evaluations;
  c.message = o.message;
  c.witness = o.witness;
  c.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

nlohmann::ordered_json report_to_json(const Report& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite_name(r.config.suite);
  j["config"] = {{"seed", r.config.seed},
                 {"degree", r.config.degree},
                 {"samples", r.config.samples},
                 {"strict_preconditions", r.config.strict_preconditions}};
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json e;
    e["suite"] = c.suite;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["evaluations"] = c.evaluations;
    e["message"] = c.message;
    if (c.witness) e["witness"] = *c.witness;
    if (timings) e["duration_ms"] = c.duration_ms;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"total", r.cases.size()},
                  {"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"error", r.count(Status::Error)}};
  return j;
}

namespace {

std::string cell_text(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|')
      out += "\\|";
    else if (ch == '\n')
      out += ' ';
    else
      out += ch;
  }
  return out;
}

}  // namespace

std::string report_to_markdown(const Report& r, bool timings) {
  std::ostringstream os;
  os << "# Report: " << suite_name(r.config.suite) << "\n\n";
  os << "seed " << r.config.seed << ", degree " << r.config.degree << ", samples " << r.config.samples
     << (r.config.strict_preconditions ? ", strict preconditions" : "") << "\n\n";
  os << "| suite | case | anchor | status | evaluations | message |" << (timings ? " ms |" : "") << "\n";
  os << "|---|---|---|---|---|---|" << (timings ? "---|" : "") << "\n";
  for (const auto& c : r.cases) {
    os << "| " << c.suite << " | " << cell_text(c.name) << " | " << cell_text(c.anchor) << " | "
       << status_name(c.status) << " | " << c.evaluations << " | " << cell_text(c.message) << " |";
    if (timings) os << " " << static_cast<long long>(c.duration_ms + 0.5) << " |";
    os << "\n";
  }
  os << "\n" << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, "
     << r.count(Status::Error) << " errors, " << r.cases.size() << " total\n";
  for (const auto& c : r.cases) {
    if (!c.witness) continue;
    os << "\n## Witness for " << c.suite << " / " << c.name << "\n\n```\n" << *c.witness << "```\n";
  }
  return os.str();
}

}  // namespace tensorcomplex
