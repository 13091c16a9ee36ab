#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tensorcomplex/check.hpp"
#include "tensorcomplex/right_inverse.hpp"

namespace tensorcomplex {

enum class Suite { Identities, Cells, TwoComplex, DerivedComplexes, RightInverses, Decompositions, Pairings, All };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
/// Every suite except All, in the order All runs them.
const std::vector<Suite>& concrete_suites();

struct SuiteConfig {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  int degree = 3;
  std::size_t samples = 10;
  bool strict_preconditions = false;
};

struct CaseResult {
  std::string suite;
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  std::size_t evaluations = 0;
  std::string message;
  std::optional<std::string> witness;
  double duration_ms = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<CaseResult> cases;

  std::size_t count(Status s) const;
  /// 0 if every case passed, 2 if any case errored, 1 otherwise.
  int exit_code() const;
};

Report run_suites(const SuiteConfig& config);

/// Runs one right inverse on a caller-supplied field; precondition violations give an
/// error case whose witness is the nonzero constraint image.
CaseResult run_right_inverse_on(RightInverseId id, const TypedField& input, const RightInverseOptions& options);

/// duration_ms is only emitted with timings, so reports of equal configs are byte-identical.
nlohmann::ordered_json report_to_json(const Report& r, bool timings = false);
std::string report_to_markdown(const Report& r, bool timings = false);

}  // namespace tensorcomplex
