#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

enum class Status { Pass, Fail, Error };

std::string_view status_name(Status s);

/// Outcome of an exact verification. Only the first counterexample is retained.
struct CheckOutcome {
  Status status = Status::Pass;
  std::size_t evaluations = 0;
  std::string message;
  /// Offending input in the field text format.
  std::optional<std::string> witness;

  bool passed() const { return status == Status::Pass; }
  void record_pass() { ++evaluations; }
  void record_failure(const std::string& what, const TypedField& input);
  void record_error(const std::string& what, const std::optional<TypedField>& input = std::nullopt);
  /// Combines another outcome; the worse status wins, earlier witnesses are kept.
  void merge(const CheckOutcome& other);
};

struct NamedOutcome {
  std::string name;
  CheckOutcome outcome;
};

}  // namespace tensorcomplex
