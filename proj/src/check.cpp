#include "tensorcomplex/check.hpp"

#include "tensorcomplex/field_text.hpp"

namespace tensorcomplex {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

void CheckOutcome::record_failure(const std::string& what, const TypedField& input) {
  ++evaluations;
  if (status == Status::Pass) {
    status = Status::Fail;
    message = what;
    witness = to_text(input);
  }
}

void CheckOutcome::record_error(const std::string& what, const std::optional<TypedField>& input) {
  if (status != Status::Error) {
    status = Status::Error;
    message = what;
    witness = input ? std::optional<std::string>(to_text(*input)) : std::nullopt;
  }
}

void CheckOutcome::merge(const CheckOutcome& other) {
  evaluations += other.evaluations;
  if (static_cast<int>(other.status) > static_cast<int>(status)) {
    status = other.status;
    message = other.message;
    witness = other.witness;
  }
}

}  // namespace tensorcomplex
