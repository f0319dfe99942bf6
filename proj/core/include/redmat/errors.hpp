#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace redmat {

/// Base class of all domain errors. `kind()` is the stable machine-readable
/// name used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)), message_(message) {}

  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  std::string kind_;
  std::string message_;
};

#define REDMAT_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

REDMAT_DEFINE_ERROR(ArityError);
REDMAT_DEFINE_ERROR(ParseError);
REDMAT_DEFINE_ERROR(AdmissibilityError);
REDMAT_DEFINE_ERROR(FinitenessError);
REDMAT_DEFINE_ERROR(OverringError);
REDMAT_DEFINE_ERROR(NotSemisimpleError);
REDMAT_DEFINE_ERROR(KeyError);
REDMAT_DEFINE_ERROR(DerivedTensorError);
REDMAT_DEFINE_ERROR(ReconstructionError);
REDMAT_DEFINE_ERROR(HereditaryRequiredError);
REDMAT_DEFINE_ERROR(FieldObstructionError);
REDMAT_DEFINE_ERROR(SpecError);
REDMAT_DEFINE_ERROR(TransformError);
REDMAT_DEFINE_ERROR(BudgetError);

#undef REDMAT_DEFINE_ERROR

}  // namespace redmat
