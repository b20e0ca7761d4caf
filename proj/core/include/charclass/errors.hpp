#ifndef CHARCLASS_ERRORS_HPP
#define CHARCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charclass {

// Machine-readable error codes; the CLI maps these onto exit statuses.
enum class ErrorCode {
  Usage,            // bad arguments, context mismatch, parse failure
  Precondition,     // mathematical precondition violated (e.g. non-reduced input)
  BudgetExhausted,  // reduction-step budget ran out
  Genericity,       // randomized method failed its genericity retries
  Internal,         // invariant broken inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

  const char* code_name() const {
    switch (code_) {
      case ErrorCode::Usage: return "USAGE";
      case ErrorCode::Precondition: return "PRECONDITION";
      case ErrorCode::BudgetExhausted: return "BUDGET_EXHAUSTED";
      case ErrorCode::Genericity: return "GENERICITY";
      case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
  }

private:
  ErrorCode code_;
};

struct UsageError : Error {
  explicit UsageError(std::string m) : Error(ErrorCode::Usage, std::move(m)) {}
};
struct PreconditionError : Error {
  PreconditionError(std::string code, std::string m)
      : Error(ErrorCode::Precondition, std::move(m)), detail_code(std::move(code)) {}
  std::string detail_code;  // e.g. "NON_REDUCED"
};
struct BudgetExhaustedError : Error {
  explicit BudgetExhaustedError(std::string m)
      : Error(ErrorCode::BudgetExhausted, std::move(m)) {}
};
struct GenericityError : Error {
  explicit GenericityError(std::string m) : Error(ErrorCode::Genericity, std::move(m)) {}
};

}  // namespace charclass

#endif
