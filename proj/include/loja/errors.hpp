#ifndef LOJA_ERRORS_HPP
#define LOJA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace loja {

// Base of every error raised by the library. `kind()` is the stable name
// used in JSON reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LOJA_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

LOJA_DEFINE_ERROR(DomainError)
LOJA_DEFINE_ERROR(DimensionMismatch)
LOJA_DEFINE_ERROR(VariableCountMismatch)
LOJA_DEFINE_ERROR(EmptySystem)
LOJA_DEFINE_ERROR(OrderMismatch)
LOJA_DEFINE_ERROR(NonUnitConstantTerm)
LOJA_DEFINE_ERROR(IndexOutOfRange)
LOJA_DEFINE_ERROR(NegativeCount)
LOJA_DEFINE_ERROR(NotLinear)
LOJA_DEFINE_ERROR(VariableLeak)
LOJA_DEFINE_ERROR(TooFewPoints)
LOJA_DEFINE_ERROR(DegenerateRadii)

#undef LOJA_DEFINE_ERROR

// Errors tied to a byte offset in parsed text.
class PositionedError : public Error {
 public:
  PositionedError(std::string kind, const std::string& message,
                  std::size_t position)
      : Error(std::move(kind), message + " at byte " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public PositionedError {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class BadVariableIndex : public PositionedError {
 public:
  BadVariableIndex(std::size_t position, const std::string& token)
      : PositionedError("BadVariableIndex", "bad variable '" + token + "'",
                        position) {}
};

class ZeroDenominator : public PositionedError {
 public:
  explicit ZeroDenominator(std::size_t position)
      : PositionedError("ZeroDenominator", "zero denominator", position) {}
};

class ExponentOverflow : public PositionedError {
 public:
  ExponentOverflow(std::size_t position, const std::string& literal)
      : PositionedError("ExponentOverflow",
                        "exponent " + literal + " exceeds the configured cap",
                        position) {}
};

}  // namespace loja

#endif  // LOJA_ERRORS_HPP
