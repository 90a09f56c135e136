#ifndef GALOIS_ERROR_HPP
#define GALOIS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galois {

enum class ErrorCode {
  DivisionByZeroPolynomial,
  BothZero,
  NotInvertible,
  NonMonicInput,
  ModulusMismatch,
  NotSquarefree,
  PrecisionExhausted,
  SearchExhausted,
  CertificateFailed,
  InternalError,
  MatchAmbiguous,
  ClosureFailed,
  UnrecognizedOrder,
  NotInvariant,
  DegenerateTheta,
  InvalidSubgroup,
  InvalidInput,
  ParseError,
};

const char* error_code_name(ErrorCode code);

// Exit-status class of an error as seen by the command line tool:
// 1 = bad input, 2 = precision exhausted, 3 = internal certificate failure.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError,
              "at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        message_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

}  // namespace galois

#endif  // GALOIS_ERROR_HPP
