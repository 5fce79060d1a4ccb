#pragma once

#include <stdexcept>
#include <string>

namespace borgia {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  io = 3,
  dimension_mismatch = 4,
  out_of_range = 5,
  stall = 6,
  not_found = 7,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure carrying the 1-based line of the offending record (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse, line ? what + " at line " + std::to_string(line) : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace borgia
