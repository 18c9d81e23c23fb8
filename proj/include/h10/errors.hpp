#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace h10 {

// Byte range into an input string, attached to parse diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SourceSpan&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Variable index out of range, tuple/point length mismatch, forced arity too small.
class ArityError : public Error {
 public:
  using Error::Error;
};

// Bad operation argument: zero denominator, m = 0, table oracle holding
// non-solutions, budget = 0, N passed where a subring is required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An oracle was asked a question outside its competence (wrong equation,
// wrong ring, unsupported shape).
class OracleError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  lexical,       // character outside the grammar's alphabet
  syntax,        // token stream does not match the grammar
  exponent,      // exponent not a non-negative integer literal
  forced_arity,  // @arity=k below the largest variable index used
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
      : Error(message), kind_(kind), span_(span) {}

  ParseErrorKind kind() const { return kind_; }
  SourceSpan span() const { return span_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
};

const char* parse_error_kind_name(ParseErrorKind kind);

}  // namespace h10
