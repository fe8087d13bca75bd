#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkpred {

/** Broad failure categories; the CLI maps each to an exit code. */
enum class ErrorKind {
  Validation,  ///< bad argument or violated precondition
  Parse,       ///< malformed input file
  Lookup,      ///< node not present in a graph or model
  Numeric,     ///< numerical failure (singular system, non-finite values)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  /** 1-based line number of the offending input line. */
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what) : Error(ErrorKind::Lookup, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace linkpred
