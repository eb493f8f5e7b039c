#pragma once

#include <stdexcept>
#include <string>

namespace entroscope {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A builder was handed data that violates an automaton or log invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Cardinality was requested for an automaton whose language is infinite.
class InfiniteLanguage : public Error {
 public:
  InfiniteLanguage() : Error("language is infinite") {}
};

/// A value is outside the domain of the requested function (e.g. log of 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed external document. `where()` names the line/column or field.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace entroscope
