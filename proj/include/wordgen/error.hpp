#pragma once

#include <stdexcept>
#include <string>

namespace wordgen {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed taxonomy description or an illegal instance registration.
class TaxonomyError : public Error {
 public:
  using Error::Error;
};

// Violated precondition on a learner or generalization query.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Configuration problem tied to a specific field path, e.g. "params.k.super".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace wordgen
