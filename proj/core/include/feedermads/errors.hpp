/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by the library and the CLI.
 *
 * Input and configuration problems (unreadable files, malformed JSON,
 * schema violations, bad flag combinations) derive from InputError and map
 * to CLI exit code 2. Runtime evaluation failures derive from
 * EvaluationError and map to exit code 3.
 */

#ifndef FEEDERMADS_ERRORS_HPP
#define FEEDERMADS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace feedermads {

/// Base class for all library exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad input or configuration: CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public InputError {
 public:
  using InputError::InputError;
};

/// A file was readable but not parseable (malformed JSON, bad CSV).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Parsed data violates the schema or internal consistency rules.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Inconsistent or out-of-range run configuration.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

/// Unexpected failure while evaluating candidates: CLI exit code 3.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace feedermads

#endif  // FEEDERMADS_ERRORS_HPP
