#pragma once

#include <stdexcept>
#include <string>

namespace sts {

/// Process exit codes used by the CLI. Library code throws the matching
/// exception types; the CLI maps them at the top level.
enum ExitCode : int {
  kExitOk = 0,
  kExitGeneric = 1,
  kExitParse = 2,
  kExitConfig = 3,
  kExitInsufficientData = 4,
  kExitNumerical = 5,
  kExitIo = 6,
  kExitInvalidInput = 7,
};

class Error : public std::runtime_error {
 public:
  Error(std::string msg, int exit_code)
      : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input data (bad CSV row, wrong field count, ...).
class ParseError : public Error {
 public:
  explicit ParseError(std::string msg) : Error(std::move(msg), kExitParse) {}
};

/// Bad configuration value or unusable config file.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::string msg) : Error(std::move(msg), kExitConfig) {}
};

/// Not enough data to run an operation (e.g. < 2 transition segments).
class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(std::string msg)
      : Error(std::move(msg), kExitInsufficientData) {}
};

/// Numerical failure (singular innovation covariance, degenerate statistic).
class NumericalError : public Error {
 public:
  explicit NumericalError(std::string msg)
      : Error(std::move(msg), kExitNumerical) {}
};

/// Filesystem problem (missing file, unwritable output).
class IoError : public Error {
 public:
  explicit IoError(std::string msg) : Error(std::move(msg), kExitIo) {}
};

/// Structurally invalid argument to a library operation (length mismatch,
/// non-finite state, empty stream, ...).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(std::string msg)
      : Error(std::move(msg), kExitInvalidInput) {}
};

}  // namespace sts
