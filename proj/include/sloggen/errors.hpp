#pragma once

#include <stdexcept>
#include <string>

namespace sloggen {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: ConfigError -> 2, DataError and subclasses -> 3, GenerationError and
// subclasses -> 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileNotFoundError : DataError {
  explicit FileNotFoundError(const std::string& path)
      : DataError("file not found: " + path) {}
};

struct EmptyCorpusError : DataError {
  explicit EmptyCorpusError(const std::string& path)
      : DataError("corpus has no usable lines: " + path) {}
};

struct EmptySetError : DataError {
  explicit EmptySetError(const std::string& path)
      : DataError("n-gram file has no usable lines: " + path) {}
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSeedsError : GenerationError {
  using GenerationError::GenerationError;
};

struct RunFailedError : GenerationError {
  using GenerationError::GenerationError;
};

// Thrown by related-word and similarity providers; callers degrade gracefully.
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace sloggen
