#pragma once

#include <stdexcept>
#include <string>

namespace pukgc {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPrior : ConfigError {
  explicit InvalidPrior(const std::string& msg) : ConfigError(msg) {}
};

struct MissingComponent : std::runtime_error {
  explicit MissingComponent(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Every entity substitution at the corrupted slot yields a known triple.
struct EmptyCandidatePool : std::runtime_error {
  explicit EmptyCandidatePool(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionTooSmall : std::runtime_error {
  explicit DimensionTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonFiniteLoss : std::runtime_error {
  explicit NonFiniteLoss(const std::string& msg) : std::runtime_error(msg) {}
};

struct CheckpointError : std::runtime_error {
  explicit CheckpointError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pukgc
