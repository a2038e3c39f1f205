#pragma once

#include <stdexcept>
#include <string>

namespace sparsepde {

// Invalid configuration, CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values produced by a solver, CLI exit code 3.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// File system / serialization trouble, CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint loading failures keep their own types so callers can tell a
// stale schema from a truncated file or a mismatched shape.
class CheckpointVersionError : public IoError {
 public:
  explicit CheckpointVersionError(const std::string& msg) : IoError(msg) {}
};

class CheckpointShapeError : public IoError {
 public:
  explicit CheckpointShapeError(const std::string& msg) : IoError(msg) {}
};

class CheckpointCorruptError : public IoError {
 public:
  explicit CheckpointCorruptError(const std::string& msg) : IoError(msg) {}
};

}  // namespace sparsepde
