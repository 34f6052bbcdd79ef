#pragma once

#include <stdexcept>
#include <string>

namespace gridsym {

// Invalid dimensions, counts, or piece sets supplied by the caller.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed board or piece text.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Piece areas do not match the open cells of the board.
struct AreaMismatchError : ConfigError {
  explicit AreaMismatchError(const std::string& what) : ConfigError(what) {}
};

// A symmetry was applied to a board of incompatible dimensions.
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed its configured cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// The tiling search hit its node budget before reaching a verdict.
struct NodeCapError : std::runtime_error {
  explicit NodeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable, mismatched, or internally inconsistent checkpoint data.
struct CheckpointError : std::runtime_error {
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gridsym
