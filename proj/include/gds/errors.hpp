#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gds {

/// Thrown when an enumeration, materialization, or tabulation would exceed
/// its configured cap. Callers that can degrade (e.g. classification without
/// an orbit certificate) catch this; everything else propagates it.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by operations whose contract requires a monotone system or
/// function. Carries the violating covering pair when one is known.
struct NotMonotone : std::runtime_error {
  NotMonotone(const std::string& what, std::optional<std::pair<std::string, std::string>> w = {})
      : std::runtime_error(what), witness(std::move(w)) {}
  std::optional<std::pair<std::string, std::string>> witness;
};

}  // namespace gds
