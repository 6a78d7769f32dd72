#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgk {

/// Raised when a desk-scale computation would exceed its size bound.
/// Carries the size estimate that triggered the refusal.
class TooLarge : public std::runtime_error {
 public:
  TooLarge(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what + " (estimate " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}

  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

}  // namespace sgk
