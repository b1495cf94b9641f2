#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cdk {

enum class ErrorCode {
  malformed_document = 1,
  schema_violation,
  cycle_detected,
  dangling_edge,
  duplicate_edge,
  self_loop,
  duplicate_node,
  no_root,
  path_explosion,
  too_short,
  unknown_context,
  unknown_response,
  no_fork_pairs,
  divergence,
  io_error,
  usage_error,
};

/// CamelCase name used in diagnostics and CLI output, e.g. "CycleDetected".
const char* error_code_name(ErrorCode code);

class CdkError : public std::runtime_error {
 public:
  CdkError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Seeded generator handed around by the caller. All sampling goes through
// the helpers below instead of std::*_distribution so that a given seed
// reproduces the same stream on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform_range(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  /// Unbiased uniform index in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Poisson draw by CDF inversion; exact match with the pmf recurrence.
  int poisson(double lambda);

 private:
  std::mt19937_64 gen_;
};

}  // namespace cdk
