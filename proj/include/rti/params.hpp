#pragma once

#include <cstdint>
#include <optional>

#include "rti/common.hpp"

namespace rti {

struct ParamOverrides {
  std::optional<uint32_t> d;
  std::optional<uint32_t> d_prime;
  std::optional<uint32_t> delta;
  std::optional<uint32_t> tau;
};

// Tier parameters under an assumed text length. Bands by pattern length:
// short [1, delta), medium [delta, tau), long [tau, inf). delta == 1
// means the short band is empty.
struct IndexParams {
  uint32_t sigma = 0;
  uint64_t n_assumed = 0;
  uint32_t d = 1;        // long-tier grid / block length
  uint32_t d_prime = 1;  // medium-tier grid / block length
  uint32_t delta = 1;    // short/medium boundary
  uint32_t tau = 1;      // medium/long boundary

  // Colors are meta codes shifted by one; 0 stays structural.
  static constexpr uint32_t kColorCap = 256;

  static IndexParams derive(uint32_t sigma, uint64_t n_assumed,
                            const ParamOverrides& ov = {});

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  // Medium tier stores whole blocks; tau rounded up to a d' multiple.
  uint32_t tau_store() const {
    return (tau + d_prime - 1) / d_prime * d_prime;
  }
  uint64_t meta_sigma_long() const;    // sigma^d
  uint64_t meta_sigma_medium() const;  // sigma^d_prime
};

}  // namespace rti
