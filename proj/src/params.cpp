#include "rti/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rti {
namespace {

// sigma^e, saturating at 2^63 so comparisons stay meaningful.
uint64_t pow_sat(uint64_t base, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t k = 0; k < e; ++k) {
    if (r > (uint64_t{1} << 63) / base) return uint64_t{1} << 63;
    r *= base;
  }
  return r;
}

uint32_t floor_log2(double x) {
  return x < 2.0 ? 0 : static_cast<uint32_t>(std::log2(x));
}

}  // namespace

IndexParams IndexParams::derive(uint32_t sigma, uint64_t n_assumed,
                                const ParamOverrides& ov) {
  IndexParams p;
  p.sigma = sigma;
  p.n_assumed = n_assumed;
  const double n = static_cast<double>(n_assumed < 16 ? 16 : n_assumed);
  const double llog = std::log2(std::log2(n));
  const uint32_t llog_floor = std::max<uint32_t>(1, floor_log2(std::log2(n)));
  p.d = std::max<uint32_t>(
      1, static_cast<uint32_t>(llog / (4.0 * std::log2(double(sigma)))));
  p.d_prime = std::max<uint32_t>(1, floor_log2(llog));
  // Clamp derived block sizes so the meta alphabets fit a color byte and
  // the gram codes fit 48 bits; overrides are taken as given (validate()
  // rejects them if out of range).
  while (p.d > 1 && pow_sat(sigma, p.d) > kColorCap - 1) --p.d;
  while (p.d_prime > 1 && pow_sat(sigma, p.d_prime) > kColorCap - 1) {
    --p.d_prime;
  }
  p.tau = llog_floor * llog_floor;
  p.delta = p.d_prime * p.d_prime;
  while (p.delta > p.d_prime &&
         pow_sat(sigma, p.delta) >= (uint64_t{1} << 48)) {
    --p.delta;
  }
  p.tau = std::max({p.tau, p.delta, p.d});
  if (ov.d) p.d = *ov.d;
  if (ov.d_prime) p.d_prime = *ov.d_prime;
  if (ov.delta) p.delta = *ov.delta;
  if (ov.tau) p.tau = *ov.tau;
  p.validate();
  return p;
}

uint64_t IndexParams::meta_sigma_long() const { return pow_sat(sigma, d); }
uint64_t IndexParams::meta_sigma_medium() const {
  return pow_sat(sigma, d_prime);
}

void IndexParams::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("IndexParams: " + what);
  };
  if (sigma < 2) fail("sigma must be >= 2");
  if (n_assumed < 2) fail("n_assumed must be >= 2");
  if (d < 1 || d_prime < 1 || delta < 1 || tau < 1) {
    fail("d, d_prime, delta, tau must all be >= 1");
  }
  if (delta < d_prime) fail("delta >= d_prime required (medium grid coverage)");
  if (tau < delta) fail("tau >= delta required (band ordering)");
  if (tau < d) fail("tau >= d required (long grid coverage)");
  if (pow_sat(sigma, d) > kColorCap - 1) {
    fail("sigma^d exceeds the color capacity");
  }
  if (pow_sat(sigma, d_prime) > kColorCap - 1) {
    fail("sigma^d_prime exceeds the color capacity");
  }
  if (pow_sat(sigma, delta) >= (uint64_t{1} << 48)) {
    fail("sigma^delta must fit in 48 bits (gram table keys)");
  }
}

}  // namespace rti
