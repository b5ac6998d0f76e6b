#pragma once

#include <memory>
#include <span>
#include <vector>

#include "rti/common.hpp"
#include "rti/long_index.hpp"
#include "rti/medium_index.hpp"
#include "rti/packed_text.hpp"
#include "rti/params.hpp"
#include "rti/short_index.hpp"

namespace rti {

// One complete index built under a fixed assumed text length: the three
// pattern-band tiers plus the deamortized insertion scheduler. It reads
// symbols from a shared packed text; `reads` tracks how much of that
// text this core has ingested (a rebuilding core lags behind).
class EngineCore {
 public:
  EngineCore(const PackedText& text, IndexParams params);

  // Ingests the symbol at position reads()+1 (already in the text).
  void ingest(Symbol a);
  Position reads() const { return reads_; }
  const IndexParams& params() const { return params_; }

  // Appends all tier-covered occurrences; positions in (tier_horizon(m),
  // reads] are the caller's to brute-check.
  void tier_query(std::span<const Symbol> p, std::vector<Position>& out) const;
  Position tier_horizon(size_t pattern_length) const;

  Position long_horizon() const {
    return std::min(long_.horizon(), reads_);
  }
  Position medium_horizon() const {
    return std::min(medium_.horizon(), reads_);
  }

  uint64_t ops() const;
  const LongIndex& long_index() const { return long_; }
  const MediumIndex& medium_index() const { return medium_; }
  const ShortIndex* short_index() const { return short_.get(); }

 private:
  const PackedText& text_;
  IndexParams params_;
  Position reads_ = 0;
  LongIndex long_;
  MediumIndex medium_;
  std::unique_ptr<ShortIndex> short_;  // absent when the band is empty
};

struct EngineStats {
  Position reads = 0;
  IndexParams params;
  uint64_t rebuilds = 0;
  bool rebuilding = false;
  uint64_t long_nodes = 0, long_elements = 0;
  uint64_t medium_nodes = 0, medium_elements = 0;
  uint64_t short_nodes = 0, short_grams = 0;
  Position long_horizon = 0, medium_horizon = 0;
  // Per-prepend structural-op counts.
  uint64_t ops_min = 0, ops_median = 0, ops_p99 = 0, ops_max = 0;
};

// Streaming text index: symbols are prepended one at a time and pattern
// occurrence queries are exact at every step. Maintains the active core
// plus, while the assumed length is about to be outgrown, a shadow core
// being rebuilt for twice that length (swapped in seamlessly).
class Engine {
 public:
  explicit Engine(uint32_t sigma, uint64_t n0 = 1024,
                  const ParamOverrides& overrides = {});

  void prepend(Symbol a);
  // Sorted positions j with t_j t_{j-1} ... t_{j-|p|+1} = p.
  std::vector<Position> query(std::span<const Symbol> p) const;
  // Word-packed single-position test.
  bool brute_check(std::span<const Symbol> p, Position j) const;
  // Independent naive scan; ground truth for tests.
  std::vector<Position> oracle_query(std::span<const Symbol> p) const;

  Position reads() const { return active_->reads(); }
  const IndexParams& params() const { return active_->params(); }
  bool rebuilding() const { return shadow_ != nullptr; }
  uint64_t rebuilds() const { return rebuilds_; }
  EngineStats stats() const;

  const EngineCore& core() const { return *active_; }
  const std::vector<uint64_t>& op_history() const { return op_deltas_; }

 private:
  void check_pattern(std::span<const Symbol> p) const;
  uint64_t total_ops() const;

  uint32_t sigma_;
  ParamOverrides overrides_;
  PackedText text_;
  std::vector<Symbol> raw_;  // oracle's independent copy, read order
  std::unique_ptr<EngineCore> active_;
  std::unique_ptr<EngineCore> shadow_;
  uint64_t rebuilds_ = 0;
  std::vector<uint64_t> op_deltas_;
};

}  // namespace rti
