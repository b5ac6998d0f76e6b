#include "rti/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace rti {

EngineCore::EngineCore(const PackedText& text, IndexParams params)
    : text_(text),
      params_(params),
      long_(text, params),
      medium_(text, params) {
  params_.validate();
  if (params_.delta > 1) {
    short_ = std::make_unique<ShortIndex>(text, params_);
  }
}

void EngineCore::ingest(Symbol a) {
  ++reads_;
  long_.set_reads(reads_);
  medium_.set_reads(reads_);
  long_.advance(long_.phases_per_slice());
  medium_.advance(medium_.steps_per_slice());
  const uint32_t d = params_.d;
  const uint32_t dp = params_.d_prime;
  if (reads_ % d == 0 && reads_ >= 2 * Position{d}) {
    long_.enqueue(reads_ - d);
  }
  if (reads_ % dp == 0 && reads_ >= 2 * Position{dp}) {
    medium_.enqueue(reads_ - dp);
  }
  if (short_) short_->on_symbol(reads_, a);
}

Position EngineCore::tier_horizon(size_t m) const {
  if (m < params_.delta) return reads_;  // short tier has no lag
  if (m < params_.tau) return medium_horizon();
  return long_horizon();
}

void EngineCore::tier_query(std::span<const Symbol> p,
                            std::vector<Position>& out) const {
  const size_t m = p.size();
  if (m < params_.delta) {
    short_->query(p, out);
  } else if (m < params_.tau) {
    medium_.query(p, out);
  } else {
    long_.query(p, out);
  }
}

uint64_t EngineCore::ops() const {
  return long_.ops() + medium_.ops() + (short_ ? short_->ops() : 0);
}

Engine::Engine(uint32_t sigma, uint64_t n0, const ParamOverrides& overrides)
    : sigma_(sigma), overrides_(overrides), text_(sigma) {
  active_ = std::make_unique<EngineCore>(
      text_, IndexParams::derive(sigma, n0, overrides));
}

void Engine::prepend(Symbol a) {
  if (a >= sigma_) {
    throw std::out_of_range("Engine: symbol out of range");
  }
  const uint64_t before = total_ops();
  text_.push(a);
  raw_.push_back(a);
  active_->ingest(a);
  const Position r = active_->reads();
  const uint64_t n = active_->params().n_assumed;
  if (shadow_ == nullptr && r > n / 2) {
    shadow_ = std::make_unique<EngineCore>(
        text_, IndexParams::derive(sigma_, 2 * n, overrides_));
  }
  if (shadow_ != nullptr) {
    // 2 symbols per prepend covers n_assumed replays in n_assumed/2 calls.
    const Position target =
        std::min<Position>(text_.size(), 2 * (r - n / 2));
    while (shadow_->reads() < target) {
      shadow_->ingest(text_.at(shadow_->reads() + 1));
    }
  }
  op_deltas_.push_back(total_ops() - before);
  if (shadow_ != nullptr && r == n) {
    active_ = std::move(shadow_);
    ++rebuilds_;
  }
}

uint64_t Engine::total_ops() const {
  return active_->ops() + (shadow_ ? shadow_->ops() : 0);
}

void Engine::check_pattern(std::span<const Symbol> p) const {
  if (p.empty()) {
    throw std::invalid_argument("Engine: empty pattern");
  }
  for (Symbol s : p) {
    if (s >= sigma_) {
      throw std::out_of_range("Engine: pattern symbol out of range");
    }
  }
}

std::vector<Position> Engine::query(std::span<const Symbol> p) const {
  check_pattern(p);
  std::vector<Position> out;
  const size_t m = p.size();
  const Position r = active_->reads();
  if (m > r) return out;
  active_->tier_query(p, out);
  const Position h = active_->tier_horizon(m);
  if (h < r) {
    auto packed = text_.pack_pattern(std::vector<Symbol>(p.begin(), p.end()));
    for (Position j = std::max<Position>(h + 1, m); j <= r; ++j) {
      if (text_.matches(packed, j)) out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Engine::brute_check(std::span<const Symbol> p, Position j) const {
  check_pattern(p);
  if (j > active_->reads()) {
    throw std::out_of_range("Engine: position beyond the read text");
  }
  return text_.matches(
      text_.pack_pattern(std::vector<Symbol>(p.begin(), p.end())), j);
}

std::vector<Position> Engine::oracle_query(std::span<const Symbol> p) const {
  check_pattern(p);
  std::vector<Position> out;
  const size_t m = p.size();
  const size_t r = raw_.size();
  for (size_t j = m; j <= r; ++j) {
    if (raw_[j - 1] != p[0]) continue;
    bool hit = true;
    for (size_t k = 1; k < m; ++k) {
      if (raw_[j - 1 - k] != p[k]) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back(j);
  }
  return out;
}

EngineStats Engine::stats() const {
  EngineStats s;
  s.reads = active_->reads();
  s.params = active_->params();
  s.rebuilds = rebuilds_;
  s.rebuilding = shadow_ != nullptr;
  s.long_nodes = active_->long_index().node_count();
  s.long_elements = active_->long_index().element_count();
  s.medium_nodes = active_->medium_index().node_count();
  s.medium_elements = active_->medium_index().element_count();
  if (const ShortIndex* si = active_->short_index()) {
    s.short_nodes = si->node_count();
    s.short_grams = si->gram_count();
  }
  s.long_horizon = active_->long_horizon();
  s.medium_horizon = active_->medium_horizon();
  if (!op_deltas_.empty()) {
    std::vector<uint64_t> sorted = op_deltas_;
    std::sort(sorted.begin(), sorted.end());
    s.ops_min = sorted.front();
    s.ops_median = sorted[sorted.size() / 2];
    s.ops_p99 = sorted[sorted.size() * 99 / 100];
    s.ops_max = sorted.back();
  }
  return s;
}

}  // namespace rti
