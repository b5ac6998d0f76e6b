#include "rti/medium_index.hpp"

#include <cassert>
#include <stdexcept>

namespace rti {

MediumIndex::MediumIndex(const PackedText& text, const IndexParams& params)
    : text_(text),
      d_prime_(params.d_prime),
      delta_(params.delta),
      tau_(params.tau),
      blocks_stored_(params.tau_store() / params.d_prime),
      meta_sigma_(static_cast<Symbol>(params.meta_sigma_medium())),
      list_(meta_sigma_ + 1) {
  root_ = make_node();
  auto first = list_.insert_after(nullptr, 0, root_);
  root_->ext_first = first;
  root_->ext_last = list_.insert_after(first, 0, root_);
}

MediumIndex::MNode* MediumIndex::make_node() {
  pool_.emplace_back(meta_sigma_);
  return &pool_.back();
}

MediumIndex::MNode* MediumIndex::attach_leaf(MNode* parent, Symbol key,
                                             uint32_t depth,
                                             Position witness) {
  MNode* leaf = make_node();
  leaf->parent = parent;
  leaf->depth = depth;
  leaf->witness = witness;
  MNode* left = parent->children.prev_child(key);
  parent->children.set(key, leaf);
  auto anchor = left != nullptr ? left->ext_last : parent->ext_first;
  leaf->ext_first = list_.insert_after(anchor, 0, leaf);
  leaf->ext_last = list_.insert_after(leaf->ext_first, 0, leaf);
  ++ops_;
  return leaf;
}

MediumIndex::MNode* MediumIndex::split_edge(MNode* child, uint32_t depth) {
  assert(child->parent != nullptr);
  assert(depth > child->parent->depth && depth < child->depth);
  MNode* parent = child->parent;
  MNode* s = make_node();
  s->parent = parent;
  s->depth = depth;
  s->witness = child->witness;
  parent->children.set(path_block(child, parent->depth), s);
  s->children.set(path_block(child, depth), child);
  child->parent = s;
  s->ext_first = list_.insert_before(child->ext_first, 0, s);
  s->ext_last = list_.insert_after(child->ext_last, 0, s);
  ++ops_;
  return s;
}

void MediumIndex::enqueue(Position i) {
  if (task_.active) {
    throw std::logic_error("MediumIndex: insertion task overrun");
  }
  assert(i % d_prime_ == 0 && i > 0);
  if (reads_ < i + d_prime_) {
    throw std::logic_error("MediumIndex: context not yet read");
  }
  task_.active = true;
  task_.i = i;
  task_.blocks = static_cast<uint32_t>(
      std::min<Position>(blocks_stored_, i / d_prime_));
  task_.k = 0;
  task_.node = root_;
  task_.depth = 0;
}

void MediumIndex::advance(uint32_t steps) {
  while (steps-- > 0 && task_.active) step();
}

void MediumIndex::step() {
  ++ops_;
  if (task_.k == task_.blocks) {
    finish_task();
    return;
  }
  const Symbol code =
      block_code(text_, task_.i - Position{task_.k} * d_prime_, d_prime_);
  MNode* n = task_.node;
  if (task_.depth == n->depth) {
    MNode* child = n->children.get(code);
    if (child == nullptr) {
      // Rest of the suffix becomes one edge; insertion cost stays O(1).
      task_.node = attach_leaf(n, code, task_.blocks, task_.i);
      task_.depth = task_.blocks;
      task_.k = task_.blocks;
    } else {
      task_.node = child;
      ++task_.depth;
      ++task_.k;
    }
  } else if (path_block(n, task_.depth) == code) {
    ++task_.depth;
    ++task_.k;
  } else {
    MNode* s = split_edge(n, task_.depth);
    task_.node = attach_leaf(s, code, task_.blocks, task_.i);
    task_.depth = task_.blocks;
    task_.k = task_.blocks;
  }
}

void MediumIndex::finish_task() {
  MNode* end = task_.node;
  if (task_.depth < end->depth) {
    end = split_edge(end, task_.depth);
  }
  const Color color = context_code(text_, task_.i, d_prime_) + 1;
  auto it = end->entries.find(color);
  ColoredList::Handle elem;
  if (it != end->entries.end()) {
    elem = it->second;
  } else {
    occ_pool_.emplace_back();
    elem = list_.insert_before(end->ext_last, color, &occ_pool_.back());
    end->entries.emplace(color, elem);
  }
  static_cast<OccList*>(ColoredList::payload(elem))
      ->positions.push_back(task_.i);
  last_inserted_ = task_.i;
  task_.active = false;
}

void MediumIndex::query(std::span<const Symbol> p,
                        std::vector<Position>& out) const {
  const size_t m = p.size();
  if (m < delta_ || m >= tau_) {
    throw std::invalid_argument("MediumIndex: pattern outside the medium band");
  }
  for (uint32_t rho = 0; rho < d_prime_; ++rho) {
    const size_t len = m - rho;
    const size_t full = len / d_prime_;
    const uint32_t rem = static_cast<uint32_t>(len % d_prime_);
    const MNode* node = root_;
    uint32_t depth = 0;
    bool ok = true;
    for (size_t k = 0; k < full && ok; ++k) {
      ++ops_;
      const Symbol code =
          pattern_block_code(p, rho + k * d_prime_, d_prime_, text_.sigma());
      if (depth == node->depth) {
        const MNode* child = node->children.get(code);
        if (child == nullptr) {
          ok = false;
        } else {
          node = child;
          ++depth;
        }
      } else if (path_block(node, depth) == code) {
        ++depth;
      } else {
        ok = false;
      }
    }
    if (!ok) continue;

    ColoredList::Handle from = nullptr;
    ColoredList::Handle to = nullptr;
    if (rem == 0) {
      from = node->ext_first;
      to = node->ext_last;
    } else {
      Symbol span = 1;
      for (uint32_t k = 0; k < d_prime_ - rem; ++k) span *= text_.sigma();
      Symbol lo =
          pattern_block_code(p, rho + full * d_prime_, rem, text_.sigma()) *
          span;
      Symbol hi = lo + span - 1;
      if (depth == node->depth) {
        auto range = node->children.range(lo, hi);
        if (!range.has_value()) continue;
        from = range->first->ext_first;
        to = range->second->ext_last;
      } else {
        Symbol s = path_block(node, depth);
        if (s < lo || s > hi) continue;
        from = node->ext_first;
        to = node->ext_last;
      }
    }

    auto [minc, maxc] = color_interval(p, rho, d_prime_, text_.sigma());
    for (ColoredList::Handle e :
         list_.colored_range_report(from, to, minc + 1, maxc + 1)) {
      const OccList* occ = static_cast<const OccList*>(ColoredList::payload(e));
      for (Position i : occ->positions) {
        out.push_back(i + rho);
        ++ops_;
      }
    }
  }
}

}  // namespace rti
