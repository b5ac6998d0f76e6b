#include "rti/long_index.hpp"

#include <cassert>
#include <stdexcept>

namespace rti {

LongIndex::LongIndex(const PackedText& text, const IndexParams& params)
    : text_(text),
      d_(params.d),
      tau_(params.tau),
      meta_sigma_(static_cast<Symbol>(params.meta_sigma_long())),
      view_(*this),
      list_(meta_sigma_ + 1),
      tree_(meta_sigma_, view_, this) {}

void LongIndex::root_created(void* root) {
  Node* n = static_cast<Node*>(root);
  auto first = list_.insert_after(nullptr, 0, n);
  n->ext_first = first;
  n->ext_last = list_.insert_after(first, 0, n);
}

void LongIndex::attached_leading(void* node, void* parent) {
  Node* n = static_cast<Node*>(node);
  Node* p = static_cast<Node*>(parent);
  auto first = list_.insert_after(ext_first(p), 0, n);
  n->ext_first = first;
  n->ext_last = list_.insert_after(first, 0, n);
}

void LongIndex::attached_after(void* node, void* left_sibling) {
  Node* n = static_cast<Node*>(node);
  Node* left = static_cast<Node*>(left_sibling);
  auto first = list_.insert_after(ext_last(left), 0, n);
  n->ext_first = first;
  n->ext_last = list_.insert_after(first, 0, n);
}

void LongIndex::split_around(void* node, void* child) {
  Node* n = static_cast<Node*>(node);
  Node* c = static_cast<Node*>(child);
  n->ext_first = list_.insert_before(ext_first(c), 0, n);
  n->ext_last = list_.insert_after(ext_last(c), 0, n);
}

void LongIndex::enqueue(Position i) {
  if (task_.active) {
    throw std::logic_error("LongIndex: insertion task overrun");
  }
  assert(i % d_ == 0 && i / d_ == tree_.length() + 1);
  if (reads_ < i + d_) {
    throw std::logic_error("LongIndex: context not yet read");
  }
  task_.active = true;
  task_.phase = 0;
  task_.i = i;
}

void LongIndex::advance(uint32_t phases) {
  while (phases-- > 0 && task_.active) {
    if (task_.phase == 0) {
      task_.plan = tree_.plan_prepend(view_.read(task_.i / d_));
      task_.phase = 1;
    } else {
      Node* leaf = tree_.commit_prepend(task_.plan);
      Color color = context_code(text_, task_.i, d_) + 1;
      list_.insert_before(ext_last(leaf), color, leaf);
      task_.active = false;
    }
  }
}

void LongIndex::query(std::span<const Symbol> p,
                      std::vector<Position>& out) const {
  const size_t m = p.size();
  if (m < tau_) {
    throw std::invalid_argument("LongIndex: pattern below the long band");
  }
  std::vector<Symbol> blocks;
  for (uint32_t dlt = 0; dlt < d_; ++dlt) {
    const size_t len = m - dlt;
    const size_t full = len / d_;
    const uint32_t rem = static_cast<uint32_t>(len % d_);
    blocks.clear();
    for (size_t k = 0; k < full; ++k) {
      blocks.push_back(pattern_block_code(p, dlt + k * d_, d_, text_.sigma()));
    }
    auto loc = tree_.descend({tree_.root(), 0}, blocks);
    if (!loc.has_value()) continue;

    ColoredList::Handle from = nullptr;
    ColoredList::Handle to = nullptr;
    if (rem == 0) {
      from = ext_first(loc->node);
      to = ext_last(loc->node);
    } else {
      // Partial trailing block: the next meta symbol must fall in the
      // interval of blocks starting with the remaining rem symbols.
      Symbol span = 1;
      for (uint32_t k = 0; k < d_ - rem; ++k) span *= text_.sigma();
      Symbol lo =
          pattern_block_code(p, dlt + full * d_, rem, text_.sigma()) * span;
      Symbol hi = lo + span - 1;
      if (loc->explicit_node()) {
        auto range = tree_.child_range(loc->node, lo, hi);
        if (!range.has_value()) continue;
        from = ext_first(range->first);
        to = ext_last(range->second);
      } else {
        Symbol s = tree_.path_symbol(loc->node, loc->depth);
        if (s < lo || s > hi) continue;
        from = ext_first(loc->node);
        to = ext_last(loc->node);
      }
    }

    auto [minc, maxc] = color_interval(p, dlt, d_, text_.sigma());
    for (ColoredList::Handle e :
         list_.colored_range_report(from, to, minc + 1, maxc + 1)) {
      Node* leaf = static_cast<Node*>(ColoredList::payload(e));
      out.push_back(leaf->suffix_pos * d_ + dlt);
      ++ops_;
    }
  }
}

}  // namespace rti
