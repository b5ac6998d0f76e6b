#pragma once

#include <span>
#include <vector>

#include "rti/colored_list.hpp"
#include "rti/common.hpp"
#include "rti/meta.hpp"
#include "rti/packed_text.hpp"
#include "rti/params.hpp"
#include "rti/suffix_tree.hpp"

namespace rti {

// Long-pattern tier: sparse suffix tree over the meta-alphabet Sigma^d,
// holding the suffixes that start at positions q*d, plus a colored list
// mirroring its Euler tour. Each stored suffix contributes one colored
// element (color = reversed left context of the suffix start); internal
// nodes contribute two uncolored anchors. A pattern subtree then maps to
// a list interval, and each offset delta in [0, d) turns into one
// colored range query.
class LongIndex : private SuffixTreeObserver {
 public:
  LongIndex(const PackedText& text, const IndexParams& params);

  // The tier only ever looks at text positions <= reads.
  void set_reads(Position reads) { reads_ = reads; }

  // Schedules insertion of suffix i (i = q*d); context through i+d must
  // be read. The previous task must have completed.
  void enqueue(Position i);
  // Runs up to `phases` task phases (plan, then commit+color).
  void advance(uint32_t phases);
  bool task_pending() const { return task_.active; }
  // Phases per prepend that complete a task within d reads.
  uint32_t phases_per_slice() const { return d_ == 1 ? 2 : 1; }

  // Highest position fully covered by stored suffixes.
  Position indexed_through() const { return tree_.length() * d_; }
  // Occurrences above this never come from the tier (engine brute-checks
  // the remainder).
  Position horizon() const { return indexed_through() + d_ - 1; }

  // Appends all indexed occurrences of p (|p| >= tau), unsorted.
  void query(std::span<const Symbol> p, std::vector<Position>& out) const;

  uint64_t node_count() const { return tree_.node_count(); }
  uint64_t element_count() const { return list_.size(); }
  uint64_t ops() const { return tree_.ops() + list_.ops() + ops_; }
  const SuffixTree& tree() const { return tree_; }

 private:
  using Node = SuffixTree::Node;

  // SequenceAccessor view of the packed text as meta symbols, bounded by
  // the engine's read counter (a rebuild replays a strict prefix).
  class MetaView : public SequenceAccessor {
   public:
    MetaView(const LongIndex& owner) : owner_(owner) {}
    Symbol read(Position q) const override {
      return block_code(owner_.text_, q * owner_.d_, owner_.d_);
    }
    Position current_length() const override {
      return owner_.reads_ / owner_.d_;
    }

   private:
    const LongIndex& owner_;
  };

  struct Task {
    bool active = false;
    int phase = 0;  // 0 = plan, 1 = commit + color
    Position i = 0;
    SuffixTree::PrependPlan plan;
  };

  void root_created(void* root) override;
  void attached_leading(void* n, void* parent) override;
  void attached_after(void* n, void* left_sibling) override;
  void split_around(void* n, void* child) override;

  static ColoredList::Handle ext_first(const Node* n) {
    return static_cast<ColoredList::Handle>(n->ext_first);
  }
  static ColoredList::Handle ext_last(const Node* n) {
    return static_cast<ColoredList::Handle>(n->ext_last);
  }

  const PackedText& text_;
  uint32_t d_;
  uint32_t tau_;
  Symbol meta_sigma_;
  Position reads_ = 0;
  MetaView view_;
  ColoredList list_;
  SuffixTree tree_;
  Task task_;
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
