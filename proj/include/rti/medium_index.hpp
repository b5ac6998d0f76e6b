#pragma once

#include <deque>
#include <map>
#include <span>
#include <vector>

#include "rti/child_map.hpp"
#include "rti/colored_list.hpp"
#include "rti/common.hpp"
#include "rti/meta.hpp"
#include "rti/packed_text.hpp"
#include "rti/params.hpp"

namespace rti {

// Medium-pattern tier: compacted trie over Sigma^{d'} of truncated
// suffixes (tau rounded up to whole blocks) at grid positions q*d',
// with per-(node, color) occurrence lists and a colored list mirroring
// the trie's Euler tour. Queries work like the long tier: for each
// offset rho in [0, d'), descend, then one colored range report; every
// position in a reported occurrence list yields occurrence i + rho.
class MediumIndex {
 public:
  MediumIndex(const PackedText& text, const IndexParams& params);
  MediumIndex(const MediumIndex&) = delete;
  MediumIndex& operator=(const MediumIndex&) = delete;

  void set_reads(Position reads) { reads_ = reads; }

  // Schedules insertion of the truncated suffix at i (i = q*d');
  // context through i+d' must be read, previous task complete.
  void enqueue(Position i);
  // Runs up to `steps` meta-steps of the pending insertion.
  void advance(uint32_t steps);
  bool task_pending() const { return task_.active; }
  // Meta-steps per prepend that complete a task within d' reads.
  uint32_t steps_per_slice() const {
    return (blocks_stored_ + 2 + d_prime_ - 1) / d_prime_;
  }

  Position indexed_through() const { return last_inserted_; }
  Position horizon() const { return last_inserted_ + d_prime_ - 1; }

  // Appends all indexed occurrences of p (delta <= |p| < tau), unsorted.
  void query(std::span<const Symbol> p, std::vector<Position>& out) const;

  uint64_t node_count() const { return pool_.size(); }
  uint64_t element_count() const { return list_.size(); }
  uint64_t ops() const { return list_.ops() + ops_; }

 private:
  struct MNode {
    MNode* parent = nullptr;
    uint32_t depth = 0;   // in meta symbols
    Position witness = 0; // start position of any suffix through here
    ChildMap<MNode*> children;
    ColoredList::Handle ext_first = nullptr;
    ColoredList::Handle ext_last = nullptr;
    std::map<Color, ColoredList::Handle> entries;

    explicit MNode(uint32_t msigma) : children(msigma) {}
  };
  struct OccList {
    std::vector<Position> positions;
  };
  struct Task {
    bool active = false;
    Position i = 0;
    uint32_t blocks = 0;  // stored meta length of this suffix
    uint32_t k = 0;       // blocks consumed
    MNode* node = nullptr;
    uint32_t depth = 0;
  };

  // Meta symbol at depth k on the root path through n.
  Symbol path_block(const MNode* n, uint32_t k) const {
    return block_code(text_, n->witness - Position{k} * d_prime_, d_prime_);
  }
  MNode* make_node();
  MNode* attach_leaf(MNode* parent, Symbol key, uint32_t depth,
                     Position witness);
  MNode* split_edge(MNode* child, uint32_t depth);
  void step();
  void finish_task();

  const PackedText& text_;
  uint32_t d_prime_;
  uint32_t delta_;
  uint32_t tau_;
  uint32_t blocks_stored_;  // tau_store / d'
  Symbol meta_sigma_;
  Position reads_ = 0;
  Position last_inserted_ = 0;
  ColoredList list_;
  std::deque<MNode> pool_;
  std::deque<OccList> occ_pool_;
  MNode* root_;
  Task task_;
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
