#pragma once

#include <deque>
#include <span>
#include <unordered_map>
#include <vector>

#include "rti/child_map.hpp"
#include "rti/common.hpp"
#include "rti/packed_text.hpp"
#include "rti/params.hpp"

namespace rti {

// Short-pattern tier: compacted trie over the base alphabet of every
// gram (window of the most recent Delta symbols; shorter at the text's
// first positions). Gram-end nodes carry position lists and are threaded
// in trie preorder; each node knows the first and last threaded node of
// its subtree, so a query reports the locus subtree by walking the
// thread between those two handles. A rolling code plus an exact-gram
// table makes the repeated-gram update O(1). This tier has no lag: the
// gram for position i is inserted while reading t_i.
class ShortIndex {
 public:
  ShortIndex(const PackedText& text, const IndexParams& params);
  ShortIndex(const ShortIndex&) = delete;
  ShortIndex& operator=(const ShortIndex&) = delete;

  // i must be the next unprocessed position; t_i = a must be readable.
  void on_symbol(Position i, Symbol a);

  // Appends all occurrences of p (1 <= |p| < delta), unsorted.
  void query(std::span<const Symbol> p, std::vector<Position>& out) const;

  uint64_t node_count() const { return pool_.size(); }
  uint64_t gram_count() const { return table_.size(); }
  uint64_t ops() const { return ops_; }

 private:
  struct SNode {
    SNode* parent = nullptr;
    uint32_t depth = 0;    // in base symbols
    Position witness = 0;  // end position of any gram through here
    ChildMap<SNode*> children;
    SNode* prev_t = nullptr;  // thread links (gram-end nodes only)
    SNode* next_t = nullptr;
    bool threaded = false;
    SNode* leftmost = nullptr;  // first/last threaded node in subtree
    SNode* rightmost = nullptr;
    std::vector<Position> positions;

    explicit SNode(uint32_t sigma) : children(sigma) {}
  };

  Symbol path_sym(const SNode* n, uint32_t k) const {
    return text_.at(n->witness - k);
  }
  SNode* make_node();
  SNode* split_edge(SNode* child, uint32_t depth);
  SNode* insert_gram(Position i, uint32_t len);
  void thread_node(SNode* n, SNode* pred, SNode* succ);
  void update_bounds(SNode* n);

  const PackedText& text_;
  uint32_t delta_;
  uint64_t pow_top_;    // sigma^(delta-1)
  uint64_t code_ = 0;   // rolling code of the current gram
  uint64_t pow_cur_ = 1;
  std::unordered_map<uint64_t, SNode*> table_;  // (len << 48) | code
  std::deque<SNode> pool_;
  SNode* root_;
  SNode* head_ = nullptr;  // first threaded node
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
