#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rti/child_map.hpp"
#include "rti/colored_list.hpp"
#include "rti/common.hpp"
#include "rti/rmq_sequence.hpp"

namespace rti {

// Read access to the indexed symbol sequence. Position 1 is the first
// symbol read (the rightmost symbol of the text); symbols are immutable
// once readable.
class SequenceAccessor {
 public:
  virtual ~SequenceAccessor() = default;
  virtual Symbol read(Position pos) const = 0;
  virtual Position current_length() const = 0;
};

class SuffixTree;

// Callbacks describing where each new node lands in Euler-tour order,
// letting a client mirror the tour into its own structure.
class SuffixTreeObserver {
 public:
  virtual ~SuffixTreeObserver() = default;
  virtual void root_created(void* root) = 0;
  // n became the first child (in symbol order) of parent.
  virtual void attached_leading(void* n, void* parent) = 0;
  // n was attached immediately after its left sibling.
  virtual void attached_after(void* n, void* left_sibling) = 0;
  // n was created by splitting the edge into child; in Euler order its
  // visits bracket the child's subtree.
  virtual void split_around(void* n, void* child) = 0;
};

// Online suffix tree over a generic alphabet, updated by prepending one
// symbol per step (Weiner direction). Only hard W-links are stored; soft
// links are resolved on the fly through colored predecessor/successor
// queries on the Euler-tour list plus dynamic LCA queries.
//
// Suffixes of a growing text are pairwise distinct, so every suffix owns
// an explicit node. Without a terminal sentinel a shorter suffix can be
// a prefix of a longer one; its node then simply carries children while
// still recording the suffix position.
class SuffixTree {
 public:
  struct Node {
    Node* parent = nullptr;
    uint64_t string_depth = 0;
    // label(n) = text[label_end .. label_end - string_depth + 1]
    Position label_end = 0;
    Position suffix_pos = 0;  // 0 = no suffix ends here
    ChildMap<Node*> children;
    std::map<Symbol, Node*> hard_wlinks;
    // Euler list anchors and the outermost elements of this node's
    // adjacent block (anchors plus W-link color marks).
    ColoredList::Handle euler_first = nullptr;
    ColoredList::Handle euler_last = nullptr;
    ColoredList::Handle euler_lead = nullptr;
    ColoredList::Handle euler_trail = nullptr;
    RmqSequence::Handle lca_first = nullptr;
    RmqSequence::Handle lca_last = nullptr;
    // Slots for a tier that mirrors the Euler tour (e.g. the leaf-color
    // list of the sparse long-pattern index).
    void* ext_first = nullptr;
    void* ext_last = nullptr;
    uint32_t id = 0;

    explicit Node(uint32_t sigma) : children(sigma) {}
  };

  // Explicit node (depth == node->string_depth) or a point inside the
  // edge entering `node` (parent depth < depth < node depth).
  struct Locus {
    Node* node = nullptr;
    uint64_t depth = 0;
    bool explicit_node() const { return depth == node->string_depth; }
  };

  // Outcome of the Weiner search for one prepended symbol, kept separate
  // from the mutation so a scheduler can split them across time slices.
  struct PrependPlan {
    Symbol symbol = 0;
    Node* attach = nullptr;       // existing node to attach under (if no split)
    Node* split_child = nullptr;  // edge into this node is split when non-null
    uint64_t split_depth = 0;
    Node* wlink_source = nullptr;  // receives a hard link to the split node
    Node* prev_leaf = nullptr;     // previous full-text leaf (hard link to new leaf)
  };

  SuffixTree(uint32_t alphabet_size, const SequenceAccessor& text,
             SuffixTreeObserver* observer = nullptr);
  SuffixTree(const SuffixTree&) = delete;
  SuffixTree& operator=(const SuffixTree&) = delete;

  // Extends the indexed text by one symbol (the accessor must already
  // expose it at position current_length()+1). Returns the new leaf.
  Node* prepend(Symbol a);
  PrependPlan plan_prepend(Symbol a) const;
  Node* commit_prepend(const PrependPlan& plan);

  // Lowest ancestor of t with a defined (possibly soft) W-link for `a`,
  // together with the hard-linked witness node used to resolve it.
  std::optional<std::pair<Node*, Node*>> lowest_wlinked_ancestor(Node* t,
                                                                 Symbol a) const;
  // Locus of a . label(u); witness must be the highest hard-linked
  // descendant when the link is soft.
  Locus resolve_wlink(Node* u, Symbol a, Node* witness) const;

  std::optional<Locus> descend(Locus start, std::span<const Symbol> s) const;
  // Children of v whose first edge symbol lies in [lo, hi].
  std::optional<std::pair<Node*, Node*>> child_range(Node* v, Symbol lo,
                                                     Symbol hi) const;
  Node* lca(Node* x, Node* y) const;
  std::pair<ColoredList::Handle, ColoredList::Handle> subtree_euler_bounds(
      Locus locus) const;

  // Symbol at 0-based string depth `depth` on the root path of n.
  Symbol path_symbol(const Node* n, uint64_t depth) const {
    return text_.read(n->label_end - depth);
  }

  Node* root() const { return root_; }
  Node* longest_leaf() const { return longest_leaf_; }
  uint64_t length() const { return length_; }
  uint64_t node_count() const { return static_cast<uint64_t>(pool_.size()); }
  uint32_t alphabet_size() const { return sigma_; }
  const ColoredList& euler_list() const { return euler_; }
  uint64_t ops() const { return ops_ + euler_.ops() + lca_seq_.ops(); }

  void to_dot(std::ostream& os) const;

 private:
  Node* make_node();
  Node* attach_leaf(Node* parent);
  Node* split_edge(Node* child, uint64_t depth);
  void install_wlink(Node* source, Symbol a, Node* target);
  static Color wlink_color(Symbol a) { return a + 1; }

  uint32_t sigma_;
  const SequenceAccessor& text_;
  SuffixTreeObserver* observer_;
  uint64_t length_ = 0;
  std::deque<Node> pool_;
  Node* root_;
  Node* longest_leaf_ = nullptr;
  ColoredList euler_;
  RmqSequence lca_seq_;
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
