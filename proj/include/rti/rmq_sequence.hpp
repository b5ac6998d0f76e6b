#pragma once

#include <cstdint>
#include <deque>
#include <random>

#include "rti/common.hpp"

namespace rti {

// Dynamic sequence supporting insertion adjacent to an existing element,
// order tests, and range-minimum queries over a per-element key. Backed
// by a treap with parent pointers and subtree-min augmentation; all
// operations are O(log n) expected. Used as the lowest-common-ancestor
// engine for the growing suffix tree: elements are Euler-tour visits
// keyed by string depth.
class RmqSequence {
 public:
  struct Node {
    Node* left = nullptr;
    Node* right = nullptr;
    Node* parent = nullptr;
    uint64_t prio = 0;
    uint64_t key = 0;
    Node* min_node = nullptr;  // element with minimal key in this subtree
    void* tag = nullptr;
    uint64_t stamp = 0;
  };
  using Handle = Node*;

  RmqSequence() : rng_(0x9e3779b97f4a7c15ull) {}
  RmqSequence(const RmqSequence&) = delete;
  RmqSequence& operator=(const RmqSequence&) = delete;

  bool empty() const { return root_ == nullptr; }
  // Inserts the first element; the sequence must be empty.
  Handle insert_first(uint64_t key, void* tag);
  Handle insert_after(Handle h, uint64_t key, void* tag);
  Handle insert_before(Handle h, uint64_t key, void* tag);

  // True iff a comes strictly before b in sequence order.
  bool precedes(Handle a, Handle b) const;
  // Element with minimal key in the inclusive range [a, b];
  // a must not follow b.
  Handle range_min(Handle a, Handle b) const;

  static void* tag(Handle h) { return h->tag; }
  uint64_t ops() const { return ops_; }

 private:
  Node* make_node(uint64_t key, void* tag);
  void rotate_up(Node* n);
  void fix_min(Node* n);
  void bubble(Node* n);
  // Lowest common treap ancestor of a and b.
  Node* treap_lca(Node* a, Node* b) const;
  static Node* min2(Node* a, Node* b) {
    if (a == nullptr) return b;
    if (b == nullptr) return a;
    return b->key < a->key ? b : a;
  }

  Node* root_ = nullptr;
  std::deque<Node> pool_;
  std::mt19937_64 rng_;
  mutable uint64_t stamp_ = 0;
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
