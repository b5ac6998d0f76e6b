#include "rti/rmq_sequence.hpp"

#include <cassert>
#include <stdexcept>

namespace rti {

RmqSequence::Node* RmqSequence::make_node(uint64_t key, void* tag) {
  pool_.emplace_back();
  Node* n = &pool_.back();
  n->prio = rng_();
  n->key = key;
  n->tag = tag;
  n->min_node = n;
  return n;
}

void RmqSequence::fix_min(Node* n) {
  Node* m = n;
  if (n->left != nullptr) m = min2(m, n->left->min_node);
  if (n->right != nullptr) m = min2(m, n->right->min_node);
  n->min_node = m;
}

void RmqSequence::rotate_up(Node* n) {
  Node* p = n->parent;
  Node* g = p->parent;
  if (p->left == n) {
    p->left = n->right;
    if (n->right) n->right->parent = p;
    n->right = p;
  } else {
    p->right = n->left;
    if (n->left) n->left->parent = p;
    n->left = p;
  }
  p->parent = n;
  n->parent = g;
  if (g != nullptr) {
    (g->left == p ? g->left : g->right) = n;
  } else {
    root_ = n;
  }
  fix_min(p);
  fix_min(n);
  ++ops_;
}

void RmqSequence::bubble(Node* n) {
  while (n->parent != nullptr && n->prio < n->parent->prio) rotate_up(n);
  for (Node* x = n->parent; x != nullptr; x = x->parent) {
    fix_min(x);
    ++ops_;
  }
}

RmqSequence::Handle RmqSequence::insert_first(uint64_t key, void* tag) {
  if (root_ != nullptr) {
    throw std::logic_error("RmqSequence: insert_first on non-empty sequence");
  }
  Node* n = make_node(key, tag);
  root_ = n;
  return n;
}

RmqSequence::Handle RmqSequence::insert_after(Handle h, uint64_t key, void* tag) {
  Node* n = make_node(key, tag);
  if (h->right == nullptr) {
    h->right = n;
    n->parent = h;
  } else {
    Node* s = h->right;
    while (s->left != nullptr) s = s->left;
    s->left = n;
    n->parent = s;
  }
  bubble(n);
  return n;
}

RmqSequence::Handle RmqSequence::insert_before(Handle h, uint64_t key, void* tag) {
  Node* n = make_node(key, tag);
  if (h->left == nullptr) {
    h->left = n;
    n->parent = h;
  } else {
    Node* s = h->left;
    while (s->right != nullptr) s = s->right;
    s->right = n;
    n->parent = s;
  }
  bubble(n);
  return n;
}

RmqSequence::Node* RmqSequence::treap_lca(Node* a, Node* b) const {
  ++stamp_;
  for (Node* x = a; x != nullptr; x = x->parent) x->stamp = stamp_;
  for (Node* x = b; x != nullptr; x = x->parent) {
    if (x->stamp == stamp_) return x;
    ++ops_;
  }
  assert(false && "elements from different sequences");
  return nullptr;
}

bool RmqSequence::precedes(Handle a, Handle b) const {
  if (a == b) return false;
  Node* g = treap_lca(a, b);
  if (g == a) {
    // b is in a's subtree; find which side b entered from.
    Node* c = b;
    while (c->parent != a) c = c->parent;
    return c == a->right;
  }
  if (g == b) {
    Node* c = a;
    while (c->parent != b) c = c->parent;
    return c == b->left;
  }
  Node* ca = a;
  while (ca->parent != g) ca = ca->parent;
  return ca == g->left;
}

RmqSequence::Handle RmqSequence::range_min(Handle a, Handle b) const {
  if (a == b) return a;
  Node* g = treap_lca(a, b);
  if (g == a) {
    // [a..b], b inside a's right subtree.
    Node* acc = min2(a, min2(b, b->left ? b->left->min_node : nullptr));
    for (Node* cur = b; cur->parent != a; cur = cur->parent) {
      Node* p = cur->parent;
      if (cur == p->right) acc = min2(acc, min2(p, p->left ? p->left->min_node : nullptr));
      ++ops_;
    }
    return acc;
  }
  if (g == b) {
    Node* acc = min2(b, min2(a, a->right ? a->right->min_node : nullptr));
    for (Node* cur = a; cur->parent != b; cur = cur->parent) {
      Node* p = cur->parent;
      if (cur == p->left) acc = min2(acc, min2(p, p->right ? p->right->min_node : nullptr));
      ++ops_;
    }
    return acc;
  }
  Node* acc = min2(g, nullptr);
  Node* acc_a = min2(a, a->right ? a->right->min_node : nullptr);
  for (Node* cur = a; cur->parent != g; cur = cur->parent) {
    Node* p = cur->parent;
    if (cur == p->left) acc_a = min2(acc_a, min2(p, p->right ? p->right->min_node : nullptr));
    ++ops_;
  }
  Node* acc_b = min2(b, b->left ? b->left->min_node : nullptr);
  for (Node* cur = b; cur->parent != g; cur = cur->parent) {
    Node* p = cur->parent;
    if (cur == p->right) acc_b = min2(acc_b, min2(p, p->left ? p->left->min_node : nullptr));
    ++ops_;
  }
  return min2(acc, min2(acc_a, acc_b));
}

}  // namespace rti
