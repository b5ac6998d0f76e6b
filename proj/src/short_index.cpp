#include "rti/short_index.hpp"

#include <cassert>
#include <stdexcept>

namespace rti {

ShortIndex::ShortIndex(const PackedText& text, const IndexParams& params)
    : text_(text), delta_(params.delta) {
  pow_top_ = 1;
  for (uint32_t k = 1; k < delta_; ++k) pow_top_ *= text_.sigma();
  root_ = make_node();
}

ShortIndex::SNode* ShortIndex::make_node() {
  pool_.emplace_back(text_.sigma());
  return &pool_.back();
}

void ShortIndex::on_symbol(Position i, Symbol a) {
  ++ops_;
  if (i <= delta_) {
    code_ += a * pow_cur_;
    pow_cur_ *= text_.sigma();
  } else {
    code_ = a * pow_top_ + code_ / text_.sigma();
  }
  const uint32_t len = static_cast<uint32_t>(std::min<Position>(i, delta_));
  const uint64_t key = (uint64_t{len} << 48) | code_;
  auto it = table_.find(key);
  SNode* end = it != table_.end() ? it->second : insert_gram(i, len);
  if (it == table_.end()) table_.emplace(key, end);
  end->positions.push_back(i);
}

ShortIndex::SNode* ShortIndex::split_edge(SNode* child, uint32_t depth) {
  assert(child->parent != nullptr);
  assert(depth > child->parent->depth && depth < child->depth);
  SNode* parent = child->parent;
  SNode* s = make_node();
  s->parent = parent;
  s->depth = depth;
  s->witness = child->witness;
  s->leftmost = child->leftmost;
  s->rightmost = child->rightmost;
  parent->children.set(path_sym(child, parent->depth), s);
  s->children.set(path_sym(child, depth), child);
  child->parent = s;
  ++ops_;
  return s;
}

ShortIndex::SNode* ShortIndex::insert_gram(Position i, uint32_t len) {
  SNode* node = root_;
  uint32_t depth = 0;
  uint32_t k = 0;
  SNode* fresh = nullptr;  // newly attached leaf, if any
  while (k < len) {
    ++ops_;
    const Symbol sym = text_.at(i - k);
    if (depth == node->depth) {
      SNode* child = node->children.get(sym);
      if (child == nullptr) {
        fresh = make_node();
        fresh->parent = node;
        fresh->depth = len;
        fresh->witness = i;
        node->children.set(sym, fresh);
        node = fresh;
        depth = len;
        break;
      }
      node = child;
      ++depth;
      ++k;
    } else if (path_sym(node, depth) == sym) {
      ++depth;
      ++k;
    } else {
      SNode* s = split_edge(node, depth);
      fresh = make_node();
      fresh->parent = s;
      fresh->depth = len;
      fresh->witness = i;
      s->children.set(sym, fresh);
      node = fresh;
      depth = len;
      break;
    }
  }
  if (depth < node->depth) {
    node = split_edge(node, depth);
  }
  // `node` now spells exactly the gram; thread it as a gram end.
  assert(!node->threaded);
  node->threaded = true;
  if (fresh != nullptr) {
    // New leaf: predecessor is the last threaded node before it in
    // preorder — walk up past left siblings.
    SNode* pred = nullptr;
    SNode* cur = node;
    while (cur->parent != nullptr) {
      SNode* p = cur->parent;
      ++ops_;
      SNode* prev = p->children.prev_child(path_sym(cur, p->depth));
      if (prev != nullptr) {
        pred = prev->rightmost;
        assert(pred != nullptr);  // completed subtrees hold a gram end
        break;
      }
      if (p->threaded) {
        pred = p;
        break;
      }
      cur = p;
    }
    thread_node(node, pred, pred != nullptr ? pred->next_t : head_);
    node->leftmost = node->rightmost = node;
  } else {
    // Existing or split node marked as an end: it precedes every end in
    // its subtree.
    SNode* succ = node->leftmost;
    assert(succ != nullptr);
    thread_node(node, succ->prev_t, succ);
    node->leftmost = node;
    if (node->rightmost == nullptr) node->rightmost = node;
  }
  update_bounds(node);
  return node;
}

void ShortIndex::thread_node(SNode* n, SNode* pred, SNode* succ) {
  n->prev_t = pred;
  n->next_t = succ;
  if (pred != nullptr) {
    pred->next_t = n;
  } else {
    head_ = n;
  }
  if (succ != nullptr) succ->prev_t = n;
}

void ShortIndex::update_bounds(SNode* n) {
  for (SNode* anc = n->parent; anc != nullptr; anc = anc->parent) {
    ++ops_;
    if (anc->leftmost == nullptr) {
      anc->leftmost = anc->rightmost = n;
      continue;
    }
    if (anc->leftmost == n->next_t) anc->leftmost = n;
    if (anc->rightmost == n->prev_t) anc->rightmost = n;
  }
}

void ShortIndex::query(std::span<const Symbol> p,
                       std::vector<Position>& out) const {
  const size_t m = p.size();
  if (m == 0 || m >= delta_) {
    throw std::invalid_argument("ShortIndex: pattern outside the short band");
  }
  const SNode* node = root_;
  uint32_t depth = 0;
  for (size_t k = 0; k < m; ++k) {
    ++ops_;
    if (depth == node->depth) {
      const SNode* child = node->children.get(p[k]);
      if (child == nullptr) return;
      node = child;
      ++depth;
    } else if (path_sym(node, depth) == p[k]) {
      ++depth;
    } else {
      return;
    }
  }
  if (node->leftmost == nullptr) return;
  for (const SNode* t = node->leftmost;; t = t->next_t) {
    for (Position pos : t->positions) {
      out.push_back(pos);
      ++ops_;
    }
    if (t == node->rightmost) break;
  }
}

}  // namespace rti
