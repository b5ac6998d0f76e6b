#include "rti/suffix_tree.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace rti {

SuffixTree::SuffixTree(uint32_t alphabet_size, const SequenceAccessor& text,
                       SuffixTreeObserver* observer)
    : sigma_(alphabet_size),
      text_(text),
      observer_(observer),
      euler_(alphabet_size + 1) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("SuffixTree: alphabet size must be >= 1");
  }
  root_ = make_node();
  root_->euler_first = euler_.insert_after(nullptr, 0, root_);
  root_->euler_last = euler_.insert_after(root_->euler_first, 0, root_);
  root_->euler_lead = root_->euler_first;
  root_->euler_trail = root_->euler_last;
  root_->lca_first = lca_seq_.insert_first(0, root_);
  root_->lca_last = lca_seq_.insert_after(root_->lca_first, 0, root_);
  if (observer_) observer_->root_created(root_);
}

SuffixTree::Node* SuffixTree::make_node() {
  pool_.emplace_back(sigma_);
  Node* n = &pool_.back();
  n->id = static_cast<uint32_t>(pool_.size());
  return n;
}

SuffixTree::PrependPlan SuffixTree::plan_prepend(Symbol a) const {
  if (a >= sigma_) throw std::out_of_range("SuffixTree: symbol out of range");
  if (text_.current_length() < length_ + 1) {
    throw std::logic_error("SuffixTree: accessor does not expose the new symbol");
  }
  PrependPlan plan;
  plan.symbol = a;
  if (longest_leaf_ == nullptr) {
    plan.attach = root_;
    return plan;
  }
  Node* t = longest_leaf_;
  plan.prev_leaf = t;
  if (auto it = t->hard_wlinks.find(a); it != t->hard_wlinks.end()) {
    plan.attach = it->second;  // cannot occur for the full-text leaf
    return plan;
  }
  auto anc = lowest_wlinked_ancestor(t, a);
  if (!anc.has_value()) {
    plan.attach = root_;  // letter never seen: new branch off the root
    return plan;
  }
  auto [u, witness] = *anc;
  if (auto it = u->hard_wlinks.find(a); it != u->hard_wlinks.end()) {
    plan.attach = it->second;
    return plan;
  }
  Node* w = witness->hard_wlinks.at(a);
  plan.split_child = w;
  plan.split_depth = u->string_depth + 1;
  plan.wlink_source = u;
  return plan;
}

std::optional<std::pair<SuffixTree::Node*, SuffixTree::Node*>>
SuffixTree::lowest_wlinked_ancestor(Node* t, Symbol a) const {
  const Color col = wlink_color(a);
  ColoredList::Handle e1 = euler_.colored_predecessor(t->euler_first, col);
  ColoredList::Handle e2 = euler_.colored_successor(t->euler_last, col);
  if (e1 == nullptr && e2 == nullptr) return std::nullopt;
  Node* u = nullptr;
  Node* witness = nullptr;
  if (e1 != nullptr) {
    Node* v1 = static_cast<Node*>(ColoredList::payload(e1));
    u = lca(t, v1);
    witness = v1;
  }
  if (e2 != nullptr) {
    Node* v2 = static_cast<Node*>(ColoredList::payload(e2));
    Node* l2 = lca(t, v2);
    if (u == nullptr || l2->string_depth > u->string_depth) {
      u = l2;
      witness = v2;
    }
  }
  return std::make_pair(u, witness);
}

SuffixTree::Locus SuffixTree::resolve_wlink(Node* u, Symbol a,
                                            Node* witness) const {
  if (auto it = u->hard_wlinks.find(a); it != u->hard_wlinks.end()) {
    return Locus{it->second, it->second->string_depth};
  }
  Node* w = witness->hard_wlinks.at(a);
  return Locus{w, u->string_depth + 1};
}

SuffixTree::Node* SuffixTree::prepend(Symbol a) {
  return commit_prepend(plan_prepend(a));
}

SuffixTree::Node* SuffixTree::commit_prepend(const PrependPlan& plan) {
  ++length_;
  Node* attach = plan.attach;
  if (plan.split_child != nullptr) {
    Node* s = split_edge(plan.split_child, plan.split_depth);
    if (plan.wlink_source != nullptr) {
      install_wlink(plan.wlink_source, plan.symbol, s);
    }
    attach = s;
  }
  Node* leaf = attach_leaf(attach);
  install_wlink(plan.prev_leaf != nullptr ? plan.prev_leaf : root_, plan.symbol,
                leaf);
  longest_leaf_ = leaf;
  return leaf;
}

SuffixTree::Node* SuffixTree::attach_leaf(Node* parent) {
  const Position len = length_;
  Node* leaf = make_node();
  leaf->parent = parent;
  leaf->string_depth = len;
  leaf->label_end = len;
  leaf->suffix_pos = len;
  const Symbol sym = text_.read(len - parent->string_depth);
  assert(parent->children.get(sym) == nullptr &&
         "attachment point must not already continue with this symbol");
  Node* left = parent->children.prev_child(sym);
  parent->children.set(sym, leaf);
  if (left != nullptr) {
    leaf->euler_first = euler_.insert_after(left->euler_trail, 0, leaf);
    leaf->lca_first = lca_seq_.insert_after(left->lca_last, len, leaf);
  } else {
    leaf->euler_first = euler_.insert_after(parent->euler_first, 0, leaf);
    leaf->lca_first = lca_seq_.insert_after(parent->lca_first, len, leaf);
  }
  leaf->euler_last = euler_.insert_after(leaf->euler_first, 0, leaf);
  leaf->lca_last = lca_seq_.insert_after(leaf->lca_first, len, leaf);
  leaf->euler_lead = leaf->euler_first;
  leaf->euler_trail = leaf->euler_last;
  ++ops_;
  if (observer_) {
    if (left != nullptr) {
      observer_->attached_after(leaf, left);
    } else {
      observer_->attached_leading(leaf, parent);
    }
  }
  return leaf;
}

SuffixTree::Node* SuffixTree::split_edge(Node* child, uint64_t depth) {
  Node* parent = child->parent;
  assert(depth > parent->string_depth && depth < child->string_depth);
  Node* s = make_node();
  s->parent = parent;
  s->string_depth = depth;
  s->label_end = child->label_end;
  const Symbol top = text_.read(child->label_end - parent->string_depth);
  const Symbol low = text_.read(child->label_end - depth);
  parent->children.set(top, s);
  s->children.set(low, child);
  child->parent = s;
  s->euler_first = euler_.insert_before(child->euler_lead, 0, s);
  s->euler_last = euler_.insert_after(child->euler_trail, 0, s);
  s->euler_lead = s->euler_first;
  s->euler_trail = s->euler_last;
  s->lca_first = lca_seq_.insert_before(child->lca_first, depth, s);
  s->lca_last = lca_seq_.insert_after(child->lca_last, depth, s);
  ++ops_;
  if (observer_) observer_->split_around(s, child);
  return s;
}

void SuffixTree::install_wlink(Node* source, Symbol a, Node* target) {
  assert(source->hard_wlinks.find(a) == source->hard_wlinks.end());
  source->hard_wlinks[a] = target;
  const Color col = wlink_color(a);
  source->euler_lead = euler_.insert_before(source->euler_lead, col, source);
  source->euler_trail = euler_.insert_after(source->euler_trail, col, source);
  ++ops_;
}

SuffixTree::Node* SuffixTree::lca(Node* x, Node* y) const {
  if (x == y) return x;
  ++ops_;
  if (lca_seq_.precedes(y->lca_first, x->lca_first)) std::swap(x, y);
  if (lca_seq_.precedes(y->lca_first, x->lca_last)) return x;  // y inside x
  RmqSequence::Handle m = lca_seq_.range_min(x->lca_first, y->lca_first);
  Node* z = static_cast<Node*>(RmqSequence::tag(m));
  assert(z->parent != nullptr);
  return z->parent;
}

std::optional<SuffixTree::Locus> SuffixTree::descend(
    Locus start, std::span<const Symbol> s) const {
  Locus loc = start;
  for (Symbol sym : s) {
    ++ops_;
    if (loc.depth == loc.node->string_depth) {
      Node* child = loc.node->children.get(sym);
      if (child == nullptr) return std::nullopt;
      loc.node = child;
      ++loc.depth;
    } else {
      if (path_symbol(loc.node, loc.depth) != sym) return std::nullopt;
      ++loc.depth;
    }
  }
  return loc;
}

std::optional<std::pair<SuffixTree::Node*, SuffixTree::Node*>>
SuffixTree::child_range(Node* v, Symbol lo, Symbol hi) const {
  ++ops_;
  return v->children.range(lo, hi);
}

std::pair<ColoredList::Handle, ColoredList::Handle>
SuffixTree::subtree_euler_bounds(Locus locus) const {
  return {locus.node->euler_first, locus.node->euler_last};
}

void SuffixTree::to_dot(std::ostream& os) const {
  os << "digraph suffix_tree {\n  node [shape=circle];\n";
  for (const Node& n : pool_) {
    os << "  n" << n.id << " [label=\"" << n.id << "\\nd=" << n.string_depth;
    if (n.suffix_pos != 0) os << "\\np=" << n.suffix_pos;
    os << "\"];\n";
    if (n.parent != nullptr) {
      os << "  n" << n.parent->id << " -> n" << n.id << " [label=\"";
      for (uint64_t d = n.parent->string_depth; d < n.string_depth; ++d) {
        if (d > n.parent->string_depth) os << '.';
        os << path_symbol(&n, d);
      }
      os << "\"];\n";
    }
    for (const auto& [a, target] : n.hard_wlinks) {
      os << "  n" << n.id << " -> n" << target->id << " [style=dashed,label=\"W"
         << a << "\"];\n";
    }
  }
  os << "}\n";
}

}  // namespace rti
