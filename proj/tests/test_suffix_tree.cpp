#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "rti/suffix_tree.hpp"

using rti::ColoredList;
using rti::Position;
using rti::SuffixTree;
using rti::Symbol;
using Node = SuffixTree::Node;

namespace {

struct VecText : rti::SequenceAccessor {
  std::vector<Symbol> v;
  Symbol read(Position pos) const override { return v.at(pos - 1); }
  Position current_length() const override { return v.size(); }
};

// Symbol of the length-`ell` suffix at 0-based string depth d. The suffix
// of length ell reads t_ell, t_{ell-1}, ..., t_1 (positions from the
// right end of the text).
Symbol suffix_sym(const std::vector<Symbol>& v, uint64_t ell, uint64_t d) {
  return v[ell - d - 1];
}

// Offline reference tree, built by recursive grouping of all suffixes.
struct ONode {
  uint64_t depth = 0;
  Position suffix = 0;
  uint64_t rep = 0;  // any suffix length in this subtree (label witness)
  std::map<Symbol, std::unique_ptr<ONode>> ch;
};

std::unique_ptr<ONode> build_oracle(const std::vector<Symbol>& v,
                                    std::vector<uint64_t> suffixes,
                                    uint64_t depth) {
  auto node = std::make_unique<ONode>();
  node->depth = depth;
  node->rep = suffixes.front();
  std::map<Symbol, std::vector<uint64_t>> groups;
  for (uint64_t ell : suffixes) {
    if (ell == depth) {
      node->suffix = ell;
    } else {
      groups[suffix_sym(v, ell, depth)].push_back(ell);
    }
  }
  for (auto& [sym, group] : groups) {
    uint64_t e = *std::min_element(group.begin(), group.end());
    for (uint64_t d = depth + 1; d < e; ++d) {
      bool agree = true;
      for (uint64_t ell : group) {
        if (suffix_sym(v, ell, d) != suffix_sym(v, group[0], d)) {
          agree = false;
          break;
        }
      }
      if (!agree) {
        e = d;
        break;
      }
    }
    node->ch[sym] = build_oracle(v, group, e);
  }
  return node;
}

size_t oracle_size(const ONode* o) {
  size_t n = 1;
  for (const auto& [s, c] : o->ch) n += oracle_size(c.get());
  return n;
}

void compare(const SuffixTree& st, const std::vector<Symbol>& v,
             const ONode* o, Node* n, uint64_t parent_depth) {
  REQUIRE(n != nullptr);
  REQUIRE(o->depth == n->string_depth);
  REQUIRE(o->suffix == n->suffix_pos);
  for (uint64_t d = parent_depth; d < o->depth; ++d) {
    REQUIRE(st.path_symbol(n, d) == suffix_sym(v, o->rep, d));
  }
  std::map<Symbol, Node*> real;
  n->children.for_each([&](Symbol s, Node* c) { real[s] = c; });
  REQUIRE(real.size() == o->ch.size());
  for (const auto& [s, oc] : o->ch) {
    auto it = real.find(s);
    REQUIRE(it != real.end());
    REQUIRE(it->second->parent == n);
    compare(st, v, oc.get(), it->second, o->depth);
  }
}

void full_compare(const SuffixTree& st, const std::vector<Symbol>& v) {
  std::vector<uint64_t> suffixes;
  for (uint64_t ell = 0; ell <= v.size(); ++ell) suffixes.push_back(ell);
  auto oracle = build_oracle(v, suffixes, 0);
  REQUIRE(st.node_count() == oracle_size(oracle.get()));
  compare(st, v, oracle.get(), st.root(), 0);
}

void collect(Node* n, std::vector<Node*>& out) {
  out.push_back(n);
  n->children.for_each([&](Symbol, Node* c) { collect(c, out); });
}

// Every hard W-link (u, a) -> v must satisfy label(v) == a . label(u).
void check_wlinks(const SuffixTree& st) {
  std::vector<Node*> nodes;
  collect(st.root(), nodes);
  for (Node* u : nodes) {
    for (const auto& [a, v] : u->hard_wlinks) {
      REQUIRE(v->string_depth == u->string_depth + 1);
      REQUIRE(st.path_symbol(v, 0) == a);
      for (uint64_t d = 0; d < u->string_depth; ++d) {
        REQUIRE(st.path_symbol(v, d + 1) == st.path_symbol(u, d));
      }
    }
  }
}

// Euler-tour list invariants: anchors nest like a DFS with children in
// symbol order, and color marks sit directly against their node's block.
void check_euler(const SuffixTree& st) {
  const ColoredList& list = st.euler_list();
  struct Frame {
    Node* node;
    int last_sym;
  };
  std::vector<Frame> stack;
  size_t anchors = 0;
  for (ColoredList::Handle e = list.front(); e != nullptr;
       e = ColoredList::next(e)) {
    Node* n = static_cast<Node*>(ColoredList::payload(e));
    REQUIRE(n != nullptr);
    if (ColoredList::color(e) == 0) {
      ++anchors;
      if (e == n->euler_first) {
        if (n->parent == nullptr) {
          REQUIRE(stack.empty());
        } else {
          REQUIRE_FALSE(stack.empty());
          REQUIRE(stack.back().node == n->parent);
          int sym = static_cast<int>(
              st.path_symbol(n, n->parent->string_depth));
          REQUIRE(sym > stack.back().last_sym);
          stack.back().last_sym = sym;
        }
        stack.push_back({n, -1});
      } else {
        REQUIRE(e == n->euler_last);
        REQUIRE_FALSE(stack.empty());
        REQUIRE(stack.back().node == n);
        stack.pop_back();
      }
    } else {
      // Mark inside [lead, trail] but outside the anchors.
      REQUIRE(list.order(n->euler_lead, e) <= 0);
      REQUIRE(list.order(e, n->euler_trail) <= 0);
      bool before = list.order(e, n->euler_first) < 0;
      bool after = list.order(n->euler_last, e) < 0;
      REQUIRE((before || after));
      if (n->parent != nullptr) {
        REQUIRE(list.order(n->parent->euler_first, e) < 0);
        REQUIRE(list.order(e, n->parent->euler_last) < 0);
      }
    }
  }
  REQUIRE(stack.empty());
  REQUIRE(anchors == 2 * st.node_count());
}

Node* slow_lca(Node* x, Node* y) {
  std::set<Node*> anc;
  for (Node* n = x; n != nullptr; n = n->parent) anc.insert(n);
  for (Node* n = y; n != nullptr; n = n->parent) {
    if (anc.count(n)) return n;
  }
  return nullptr;
}

std::vector<Symbol> random_text(std::mt19937_64& rng, size_t n,
                                uint32_t sigma) {
  std::vector<Symbol> v(n);
  for (auto& a : v) a = static_cast<Symbol>(rng() % sigma);
  return v;
}

}  // namespace

TEST_CASE("matches the offline reference tree after every prepend") {
  std::mt19937_64 rng(7);
  for (uint32_t sigma : {1u, 2u, 3u, 4u, 26u}) {
    for (int rep = 0; rep < 3; ++rep) {
      VecText text;
      SuffixTree st(sigma, text);
      auto full = random_text(rng, 160, sigma);
      for (Symbol a : full) {
        text.v.push_back(a);
        st.prepend(a);
        full_compare(st, text.v);
      }
      check_wlinks(st);
      check_euler(st);
    }
  }
}

TEST_CASE("longer texts with checkpointed verification") {
  std::mt19937_64 rng(99);
  for (uint32_t sigma : {2u, 4u, 70u}) {
    VecText text;
    SuffixTree st(sigma, text);
    auto full = random_text(rng, 2000, sigma);
    for (size_t i = 0; i < full.size(); ++i) {
      text.v.push_back(full[i]);
      Node* leaf = st.prepend(full[i]);
      REQUIRE(leaf == st.longest_leaf());
      REQUIRE(leaf->string_depth == i + 1);
      REQUIRE(st.length() == i + 1);
      if ((i + 1) % 500 == 0) {
        full_compare(st, text.v);
        check_wlinks(st);
        check_euler(st);
      }
    }
    full_compare(st, text.v);
  }
}

TEST_CASE("periodic and unary texts") {
  for (auto pattern : std::vector<std::vector<Symbol>>{
           {0}, {0, 1}, {0, 0, 1}, {0, 1, 1, 0}}) {
    VecText text;
    SuffixTree st(2, text);
    for (int i = 0; i < 120; ++i) {
      Symbol a = pattern[i % pattern.size()];
      text.v.push_back(a);
      st.prepend(a);
    }
    full_compare(st, text.v);
    check_wlinks(st);
    check_euler(st);
  }
}

TEST_CASE("descend finds exactly the suffixes with the given prefix") {
  std::mt19937_64 rng(5150);
  VecText text;
  SuffixTree st(3, text);
  auto full = random_text(rng, 800, 3);
  for (Symbol a : full) {
    text.v.push_back(a);
    st.prepend(a);
  }
  for (int q = 0; q < 4000; ++q) {
    size_t m = 1 + rng() % 14;
    std::vector<Symbol> p(m);
    if (q % 2 == 0) {
      uint64_t ell = m + rng() % (text.v.size() - m + 1);
      for (size_t k = 0; k < m; ++k) p[k] = suffix_sym(text.v, ell, k);
    } else {
      for (auto& a : p) a = static_cast<Symbol>(rng() % 3);
    }
    std::set<uint64_t> want;
    for (uint64_t ell = m; ell <= text.v.size(); ++ell) {
      bool ok = true;
      for (size_t k = 0; k < m; ++k) {
        if (suffix_sym(text.v, ell, k) != p[k]) {
          ok = false;
          break;
        }
      }
      if (ok) want.insert(ell);
    }
    auto loc = st.descend({st.root(), 0}, p);
    if (!loc.has_value()) {
      CHECK(want.empty());
      continue;
    }
    REQUIRE_FALSE(want.empty());
    CHECK(loc->depth == m);
    std::vector<Node*> sub;
    collect(loc->node, sub);
    std::set<uint64_t> got;
    for (Node* n : sub) {
      if (n->suffix_pos != 0 && n->suffix_pos >= m) got.insert(n->suffix_pos);
    }
    // Suffix positions recorded above the locus (depth < m) are excluded
    // by construction of `got`; below-locus ones must match exactly.
    CHECK(got == want);
  }
}

TEST_CASE("lca agrees with parent walks") {
  std::mt19937_64 rng(31337);
  VecText text;
  SuffixTree st(4, text);
  auto full = random_text(rng, 1200, 4);
  for (Symbol a : full) {
    text.v.push_back(a);
    st.prepend(a);
  }
  std::vector<Node*> nodes;
  collect(st.root(), nodes);
  for (int q = 0; q < 20000; ++q) {
    Node* x = nodes[rng() % nodes.size()];
    Node* y = nodes[rng() % nodes.size()];
    CHECK(st.lca(x, y) == slow_lca(x, y));
  }
}

TEST_CASE("plan/commit split gives the same tree as plain prepend") {
  std::mt19937_64 rng(8);
  VecText t1, t2;
  SuffixTree a(3, t1);
  SuffixTree b(3, t2);
  auto full = random_text(rng, 400, 3);
  for (Symbol s : full) {
    t1.v.push_back(s);
    t2.v.push_back(s);
    a.prepend(s);
    auto plan = b.plan_prepend(s);
    b.commit_prepend(plan);
  }
  full_compare(a, t1.v);
  full_compare(b, t2.v);
  CHECK(a.node_count() == b.node_count());
}

TEST_CASE("rejects out-of-range symbols and unexposed text") {
  VecText text;
  SuffixTree st(2, text);
  CHECK_THROWS_AS(st.plan_prepend(2), std::out_of_range);
  CHECK_THROWS_AS(st.plan_prepend(0), std::logic_error);  // symbol not readable
  text.v.push_back(1);
  CHECK(st.prepend(1) != nullptr);
}

TEST_CASE("dot output is well-formed enough to inspect") {
  VecText text;
  SuffixTree st(2, text);
  for (Symbol a : {1u, 0u, 0u, 1u, 0u}) {
    text.v.push_back(a);
    st.prepend(a);
  }
  std::ostringstream os;
  st.to_dot(os);
  auto s = os.str();
  CHECK(s.find("digraph") != std::string::npos);
  CHECK(s.find("W") != std::string::npos);
}
