#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "rti/rmq_sequence.hpp"

using rti::RmqSequence;
using Handle = RmqSequence::Handle;

TEST_CASE("randomized inserts, order tests and range minima") {
  RmqSequence seq;
  std::vector<Handle> model;  // true order
  std::mt19937_64 rng(987654321);

  model.push_back(seq.insert_first(rng() % 1000, nullptr));
  const size_t kElems = 30000;
  for (size_t step = 1; step < kElems; ++step) {
    uint64_t key = rng() % 1000;
    size_t i = rng() % model.size();
    if (rng() % 2 == 0) {
      model.insert(model.begin() + i + 1, seq.insert_after(model[i], key, nullptr));
    } else {
      model.insert(model.begin() + i, seq.insert_before(model[i], key, nullptr));
    }
  }

  for (int q = 0; q < 50000; ++q) {
    size_t i = rng() % model.size();
    size_t j = rng() % model.size();
    CHECK(seq.precedes(model[i], model[j]) == (i < j));
  }

  for (int q = 0; q < 5000; ++q) {
    size_t i = rng() % model.size();
    size_t span = 1 + rng() % 512;
    size_t j = std::min(model.size() - 1, i + span);
    Handle m = seq.range_min(model[i], model[j]);
    uint64_t want = UINT64_MAX;
    for (size_t k = i; k <= j; ++k) want = std::min(want, model[k]->key);
    CHECK(m->key == want);
    // The reported element lies inside the range.
    CHECK_FALSE(seq.precedes(m, model[i]));
    CHECK_FALSE(seq.precedes(model[j], m));
  }

  // Degenerate ranges.
  for (int q = 0; q < 2000; ++q) {
    size_t i = rng() % model.size();
    CHECK(seq.range_min(model[i], model[i]) == model[i]);
  }
}

TEST_CASE("monotone keys, nested-interval usage pattern") {
  // Mimics Euler-tour usage: pairs of equal-key visits, inner pairs
  // inserted between outer ones with strictly larger keys.
  RmqSequence seq;
  std::mt19937_64 rng(42);
  struct Pair {
    Handle first, last;
    uint64_t key;
  };
  std::vector<Pair> pairs;
  Handle f = seq.insert_first(0, nullptr);
  Handle l = seq.insert_after(f, 0, nullptr);
  pairs.push_back({f, l, 0});
  for (int i = 0; i < 20000; ++i) {
    const Pair& outer = pairs[rng() % pairs.size()];
    uint64_t key = outer.key + 1 + rng() % 3;
    Handle nf = seq.insert_after(outer.first, key, nullptr);
    Handle nl = seq.insert_after(nf, key, nullptr);
    pairs.push_back({nf, nl, key});
  }
  for (int q = 0; q < 5000; ++q) {
    const Pair& a = pairs[rng() % pairs.size()];
    const Pair& b = pairs[rng() % pairs.size()];
    if (&a == &b) continue;
    Handle x = seq.precedes(a.first, b.first) ? a.first : b.first;
    Handle y = seq.precedes(a.first, b.first) ? b.first : a.first;
    Handle m = seq.range_min(x, y);
    CHECK_FALSE(seq.precedes(m, x));
    CHECK_FALSE(seq.precedes(y, m));
    CHECK(m->key <= a.key);
    CHECK(m->key <= b.key);
  }
}
