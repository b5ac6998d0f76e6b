#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rti/common.hpp"

namespace rti {

// Append-only text storage packing multiple symbols per 64-bit word in
// read order. Supports word-parallel substring equality tests: checking
// a pattern of length m costs O(m / symbols_per_word + 1) word
// comparisons instead of m scalar ones.
class PackedText {
 public:
  explicit PackedText(uint32_t sigma);

  void push(Symbol a);
  // Symbol at 1-based position j (position 1 = first symbol read).
  Symbol at(Position j) const;
  Position size() const { return count_; }
  uint32_t sigma() const { return sigma_; }
  uint32_t bits_per_symbol() const { return bits_; }

  // Pattern pre-packed for repeated occurrence checks.
  struct PackedPattern {
    std::vector<uint64_t> words;  // reversed pattern bits, LSB-first
    uint64_t length = 0;          // in symbols
  };
  PackedPattern pack_pattern(const std::vector<Symbol>& pattern) const;

  // True iff pattern occurs at position j, i.e. the text symbols at
  // positions j, j-1, ..., j-|P|+1 equal p_1, ..., p_m. False when the
  // pattern runs off either end of the text.
  bool matches(const PackedPattern& p, Position j) const;
  bool matches(const std::vector<Symbol>& pattern, Position j) const;

 private:
  uint64_t load_bits(uint64_t bit_offset, uint32_t nbits) const;

  uint32_t sigma_;
  uint32_t bits_;
  uint64_t count_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace rti
