#pragma once

#include <span>
#include <utility>

#include "rti/common.hpp"
#include "rti/packed_text.hpp"

namespace rti {

// Meta-symbol coding: a block of d base symbols is one integer in
// [0, sigma^d). The digit order is the text's left-to-right reading
// order (highest position first), so meta-symbol order is the
// lexicographic order of the underlying strings.

// Block whose highest position is `top`, i.e. positions top..top-d+1;
// digit weights descend with position.
inline Symbol block_code(const PackedText& text, Position top, uint32_t d) {
  Symbol code = 0;
  for (uint32_t k = 0; k < d; ++k) {
    code = code * text.sigma() + text.at(top - k);
  }
  return code;
}

// Reversed left context of position i: digits most-to-least significant
// are t_{i+1}, t_{i+2}, ..., t_{i+d} (positions ascending). Used as the
// leaf color, so that fixing the first j decoded symbols selects a
// contiguous color interval.
inline Symbol context_code(const PackedText& text, Position i, uint32_t d) {
  Symbol code = 0;
  for (uint32_t k = 1; k <= d; ++k) {
    code = code * text.sigma() + text.at(i + k);
  }
  return code;
}

// Meta symbol for pattern block p[a..a+d), p[a] most significant. With
// 0-based pattern indices this matches block_code of an occurrence.
inline Symbol pattern_block_code(std::span<const Symbol> p, size_t a,
                                 uint32_t d, uint32_t sigma) {
  Symbol code = 0;
  for (uint32_t k = 0; k < d; ++k) {
    code = code * sigma + p[a + k];
  }
  return code;
}

// Color interval [minc, maxc] of contexts whose first j decoded symbols
// are p_j, p_{j-1}, ..., p_1 (the reversed pattern prefix). j = 0 yields
// the full interval.
inline std::pair<Symbol, Symbol> color_interval(std::span<const Symbol> p,
                                                uint32_t j, uint32_t d,
                                                uint32_t sigma) {
  Symbol prefix = 0;
  for (uint32_t k = j; k >= 1; --k) {
    prefix = prefix * sigma + p[k - 1];
  }
  Symbol span = 1;
  for (uint32_t k = 0; k < d - j; ++k) span *= sigma;
  Symbol minc = prefix * span;
  return {minc, minc + span - 1};
}

}  // namespace rti
