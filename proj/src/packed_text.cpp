#include "rti/packed_text.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace rti {

PackedText::PackedText(uint32_t sigma) : sigma_(sigma) {
  if (sigma < 2) throw std::invalid_argument("PackedText: sigma must be >= 2");
  bits_ = std::bit_width(sigma - 1);
}

void PackedText::push(Symbol a) {
  if (a >= sigma_) throw std::out_of_range("PackedText: symbol out of range");
  const uint64_t bit = count_ * bits_;
  const uint64_t word = bit >> 6;
  const uint32_t shift = static_cast<uint32_t>(bit & 63);
  if (word >= words_.size()) words_.push_back(0);
  words_[word] |= static_cast<uint64_t>(a) << shift;
  const uint32_t spill = shift + bits_;
  if (spill > 64) {
    words_.push_back(static_cast<uint64_t>(a) >> (64 - shift));
  }
  ++count_;
}

Symbol PackedText::at(Position j) const {
  if (j == 0 || j > count_) throw std::out_of_range("PackedText: position out of range");
  return static_cast<Symbol>(load_bits((j - 1) * bits_, bits_));
}

uint64_t PackedText::load_bits(uint64_t bit_offset, uint32_t nbits) const {
  assert(nbits >= 1 && nbits <= 64);
  const uint64_t word = bit_offset >> 6;
  const uint32_t shift = static_cast<uint32_t>(bit_offset & 63);
  uint64_t v = words_[word] >> shift;
  if (shift + nbits > 64 && word + 1 < words_.size()) {
    v |= words_[word + 1] << (64 - shift);
  }
  if (nbits < 64) v &= (uint64_t{1} << nbits) - 1;
  return v;
}

PackedText::PackedPattern PackedText::pack_pattern(
    const std::vector<Symbol>& pattern) const {
  PackedPattern p;
  p.length = pattern.size();
  const uint64_t total_bits = p.length * bits_;
  p.words.assign((total_bits + 63) / 64 + 1, 0);
  // Reversed (p_m ... p_1) so bit order matches read-order text storage.
  uint64_t bit = 0;
  for (size_t idx = pattern.size(); idx-- > 0; bit += bits_) {
    const Symbol a = pattern[idx];
    if (a >= sigma_) throw std::out_of_range("PackedText: pattern symbol out of range");
    p.words[bit >> 6] |= static_cast<uint64_t>(a) << (bit & 63);
    const uint32_t shift = static_cast<uint32_t>(bit & 63);
    if (shift + bits_ > 64) {
      p.words[(bit >> 6) + 1] |= static_cast<uint64_t>(a) >> (64 - shift);
    }
  }
  return p;
}

bool PackedText::matches(const PackedPattern& p, Position j) const {
  const uint64_t m = p.length;
  if (m == 0) return true;
  if (j > count_ || j < m) return false;
  // Text positions j-m+1..j occupy bits [(j-m)*bits, j*bits) in read order;
  // the reversed packed pattern lines up directly. Compare 64 bits at a
  // time; the pattern side stays word-aligned.
  uint64_t text_bit = (j - m) * bits_;
  uint64_t remaining = m * bits_;
  size_t pat_word = 0;
  while (remaining > 0) {
    const uint32_t chunk = static_cast<uint32_t>(remaining < 64 ? remaining : 64);
    uint64_t pv = p.words[pat_word];
    if (chunk < 64) pv &= (uint64_t{1} << chunk) - 1;
    if (load_bits(text_bit, chunk) != pv) return false;
    text_bit += chunk;
    ++pat_word;
    remaining -= chunk;
  }
  return true;
}

bool PackedText::matches(const std::vector<Symbol>& pattern, Position j) const {
  return matches(pack_pattern(pattern), j);
}

}  // namespace rti
