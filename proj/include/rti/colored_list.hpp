#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <vector>

#include "rti/common.hpp"

namespace rti {

// Dynamic ordered list whose elements carry small-integer colors.
// Supports O(1) order comparison between any two elements (via list
// labeling with local relabeling), colored predecessor/successor, and
// colored range reporting. Elements are never removed; handles stay
// valid for the lifetime of the list.
class ColoredList {
 public:
  struct Element {
    uint64_t label = 0;
    Element* prev = nullptr;
    Element* next = nullptr;
    Color color = 0;
    void* payload = nullptr;
    const ColoredList* owner = nullptr;
  };
  using Handle = Element*;

  static constexpr Color kDefaultColorCapacity = 256;

  explicit ColoredList(Color color_capacity = kDefaultColorCapacity);
  ColoredList(const ColoredList&) = delete;
  ColoredList& operator=(const ColoredList&) = delete;

  // Inserts a new element immediately after `anchor`; nullptr means the
  // list start. Throws on color overflow or a foreign anchor.
  Handle insert_after(Handle anchor, Color color, void* payload = nullptr);
  // Inserts immediately before `next_elem` (which must belong to the list).
  Handle insert_before(Handle next_elem, Color color, void* payload = nullptr);

  // -1 if a precedes b, 0 if same element, +1 if a follows b.
  int order(Handle a, Handle b) const;

  // Closest element strictly before e with color col, or nullptr.
  Handle colored_predecessor(Handle e, Color col) const;
  // Same, but e itself qualifies when col(e) == col.
  Handle colored_predecessor_inclusive(Handle e, Color col) const;
  // Closest element strictly after e with color col, or nullptr.
  Handle colored_successor(Handle e, Color col) const;
  Handle colored_successor_inclusive(Handle e, Color col) const;

  // All elements between e1 and e2 (inclusive) whose color lies in
  // [col1, col2]. Emission order is by color, then list order.
  std::vector<Handle> colored_range_report(Handle e1, Handle e2, Color col1,
                                           Color col2) const;

  Handle front() const { return head_.next; }
  static Handle next(Handle e) { return e->next; }
  static Color color(Handle e) { return e->color; }
  static void* payload(Handle e) { return e->payload; }

  size_t size() const { return pool_.size(); }
  Color color_capacity() const { return color_capacity_; }
  // Structural micro-operation counter (inserts, relabels, search steps).
  uint64_t ops() const { return ops_; }

 private:
  struct LabelLess {
    bool operator()(const Element* a, const Element* b) const {
      return a->label < b->label;
    }
  };
  using ColorSet = std::set<Element*, LabelLess>;

  void check_handle(Handle e) const;
  void check_color(Color col) const;
  // Makes room between e and e->next, relabeling a small aligned
  // neighborhood if the gap is exhausted.
  void relabel_around(Element* e);
  Handle insert_between(Element* before, Color color, void* payload);
  ColorSet& color_set(Color col) { return colors_[col]; }

  Color color_capacity_;
  Element head_;  // sentinel, label 0
  Element* tail_elem_ = nullptr;  // last real element, or nullptr
  std::deque<Element> pool_;
  std::vector<ColorSet> colors_;
  mutable uint64_t ops_ = 0;
};

}  // namespace rti
