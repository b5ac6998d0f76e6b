#include "rti/colored_list.hpp"

#include <cassert>
#include <stdexcept>

namespace rti {
namespace {

// Labels live in (0, kLabelLimit); the head sentinel keeps label 0.
constexpr uint64_t kLabelLimit = uint64_t{1} << 62;

}  // namespace

ColoredList::ColoredList(Color color_capacity)
    : color_capacity_(color_capacity), colors_(color_capacity) {
  if (color_capacity == 0) {
    throw std::invalid_argument("ColoredList: color capacity must be >= 1");
  }
  head_.owner = this;
}

void ColoredList::check_handle(Handle e) const {
  if (e == nullptr || e->owner != this) {
    throw std::invalid_argument("ColoredList: handle does not belong to this list");
  }
}

void ColoredList::check_color(Color col) const {
  if (col >= color_capacity_) {
    throw std::out_of_range("ColoredList: color exceeds configured capacity");
  }
}

ColoredList::Handle ColoredList::insert_after(Handle anchor, Color color,
                                              void* payload) {
  Element* before = &head_;
  if (anchor != nullptr) {
    check_handle(anchor);
    before = anchor;
  }
  if (color >= color_capacity_) {
    throw std::out_of_range("ColoredList: color exceeds configured capacity");
  }
  return insert_between(before, color, payload);
}

ColoredList::Handle ColoredList::insert_before(Handle next_elem, Color color,
                                               void* payload) {
  check_handle(next_elem);
  Element* before = next_elem->prev;
  if (before == nullptr) before = &head_;
  if (color >= color_capacity_) {
    throw std::out_of_range("ColoredList: color exceeds configured capacity");
  }
  return insert_between(before, color, payload);
}

ColoredList::Handle ColoredList::insert_between(Element* before, Color color,
                                                void* payload) {
  uint64_t lo = before->label;
  uint64_t hi = before->next ? before->next->label : kLabelLimit;
  if (hi - lo < 2) {
    relabel_around(before == &head_ ? before->next : before);
    lo = before->label;
    hi = before->next ? before->next->label : kLabelLimit;
  }
  assert(hi - lo >= 2);

  pool_.emplace_back();
  Element* e = &pool_.back();
  e->label = lo + (hi - lo) / 2;
  e->color = color;
  e->payload = payload;
  e->owner = this;
  e->prev = (before == &head_) ? nullptr : before;
  e->next = before->next;
  if (before->next) before->next->prev = e;
  before->next = e;
  if (e->next == nullptr) tail_elem_ = e;
  colors_[color].insert(e);
  ++ops_;
  return e;
}

void ColoredList::relabel_around(Element* e) {
  assert(e != nullptr && e != &head_);
  for (int i = 4; i < 62; ++i) {
    const uint64_t width = uint64_t{1} << i;
    const uint64_t lo = e->label & ~(width - 1);
    const uint64_t hi = lo + width;
    // Collect the contiguous run of elements with labels in [lo, hi).
    Element* left = e;
    while (left->prev != nullptr && left->prev->label >= lo) left = left->prev;
    uint64_t count = 0;
    Element* scan = left;
    while (scan != nullptr && scan->label < hi) {
      ++count;
      scan = scan->next;
    }
    if ((count + 2) * 4 <= width) {
      const uint64_t step = width / (count + 1);
      uint64_t label = lo;
      for (Element* cur = left; count-- > 0; cur = cur->next) {
        label += step;
        cur->label = label;
        ++ops_;
      }
      return;
    }
  }
  throw std::length_error("ColoredList: label space exhausted");
}

int ColoredList::order(Handle a, Handle b) const {
  check_handle(a);
  check_handle(b);
  if (a == b) return 0;
  return a->label < b->label ? -1 : 1;
}

ColoredList::Handle ColoredList::colored_predecessor(Handle e, Color col) const {
  check_handle(e);
  check_color(col);
  const ColorSet& set = colors_[col];
  ++ops_;
  auto it = set.lower_bound(e);  // first element with label >= e->label
  if (it == set.begin()) return nullptr;
  --it;
  return *it;
}

ColoredList::Handle ColoredList::colored_predecessor_inclusive(Handle e,
                                                               Color col) const {
  if (e->color == col) return e;
  return colored_predecessor(e, col);
}

ColoredList::Handle ColoredList::colored_successor(Handle e, Color col) const {
  check_handle(e);
  check_color(col);
  const ColorSet& set = colors_[col];
  ++ops_;
  auto it = set.upper_bound(e);  // first element with label > e->label
  if (it == set.end()) return nullptr;
  return *it;
}

ColoredList::Handle ColoredList::colored_successor_inclusive(Handle e,
                                                             Color col) const {
  if (e->color == col) return e;
  return colored_successor(e, col);
}

std::vector<ColoredList::Handle> ColoredList::colored_range_report(
    Handle e1, Handle e2, Color col1, Color col2) const {
  check_handle(e1);
  check_handle(e2);
  if (e1->label > e2->label) {
    throw std::invalid_argument("ColoredList: range end precedes range start");
  }
  if (col1 > col2) {
    throw std::invalid_argument("ColoredList: inverted color band");
  }
  check_color(col2);
  std::vector<Handle> out;
  for (Color c = col1; c <= col2; ++c) {
    const ColorSet& set = colors_[c];
    ++ops_;
    for (auto it = set.lower_bound(e1);
         it != set.end() && (*it)->label <= e2->label; ++it) {
      out.push_back(*it);
      ++ops_;
    }
  }
  return out;
}

}  // namespace rti
