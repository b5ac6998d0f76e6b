#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rti/common.hpp"

namespace rti {

// Ordered child-navigation structure keyed by the first symbol of the
// outgoing edge label. Direct-addressed for small alphabets, ordered map
// otherwise.
template <typename NodePtr>
class ChildMap {
 public:
  explicit ChildMap(uint32_t sigma) : sigma_(sigma), dense_(sigma <= 64) {}

  NodePtr get(Symbol s) const {
    if (dense_) {
      return (slots_.empty() || s >= sigma_) ? nullptr : slots_[s];
    }
    auto it = sparse_.find(s);
    return it == sparse_.end() ? nullptr : it->second;
  }

  void set(Symbol s, NodePtr n) {
    if (dense_) {
      if (slots_.empty()) slots_.assign(sigma_, nullptr);
      if (slots_[s] == nullptr) ++count_;
      slots_[s] = n;
    } else {
      if (sparse_.find(s) == sparse_.end()) ++count_;
      sparse_[s] = n;
    }
  }

  size_t count() const { return count_; }

  // Child with the greatest key strictly below s, or nullptr.
  NodePtr prev_child(Symbol s) const {
    if (dense_) {
      if (slots_.empty()) return nullptr;
      for (Symbol i = s; i-- > 0;) {
        if (slots_[i] != nullptr) return slots_[i];
      }
      return nullptr;
    }
    auto it = sparse_.lower_bound(s);
    if (it == sparse_.begin()) return nullptr;
    return std::prev(it)->second;
  }

  NodePtr first() const {
    if (dense_) {
      for (NodePtr n : slots_) {
        if (n != nullptr) return n;
      }
      return nullptr;
    }
    return sparse_.empty() ? nullptr : sparse_.begin()->second;
  }

  NodePtr last() const {
    if (dense_) {
      for (size_t i = slots_.size(); i-- > 0;) {
        if (slots_[i] != nullptr) return slots_[i];
      }
      return nullptr;
    }
    return sparse_.empty() ? nullptr : sparse_.rbegin()->second;
  }

  // Children whose key lies in [lo, hi], as (leftmost, rightmost).
  std::optional<std::pair<NodePtr, NodePtr>> range(Symbol lo, Symbol hi) const {
    NodePtr a = nullptr;
    NodePtr b = nullptr;
    if (dense_) {
      if (slots_.empty()) return std::nullopt;
      for (Symbol i = lo; i <= hi && i < sigma_; ++i) {
        if (slots_[i] != nullptr) {
          if (a == nullptr) a = slots_[i];
          b = slots_[i];
        }
      }
    } else {
      for (auto it = sparse_.lower_bound(lo);
           it != sparse_.end() && it->first <= hi; ++it) {
        if (a == nullptr) a = it->second;
        b = it->second;
      }
    }
    if (a == nullptr) return std::nullopt;
    return std::make_pair(a, b);
  }

  template <typename F>
  void for_each(F&& f) const {
    if (dense_) {
      for (Symbol i = 0; i < slots_.size(); ++i) {
        if (slots_[i] != nullptr) f(i, slots_[i]);
      }
    } else {
      for (const auto& [s, n] : sparse_) f(s, n);
    }
  }

 private:
  uint32_t sigma_;
  bool dense_;
  size_t count_ = 0;
  std::vector<NodePtr> slots_;
  std::map<Symbol, NodePtr> sparse_;
};

}  // namespace rti
