#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "mgp/types.hpp"

namespace mgp {

/// Addressable binary max-heap over dense ids [0, capacity). Keys compare by
/// (primary, tie) so equal-gain entries pop in a caller-chosen order.
class AddressableMaxHeap {
public:
  struct Key {
    std::int64_t primary = 0;
    std::uint64_t tie = 0;

    friend bool operator<(const Key &a, const Key &b) {
      if (a.primary != b.primary) {
        return a.primary < b.primary;
      }
      return a.tie < b.tie;
    }
  };

  explicit AddressableMaxHeap(std::size_t capacity)
      : _pos(capacity, kAbsent) {}

  bool empty() const { return _heap.empty(); }
  std::size_t size() const { return _heap.size(); }
  bool contains(std::uint32_t id) const { return _pos[id] != kAbsent; }

  Key key_of(std::uint32_t id) const {
    assert(contains(id));
    return _heap[_pos[id]].key;
  }

  std::uint32_t top() const {
    assert(!empty());
    return _heap.front().id;
  }

  Key top_key() const {
    assert(!empty());
    return _heap.front().key;
  }

  void push(std::uint32_t id, Key key) {
    assert(!contains(id));
    _pos[id] = _heap.size();
    _heap.push_back({id, key});
    sift_up(_heap.size() - 1);
  }

  void update(std::uint32_t id, Key key) {
    const std::size_t i = _pos[id];
    assert(i != kAbsent);
    const bool up = _heap[i].key < key;
    _heap[i].key = key;
    if (up) {
      sift_up(i);
    } else {
      sift_down(i);
    }
  }

  void push_or_update(std::uint32_t id, Key key) {
    if (contains(id)) {
      update(id, key);
    } else {
      push(id, key);
    }
  }

  void pop() { remove(top()); }

  void remove(std::uint32_t id) {
    const std::size_t i = _pos[id];
    assert(i != kAbsent);
    const std::size_t last = _heap.size() - 1;
    if (i != last) {
      swap_entries(i, last);
    }
    _pos[id] = kAbsent;
    _heap.pop_back();
    if (i < _heap.size()) {
      sift_up(i);
      sift_down(i);
    }
  }

private:
  struct Entry {
    std::uint32_t id;
    Key key;
  };

  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  void swap_entries(std::size_t a, std::size_t b) {
    std::swap(_heap[a], _heap[b]);
    _pos[_heap[a].id] = a;
    _pos[_heap[b].id] = b;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!(_heap[parent].key < _heap[i].key)) {
        break;
      }
      swap_entries(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i;
      for (std::size_t c = 2 * i + 1; c <= 2 * i + 2 && c < _heap.size();
           ++c) {
        if (_heap[best].key < _heap[c].key) {
          best = c;
        }
      }
      if (best == i) {
        return;
      }
      swap_entries(i, best);
      i = best;
    }
  }

  std::vector<Entry> _heap;
  std::vector<std::size_t> _pos;
};

} // namespace mgp
