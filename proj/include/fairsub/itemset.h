// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSUB_ITEMSET_H_
#define FAIRSUB_ITEMSET_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairsub {

// Maximum ground-set size supported by the bitmask set representation.
inline constexpr int kMaxGroundSize = 64;

// A subset of the ground set {0, ..., n-1}, n <= 64, stored as a bitmask
// (item k <-> bit k). Cheap to copy; all operations are O(1) or O(popcount).
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(uint64_t bits) : bits_(bits) {}

  static ItemSet Full(int n) {
    if (n < 0 || n > kMaxGroundSize) {
      throw std::invalid_argument("ItemSet::Full: n out of range [0,64]");
    }
    return ItemSet(n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  static ItemSet Of(std::initializer_list<int> items) {
    ItemSet s;
    for (int e : items) s.Add(e);
    return s;
  }

  static ItemSet FromVector(const std::vector<int>& items) {
    ItemSet s;
    for (int e : items) s.Add(e);
    return s;
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool Empty() const { return bits_ == 0; }
  int Size() const { return std::popcount(bits_); }

  bool Contains(int e) const { return (bits_ >> e) & 1; }
  void Add(int e) { bits_ |= uint64_t{1} << e; }
  void Remove(int e) { bits_ &= ~(uint64_t{1} << e); }

  constexpr ItemSet With(int e) const { return ItemSet(bits_ | (uint64_t{1} << e)); }
  constexpr ItemSet Without(int e) const { return ItemSet(bits_ & ~(uint64_t{1} << e)); }

  constexpr ItemSet Union(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
  constexpr ItemSet Intersect(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
  constexpr ItemSet Minus(ItemSet o) const { return ItemSet(bits_ & ~o.bits_); }
  constexpr bool SubsetOf(ItemSet o) const { return (bits_ & ~o.bits_) == 0; }

  // Number of items shared with `o`; the per-group counting primitive.
  int CountIn(ItemSet o) const { return std::popcount(bits_ & o.bits_); }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    out.reserve(Size());
    for (uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    for (uint64_t b = bits_; b != 0; b &= b - 1) {
      if (!first) out += ",";
      out += std::to_string(std::countr_zero(b));
      first = false;
    }
    return out + "}";
  }

  friend constexpr bool operator==(ItemSet a, ItemSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ItemSet a, ItemSet b) { return a.bits_ != b.bits_; }

 private:
  uint64_t bits_ = 0;
};

// Strict ordering by ascending item sequence: the set whose first differing
// item is smaller comes first; a proper prefix precedes its extensions.
// Used for deterministic tie-breaking among equal-value solutions.
inline bool LexLess(ItemSet a, ItemSet b) {
  uint64_t x = a.bits();
  uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x);
    int ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// Applies `fn(item)` to each member in ascending order.
template <typename Fn>
inline void ForEachItem(ItemSet s, Fn&& fn) {
  for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
    fn(std::countr_zero(b));
  }
}

}  // namespace fairsub

#endif  // FAIRSUB_ITEMSET_H_
