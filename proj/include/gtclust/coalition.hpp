#pragma once

#include <cstdint>
#include <vector>

namespace gtclust {

// Exhaustive 2^n coalition sweeps are capped here; callers that need them
// must reject larger games up front.
inline constexpr int kMaxEnumerationPlayers = 20;

// A set of point indices. Stores a sorted member list for iteration plus a
// bitmap for O(1) membership tests. May be empty.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<int> members);

  // Members are the set bits of `mask`; bit i stands for point i.
  static Coalition from_mask(std::uint64_t mask);
  static Coalition full(int n);

  bool contains(int i) const {
    const std::size_t word = static_cast<std::size_t>(i) >> 6;
    return i >= 0 && word < bits_.size() &&
           (bits_[word] >> (static_cast<unsigned>(i) & 63u)) & 1u;
  }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  // N \ S for the player set {0, ..., n-1}.
  Coalition complement(int n) const;

 private:
  std::vector<int> members_;         // sorted, unique
  std::vector<std::uint64_t> bits_;  // membership bitmap
};

// Calls f(mask) for every subset of {0,...,n-1}, empty and full included,
// in ascending mask order. Throws Error when n exceeds the enumeration cap.
template <typename F>
void for_each_coalition_mask(int n, F&& f);

// Same sweep restricted to proper nonempty subsets.
template <typename F>
void for_each_proper_coalition_mask(int n, F&& f);

namespace detail {
void check_enumeration_size(int n);
}

template <typename F>
void for_each_coalition_mask(int n, F&& f) {
  detail::check_enumeration_size(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) f(mask);
}

template <typename F>
void for_each_proper_coalition_mask(int n, F&& f) {
  detail::check_enumeration_size(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) f(mask);
}

}  // namespace gtclust
