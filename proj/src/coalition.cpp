#include "gtclust/coalition.hpp"

#include <algorithm>
#include <string>

#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

std::vector<std::uint64_t> build_bitmap(const std::vector<int>& members) {
  std::vector<std::uint64_t> bits;
  if (members.empty()) return bits;
  bits.resize(static_cast<std::size_t>(members.back() >> 6) + 1, 0);
  for (const int m : members) {
    bits[static_cast<std::size_t>(m) >> 6] |= std::uint64_t{1}
                                              << (static_cast<unsigned>(m) & 63u);
  }
  return bits;
}

}  // namespace

Coalition::Coalition(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw Error("coalition members must be non-negative point indices");
  }
  bits_ = build_bitmap(members_);
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  std::vector<int> members;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) members.push_back(i);
  }
  return Coalition(std::move(members));
}

Coalition Coalition::full(int n) {
  std::vector<int> members(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = i;
  return Coalition(std::move(members));
}

Coalition Coalition::complement(int n) const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n - size()));
  for (int i = 0; i < n; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return Coalition(std::move(rest));
}

namespace detail {

void check_enumeration_size(int n) {
  if (n < 0 || n > kMaxEnumerationPlayers) {
    throw Error("coalition enumeration limited to n <= " +
                std::to_string(kMaxEnumerationPlayers) + ", got n = " +
                std::to_string(n));
  }
}

}  // namespace detail

}  // namespace gtclust
