#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace central {

/// Visits the nonempty subsets of {0, ..., n-1} by increasing size and, within
/// a size, in lexicographic order of their sorted member lists. The visitor
/// returns true to stop; the function returns whether it was stopped.
template <class Visit>
bool for_each_subset_by_size(std::size_t n, Visit&& visit,
                             std::size_t min_size = 1) {
  std::vector<std::size_t> pick;
  for (std::size_t k = min_size; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (visit(static_cast<const std::vector<std::size_t>&>(pick))) return true;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

/// Members of a bitmask as increasing indices.
inline std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace central
