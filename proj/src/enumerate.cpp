#include "central/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "central/error.hpp"

namespace central {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

std::vector<std::vector<Element>> unflatten(std::size_t n,
                                            const std::vector<Element>& flat) {
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return rows;
}

bool associative_flat(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) return false;
  return true;
}

// Checks every triple whose four table lookups are already assigned.
bool consistent(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element ij = t[i * n + j];
      if (ij == kUnset) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Element jk = t[j * n + k];
        if (jk == kUnset) continue;
        const Element left = t[ij * n + k];
        const Element right = t[i * n + jk];
        if (left != kUnset && right != kUnset && left != right) return false;
      }
    }
  }
  return true;
}

FiniteSemigroup from_rule(std::size_t n,
                          const std::function<std::size_t(std::size_t, std::size_t)>& rule) {
  if (n == 0) throw BadBounds("order must be positive");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<Element>(rule(i, j));
  return FiniteSemigroup::load(n, rows);
}

}  // namespace

std::vector<FiniteSemigroup> all_semigroups_by_scan(std::size_t order) {
  if (order == 0 || order > 3) throw TooLarge("table scan supports order 1..3");
  const std::size_t cells = order * order;
  std::vector<Element> t(cells, 0);
  std::vector<FiniteSemigroup> out;
  while (true) {
    if (associative_flat(order, t)) {
      out.push_back(FiniteSemigroup::load(order, unflatten(order, t)));
    }
    // Odometer with the last cell fastest: row-major lexicographic order.
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++t[pos] < order) break;
      t[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<FiniteSemigroup> all_semigroups(std::size_t order) {
  if (order == 0 || order > 5) throw TooLarge("backtracking supports order 1..5");
  const std::size_t cells = order * order;
  std::vector<Element> t(cells, kUnset);
  std::vector<FiniteSemigroup> out;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == cells) {
      out.push_back(FiniteSemigroup::load(order, unflatten(order, t)));
      return;
    }
    for (Element v = 0; v < order; ++v) {
      t[cell] = v;
      if (consistent(order, t)) fill(cell + 1);
    }
    t[cell] = kUnset;
  };
  fill(0);
  return out;
}

std::vector<FiniteSemigroup> sample_semigroups(std::size_t order,
                                               std::size_t count,
                                               std::uint64_t seed) {
  auto all = all_semigroups(order);
  if (count >= all.size()) return all;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates over indices keeps the draw reproducible.
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t span = idx.size() - i;
    const std::size_t j = i + static_cast<std::size_t>(rng() % span);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  std::vector<FiniteSemigroup> out;
  out.reserve(count);
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

std::vector<FiniteSemigroup> all_semigroups_up_to(std::size_t max_order) {
  std::vector<FiniteSemigroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto level = n <= 3 ? all_semigroups_by_scan(n) : all_semigroups(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

FiniteSemigroup cyclic_group(std::size_t n) {
  return from_rule(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

FiniteSemigroup left_zero(std::size_t n) {
  return from_rule(n, [](std::size_t i, std::size_t) { return i; });
}

FiniteSemigroup right_zero(std::size_t n) {
  return from_rule(n, [](std::size_t, std::size_t j) { return j; });
}

FiniteSemigroup min_semilattice(std::size_t n) {
  return from_rule(n, [](std::size_t i, std::size_t j) { return std::min(i, j); });
}

FiniteSemigroup multiplicative_mod(std::size_t n) {
  return from_rule(n, [n](std::size_t i, std::size_t j) { return (i * j) % n; });
}

std::vector<FiniteSemigroup> named_families(std::size_t n) {
  return {cyclic_group(n), left_zero(n), right_zero(n), min_semilattice(n),
          multiplicative_mod(n)};
}

}  // namespace central
