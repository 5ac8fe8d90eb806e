#pragma once

// Brute-force reference implementations for the tests. Each one follows a
// definition literally (enumerate everything, check the defining condition)
// and shares no search code with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "central/ambient.hpp"
#include "central/semigroup.hpp"

namespace oracle {

using central::Element;
using central::ElementSet;
using central::FiniteSemigroup;
using central::Value;
using Table = std::vector<std::vector<Element>>;

inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> first_nonassociative(
    const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) return std::tuple{i, j, k};
  return std::nullopt;
}

inline std::vector<std::uint64_t> all_masks(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(m);
  return out;
}

inline bool bit(std::uint64_t m, std::size_t i) { return (m >> i) & 1u; }

/// Inclusion-minimal nonempty L with S·L ⊆ L (left) or L·S ⊆ L (right).
inline std::vector<std::uint64_t> minimal_ideals(const FiniteSemigroup& s, bool left) {
  const std::size_t n = s.order();
  std::vector<std::uint64_t> ideals;
  for (auto m : all_masks(n)) {
    if (!m) continue;
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      for (std::size_t l = 0; l < n && closed; ++l)
        if (bit(m, l)) {
          const Element p = left ? s(static_cast<Element>(x), static_cast<Element>(l))
                                 : s(static_cast<Element>(l), static_cast<Element>(x));
          closed = bit(m, p);
        }
    if (closed) ideals.push_back(m);
  }
  std::vector<std::uint64_t> minimal;
  for (auto m : ideals) {
    bool has_smaller = false;
    for (auto o : ideals) has_smaller = has_smaller || (o != m && (o & m) == o);
    if (!has_smaller) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline std::uint64_t kernel_mask(const FiniteSemigroup& s) {
  std::uint64_t k = 0;
  for (auto m : minimal_ideals(s, true)) k |= m;
  return k;
}

inline std::uint64_t idempotent_mask(const FiniteSemigroup& s) {
  std::uint64_t out = 0;
  for (Element x = 0; x < s.order(); ++x)
    if (s(x, x) == x) out |= std::uint64_t{1} << x;
  return out;
}

// Largeness on a finite semigroup straight from the definitions, quantifying
// over every G ⊆ S.
inline bool thick(const FiniteSemigroup& s, std::uint64_t a) {
  for (Element t = 0; t < s.order(); ++t) {
    bool ok = true;
    for (Element x = 0; x < s.order(); ++x) ok = ok && bit(a, s(x, t));
    if (ok) return true;
  }
  return false;
}

inline bool covered(const FiniteSemigroup& s, std::uint64_t g, std::uint64_t a, Element t) {
  for (Element x = 0; x < s.order(); ++x)
    if (bit(g, x) && bit(a, s(x, t))) return true;
  return false;
}

inline bool syndetic(const FiniteSemigroup& s, std::uint64_t a) {
  for (auto g : all_masks(s.order())) {
    bool all = true;
    for (Element t = 0; t < s.order(); ++t) all = all && covered(s, g, a, t);
    if (all) return true;
  }
  return false;
}

inline bool piecewise_syndetic(const FiniteSemigroup& s, std::uint64_t a) {
  for (auto g : all_masks(s.order()))
    for (Element anchor = 0; anchor < s.order(); ++anchor) {
      bool all = true;
      for (Element x = 0; x < s.order(); ++x) all = all && covered(s, g, a, s(x, anchor));
      if (all) return true;
    }
  return false;
}

inline bool central(const FiniteSemigroup& s, std::uint64_t a) {
  return (a & kernel_mask(s) & idempotent_mask(s)) != 0;
}

/// All nonempty subset sums (or increasing-index products) ≤ cap.
inline std::set<Value> closure(const std::vector<Value>& x, bool additive, Value cap) {
  std::set<Value> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << x.size()); ++m) {
    Value v = additive ? 0 : 1;
    bool over = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!bit(m, i)) continue;
      v = additive ? v + x[i] : v * x[i];
      over = over || v > cap;
    }
    if (!over) out.insert(v);
  }
  return out;
}

/// Lexicographically least k-subset of [1, n] whose closure lies in a.
inline std::optional<std::vector<Value>> least_fs_basis(const std::set<Value>& a, Value n,
                                                        std::size_t k, bool additive) {
  std::vector<Value> pick;
  std::optional<std::vector<Value>> found;
  std::function<void(Value)> rec = [&](Value from) {
    if (found) return;
    if (pick.size() == k) {
      // Any closure element above n is outside the window, hence outside a.
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        Value v = additive ? 0 : 1;
        for (std::size_t i = 0; i < k; ++i)
          if (bit(m, i)) v = additive ? v + pick[i] : v * pick[i];
        if (v > n || !a.count(v)) return;
      }
      found = pick;
      return;
    }
    for (Value x = from; x <= n && !found; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return found;
}

/// Least (c, d, a) with distinct monochromatic a, b, c, d ≤ n, a + b = c·d.
inline std::optional<std::array<Value, 4>> least_bergelson(const std::vector<int>& color) {
  const Value n = static_cast<Value>(color.size());
  auto col = [&](Value x) { return color[static_cast<std::size_t>(x - 1)]; };
  for (Value c = 1; c <= n; ++c)
    for (Value d = 1; d <= n; ++d)
      for (Value a = 1; a <= n; ++a) {
        const Value b = c * d - a;
        if (b < 1 || b > n) continue;
        std::set<Value> distinct{a, b, c, d};
        if (distinct.size() != 4) continue;
        if (col(a) == col(b) && col(b) == col(c) && col(c) == col(d)) return std::array{a, b, c, d};
      }
  return std::nullopt;
}

/// Token expansion a(1) f(t1) a(2) ... folded left to right.
inline Value chi(const central::Ambient& s, const std::vector<Value>& a,
                 const std::vector<std::size_t>& t, const std::vector<Value>& f) {
  std::vector<Value> tokens;
  for (std::size_t i = 0; i < t.size(); ++i) {
    tokens.push_back(a[i]);
    tokens.push_back(f.at(t[i] - 1));
  }
  tokens.push_back(a.back());
  Value acc = tokens[0];
  for (std::size_t i = 1; i < tokens.size(); ++i) acc = s(acc, tokens[i]);
  return acc;
}

}  // namespace oracle
