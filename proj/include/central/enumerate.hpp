#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "central/semigroup.hpp"

namespace central {

/// Every associative table of the given order, found by scanning all
/// order^(order²) tables. Practical for order <= 3.
std::vector<FiniteSemigroup> all_semigroups_by_scan(std::size_t order);

/// Every associative table of the given order, found by backtracking over
/// table cells with associativity pruning. Practical for order <= 5.
/// Results are in row-major lexicographic table order.
std::vector<FiniteSemigroup> all_semigroups(std::size_t order);

/// `count` distinct tables drawn from all_semigroups(order) with a seeded
/// generator (or all of them when count exceeds the total).
std::vector<FiniteSemigroup> sample_semigroups(std::size_t order,
                                               std::size_t count,
                                               std::uint64_t seed);

/// Every associative table of order 1..max_order, in order.
std::vector<FiniteSemigroup> all_semigroups_up_to(std::size_t max_order);

FiniteSemigroup cyclic_group(std::size_t n);           // (Z_n, +)
FiniteSemigroup left_zero(std::size_t n);              // x·y = x
FiniteSemigroup right_zero(std::size_t n);             // x·y = y
FiniteSemigroup min_semilattice(std::size_t n);        // x·y = min(x, y)
FiniteSemigroup multiplicative_mod(std::size_t n);     // x·y = xy mod n

std::vector<FiniteSemigroup> named_families(std::size_t n);

}  // namespace central
