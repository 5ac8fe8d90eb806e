#include "central/families.hpp"

#include <algorithm>

#include "central/combinatorics.hpp"
#include "central/error.hpp"
#include "central/ideals.hpp"
#include "central/largeness.hpp"

namespace central {

namespace {

constexpr std::size_t kMaxFamily = 16;

ElementSet from_indices(std::size_t order, const std::vector<std::size_t>& pick) {
  ElementSet out(order);
  for (auto i : pick) out.insert(static_cast<Element>(i));
  return out;
}

// Least G (by witness_less) with orbit ⊆ G⁻¹(target), if any.
std::optional<ElementSet> least_shifts(const FiniteSemigroup& s,
                                       const ElementSet& orbit,
                                       const ElementSet& target) {
  if (!orbit.is_subset_of(inverse_image(s, s.all(), target))) return std::nullopt;
  std::optional<ElementSet> found;
  for_each_subset_by_size(s.order(), [&](const std::vector<std::size_t>& pick) {
    auto g = from_indices(s.order(), pick);
    if (orbit.is_subset_of(inverse_image(s, g, target))) {
      found = std::move(g);
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

SetFamily::SetFamily(FiniteSemigroup parent, std::vector<ElementSet> sets)
    : parent_(std::move(parent)), sets_(std::move(sets)) {
  if (sets_.empty()) throw EmptyInput("a set family needs at least one set");
  if (sets_.size() > kMaxFamily) {
    throw TooLarge("families are limited to " + std::to_string(kMaxFamily) + " sets");
  }
  for (const auto& c : sets_) parent_.check_set(c);
}

ElementSet SetFamily::intersection(std::uint64_t mask) const {
  ElementSet out = parent_.all();
  for (auto i : mask_members(mask)) out = out.intersection(sets_.at(i));
  return out;
}

std::vector<std::uint64_t> subfamilies_by_size(std::size_t n) {
  std::vector<std::uint64_t> out;
  for_each_subset_by_size(n, [&](const std::vector<std::size_t>& pick) {
    std::uint64_t mask = 0;
    for (auto i : pick) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    return false;
  });
  return out;
}

std::string subfamily_text(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (auto i : mask_members(mask)) {
    if (!first) out += ", ";
    out += "C" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

GoodFamilyReport is_good_family(const SetFamily& fam) {
  GoodFamilyReport out;
  const auto& s = fam.parent();
  // For a finite family the finite intersection property is just a
  // nonempty total intersection; the least empty subfamily is reported.
  if (fam.intersection(fam.full_mask()).empty()) {
    for (auto mask : subfamilies_by_size(fam.size())) {
      if (fam.intersection(mask).empty()) {
        out.empty_subfamily = mask;
        break;
      }
    }
    return out;
  }
  out.choices.resize(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& ci = fam.sets()[i];
    for (Element x : ci.members()) {
      std::optional<std::size_t> pick;
      for (std::size_t j = 0; j < fam.size() && !pick; ++j) {
        bool inside = true;
        for (Element y : fam.sets()[j].members()) {
          if (!ci.contains(s(x, y))) {
            inside = false;
            break;
          }
        }
        if (inside) pick = j;
      }
      if (!pick) {
        out.violation = std::pair{i, x};
        out.choices.clear();
        return out;
      }
      out.choices[i].emplace_back(x, *pick);
    }
  }
  out.good = true;
  return out;
}

const ElementSet& CwpwsWitness::shifts_for(std::uint64_t subfamily) const {
  for (const auto& [mask, g] : shifts) {
    if (mask == subfamily) return g;
  }
  throw Error("no shift set recorded for " + subfamily_text(subfamily));
}

std::optional<CwpwsViolation> verify_cwpws(const SetFamily& fam,
                                           const CwpwsWitness& w) {
  const auto& s = fam.parent();
  const std::size_t n = s.order();
  const std::size_t m = fam.size();
  double work = 1.0;
  for (std::size_t i = 0; i < n; ++i) work *= 2.0;
  for (std::size_t i = 0; i < m; ++i) work *= 3.0;
  if (n > 63 || work > 1e8) throw TooLarge("cwpws verification space too large");

  std::vector<ElementSet> target(std::size_t{1} << m);
  for (std::uint64_t mask = 1; mask <= fam.full_mask(); ++mask) {
    target[mask] = inverse_image(s, w.shifts_for(mask), fam.intersection(mask));
  }
  const std::uint64_t all_f = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t fmask = 1; fmask <= all_f; ++fmask) {
    const auto f = ElementSet::from_mask(n, fmask);
    for (std::uint64_t outer = 1; outer <= fam.full_mask(); ++outer) {
      const Element chi = w.chi(outer, f);
      for (std::uint64_t inner = outer; inner; inner = (inner - 1) & outer) {
        for (Element x : f.members()) {
          const Element p = s(x, chi);
          if (!target[inner].contains(p)) return CwpwsViolation{f, outer, inner, p};
        }
      }
    }
  }
  return std::nullopt;
}

CwpwsReport cwpws_check(const SetFamily& fam) {
  CwpwsReport out;
  const auto& s = fam.parent();
  const auto ideals = ideal_structure(s);
  out.oracle = ideals.kernel.intersects(fam.intersection(fam.full_mask()));

  const auto masks = subfamilies_by_size(fam.size());
  for (auto mask : masks) {
    if (fam.intersection(mask).empty()) {
      out.empty_subfamily = mask;
      out.refutation = subfamily_text(mask) + " has empty intersection";
      out.agree = out.cwpws == out.oracle;
      return out;
    }
  }

  for (Element alpha = 0; alpha < s.order() && !out.cwpws; ++alpha) {
    const auto orbit = left_orbit(s, alpha);
    CwpwsWitness w{alpha, {}};
    bool ok = true;
    for (auto mask : masks) {
      auto g = least_shifts(s, orbit, fam.intersection(mask));
      if (!g) {
        ok = false;
        break;
      }
      w.shifts.emplace_back(mask, std::move(*g));
    }
    if (!ok) continue;
    if (auto bad = verify_cwpws(fam, w)) {
      throw VerificationFailed(bad->product, "cwpws witness failed verification");
    }
    out.cwpws = true;
    out.witness = std::move(w);
  }
  if (!out.cwpws) {
    out.refutation = "no α ∈ S has S·α ⊆ S⁻¹(⋂ℱ) for every subfamily ℱ";
  }
  out.agree = out.cwpws == out.oracle;
  return out;
}

}  // namespace central
