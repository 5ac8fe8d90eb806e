#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "central/enumerate.hpp"
#include "central/error.hpp"
#include "central/families.hpp"
#include "central/trees.hpp"
#include "oracles.hpp"

using namespace central;

namespace {

FiniteSemigroup two_element_mult() { return FiniteSemigroup::load(2, {{0, 0}, {0, 1}}); }

std::set<Value> children(const std::set<Node>& t, const Node& f) {
  std::set<Value> out;
  for (const auto& g : t)
    if (g.size() == f.size() + 1 && std::equal(f.begin(), f.end(), g.begin())) out.insert(g.back());
  return out;
}

// Star condition straight from the definition.
bool star_oracle(const Ambient& s, const std::set<Node>& t) {
  for (const auto& f : t)
    for (Value x : children(t, f)) {
      Node fx = f;
      fx.push_back(x);
      for (Value y : children(t, fx))
        if (!children(t, f).count(s(x, y))) return false;
    }
  return true;
}

// FP condition with the deepest level exempt: B_f equals the union of the
// products of every nonempty increasing selection of later entries.
bool fp_oracle(const Ambient& s, const std::set<Node>& t) {
  std::size_t depth = 0;
  for (const auto& f : t) depth = std::max(depth, f.size());
  for (const auto& f : t) {
    if (f.size() >= depth) continue;
    std::set<Value> reach;
    for (const auto& g : t) {
      if (g.size() <= f.size() || !std::equal(f.begin(), f.end(), g.begin())) continue;
      const std::size_t n = g.size() - f.size();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        std::optional<Value> acc;
        for (std::size_t i = 0; i < n; ++i)
          if (oracle::bit(m, i)) {
            const Value v = g[f.size() + i];
            acc = acc ? s(*acc, v) : v;
          }
        reach.insert(*acc);
      }
    }
    if (reach != children(t, f)) return false;
  }
  return true;
}

std::set<Node> random_tree(std::mt19937_64& rng, std::size_t order, std::size_t depth) {
  std::set<Node> nodes{{}};
  std::vector<Node> frontier{{}};
  std::bernoulli_distribution keep(0.45);
  while (!frontier.empty()) {
    const Node f = frontier.back();
    frontier.pop_back();
    if (f.size() == depth) continue;
    for (Value x = 0; x < static_cast<Value>(order); ++x)
      if (keep(rng)) {
        Node g = f;
        g.push_back(x);
        nodes.insert(g);
        frontier.push_back(g);
      }
  }
  return nodes;
}

// Definition of cwpws at finite scale: taking G = S is no loss, so the
// question is whether one α puts S·α inside S⁻¹(⋂ℱ) for every ℱ.
bool cwpws_oracle(const FiniteSemigroup& s, const std::vector<std::uint64_t>& sets) {
  const std::size_t n = s.order();
  for (Element alpha = 0; alpha < n; ++alpha) {
    bool ok = true;
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << sets.size()) && ok; ++sub) {
      std::uint64_t inter = (std::uint64_t{1} << n) - 1;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (oracle::bit(sub, i)) inter &= sets[i];
      for (Element x = 0; x < n && ok; ++x) {
        bool hit = false;
        for (Element g = 0; g < n; ++g) hit = hit || oracle::bit(inter, s(g, s(x, alpha)));
        ok = hit;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("branch and product sets over Z3") {
  const auto z3 = Ambient::finite(cyclic_group(3));
  const FiniteTree t(z3, {{}, {1}, {1, 2}});
  const auto root = branch_and_products(t, {});
  CHECK(root.branch == std::vector<Value>{1});
  CHECK(root.products.empty());
  CHECK_FALSE(root.tail_products.has_value());

  const auto one = branch_and_products(t, {1}, Node{1, 2});
  CHECK(one.branch == std::vector<Value>{2});
  CHECK(one.products == std::vector<Value>{1});
  REQUIRE(one.tail_products.has_value());
  CHECK(*one.tail_products == std::vector<Value>{2});

  CHECK(branch_and_products(t, {1, 2}).products == std::vector<Value>{0, 1, 2});
  CHECK(finite_products(z3, {1, 2}, 1) == std::vector<Value>{2});

  CHECK_THROWS_AS(branch_and_products(t, {2}), NodeNotInTree);
  CHECK_THROWS_AS(branch_and_products(t, {1}, Node{1}), NotAnExtension);
  CHECK_THROWS_AS(branch_and_products(t, {1}, Node{0, 2}), Error);
}

TEST_CASE("tree validation") {
  const auto z3 = Ambient::finite(cyclic_group(3));
  try {
    FiniteTree(z3, {{1}});
    FAIL("expected a missing root");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "root");
  }
  try {
    FiniteTree(z3, {{}, {1, 2}});
    FAIL("expected a prefix violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "prefix-closed");
  }
  CHECK_THROWS_AS(FiniteTree(z3, {{}, {3}}), ElementOutOfRange);
  CHECK_THROWS_AS(FiniteTree(Ambient::additive(), {{}, {0}}), ElementOutOfRange);
}

TEST_CASE("classification examples") {
  const auto z3 = Ambient::finite(cyclic_group(3));
  const FiniteTree bad(z3, {{}, {1}, {1, 1}});
  const auto c = classify_tree(bad);
  CHECK_FALSE(c.is_star_tree);
  REQUIRE(c.star_failure.has_value());
  CHECK(c.star_failure->f.empty());
  CHECK(c.star_failure->x == 1);
  CHECK(c.star_failure->y == 1);
  CHECK(c.star_failure->product == 2);
  CHECK_FALSE(c.is_fp_tree);
  REQUIRE(c.fp_failure.has_value());
  CHECK(c.fp_failure->f.empty());
  CHECK(c.fp_failure->element == 2);
  CHECK_FALSE(c.fp_failure->in_branch);
  CHECK(c.pruned_to_depth == 2);

  const auto root_only = classify_tree(FiniteTree(z3, {{}}));
  CHECK(root_only.is_star_tree);
  CHECK(root_only.is_fp_tree);
  CHECK(root_only.pruned_to_depth == 0);

  // A short dead branch caps the prune depth.
  const auto pruned = classify_tree(FiniteTree(z3, {{}, {0}, {1}, {1, 0}}));
  CHECK(pruned.pruned_to_depth == 1);

  const auto z2 = Ambient::finite(cyclic_group(2));
  const auto full = build_fp_tree(z2, {0, 1}, 2);
  const auto fc = classify_tree(full);
  CHECK(fc.is_fp_tree);
  CHECK(fc.is_star_tree);
}

TEST_CASE("fp-tree construction examples") {
  const auto l2 = Ambient::finite(left_zero(2));
  const auto t = build_fp_tree(l2, {0, 1}, 2);
  CHECK(t.size() == 7);
  for (const auto& f : t.nodes())
    if (f.size() < 2) CHECK(t.branch(f) == std::vector<Value>{0, 1});

  const auto empty = build_fp_tree(l2, {}, 3);
  CHECK(empty.size() == 1);
  CHECK(classify_tree(empty).pruned_to_depth == 0);

  const auto chain = build_fp_tree(Ambient::finite(cyclic_group(2)), {0}, 2);
  CHECK(chain.nodes() == std::set<Node>{{}, {0}, {0, 0}});

  // Window carriers drop whatever the sum pushes out of A.
  const auto evens = build_fp_tree(Ambient::additive(), {2, 4, 6}, 2);
  CHECK(evens.branch({2}) == std::vector<Value>{2, 4});
  CHECK(evens.branch({6}).empty());
  // A = {1, 2, 3}: after 1, only x with 1 + x ∈ A survive.
  const auto small = build_fp_tree(Ambient::additive(), {1, 2, 3}, 2);
  CHECK(small.branch({1}) == std::vector<Value>{1, 2});
  CHECK(small.branch({3}).empty());

  CHECK_THROWS_AS(build_fp_tree(Ambient::finite(cyclic_group(4)), {0, 1, 2, 3}, 12, 1000),
                  TooLarge);
}

TEST_CASE("classification agrees with the definitional checks on random trees") {
  std::mt19937_64 rng(314);
  const auto carriers = all_semigroups_up_to(3);
  for (int i = 0; i < 600; ++i) {
    const auto& s = carriers[rng() % carriers.size()];
    const auto amb = Ambient::finite(s);
    const auto nodes = random_tree(rng, s.order(), 1 + rng() % 3);
    const auto c = classify_tree(FiniteTree(amb, nodes));
    CHECK(c.is_star_tree == star_oracle(amb, nodes));
    CHECK(c.is_fp_tree == fp_oracle(amb, nodes));
    CHECK(c.is_star_tree == !c.star_failure.has_value());
    CHECK(c.is_fp_tree == !c.fp_failure.has_value());
    // Every FP-tree is a *-tree, truncated or not.
    if (c.is_fp_tree) CHECK(c.is_star_tree);
  }
}

TEST_CASE("constructed trees are fp-trees when A is everything") {
  std::mt19937_64 rng(8);
  auto carriers = all_semigroups_up_to(3);
  for (auto& s : sample_semigroups(4, 40, 2)) carriers.push_back(s);
  for (const auto& s : carriers) {
    const auto amb = Ambient::finite(s);
    std::vector<Value> everything;
    for (Element x = 0; x < s.order(); ++x) everything.push_back(x);
    const std::size_t depth = 1 + rng() % 3;
    const auto c = classify_tree(build_fp_tree(amb, everything, depth));
    CHECK(c.is_fp_tree);
    CHECK(c.is_star_tree);
    CHECK(c.pruned_to_depth == depth);
  }
}

TEST_CASE("tree files") {
  const auto dir = std::filesystem::temp_directory_path() / "centrallab_tree_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "z3.cayley") << to_cayley_text(cyclic_group(3));
    std::ofstream(dir / "t.tree") << "carrier z3.cayley\n\n1\n1 2\n";
  }
  const auto t = read_tree_file(dir / "t.tree");
  CHECK(t.nodes() == std::set<Node>{{}, {1}, {1, 2}});
  CHECK(t.carrier().kind() == Ambient::Kind::finite);

  const auto text = to_tree_text(t, "z3.cayley");
  CHECK(parse_tree(text, dir).nodes() == t.nodes());

  const auto add = parse_tree("carrier additive\n\n3\n3 5\n", dir);
  CHECK(add.carrier().kind() == Ambient::Kind::additive);
  CHECK(add.depth() == 2);

  CHECK_THROWS_AS(parse_tree("carrier additive\n1\n", dir), InvariantViolation);
  CHECK_THROWS_AS(parse_tree("carrier z3.cayley\n\n1 x\n", dir), ParseError);
  CHECK_THROWS_AS(parse_tree("\n1\n", dir), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("good family examples") {
  const auto m = two_element_mult();
  CHECK(is_good_family(SetFamily(m, {m.all()})).good);
  CHECK(is_good_family(SetFamily(cyclic_group(3), {ElementSet::full(3)})).good);
  CHECK(is_good_family(SetFamily(m, {ElementSet(2, {0})})).good);
  CHECK(is_good_family(SetFamily(m, {ElementSet(2, {1})})).good);

  const auto split = is_good_family(SetFamily(m, {ElementSet(2, {1}), ElementSet(2, {0})}));
  CHECK_FALSE(split.good);
  REQUIRE(split.empty_subfamily.has_value());
  CHECK(*split.empty_subfamily == 0b11);
  CHECK(subfamily_text(0b11) == "{C0, C1}");

  // {1} in Z3: 1 + 1 = 2 leaves the set.
  const auto z = is_good_family(SetFamily(cyclic_group(3), {ElementSet(3, {1})}));
  CHECK_FALSE(z.good);
  REQUIRE(z.violation.has_value());
  CHECK(*z.violation == std::pair<std::size_t, Element>{0, 1});

  CHECK_THROWS_AS(SetFamily(m, {}), EmptyInput);
  CHECK_THROWS_AS(SetFamily(m, {ElementSet(3, {0})}), ElementOutOfRange);
}

TEST_CASE("good families: recorded choices hold and the intersection is product-stable") {
  for (const auto& s : all_semigroups_up_to(3)) {
    const std::size_t n = s.order();
    const auto masks = oracle::all_masks(n);
    for (auto a : masks)
      for (auto b : masks) {
        if (!a || !b) continue;
        const SetFamily fam(s, {ElementSet::from_mask(n, a), ElementSet::from_mask(n, b)});
        const auto r = is_good_family(fam);

        bool fip = (a & b) != 0;
        bool translates = true;
        for (std::uint64_t ci : {a, b})
          for (Element x = 0; x < n; ++x) {
            if (!oracle::bit(ci, x)) continue;
            bool some = false;
            for (std::uint64_t cj : {a, b}) {
              bool inside = true;
              for (Element y = 0; y < n; ++y)
                if (oracle::bit(cj, y)) inside = inside && oracle::bit(ci, s(x, y));
              some = some || inside;
            }
            translates = translates && some;
          }
        CHECK(r.good == (fip && translates));
        if (!r.good) continue;
        for (std::size_t i = 0; i < 2; ++i)
          for (auto [x, j] : r.choices[i])
            for (Element y : fam.sets()[j].members()) CHECK(fam.sets()[i].contains(s(x, y)));
      }
  }
}

TEST_CASE("cwpws examples") {
  const auto m = two_element_mult();
  const auto zero = cwpws_check(SetFamily(m, {ElementSet(2, {0})}));
  CHECK(zero.cwpws);
  CHECK(zero.oracle);
  CHECK(zero.agree);
  REQUIRE(zero.witness.has_value());
  CHECK(zero.witness->alpha == 0);
  // The least shift set that works is {0}; {0, 1} works too.
  CHECK(zero.witness->shifts_for(1) == ElementSet(2, {0}));
  CHECK(zero.witness->chi(1, ElementSet(2, {1})) == 0);

  const auto one = cwpws_check(SetFamily(m, {ElementSet(2, {1})}));
  CHECK_FALSE(one.cwpws);
  CHECK_FALSE(one.oracle);
  CHECK(one.agree);
  CHECK_FALSE(one.refutation.empty());

  const auto z3 = cyclic_group(3);
  CHECK(cwpws_check(SetFamily(z3, {z3.all()})).cwpws);
  const auto split = cwpws_check(SetFamily(z3, {ElementSet(3, {0}), ElementSet(3, {1})}));
  CHECK_FALSE(split.cwpws);
  REQUIRE(split.empty_subfamily.has_value());
  CHECK(*split.empty_subfamily == 0b11);

  // A tampered witness is caught by the verifier.
  CwpwsWitness w{1, {{1, ElementSet(2, {1})}}};
  CHECK(verify_cwpws(SetFamily(m, {ElementSet(2, {1})}), w).has_value() == true);
}

TEST_CASE("cwpws agrees with the kernel oracle and the definition on families of up to two sets") {
  for (const auto& s : all_semigroups_up_to(3)) {
    const std::size_t n = s.order();
    const auto k = oracle::kernel_mask(s);
    for (auto a : oracle::all_masks(n))
      for (auto b : oracle::all_masks(n)) {
        if (b < a) continue;
        for (bool pair : {false, true}) {
          std::vector<std::uint64_t> raw{a};
          if (pair) raw.push_back(b);
          std::vector<ElementSet> sets;
          for (auto x : raw) sets.push_back(ElementSet::from_mask(n, x));
          const SetFamily fam(s, sets);
          const auto r = cwpws_check(fam);
          std::uint64_t inter = (std::uint64_t{1} << n) - 1;
          for (auto x : raw) inter &= x;
          CHECK(r.oracle == ((inter & k) != 0));
          CHECK(r.cwpws == r.oracle);
          CHECK(r.cwpws == cwpws_oracle(s, raw));
          CHECK(r.agree);
          if (r.witness) CHECK_FALSE(verify_cwpws(fam, *r.witness).has_value());
        }
      }
  }
}
