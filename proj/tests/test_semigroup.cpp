#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "central/enumerate.hpp"
#include "central/error.hpp"
#include "central/ideals.hpp"
#include "central/largeness.hpp"
#include "oracles.hpp"

using namespace central;

namespace {

FiniteSemigroup two_element_mult() { return FiniteSemigroup::load(2, {{0, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("loading validates tables") {
  CHECK_NOTHROW(two_element_mult());
  CHECK_NOTHROW(FiniteSemigroup::load(2, {{0, 1}, {1, 0}}));

  // Reference scan locates the first failing triple; the loader must agree.
  const oracle::Table bad{{1, 0}, {0, 0}};
  const auto triple = oracle::first_nonassociative(bad);
  REQUIRE(triple.has_value());
  CHECK(*triple == std::tuple<std::size_t, std::size_t, std::size_t>{0, 0, 1});
  try {
    FiniteSemigroup::load(2, bad);
    FAIL("expected NonAssociative");
  } catch (const NonAssociative& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
    CHECK(e.invariant() == "associativity");
  }

  CHECK_THROWS_AS(FiniteSemigroup::load(2, {{0, 2}, {0, 1}}), IndexOutOfRange);
  CHECK_THROWS_AS(FiniteSemigroup::load(2, {{0, 0}}), InvariantViolation);
  CHECK_THROWS_AS(FiniteSemigroup::load(0, {}), InvariantViolation);
}

TEST_CASE("cayley text round-trips exactly") {
  const auto s = FiniteSemigroup::load(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "a", "b"});
  const auto text = to_cayley_text(s);
  CHECK(text == "3\n0 1 2\n1 2 0\n2 0 1\n# labels: e a b\n");
  CHECK(parse_cayley(text) == s);
  CHECK(to_cayley_text(parse_cayley(text)) == text);

  const auto plain = cyclic_group(2);
  CHECK(to_cayley_text(plain) == "2\n0 1\n1 0\n");
  CHECK(parse_cayley(to_cayley_text(plain)) == plain);

  try {
    parse_cayley("2\n0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(parse_cayley("2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_cayley("2\n1 0\n0 0\n"), NonAssociative);
}

TEST_CASE("element sets") {
  ElementSet a(4, {1, 3});
  CHECK(a.size() == 2);
  CHECK(a.members() == std::vector<Element>{1, 3});
  CHECK(a.complement().members() == std::vector<Element>{0, 2});
  CHECK(a.mask() == 0b1010);
  CHECK(ElementSet::from_mask(4, 0b1010) == a);
  CHECK_THROWS_AS(a.insert(4), ElementOutOfRange);
  // Witness order: size first, then the sorted member lists.
  CHECK(witness_less(ElementSet(4, {3}), ElementSet(4, {0, 1})));
  CHECK(witness_less(ElementSet(4, {0, 2}), ElementSet(4, {1, 2})));
  CHECK(lex_less(ElementSet(4, {0, 3}), ElementSet(4, {1})));
}

TEST_CASE("enumeration counts match the known numbers of labeled semigroups") {
  CHECK(all_semigroups_by_scan(1).size() == 1);
  CHECK(all_semigroups_by_scan(2).size() == 8);
  CHECK(all_semigroups_by_scan(3).size() == 113);
  CHECK(all_semigroups(4).size() == 3492);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(all_semigroups(n) == all_semigroups_by_scan(n));
  }
  const auto sample = sample_semigroups(4, 25, 7);
  CHECK(sample.size() == 25);
  CHECK(sample == sample_semigroups(4, 25, 7));
  CHECK(sample != sample_semigroups(4, 25, 8));
}

TEST_CASE("ideal structure of small examples") {
  SUBCASE("Z3") {
    const auto z = ideal_structure(cyclic_group(3));
    CHECK(z.kernel == ElementSet(3, {0, 1, 2}));
    CHECK(z.idempotents == ElementSet(3, {0}));
    CHECK(z.minimal_idempotents == ElementSet(3, {0}));
  }
  SUBCASE("right zero") {
    const auto r = ideal_structure(right_zero(2));
    REQUIRE(r.minimal_left_ideals.size() == 2);
    CHECK(r.minimal_left_ideals[0] == ElementSet(2, {0}));
    CHECK(r.minimal_left_ideals[1] == ElementSet(2, {1}));
    CHECK(r.kernel == ElementSet(2, {0, 1}));
    CHECK(r.minimal_idempotents == ElementSet(2, {0, 1}));
  }
  SUBCASE("({0,1}, ·)") {
    const auto m = ideal_structure(two_element_mult());
    REQUIRE(m.minimal_left_ideals.size() == 1);
    CHECK(m.minimal_left_ideals[0] == ElementSet(2, {0}));
    CHECK(m.kernel == ElementSet(2, {0}));
    CHECK(m.idempotents == ElementSet(2, {0, 1}));
    CHECK(m.minimal_idempotents == ElementSet(2, {0}));
  }
}

TEST_CASE("ideal structure agrees with the subset-enumeration oracle through order 4") {
  std::vector<FiniteSemigroup> scope = all_semigroups_up_to(3);
  for (auto& s : sample_semigroups(4, 300, 11)) scope.push_back(s);
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& s : named_families(n)) scope.push_back(s);
  for (const auto& s : scope) {
    const auto ideals = ideal_structure(s);
    std::vector<std::uint64_t> left, right;
    for (const auto& l : ideals.minimal_left_ideals) left.push_back(l.mask());
    for (const auto& r : ideals.minimal_right_ideals) right.push_back(r.mask());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    CHECK(left == oracle::minimal_ideals(s, true));
    CHECK(right == oracle::minimal_ideals(s, false));

    std::uint64_t via_right = 0;
    for (auto m : right) via_right |= m;
    CHECK(ideals.kernel.mask() == oracle::kernel_mask(s));
    CHECK(ideals.kernel.mask() == via_right);
    CHECK(ideals.idempotents.mask() == oracle::idempotent_mask(s));
    CHECK_FALSE(ideals.idempotents.empty());
    CHECK(ideals.minimal_idempotents == ideals.idempotents.intersection(ideals.kernel));
  }
}

TEST_CASE("largeness profile examples") {
  const auto z3 = cyclic_group(3);
  const auto p = largeness_profile(z3, ElementSet(3, {0}));
  CHECK_FALSE(p.is_thick());
  REQUIRE(p.is_syndetic());
  CHECK(*p.syndetic == ElementSet(3, {0, 1, 2}));
  CHECK(p.is_piecewise_syndetic());
  REQUIRE(p.is_central());
  CHECK(*p.central == 0);

  CHECK_FALSE(largeness_profile(z3, ElementSet(3, {1, 2})).is_central());

  const auto r = largeness_profile(right_zero(2), ElementSet(2, {0}));
  REQUIRE(r.is_thick());
  CHECK(*r.thick == 0);
  CHECK(r.is_central());

  const auto empty = largeness_profile(z3, ElementSet(3));
  CHECK_FALSE(empty.is_thick());
  CHECK_FALSE(empty.is_syndetic());
  CHECK_FALSE(empty.is_piecewise_syndetic());
  CHECK_FALSE(empty.is_central());

  CHECK_THROWS_AS(largeness_profile(z3, ElementSet(4, {3})), ElementOutOfRange);
}

TEST_CASE("largeness flags match definitional oracles through order 3 and a sample of order 4") {
  std::vector<FiniteSemigroup> scope = all_semigroups_up_to(3);
  for (auto& s : sample_semigroups(4, 120, 3)) scope.push_back(s);
  for (const auto& s : scope) {
    const auto ideals = ideal_structure(s);
    for (auto m : oracle::all_masks(s.order())) {
      const auto a = ElementSet::from_mask(s.order(), m);
      const auto p = largeness_profile(s, ideals, a);
      CHECK(p.is_thick() == oracle::thick(s, m));
      CHECK(p.is_syndetic() == oracle::syndetic(s, m));
      CHECK(p.is_piecewise_syndetic() == oracle::piecewise_syndetic(s, m));
      CHECK(p.is_central() == oracle::central(s, m));
      // Piecewise syndetic exactly when A meets the kernel.
      CHECK(p.is_piecewise_syndetic() == ((m & oracle::kernel_mask(s)) != 0));
      if (p.syndetic) CHECK(inverse_image(s, *p.syndetic, a) == s.all());
      if (p.thick) CHECK(left_orbit(s, *p.thick).is_subset_of(a));
      if (p.piecewise_syndetic) {
        CHECK(left_orbit(s, p.piecewise_syndetic->anchor)
                  .is_subset_of(inverse_image(s, p.piecewise_syndetic->shifts, a)));
      }
    }
  }
}

TEST_CASE("shift sets") {
  const auto z3 = cyclic_group(3);
  CHECK(shift_set(z3, ElementSet(3, {0}), 1) == ElementSet(3, {2}));
  CHECK(shift_set(z3, z3.all(), 2) == z3.all());
  CHECK(shift_set(two_element_mult(), ElementSet(2, {1}), 0).empty());
  CHECK_THROWS_AS(shift_set(z3, ElementSet(3, {0}), 3), ElementOutOfRange);
}

TEST_CASE("central shift spectrum") {
  const auto m = central_shift_spectrum(two_element_mult(), ElementSet(2, {0}));
  CHECK(m.spectrum == ElementSet(2, {0, 1}));
  CHECK(m.piecewise_syndetic);
  CHECK(m.spectrum_syndetic);
  CHECK(m.spectrum_nonempty);

  const auto e = central_shift_spectrum(cyclic_group(3), ElementSet(3));
  CHECK(e.spectrum.empty());
  CHECK_FALSE(e.piecewise_syndetic);
  CHECK_FALSE(e.spectrum_syndetic);
  CHECK_FALSE(e.spectrum_nonempty);

  const auto r = central_shift_spectrum(right_zero(2), ElementSet(2, {1}));
  CHECK(r.spectrum == ElementSet(2, {0, 1}));
  CHECK(r.agree());

  for (const auto& s : sample_semigroups(4, 60, 5)) {
    for (auto mask : oracle::all_masks(4)) {
      CHECK(central_shift_spectrum(s, ElementSet::from_mask(4, mask)).agree());
    }
  }
}

TEST_CASE("order-4 named families keep the largeness chain") {
  for (const auto& s : named_families(4)) {
    for (auto mask : oracle::all_masks(4)) {
      const auto p = largeness_profile(s, ElementSet::from_mask(4, mask));
      CHECK((!p.is_thick() || p.is_central()));
      CHECK((!p.is_central() || p.is_piecewise_syndetic()));
      CHECK((!p.is_syndetic() || p.is_piecewise_syndetic()));
    }
  }
}
