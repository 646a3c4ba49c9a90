#include <doctest.h>

#include <set>

#include "pathcong/lattice.hpp"
#include "pathcong/theorems.hpp"
#include "support.hpp"

using namespace pathcong;
using namespace pathcong::testing;

namespace {

  using Covers = std::vector<std::pair<LatticeIndex, LatticeIndex>>;

  FiniteLattice chain(std::size_t n) {
    return lattice_from_order(n, [](LatticeIndex a, LatticeIndex b) { return a <= b; });
  }

  // 0 < 1 < 2 < 4 and 0 < 3 < 4.
  FiniteLattice pentagon() {
    return lattice_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  }

  // 0 < 1, 2, 3 < 4.
  FiniteLattice diamond() {
    return lattice_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  }

  // Boolean lattice on subsets of {0, 1, 2}.
  FiniteLattice cube() {
    return lattice_from_order(
        8, [](LatticeIndex a, LatticeIndex b) { return (a & ~b) == 0; });
  }

  // Cover relation straight from the order definition.
  bool naive_covers(FiniteLattice const& l, LatticeIndex a, LatticeIndex b) {
    if (!l.less(a, b)) {
      return false;
    }
    for (LatticeIndex c = 0; c < l.size(); ++c) {
      if (l.less(a, c) && l.less(c, b)) {
        return false;
      }
    }
    return true;
  }

  // The four cover-transfer properties, from naive covers.
  struct Naive {
    bool usm = true, lsm = true, susm = true, slsm = true;
  };

  Naive naive_semimodularity(FiniteLattice const& l) {
    Naive out;
    for (LatticeIndex a = 0; a < l.size(); ++a) {
      for (LatticeIndex b = 0; b < l.size(); ++b) {
        auto const j = l.join(a, b), m = l.meet(a, b);
        if (naive_covers(l, m, a) && naive_covers(l, m, b)
            && !(naive_covers(l, a, j) && naive_covers(l, b, j))) {
          out.usm = false;
        }
        if (naive_covers(l, a, j) && naive_covers(l, b, j)
            && !(naive_covers(l, m, a) && naive_covers(l, m, b))) {
          out.lsm = false;
        }
        if (naive_covers(l, m, a) && !naive_covers(l, b, j)) {
          out.susm = false;
        }
        if (naive_covers(l, a, j) && !naive_covers(l, m, b)) {
          out.slsm = false;
        }
      }
    }
    return out;
  }

  void check_lattice_invariants(FiniteLattice const& l) {
    std::set<std::pair<LatticeIndex, LatticeIndex>> covers(l.cover_pairs().begin(),
                                                           l.cover_pairs().end());
    for (LatticeIndex a = 0; a < l.size(); ++a) {
      CHECK(l.leq(l.bottom(), a));
      CHECK(l.leq(a, l.top()));
      for (LatticeIndex b = 0; b < l.size(); ++b) {
        CHECK(naive_covers(l, a, b) == l.covers(a, b));
        CHECK(naive_covers(l, a, b) == (covers.count({a, b}) == 1));
        CHECK(l.meet(a, l.join(a, b)) == a);
        CHECK(l.join(a, l.meet(a, b)) == a);
      }
    }

    auto const p = compute_lattice_properties(l);
    auto const n = naive_semimodularity(l);
    CHECK(p.upper_semimodular == n.usm);
    CHECK(p.lower_semimodular == n.lsm);
    CHECK(p.strong_upper_semimodular == n.susm);
    CHECK(p.strong_lower_semimodular == n.slsm);

    // Hierarchy.
    if (p.distributive) {
      CHECK(p.modular);
    }
    if (p.modular) {
      CHECK(p.strong_upper_semimodular);
      CHECK(p.strong_lower_semimodular);
    }
    if (p.strong_upper_semimodular) {
      CHECK(p.upper_semimodular);
    }
    if (p.strong_lower_semimodular) {
      CHECK(p.lower_semimodular);
    }

    // Forbidden sublattices, by both routes.
    auto const pent       = find_pentagon(l);
    auto const pent_exh   = search_pentagon_exhaustive(l);
    auto const diam       = find_diamond(l);
    auto const diam_exh   = search_diamond_exhaustive(l);
    CHECK(p.modular == !pent);
    CHECK(p.modular == !pent_exh);
    CHECK(p.distributive == (!pent && !diam));
    CHECK(p.distributive == (!pent_exh && !diam_exh));
    if (pent) {
      CHECK(is_pentagon(l, *pent));
    }
    if (pent_exh) {
      CHECK(is_pentagon(l, *pent_exh));
    }
    if (diam) {
      CHECK(is_diamond(l, *diam));
    }
    if (diam_exh) {
      CHECK(is_diamond(l, *diam_exh));
    }
    if (auto t = find_distributivity_violation(l)) {
      CHECK(violates_distributivity(l, *t));
    }
    if (auto t = find_modularity_violation(l)) {
      CHECK(violates_modularity(l, *t));
    }
  }

}  // namespace

TEST_CASE("single-element lattice") {
  auto const l = chain(1);
  CHECK(l.size() == 1);
  CHECK(l.cover_pairs().empty());
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 0);
  CHECK(is_distributive(l));
  check_lattice_invariants(l);
}

TEST_CASE("chains satisfy every property") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const l = chain(n);
    auto const p = compute_lattice_properties(l);
    CHECK(p.distributive);
    CHECK(p.modular);
    CHECK(p.upper_semimodular);
    CHECK(p.lower_semimodular);
    CHECK(p.strong_upper_semimodular);
    CHECK(p.strong_lower_semimodular);
    CHECK(l.cover_pairs().size() == n - 1);
    check_lattice_invariants(l);
  }
}

TEST_CASE("the two forbidden lattices") {
  auto const n5 = pentagon();
  CHECK_FALSE(is_modular(n5));
  CHECK(find_pentagon(n5).has_value());
  CHECK_FALSE(find_diamond(n5).has_value());
  check_lattice_invariants(n5);

  auto const m3 = diamond();
  CHECK(is_modular(m3));
  CHECK_FALSE(is_distributive(m3));
  CHECK_FALSE(find_pentagon(m3).has_value());
  auto const d = find_diamond(m3);
  REQUIRE(d.has_value());
  CHECK((*d)[0] == 0);
  CHECK((*d)[4] == 4);
  check_lattice_invariants(m3);

  auto const b3 = cube();
  CHECK(is_distributive(b3));
  CHECK(b3.cover_pairs().size() == 12);
  check_lattice_invariants(b3);
}

TEST_CASE("construction rejects non-lattices") {
  // Two incomparable elements with no bounds.
  CHECK_THROWS_AS(
      (void) lattice_from_order(2, [](LatticeIndex a, LatticeIndex b) { return a == b; }),
      LatticeAxiomError);
  // Not antisymmetric.
  CHECK_THROWS_AS((void) lattice_from_order(2, [](LatticeIndex, LatticeIndex) { return true; }),
                  LatticeAxiomError);
  // Join table that is not the least upper bound.
  CHECK_THROWS_AS(
      (void) build_lattice(
          3,
          [](LatticeIndex a, LatticeIndex b) { return a <= b; },
          [](LatticeIndex, LatticeIndex) { return LatticeIndex{2}; },
          [](LatticeIndex a, LatticeIndex b) { return std::min(a, b); }),
      LatticeAxiomError);
  // Two maximal elements above a bottom: no join.
  CHECK_THROWS_AS((void) lattice_from_covers(3, {{0, 1}, {0, 2}}), LatticeAxiomError);
  CHECK_THROWS_AS((void) lattice_from_order(0, [](LatticeIndex, LatticeIndex) { return true; }),
                  LatticeAxiomError);
}

TEST_CASE("the single-arrow congruence lattice") {
  auto const cl = congruence_lattice(build_semigroup(single_arrow()));
  auto const& l = cl.lattice;
  REQUIRE(l.size() == 5);
  // Elements come sorted from finest to coarsest.
  CHECK(l.cover_pairs() == Covers{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(is_distributive(l));
  CHECK_FALSE(find_pentagon(l).has_value());
  CHECK_FALSE(find_diamond(l).has_value());
  check_lattice_invariants(l);
}

TEST_CASE("the Kronecker congruence lattice") {
  auto const cl = congruence_lattice(build_semigroup(kronecker()));
  auto const& l = cl.lattice;
  REQUIRE(l.size() == 8);
  CHECK(l.cover_pairs()
        == Covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {4, 6},
                  {5, 7}, {6, 7}});
  auto const p = compute_lattice_properties(l);
  CHECK(p.modular);
  CHECK_FALSE(p.distributive);
  CHECK(p.upper_semimodular);
  CHECK(p.lower_semimodular);
  CHECK(p.strong_upper_semimodular);
  CHECK(p.strong_lower_semimodular);
  CHECK_FALSE(find_pentagon(l).has_value());
  auto const d = find_diamond(l);
  REQUIRE(d.has_value());
  CHECK(std::set<LatticeIndex>(d->begin(), d->end())
        == std::set<LatticeIndex>{0, 1, 2, 3, 4});
  check_lattice_invariants(l);
}

TEST_CASE("the triple-arrow ideal lattice") {
  auto const  s  = build_semigroup(triple_arrow());
  auto const  il = ideal_lattice(s);
  auto const& l  = il.lattice;
  REQUIRE(l.size() == 18);
  CHECK(l.cover_pairs().size() == 35);
  CHECK_FALSE(is_modular(l));
  CHECK(is_strong_upper_semimodular(l));
  CHECK_FALSE(is_lower_semimodular(l));
  CHECK(find_lower_semimodularity_violation(l).has_value());

  auto const index_of = [&](SpecialIdeal const& i) {
    for (LatticeIndex k = 0; k < il.ideals.size(); ++k) {
      if (il.ideals[k] == i) {
        return k;
      }
    }
    FAIL("ideal not enumerated");
    return LatticeIndex{0};
  };
  auto const alpha_plus_bc = index_of(ideal(s, {mono(s, "alpha"), comm(s, "beta", "gamma")}));
  auto const gamma_plus_ab = index_of(ideal(s, {mono(s, "gamma"), comm(s, "alpha", "beta")}));
  auto const arrows  = index_of(ideal(s, {mono(s, "alpha"), mono(s, "beta"), mono(s, "gamma")}));
  auto const alpha_only  = index_of(ideal(s, {mono(s, "alpha")}));
  // This pair breaks lower semimodularity: both are covered by their join
  // but neither covers their meet.
  CHECK(l.join(alpha_plus_bc, gamma_plus_ab) == arrows);
  CHECK(l.meet(alpha_plus_bc, gamma_plus_ab) == l.bottom());
  CHECK(l.covers(alpha_plus_bc, arrows));
  CHECK(l.covers(gamma_plus_ab, arrows));
  CHECK_FALSE(l.covers(l.bottom(), alpha_plus_bc));
  CHECK(l.less(l.bottom(), alpha_only));
  CHECK(l.less(alpha_only, alpha_plus_bc));

  auto const pent = find_pentagon(l);
  REQUIRE(pent.has_value());
  CHECK(is_pentagon(l, *pent));
  check_lattice_invariants(l);
}

TEST_CASE("order isomorphism check") {
  auto const m3 = diamond();
  CHECK(is_order_isomorphism(m3, m3, {0, 1, 2, 3, 4}));
  CHECK(is_order_isomorphism(m3, m3, {0, 3, 1, 2, 4}));
  CHECK_FALSE(is_order_isomorphism(m3, m3, {4, 1, 2, 3, 0}));
  CHECK_FALSE(is_order_isomorphism(m3, m3, {0, 1, 1, 3, 4}));
  CHECK_FALSE(is_order_isomorphism(m3, pentagon(), {0, 1, 2, 3, 4}));
}

TEST_CASE("lattice invariants on random congruence lattices") {
  for (auto const& q : random_quiver_suite(31, 25)) {
    CAPTURE(format_quiver(q));
    auto const s  = build_semigroup(q);
    auto const cl = congruence_lattice(s);
    if (cl.lattice.size() > 80) {
      continue;
    }
    check_lattice_invariants(cl.lattice);
  }
}
