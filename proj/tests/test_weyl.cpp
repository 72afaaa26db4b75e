#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wittflag/weyl.hpp"

using namespace wittflag;

TEST_CASE("simple reflections") {
  const RootDatum& a1 = RootDatum::get({Family::A, 1});
  CHECK(simple_reflection(a1, 1).apply(a1.fundamental_weight(1)) == Weight(1, {-1}));

  const RootDatum& a2 = RootDatum::get({Family::A, 2});
  // s1(w1) = w1 - a1 = -w1 + w2
  CHECK(simple_reflection(a2, 1).apply(a2.fundamental_weight(1)) == Weight(2, {-1, 1}));
  // s_i fixes w_j for j != i
  CHECK(simple_reflection(a2, 1).apply(a2.fundamental_weight(2)) == a2.fundamental_weight(2));
  for (SimpleType t : all_simple_types())
    for (int i = 1; i <= t.rank; ++i) {
      const IntMat& m = simple_reflection(RootDatum::get(t), i).m;
      CHECK(m.mul(m).is_identity());
    }
  CHECK_THROWS_AS(simple_reflection(a2, 3), std::invalid_argument);
}

TEST_CASE("to_dominant") {
  const RootDatum& a2 = RootDatum::get({Family::A, 2});
  // dominant input: identity
  auto [d0, w0] = to_dominant(a2, a2.fundamental_weight(1));
  CHECK(d0 == a2.fundamental_weight(1));
  CHECK(w0.is_identity());
  // orbit oracle: the dominant representative of -w1 is w2
  auto orb = weyl_orbit(a2, -a2.fundamental_weight(1));
  CHECK(std::count(orb.begin(), orb.end(), a2.fundamental_weight(2)) == 1);
  auto [d1, w1] = to_dominant(a2, -a2.fundamental_weight(1));
  CHECK(d1 == a2.fundamental_weight(2));
  CHECK(w1.apply(-a2.fundamental_weight(1)) == d1);

  // F4: [Sigma] is trivial, so w_o(w1) = -w1 descends back to w1
  const RootDatum& f4 = RootDatum::get({Family::F, 4});
  auto [d2, w2] = to_dominant(f4, -f4.fundamental_weight(1));
  CHECK(d2 == f4.fundamental_weight(1));
  CHECK(w2.apply(-f4.fundamental_weight(1)) == f4.fundamental_weight(1));
}

TEST_CASE("orbits") {
  const RootDatum& a2 = RootDatum::get({Family::A, 2});
  CHECK(weyl_orbit(a2, a2.fundamental_weight(1)).size() == 3);  // |W|/|stab| = 6/2
  CHECK(weyl_orbit(a2, Weight(2)).size() == 1);                 // orbit of zero
  // orbit size divides the group order, exactly one dominant member
  for (SimpleType t : oracles::types_up_to_rank(3)) {
    const RootDatum& rd = RootDatum::get(t);
    auto group = enumerate_weyl_group(rd);
    std::mt19937 rng(20240 + t.rank);
    for (int trial = 0; trial < 5; ++trial) {
      Weight w(rd.rank());
      for (int i = 0; i < rd.rank(); ++i) w[i] = static_cast<int>(rng() % 5) - 2;
      auto orb = weyl_orbit(rd, w);
      CHECK(group.size() % orb.size() == 0);
      int dominant = 0;
      for (const auto& x : orb) dominant += rd.dominant(x);
      CHECK(dominant == 1);
      CHECK(rd.dominant(to_dominant(rd, w).first));
    }
  }
}

TEST_CASE("E8 orbit of the adjoint node weight has 240 elements") {
  // |W(E8)| / |W(E7)| = 696729600 / 2903040 = 240, twice the positive roots
  const RootDatum& e8 = RootDatum::get({Family::E, 8});
  CHECK(weyl_orbit_cached(e8, e8.fundamental_weight(8)).size() == 240);
  CHECK(2 * e8.positive_roots().size() == 240);
}

TEST_CASE("longest elements") {
  const RootDatum& f4 = RootDatum::get({Family::F, 4});
  CHECK(longest_element(f4, SubsetMask()).is_identity());
  // w_o = -1 for F4
  CHECK(longest_element(f4, SubsetMask::full(4)).m == IntMat::identity(4).negated());

  const RootDatum& a2 = RootDatum::get({Family::A, 2});
  // -w_o swaps the two fundamental weights
  IntMat dual = longest_element(a2, SubsetMask::full(2)).m.negated();
  CHECK(dual.apply(a2.fundamental_weight(1)) == a2.fundamental_weight(2));
  CHECK(dual.apply(a2.fundamental_weight(2)) == a2.fundamental_weight(1));

  for (SimpleType t : all_simple_types()) {
    const RootDatum& rd = RootDatum::get(t);
    for (unsigned b = 0; b < (1u << rd.rank()); b += 3) {  // sampled subsets
      IntMat m = longest_element(rd, SubsetMask(b)).m;
      CHECK(m.mul(m).is_identity());
    }
  }
}

TEST_CASE("duality involutions of F4 subsets match the fixed-cone table") {
  const RootDatum& f4 = RootDatum::get({Family::F, 4});
  Involution h = duality(f4, SubsetMask::of({2, 3, 4}));
  CHECK(h.element.apply(f4.fundamental_weight(1)) == Weight(4, {-1, 0, 0, 0}));
  CHECK(h.element.apply(f4.fundamental_weight(2)) == Weight(4, {-3, 1, 0, 0}));
  CHECK(h.element.apply(f4.fundamental_weight(3)) == Weight(4, {-2, 0, 1, 0}));
  CHECK(h.element.apply(f4.fundamental_weight(4)) == Weight(4, {-1, 0, 0, 1}));

  Involution h2 = duality(f4, SubsetMask::of({1, 2, 3}));
  CHECK(h2.element.apply(f4.fundamental_weight(4)) == Weight(4, {0, 0, 0, -1}));

  // [empty] = -1; its fixed part is zero
  Involution none = duality(f4, SubsetMask());
  CHECK(none.element.m == IntMat::identity(4).negated());
  CHECK(none.ell_plus == 0);
  CHECK(none.ell_minus == 4);
}

TEST_CASE("duality preserves the J-dominant chamber") {
  std::mt19937 rng(7);
  for (SimpleType t : oracles::types_up_to_rank(5)) {
    const RootDatum& rd = RootDatum::get(t);
    for (unsigned b = 0; b < (1u << rd.rank()); ++b) {
      SubsetMask j(b);
      Involution dual = duality(rd, j);
      for (int trial = 0; trial < 3; ++trial) {
        Weight w(rd.rank());
        for (int i = 0; i < rd.rank(); ++i)
          w[i] = j.contains(i + 1) ? static_cast<int>(rng() % 3)
                                   : static_cast<int>(rng() % 7) - 3;
        CHECK(rd.dominant(dual.element.apply(w), j));
      }
    }
  }
}

TEST_CASE("ambient duality is trivial or the flip, per family") {
  for (SimpleType t : all_simple_types()) {
    const RootDatum& rd = RootDatum::get(t);
    SubsetMask sigma = SubsetMask::full(rd.rank());
    bool trivial = true;
    for (int a = 1; a <= rd.rank(); ++a)
      if (duality_node_image(rd, sigma, a) != a) trivial = false;
    bool expect_trivial =
        (t.family == Family::A && t.rank == 1) || t.family == Family::B ||
        t.family == Family::C || (t.family == Family::D && t.rank % 2 == 0) ||
        (t.family == Family::E && t.rank >= 7) || t.family == Family::F || t.family == Family::G;
    CHECK(trivial == expect_trivial);
    if (!expect_trivial) {
      // the flip: A_n reverses; D_odd swaps the fork; E6 swaps 1<->6, 3<->5
      if (t.family == Family::A)
        for (int a = 1; a <= t.rank; ++a)
          CHECK(duality_node_image(rd, sigma, a) == t.rank + 1 - a);
      if (t.family == Family::D) {
        CHECK(duality_node_image(rd, sigma, t.rank - 1) == t.rank);
        CHECK(duality_node_image(rd, sigma, 1) == 1);
      }
      if (t.family == Family::E) {
        CHECK(duality_node_image(rd, sigma, 1) == 6);
        CHECK(duality_node_image(rd, sigma, 3) == 5);
        CHECK(duality_node_image(rd, sigma, 2) == 2);
        CHECK(duality_node_image(rd, sigma, 4) == 4);
      }
    }
  }
}

TEST_CASE("subset equivalence examples") {
  const RootDatum& a5 = RootDatum::get({Family::A, 5});
  // all five singletons are mutually equivalent
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      CHECK(subsets_equivalent(a5, SubsetMask::of({a}), SubsetMask::of({b})));

  const RootDatum& d5 = RootDatum::get({Family::D, 5});
  // the two spinor-type subsets
  CHECK(subsets_equivalent(d5, SubsetMask::of({1, 2, 3, 4}), SubsetMask::of({1, 2, 3, 5})));
  // reflexive
  CHECK(subsets_equivalent(d5, SubsetMask::of({2, 4}), SubsetMask::of({2, 4})));

  CHECK(subsets_up_to_equivalence(RootDatum::get({Family::G, 2})).size() == 4);
  CHECK(subsets_up_to_equivalence(RootDatum::get({Family::A, 2})).size() == 3);
}

TEST_CASE("equivalence classes respect the brute-force search at small rank") {
  for (SimpleType t : oracles::types_up_to_rank(3)) {
    const RootDatum& rd = RootDatum::get(t);
    auto group = enumerate_weyl_group(rd);
    for (unsigned j = 0; j < (1u << rd.rank()); ++j)
      for (unsigned k = 0; k < (1u << rd.rank()); ++k)
        CHECK(subsets_equivalent(rd, SubsetMask(j), SubsetMask(k)) ==
              oracles::subsets_equivalent_brute(rd, SubsetMask(j), SubsetMask(k), group));
  }
}

TEST_CASE("conjugate involutions") {
  const RootDatum& b4 = RootDatum::get({Family::B, 4});
  IntMat s = longest_element(b4, SubsetMask::of({1, 2, 3})).m;
  CHECK(conjugate_involutions(b4, s, s, 100000));
  // the spinor-case standard involution
  CHECK(conjugate_involutions(b4, s, longest_element(b4, SubsetMask::of({1, 3})).m, 100000));
  // short and long reflections are not conjugate in B4
  CHECK(!conjugate_involutions(b4, simple_reflection(b4, 1).m, simple_reflection(b4, 4).m,
                               100000));
  CHECK_THROWS_AS(conjugate_involutions(b4, s, longest_element(b4, SubsetMask::of({1, 3})).m, 2),
                  BudgetExceeded);
  IntMat rot = simple_reflection(b4, 1).m.mul(simple_reflection(b4, 2).m);
  CHECK_THROWS_AS(conjugate_involutions(b4, rot, rot, 100000), std::invalid_argument);
}

TEST_CASE("conjugation invariance on random conjugates") {
  const RootDatum& rd = RootDatum::get({Family::D, 4});
  IntMat sigma = longest_element(rd, SubsetMask::of({1, 3})).m;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat w = IntMat::identity(4);
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i)
      w = w.mul(simple_reflection(rd, static_cast<int>(rng() % 4) + 1).m);
    IntMat winv = unimodular_inverse(w);
    CHECK(conjugate_involutions(rd, sigma, w.mul(sigma).mul(winv), 100000));
  }
}

TEST_CASE("conjugacy orbit evidence words check out") {
  const RootDatum& b4 = RootDatum::get({Family::B, 4});
  IntMat s = longest_element(b4, SubsetMask::of({1, 2, 3})).m;
  IntMat t = longest_element(b4, SubsetMask::full(4)).m.mul(
      longest_element(b4, SubsetMask::of({1, 3})).m);
  // w_o w_o^I is an involution here and conjugate to w_o^H
  ConjugacyOrbit orbit(b4, s, 100000);
  REQUIRE(orbit.contains(t));
  auto word = orbit.conjugating_word(t);
  IntMat w = IntMat::identity(4);
  for (int i : word) w = w.mul(simple_reflection(b4, i).m);
  CHECK(w.mul(s).mul(unimodular_inverse(w)) == t);
}

TEST_CASE("characteristic polynomial is exact") {
  const RootDatum& g2 = RootDatum::get({Family::G, 2});
  // s1 has eigenvalues +1, -1: x^2 - 1
  CHECK(char_poly(simple_reflection(g2, 1).m) == std::vector<long long>{1, 0, -1});
  IntMat neg = IntMat::identity(2).negated();
  CHECK(char_poly(neg) == std::vector<long long>{1, 2, 1});  // (x+1)^2
}
