#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

using namespace fuzzlat;
using fixtures::carrier_set;
using fixtures::make_ul;

TEST_CASE("the 3-chain fixture is an L-ordered set") {
  LOrderedSet P = make_ul();
  REQUIRE(P.size() == 3);
  // order is the residuum, approx the biresiduum
  const ResiduatedLattice& L = P.lattice();
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      CHECK(P.order_i(u, v) == L.impl_i(u, v));
      CHECK(P.approx_i(u, v) == L.bires_i(u, v));
    }
  CHECK(verify_order_axioms(P).all_pass());
}

TEST_CASE("a reflexive total order with crisp identity fails antisymmetry") {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u2 = make_universe({"a", "b"});
  LOrderedSet P(B, u2, LRelation::identity(B, u2),
                LRelation::constant(B, u2, u2, B.top()));
  AxiomReport r = verify_order_axioms(P);
  CHECK(!r.all_pass());
  bool antisym_failed = false;
  for (const auto& c : r.checks)
    if (c.axiom == "antisymmetry" && !c.pass) antisym_failed = true;
  CHECK(antisym_failed);
}

TEST_CASE("a crisp two-chain is an L-ordered set") {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u2 = make_universe({"a", "b"});
  LRelation ord(B, u2, u2, {1, 1, 0, 1});
  LOrderedSet P(B, u2, LRelation::identity(B, u2), ord);
  CHECK(verify_order_axioms(P).all_pass());
}

TEST_CASE("lower and upper sets") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();

  for (std::size_t i = 0; i < 27; ++i) {
    LSet V = decode_lset(L, P.carrier_ptr(), i);
    CHECK(lower_set(P, V) == lower_set(P, lower_set(P, V)));
    CHECK(upper_set(P, V) == upper_set(P, upper_set(P, V)));
  }

  LSet top_single = carrier_set(P, {0, 0, 2});
  CHECK(lower_set(P, top_single) == carrier_set(P, {2, 2, 2}));

  LSet empty = LSet::empty(L, P.carrier_ptr());
  CHECK(upper_set(P, empty) == empty);
  CHECK(lower_set(P, empty) == empty);
}

TEST_CASE("cones") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();

  LSet empty = LSet::empty(L, P.carrier_ptr());
  CHECK(lower_cone(P, empty) == carrier_set(P, {2, 2, 2}));
  CHECK(upper_cone(P, empty) == carrier_set(P, {2, 2, 2}));

  for (int v = 0; v < 3; ++v) {
    LSet lc = lower_cone(P, singleton(P, v));
    LSet uc = upper_cone(P, singleton(P, v));
    for (int u = 0; u < 3; ++u) {
      CHECK(lc.memb_i(u) == P.order_i(u, v));
      CHECK(uc.memb_i(u) == P.order_i(v, u));
    }
  }

  // V = {1/(1/2), (1/2)/1}: the lower cone holds 0 fully
  LSet V = carrier_set(P, {0, 2, 1});
  CHECK(lower_cone(P, V).memb_i(0) == 2);
}

TEST_CASE("intervals and convexity") {
  LOrderedSet P = make_ul();

  Interval iv = interval(P, 0, 1); // [0, 1/2]
  CHECK(iv.membership == carrier_set(P, {2, 2, 1}));
  CHECK(is_convex(P, iv.membership));

  Interval deg = interval(P, 1, 1);
  CHECK(deg.membership == carrier_set(P, {1, 2, 1}));

  // crisp poset: the degenerate interval is the singleton
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u2 = make_universe({"a", "b"});
  LOrderedSet Q(B, u2, LRelation::identity(B, u2),
                LRelation(B, u2, u2, {1, 1, 0, 1}));
  CHECK(interval(Q, 0, 0).membership == LSet(B, u2, {1, 0}));

  // all intervals are convex
  for (int v = 0; v < 3; ++v)
    for (int u = 0; u < 3; ++u)
      if (P.leq1(v, u)) CHECK(is_convex(P, interval(P, v, u).membership));

  // {1/0, 0/(1/2), 1/1} is not convex: both sets give 1/2 membership 1
  LSet notc = carrier_set(P, {2, 0, 2});
  CHECK(!is_convex(P, notc));

  CHECK_THROWS_AS(interval(P, 2, 0), Error); // 1 !<= 0 in the 1-cut
}

TEST_CASE("definitional infimum and supremum") {
  LOrderedSet P = make_ul();

  LSet V = carrier_set(P, {0, 2, 1}); // {1/(1/2), (1/2)/1}
  CHECK(infimum(P, V) == std::optional(1));
  CHECK(supremum(P, V) == std::optional(1));

  // closed-form route agrees
  CHECK(P.encode(power_inf(P, V)) == 1);
  CHECK(P.encode(power_sup(P, V)) == 1);

  for (int u = 0; u < 3; ++u) {
    CHECK(infimum(P, singleton(P, u)) == std::optional(u));
    CHECK(supremum(P, singleton(P, u)) == std::optional(u));
  }

  LSet empty = LSet::empty(P.lattice(), P.carrier_ptr());
  CHECK(infimum(P, empty) == std::optional(2));  // top of the 1-cut
  CHECK(supremum(P, empty) == std::optional(0)); // bottom of the 1-cut
}

TEST_CASE("a corrupted order makes the extremum scan ambiguous") {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u2 = make_universe({"a", "b"});
  LRelation all_one = LRelation::constant(B, u2, u2, B.top());
  LOrderedSet bad(B, u2, all_one, all_one);
  LSet V(B, u2, {1, 1});
  CHECK_THROWS_AS(infimum(bad, V), Error);
}

TEST_CASE("is_completely_lattice") {
  Budget b;
  CHECK(is_completely_lattice(make_ul(), b).complete);

  // crisp 2-antichain: no bounds at all
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u2 = make_universe({"a", "b"});
  LOrderedSet anti(B, u2, LRelation::identity(B, u2),
                   LRelation::identity(B, u2));
  auto res = is_completely_lattice(anti, b);
  CHECK(!res.complete);
  REQUIRE(res.witness.has_value());
  CHECK((!infimum(anti, *res.witness) || !supremum(anti, *res.witness)));

  // single-element carrier
  UniversePtr u1 = make_universe({"a"});
  LOrderedSet one(B, u1, LRelation::identity(B, u1),
                  LRelation::identity(B, u1));
  CHECK(is_completely_lattice(one, b).complete);
}

TEST_CASE("power lattices at small sizes") {
  Budget b;
  ResiduatedLattice B = ResiduatedLattice::boolean();

  LOrderedSet two = power_lattice(B, make_universe({"x"}), b);
  CHECK(two.size() == 2);
  CHECK(verify_order_axioms(two).all_pass());
  CHECK(is_completely_lattice(two, b).complete);

  LOrderedSet diamond = fixtures::make_boolean_diamond();
  CHECK(diamond.size() == 4);
  CHECK(verify_order_axioms(diamond).all_pass());
  CHECK(is_completely_lattice(diamond, b).complete);
  // crisp inclusion order
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool incl = pointwise_leq(diamond.decode(i), diamond.decode(j));
      CHECK(diamond.leq1(i, j) == incl);
      CHECK((diamond.order_i(i, j) == B.top_i()) == incl);
    }

  LOrderedSet ul = make_ul();
  CHECK(ul.size() == 3);
  CHECK(is_completely_lattice(ul, b).complete);
}

TEST_CASE("power lattice refuses past the budget") {
  Budget b;
  b.max_enumeration = 10;
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 4);
  CHECK_THROWS_AS(power_lattice(L, make_universe({"x", "y"}), b), Error);
  try {
    power_lattice(L, make_universe({"x", "y"}), b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
    CHECK(std::string(e.what()).find("16") != std::string::npos);
  }
}

TEST_CASE("isotone maps and isomorphisms") {
  LOrderedSet P = make_ul();

  std::vector<int> id{0, 1, 2};
  CHECK(is_isotone(P, P, id));
  CHECK(is_isomorphism(P, P, id));

  std::vector<int> constant{1, 1, 1};
  CHECK(is_isotone(P, P, constant));
  CHECK(!is_isomorphism(P, P, constant));

  std::vector<int> shift{0, 0, 1}; // 0->0, 1/2->0, 1->1/2
  CHECK(is_isotone(P, P, shift));

  std::vector<int> swap{2, 1, 0};
  CHECK(!is_isotone(P, P, swap));
}

TEST_CASE("two-element infimum lemma on the 3-chain") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      std::vector<int> m(3, L.bot_i());
      m[u] = P.order_i(v, u);
      m[v] = L.join_i(m[v], L.top_i());
      CHECK(infimum(P, carrier_set(P, m)) == std::optional(v));

      std::vector<int> m2(3, L.bot_i());
      m2[u] = P.order_i(u, v);
      m2[v] = L.join_i(m2[v], L.top_i());
      CHECK(supremum(P, carrier_set(P, m2)) == std::optional(v));
    }
}

TEST_CASE("interval extrema") {
  LOrderedSet P = make_ul();
  for (int v = 0; v < 3; ++v)
    for (int u = 0; u < 3; ++u) {
      if (!P.leq1(v, u)) continue;
      Interval iv = interval(P, v, u);
      CHECK(minimum(P, iv.membership) == std::optional(v));
      CHECK(maximum(P, iv.membership) == std::optional(u));
    }
}

TEST_CASE("closed-form and definitional extrema agree on small powers") {
  Budget b;
  struct Cfg {
    ChainKind kind;
    int n;
    std::vector<std::string> uni;
  };
  for (const Cfg& c : {Cfg{ChainKind::Lukasiewicz, 3, {"x"}},
                       Cfg{ChainKind::Lukasiewicz, 2, {"x", "y"}}}) {
    ResiduatedLattice L = ResiduatedLattice::chain(c.kind, c.n);
    LOrderedSet P = power_lattice(L, make_universe(c.uni), b);
    std::size_t count = lset_count(L, P.carrier(), b.max_enumeration);
    for (std::size_t i = 0; i < count; ++i) {
      LSet V = decode_lset(L, P.carrier_ptr(), i);
      auto in = infimum(P, V);
      auto su = supremum(P, V);
      REQUIRE(in.has_value());
      REQUIRE(su.has_value());
      CHECK(P.encode(power_inf(P, V)) == *in);
      CHECK(P.encode(power_sup(P, V)) == *su);
    }
  }
}
