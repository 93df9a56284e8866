#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzzlat/lattice.hpp"

using namespace fuzzlat;

namespace {

LatticeTables luk3_tables() {
  return ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3).tables();
}

} // namespace

TEST_CASE("lukasiewicz 3-chain connectives") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  Degree half = L.by_name("1/2");
  Degree zero = L.by_name("0");
  Degree one = L.by_name("1");

  CHECK(tensor(half, half) == zero);
  CHECK(impl(half, zero) == half);
  CHECK(impl(one, half) == half);
  CHECK(impl(zero, half) == one);
  CHECK(biresiduum(half, one) == half);
  CHECK(leq(zero, half));
  CHECK(!leq(one, half));
}

TEST_CASE("godel 3-chain connectives") {
  ResiduatedLattice G = ResiduatedLattice::chain(ChainKind::Godel, 3);
  CHECK(impl(G.by_name("1/2"), G.by_name("0")) == G.by_name("0"));
  CHECK(tensor(G.by_name("1/2"), G.by_name("1/2")) == G.by_name("1/2"));
}

TEST_CASE("boolean lattice coincides with the 2-chains") {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  CHECK(B.same_algebra(ResiduatedLattice::chain(ChainKind::Lukasiewicz, 2)));
  CHECK(B.same_algebra(ResiduatedLattice::chain(ChainKind::Godel, 2)));
  CHECK(B.same_algebra(ResiduatedLattice::chain(ChainKind::Goguen, 2)));
  CHECK(tensor(B.top(), B.top()) == B.top());
  CHECK(impl(B.top(), B.bot()) == B.bot());
  CHECK(impl(B.bot(), B.bot()) == B.top());
}

TEST_CASE("chain element names are reduced fractions") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 5);
  CHECK(L.name(0) == "0");
  CHECK(L.name(1) == "1/4");
  CHECK(L.name(2) == "1/2");
  CHECK(L.name(3) == "3/4");
  CHECK(L.name(4) == "1");
}

TEST_CASE("built-in chains pass the axiom scan") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(verify_axioms(ResiduatedLattice::chain(ChainKind::Lukasiewicz, n))
              .all_pass());
    CHECK(verify_axioms(ResiduatedLattice::chain(ChainKind::Godel, n))
              .all_pass());
  }
}

TEST_CASE("adjointness holds on every built-in chain") {
  for (int n = 2; n <= 6; ++n) {
    for (ChainKind k : {ChainKind::Lukasiewicz, ChainKind::Godel}) {
      ResiduatedLattice L = ResiduatedLattice::chain(k, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            CHECK(L.leq_i(L.tensor_i(a, b), c) ==
                  L.leq_i(a, L.impl_i(b, c)));
    }
  }
}

TEST_CASE("residuum is the adjoint join") {
  for (int n = 2; n <= 6; ++n) {
    for (ChainKind k : {ChainKind::Lukasiewicz, ChainKind::Godel}) {
      ResiduatedLattice L = ResiduatedLattice::chain(k, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int best = L.bot_i();
          for (int c = 0; c < n; ++c)
            if (L.leq_i(L.tensor_i(a, c), b)) best = L.join_i(best, c);
          CHECK(best == L.impl_i(a, b));
        }
    }
  }
}

TEST_CASE("explicit LUK3 tables are accepted") {
  CHECK_NOTHROW(ResiduatedLattice::from_tables(luk3_tables()));
}

TEST_CASE("corrupted residuum is caught by the adjointness scan") {
  LatticeTables t = luk3_tables();
  t.impl[1][0] = 2; // impl(1/2, 0) raised from 1/2 to 1
  AxiomReport r = verify_axioms(t);
  CHECK(!r.all_pass());
  const AxiomCheck* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->axiom == "adjointness");
  REQUIRE(f->witness.has_value());
  CHECK(f->witness->items == std::vector<std::string>{"1", "1/2", "0"});
  CHECK_THROWS_AS(ResiduatedLattice::from_tables(t), AxiomError);
}

TEST_CASE("non-associative tensor is caught with a witness triple") {
  LatticeTables t = luk3_tables();
  // commutative, unit-preserving, but (0*0)*1/2 != 0*(0*1/2)
  t.tensor = {{1, 0, 0}, {0, 0, 1}, {0, 1, 2}};
  AxiomReport r = verify_axioms(t);
  CHECK(!r.all_pass());
  bool found = false;
  for (const AxiomCheck& c : r.checks) {
    if (c.axiom == "tensor-associative") {
      CHECK(!c.pass);
      REQUIRE(c.witness.has_value());
      CHECK(c.witness->items == std::vector<std::string>{"0", "0", "1/2"});
      found = true;
    }
    if (c.axiom == "tensor-commutative") CHECK(c.pass);
    if (c.axiom == "tensor-unit") CHECK(c.pass);
  }
  CHECK(found);
}

TEST_CASE("single-element lattice is a legal degenerate case") {
  LatticeTables t;
  t.elements = {"0"};
  t.meet = t.join = t.tensor = t.impl = {{0}};
  t.bot = t.top = 0;
  ResiduatedLattice L = ResiduatedLattice::from_tables(t);
  CHECK(L.size() == 1);
  CHECK(L.bot() == L.top());
}

TEST_CASE("goguen chains are rejected beyond the boolean case") {
  CHECK_THROWS_AS(ResiduatedLattice::chain(ChainKind::Goguen, 3), Error);
  CHECK_NOTHROW(ResiduatedLattice::chain(ChainKind::Goguen, 2));
}

TEST_CASE("chain size below 2 is rejected") {
  CHECK_THROWS_AS(ResiduatedLattice::chain(ChainKind::Lukasiewicz, 1), Error);
}

TEST_CASE("non-total tables are a format error") {
  LatticeTables t = luk3_tables();
  t.meet.pop_back();
  CHECK_THROWS_AS(verify_axioms(t), Error);
  t = luk3_tables();
  t.impl[0].pop_back();
  CHECK_THROWS_AS(ResiduatedLattice::from_tables(t), Error);
}

TEST_CASE("monoid unit and biresiduum diagonal") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 4);
  for (int a = 0; a < L.size(); ++a) {
    CHECK(tensor(L.at(a), L.top()) == L.at(a));
    CHECK(biresiduum(L.at(a), L.at(a)) == L.top());
  }
}

TEST_CASE("big folds with their empty-set conventions") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  std::vector<Degree> some{L.by_name("1/2"), L.by_name("1")};
  CHECK(big_meet(L, some) == L.by_name("1/2"));
  std::vector<Degree> low{L.by_name("0"), L.by_name("1/2")};
  CHECK(big_join(L, low) == L.by_name("1/2"));
  CHECK(big_meet(L, {}) == L.top());
  CHECK(big_join(L, {}) == L.bot());
}

TEST_CASE("cross-lattice degrees are an ownership error") {
  ResiduatedLattice L1 = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  ResiduatedLattice L2 = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  CHECK(L1.same_algebra(L2));
  CHECK(!L1.same_instance(L2));
  CHECK_THROWS_AS(tensor(L1.top(), L2.top()), Error);
  std::vector<Degree> mixed{L1.top(), L2.bot()};
  CHECK_THROWS_AS(big_meet(L1, mixed), Error);
  // copies of one lattice share ownership
  ResiduatedLattice copy = L1;
  CHECK_NOTHROW(tensor(copy.top(), L1.bot()));
}
