#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "fuzzlat/galois.hpp"
#include "fuzzlat/generate.hpp"

using namespace fuzzlat;
using fixtures::make_ul;

namespace {

const GaloisPair kIdentity{{0, 1, 2}, {0, 1, 2}};
const GaloisPair kBotTop{{0, 0, 0}, {2, 2, 2}};
// f: 0->0, 1/2->0, 1->1/2 with adjoint g: 0->1/2, 1/2->1, 1->1
const GaloisPair kHalfShift{{0, 0, 1}, {1, 2, 2}};

} // namespace

TEST_CASE("galois condition on the 3-chain") {
  LOrderedSet P = make_ul();

  CHECK(is_isotone_galois(P, kIdentity).ok);
  CHECK(is_isotone_galois(P, kBotTop).ok);
  CHECK(is_isotone_galois(P, kHalfShift).ok);

  GaloisCheck bad = is_isotone_galois(P, GaloisPair{{2, 2, 2}, {0, 0, 0}});
  CHECK(!bad.ok);
  // worst defect: the two sides disagree maximally
  CHECK(P.lattice().bires_i(bad.lhs, bad.rhs) == P.lattice().bot_i());
  CHECK(bad.lhs != bad.rhs);
}

TEST_CASE("extensivity") {
  LOrderedSet P = make_ul();
  CHECK(is_extensive(P, kIdentity).extensive);
  CHECK(is_extensive(P, kBotTop).extensive);
  ExtensivityReport e = is_extensive(P, kHalfShift);
  CHECK(e.extensive);
  CHECK(e.f_deflating);
  CHECK(e.g_inflating);
  CHECK(e.one_implied_other());

  ExtensivityReport bad = is_extensive(P, GaloisPair{{2, 2, 2}, {0, 0, 0}});
  CHECK(!bad.extensive);
  CHECK(bad.witness == 0);
}

TEST_CASE("fixpoints of the three extensive pairs") {
  LOrderedSet P = make_ul();

  FixpointSet id_fix = fixpoints(P, kIdentity);
  REQUIRE(id_fix.pairs.size() == 3);
  std::vector<int> to_carrier;
  for (auto [u, v] : id_fix.pairs) {
    CHECK(u == v);
    to_carrier.push_back(u);
  }
  CHECK(is_isomorphism(id_fix.order, P, to_carrier));

  FixpointSet bt_fix = fixpoints(P, kBotTop);
  REQUIRE(bt_fix.pairs.size() == 1);
  CHECK(bt_fix.pairs[0] == std::pair<int, int>{2, 0});

  FixpointSet hs_fix = fixpoints(P, kHalfShift);
  REQUIRE(hs_fix.pairs.size() == 2);
  CHECK(hs_fix.pairs[0] == std::pair<int, int>{1, 0});
  CHECK(hs_fix.pairs[1] == std::pair<int, int>{2, 1});
}

TEST_CASE("a pair whose sides disagree on fixpoint order is rejected") {
  LOrderedSet P = make_ul();
  GaloisPair swap{{2, 1, 0}, {2, 1, 0}};
  CHECK(!is_isotone_galois(P, swap).ok);
  CHECK_THROWS_AS(fixpoints(P, swap), Error);
}

TEST_CASE("closure and interior operators from pairs") {
  LOrderedSet P = make_ul();

  CHECK(verify_closure(P, closure_from_pair(kIdentity)).all_pass());
  CHECK(verify_interior(P, interior_from_pair(kIdentity)).all_pass());

  std::vector<int> c = closure_from_pair(kBotTop);
  CHECK(c == std::vector<int>{2, 2, 2});
  CHECK(verify_closure(P, c).all_pass());
  std::vector<int> i = interior_from_pair(kBotTop);
  CHECK(i == std::vector<int>{0, 0, 0});
  CHECK(verify_interior(P, i).all_pass());

  CHECK(verify_closure(P, closure_from_pair(kHalfShift)).all_pass());
  CHECK(verify_interior(P, interior_from_pair(kHalfShift)).all_pass());

  // 0->1, 1/2->0, 1->1: not isotone (and not inflationary)
  AxiomReport r = verify_closure(P, std::vector<int>{2, 0, 2});
  CHECK(!r.all_pass());
  bool isotone_failed = false;
  for (const auto& ch : r.checks)
    if (ch.axiom == "isotone" && !ch.pass) isotone_failed = true;
  CHECK(isotone_failed);
}

TEST_CASE("exactly three isotone Galois connections live on the 3-chain") {
  LOrderedSet P = make_ul();
  Budget b;
  std::vector<GaloisPair> all = enumerate_galois_pairs(P, b, false);
  std::vector<GaloisPair> ext = enumerate_galois_pairs(P, b, true);
  CHECK(all.size() == 3);
  REQUIRE(ext.size() == 3);
  auto has = [&](const GaloisPair& p) {
    for (const GaloisPair& q : ext)
      if (q == p) return true;
    return false;
  };
  CHECK(has(kIdentity));
  CHECK(has(kBotTop));
  CHECK(has(kHalfShift));
}

TEST_CASE("basic Galois properties hold for every enumerated pair") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();
  Budget b;
  for (const GaloisPair& p : enumerate_galois_pairs(P, b, false)) {
    for (int u = 0; u < P.size(); ++u) {
      CHECK(P.leq1(u, p.g[p.f[u]]));
      CHECK(P.leq1(p.f[p.g[u]], u));
      CHECK(p.f[p.g[p.f[u]]] == p.f[u]);
      CHECK(p.g[p.f[p.g[u]]] == p.g[u]);
    }
    CHECK(is_isotone(P, P, p.f));
    CHECK(is_isotone(P, P, p.g));
    // sup/inf exchange on the completely lattice fixture
    for (std::size_t i = 0; i < 27; ++i) {
      LSet V = decode_lset(L, P.carrier_ptr(), i);
      LSet fV = carrier_image(p.f, P, V);
      LSet gV = carrier_image(p.g, P, V);
      auto sv = supremum(P, V), sfv = supremum(P, fV);
      REQUIRE(sv);
      REQUIRE(sfv);
      CHECK(p.f[*sv] == *sfv);
      auto iv = infimum(P, V), igv = infimum(P, gV);
      REQUIRE(iv);
      REQUIRE(igv);
      CHECK(p.g[*iv] == *igv);
      auto ifv = infimum(P, fV);
      CHECK(P.leq1(p.f[*iv], *ifv));
      auto sgv = supremum(P, gV);
      CHECK(P.leq1(*sgv, p.g[*sv]));
    }
  }
}

TEST_CASE("fixpoint sets of the operators are closed and isomorphic") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();
  Budget b;
  for (const GaloisPair& p : enumerate_galois_pairs(P, b, false)) {
    std::vector<int> C = closure_from_pair(p);
    std::vector<int> I = interior_from_pair(p);
    for (std::size_t i = 0; i < 27; ++i) {
      LSet V = decode_lset(L, P.carrier_ptr(), i);
      bool on_c = true, on_i = true;
      for (int u = 0; u < 3; ++u) {
        if (V.memb_i(u) != L.bot_i() && C[u] != u) on_c = false;
        if (V.memb_i(u) != L.bot_i() && I[u] != u) on_i = false;
      }
      if (on_c) CHECK(C[*infimum(P, V)] == *infimum(P, V));
      if (on_i) CHECK(I[*supremum(P, V)] == *supremum(P, V));
    }
    FixpointSet fps = fixpoints(P, p);
    std::size_t cfix = 0, ifix = 0;
    for (int u = 0; u < 3; ++u) {
      if (C[u] == u) ++cfix;
      if (I[u] == u) ++ifix;
    }
    CHECK(cfix == fps.pairs.size());
    CHECK(ifix == fps.pairs.size());
  }
}

TEST_CASE("the IGal order between the canonical pairs") {
  LOrderedSet P = make_ul();
  const ResiduatedLattice& L = P.lattice();

  CHECK(igal_order(P, kIdentity, kIdentity) == L.top());
  CHECK(igal_order(P, kIdentity, kBotTop) == L.top());
  CHECK(igal_order(P, kBotTop, kIdentity) == L.bot());
  CHECK(igal_approx(P, kIdentity, kIdentity) == L.top());

  // antisymmetry: both directions top force equal maps
  Budget b;
  std::vector<GaloisPair> ext = enumerate_galois_pairs(P, b, true);
  for (const GaloisPair& p1 : ext)
    for (const GaloisPair& p2 : ext)
      if (igal_order(P, p1, p2) == L.top() &&
          igal_order(P, p2, p1) == L.top())
        CHECK(p1 == p2);
}

TEST_CASE("random extensive pairs are valid by construction") {
  LOrderedSet P = fixtures::make_boolean_diamond();
  SplitMix64 rng(99);
  for (int t = 0; t < 25; ++t) {
    GaloisPair p = random_extensive_pair(P, rng);
    CHECK(is_isotone_galois(P, p).ok);
    CHECK(is_extensive(P, p).extensive);
  }
}
