#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzzlat/budget.hpp"
#include "fuzzlat/fuzz.hpp"

using namespace fuzzlat;

namespace {

struct Fix {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  UniversePtr xy = make_universe({"x", "y"});
  Degree d(const char* s) const { return L.by_name(s); }
  LSet set(std::vector<int> m) const { return LSet(L, xy, std::move(m)); }
};

} // namespace

TEST_CASE("graded subsethood and similarity") {
  Fix f;
  LSet A = f.set({2, 1}); // {1/x, 1/2/y}
  LSet B = f.set({1, 2}); // {1/2/x, 1/y}
  CHECK(subsethood(A, A) == f.d("1"));
  CHECK(subsethood(A, B) == f.d("1/2"));
  CHECK(similarity(A, B) == f.d("1/2"));
  CHECK(similarity(A, A) == f.d("1"));

  UniversePtr x = make_universe({"x"});
  LSet one(f.L, x, {2});
  LSet zero(f.L, x, {0});
  CHECK(similarity(one, zero) == f.d("0"));
}

TEST_CASE("crisp subsethood over the boolean lattice") {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  UniversePtr u = make_universe({"a", "b", "c"});
  LSet small(B, u, {1, 0, 0});
  LSet big(B, u, {1, 1, 0});
  CHECK(subsethood(small, big) == B.top());
  CHECK(subsethood(big, small) == B.bot());
  CHECK(pointwise_leq(small, big));
}

TEST_CASE("subsethood requires matching universes") {
  Fix f;
  LSet A = f.set({0, 0});
  LSet B(f.L, make_universe({"x", "z"}), {0, 0});
  CHECK_THROWS_AS(subsethood(A, B), Error);
}

TEST_CASE("composition agrees with the displayed folds") {
  Fix f;
  UniversePtr x1 = make_universe({"x"});
  LSet A(f.L, x1, {1});
  LSet B(f.L, x1, {1});
  CHECK(compose(A, B) == f.d("0")); // 1/2 (x) 1/2

  LRelation id = LRelation::identity(f.L, f.xy);
  LRelation R(f.L, f.xy, f.xy, {1, 2, 0, 1});
  CHECK(compose(R, id) == R);
  CHECK(compose(id, R) == R);

  // crisp relations compose classically
  ResiduatedLattice Bo = ResiduatedLattice::boolean();
  UniversePtr u = make_universe({"a", "b"});
  LRelation S(Bo, u, u, {1, 0, 0, 0}); // a->a
  LRelation T(Bo, u, u, {0, 1, 0, 0}); // a->b
  LRelation ST = compose(S, T);
  CHECK(ST.at_i(0, 1) == 1);
  CHECK(ST.at_i(0, 0) == 0);
  CHECK(ST.at_i(1, 0) == 0);
}

TEST_CASE("inverse is an involution that swaps entries") {
  Fix f;
  LRelation R(f.L, f.xy, f.xy, {2, 1, 2, 0});
  LRelation Ri = inverse(R);
  CHECK(Ri.at_i(0, 1) == 2);
  CHECK(Ri.at_i(1, 0) == 1);
  CHECK(inverse(Ri) == R);
  LRelation sym(f.L, f.xy, f.xy, {2, 1, 1, 2});
  CHECK(inverse(sym) == sym);
}

TEST_CASE("inverse reverses composition on enumerated relations") {
  Fix f;
  Budget b;
  std::size_t count = relation_count(f.L, *f.xy, b.max_enumeration);
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    LRelation R = decode_relation(f.L, f.xy, rng.below(count));
    LRelation T = decode_relation(f.L, f.xy, rng.below(count));
    CHECK(inverse(compose(R, T)) == compose(inverse(T), inverse(R)));
  }
}

TEST_CASE("a-cuts") {
  Fix f;
  LSet A = f.set({2, 1}); // {1/x, 1/2/y}
  CHECK(a_cut(A, f.d("1")) == std::vector<int>{0});
  CHECK(a_cut(A, f.d("0")) == std::vector<int>{0, 1});
  CHECK(a_cut(A, f.d("1/2")) == std::vector<int>{0, 1});
  LSet crisp = f.set({2, 0});
  CHECK(a_cut(crisp, f.d("1")) == std::vector<int>{0});
}

TEST_CASE("scalar tensor and shift") {
  Fix f;
  LSet A = f.set({0, 1});
  CHECK(scalar_tensor(f.d("1"), A) == A);
  LSet shifted0 = scalar_shift(f.d("0"), A);
  CHECK(shifted0 == f.set({2, 2}));
  UniversePtr x1 = make_universe({"x"});
  LSet zero(f.L, x1, {0});
  CHECK(scalar_shift(f.d("1/2"), zero) == LSet(f.L, x1, {1}));
}

TEST_CASE("zadeh image") {
  Fix f;
  LSet A = f.set({1, 2});
  std::vector<int> identity{0, 1};
  CHECK(zadeh_image(identity, f.xy, A) == A);

  // constant map joins all memberships onto one fiber, rest is empty
  std::vector<int> constant{1, 1};
  LSet img = zadeh_image(constant, f.xy, A);
  CHECK(img == f.set({0, 2}));

  // injective map permutes memberships
  std::vector<int> swap{1, 0};
  CHECK(zadeh_image(swap, f.xy, A) == f.set({2, 1}));

  std::vector<int> partial{0};
  CHECK_THROWS_AS(zadeh_image(partial, f.xy, A), Error);
}

TEST_CASE("relation property classification") {
  Fix f;
  // biresiduum relation on a 3-element universe over LUK3
  ResiduatedLattice L = f.L;
  UniversePtr u3 = make_universe({"0", "1/2", "1"});
  std::vector<int> m(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i * 3 + j] = L.bires_i(i, j);
  PropertyReport pr = relation_properties(LRelation(L, u3, u3, m));
  CHECK(pr.reflexive);
  CHECK(pr.symmetric);
  CHECK(pr.transitive);
  CHECK(pr.equivalence);
  CHECK(pr.equality);

  // crisp total relation: an equivalence but not an equality
  PropertyReport total = relation_properties(
      LRelation::constant(L, u3, u3, L.top()));
  CHECK(total.equivalence);
  CHECK(!total.equality);
  REQUIRE(total.separation_witness.has_value());

  // half off the diagonal: transitive since 1/2 (x) 1/2 = 0, and an
  // L-equality because no off-diagonal entry reaches 1
  std::vector<int> half(9, 1);
  for (int i = 0; i < 3; ++i) half[i * 3 + i] = 2;
  PropertyReport hr = relation_properties(LRelation(L, u3, u3, half));
  CHECK(hr.tolerance);
  CHECK(hr.transitive);
  CHECK(hr.equivalence);
  CHECK(hr.equality);

  // a crisp non-transitive chain tolerance
  std::vector<int> chain(9, 0);
  for (int i = 0; i < 3; ++i) chain[i * 3 + i] = 2;
  chain[0 * 3 + 1] = chain[1 * 3 + 0] = 2;
  chain[1 * 3 + 2] = chain[2 * 3 + 1] = 2;
  PropertyReport cr = relation_properties(LRelation(L, u3, u3, chain));
  CHECK(cr.tolerance);
  CHECK(!cr.transitive);
  CHECK(!cr.equivalence);
  REQUIRE(cr.transitive_witness.has_value());
}

TEST_CASE("compatibility checks") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  UniversePtr u3 = make_universe({"0", "1/2", "1"});
  std::vector<int> approx(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) approx[i * 3 + j] = L.bires_i(i, j);
  LRelation eq(L, u3, u3, approx);

  // any L-set is compatible with the crisp identity
  LRelation id = LRelation::identity(L, u3);
  CHECK(is_compatible(LSet(L, u3, {2, 0, 1}), id).compatible);

  // the crisp chain tolerance is not compatible with the biresiduum
  std::vector<int> chain(9, 0);
  for (int i = 0; i < 3; ++i) chain[i * 3 + i] = 2;
  chain[0 * 3 + 1] = chain[1 * 3 + 0] = 2;
  chain[1 * 3 + 2] = chain[2 * 3 + 1] = 2;
  CompatResult cr = is_compatible(LRelation(L, u3, u3, chain), eq);
  CHECK(!cr.compatible);
  REQUIRE(cr.witness.has_value());
}

TEST_CASE("similarity is an L-equality on enumerated small powers") {
  for (int ln : {2, 3}) {
    ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, ln);
    for (int xs : {1, 2}) {
      UniversePtr uni =
          xs == 1 ? make_universe({"x"}) : make_universe({"x", "y"});
      std::size_t count = lset_count(L, *uni, 100000);
      std::vector<LSet> sets;
      for (std::size_t i = 0; i < count; ++i)
        sets.push_back(decode_lset(L, uni, i));
      for (const LSet& A : sets) CHECK(similarity(A, A) == L.top());
      for (const LSet& A : sets)
        for (const LSet& B : sets) {
          CHECK(similarity(A, B) == similarity(B, A));
          if (similarity(A, B) == L.top()) CHECK(A == B);
          for (const LSet& C : sets)
            CHECK(leq(tensor(similarity(A, B), similarity(B, C)),
                      similarity(A, C)));
        }
    }
  }
}

TEST_CASE("subsethood is top exactly on pointwise inclusion") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  UniversePtr uni = make_universe({"x", "y"});
  std::size_t count = lset_count(L, *uni, 1000);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      LSet A = decode_lset(L, uni, i);
      LSet B = decode_lset(L, uni, j);
      CHECK((subsethood(A, B) == L.top()) == pointwise_leq(A, B));
    }
}

TEST_CASE("empty universe folds follow the conventions") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  UniversePtr none = make_universe({});
  LSet A(L, none, {});
  CHECK(subsethood(A, A) == L.top());  // empty meet
  CHECK(compose(A, A) == L.bot());     // empty join
}

TEST_CASE("canonical enumeration round-trips") {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  UniversePtr uni = make_universe({"x", "y", "z"});
  std::size_t count = lset_count(L, *uni, 1000);
  CHECK(count == 27);
  for (std::size_t i = 0; i < count; ++i)
    CHECK(encode_lset(decode_lset(L, uni, i)) == i);
}
