#pragma once

#include "fuzzlat/order.hpp"

// Shared desk-scale fixtures.
namespace fixtures {

using namespace fuzzlat;

// The 3-element Lukasiewicz chain as a completely lattice L-ordered set:
// the power lattice of a singleton universe, carrier {0, 1/2, 1} with
// order u -> v and equality (u -> v) & (v -> u). Carrier index i is the
// degree index i.
inline LOrderedSet make_ul() {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3);
  return power_lattice(L, make_universe({"x"}), Budget{});
}

inline LOrderedSet make_godel_singleton(int n = 3) {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Godel, n);
  return power_lattice(L, make_universe({"x"}), Budget{});
}

inline LOrderedSet make_luk_singleton(int n) {
  ResiduatedLattice L = ResiduatedLattice::chain(ChainKind::Lukasiewicz, n);
  return power_lattice(L, make_universe({"x"}), Budget{});
}

inline LOrderedSet make_boolean_diamond() {
  ResiduatedLattice B = ResiduatedLattice::boolean();
  return power_lattice(B, make_universe({"x", "y"}), Budget{});
}

// L-set on the carrier from degree indices.
inline LSet carrier_set(const LOrderedSet& P, std::vector<int> m) {
  return LSet(P.lattice(), P.carrier_ptr(), std::move(m));
}

// Square relation on the carrier from row-major degree indices.
inline LRelation carrier_relation(const LOrderedSet& P, std::vector<int> m) {
  return LRelation(P.lattice(), P.carrier_ptr(), P.carrier_ptr(),
                   std::move(m));
}

// The crisp tolerance 0 ~ 1/2 ~ 1 without 0 ~ 1 on a 3-element carrier;
// reflexive and symmetric but not complete.
inline LRelation crisp_chain_tolerance(const LOrderedSet& P) {
  const int top = P.lattice().top_i(), bot = P.lattice().bot_i();
  std::vector<int> m(9, bot);
  for (int i = 0; i < 3; ++i) m[i * 3 + i] = top;
  m[0 * 3 + 1] = m[1 * 3 + 0] = top;
  m[1 * 3 + 2] = m[2 * 3 + 1] = top;
  return carrier_relation(P, std::move(m));
}

} // namespace fixtures
