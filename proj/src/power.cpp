#include "fuzzlat/power.hpp"

#include <sstream>

namespace fuzzlat {

Degree power_forward(const LRelation& R, const LSet& A, const LSet& B) {
  if (!R.square()) throw_input("power relations need a square base relation");
  return subsethood(A, compose(R, B));
}

Degree power_backward(const LRelation& R, const LSet& A, const LSet& B) {
  if (!R.square()) throw_input("power relations need a square base relation");
  return subsethood(B, compose(A, R));
}

Degree power(const LRelation& R, const LSet& A, const LSet& B) {
  return meet(power_forward(R, A, B), power_backward(R, A, B));
}

std::vector<int> power_table(const LRelation& R, std::span<const LSet> sets) {
  const ResiduatedLattice& L = R.lattice();
  const int k = int(sets.size());
  const int n = R.rows();
  // R o B and A o R for every member, then the two subsethood folds
  std::vector<int> rob(std::size_t(k) * n), aor(std::size_t(k) * n);
  for (int s = 0; s < k; ++s) {
    LSet f = compose(R, sets[s]);
    LSet g = compose(sets[s], R);
    for (int x = 0; x < n; ++x) {
      rob[std::size_t(s) * n + x] = f.memb_i(x);
      aor[std::size_t(s) * n + x] = g.memb_i(x);
    }
  }
  std::vector<int> out(std::size_t(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int fwd = L.top_i();
      for (int x = 0; x < n; ++x)
        fwd = L.meet_i(fwd,
                       L.impl_i(sets[a].memb_i(x), rob[std::size_t(b) * n + x]));
      int bwd = L.top_i();
      for (int x = 0; x < n; ++x)
        bwd = L.meet_i(bwd,
                       L.impl_i(sets[b].memb_i(x), aor[std::size_t(a) * n + x]));
      out[std::size_t(a) * k + b] = L.meet_i(fwd, bwd);
    }
  return out;
}

LOrderedSet power_order_on_convex(const LOrderedSet& P, std::vector<LSet> M) {
  for (std::size_t i = 0; i < M.size(); ++i)
    if (!is_convex(P, M[i]))
      throw_input("power_order_on_convex: member " + std::to_string(i) + " = " +
                  M[i].to_string() + " is not convex");
  const ResiduatedLattice& L = P.lattice();
  std::vector<std::string> names;
  names.reserve(M.size());
  for (const LSet& m : M) names.push_back(m.to_string());
  UniversePtr carrier = make_universe(std::move(names));
  std::vector<int> ord = power_table(P.order(), M);
  std::vector<int> app = power_table(P.approx(), M);
  return LOrderedSet(L, carrier, LRelation(L, carrier, carrier, std::move(app)),
                     LRelation(L, carrier, carrier, std::move(ord)));
}

Degree interval_power_shortcut(const LOrderedSet& P, const Interval& a,
                               const Interval& b, IntervalRelation which) {
  const ResiduatedLattice& L = P.lattice();
  const LRelation& rel =
      which == IntervalRelation::Order ? P.order() : P.approx();
  return L.at(L.meet_i(rel.at_i(a.lo, b.lo), rel.at_i(a.hi, b.hi)));
}

} // namespace fuzzlat
