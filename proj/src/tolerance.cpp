#include "fuzzlat/tolerance.hpp"

#include <algorithm>

namespace fuzzlat {

namespace {

void require_square_on_carrier(const LOrderedSet& P, const LRelation& R,
                               const char* what) {
  if (!R.square()) throw_input(std::string(what) + ": relation must be square");
  if (!same_universe(R.source_ptr(), P.carrier_ptr()))
    throw_input(std::string(what) + ": relation does not live on the carrier");
  if (!P.lattice().same_instance(R.lattice()))
    throw_input(std::string(what) + ": lattice mismatch");
}

void require_tolerance(const LOrderedSet& P, const LRelation& R,
                       const char* what) {
  require_square_on_carrier(P, R, what);
  PropertyReport pr = relation_properties(R);
  if (!pr.tolerance)
    throw_input(std::string(what) +
                ": relation is not a tolerance (reflexive and symmetric)");
}

} // namespace

BruteCompletenessReport is_complete_relation_bruteforce(const LOrderedSet& P,
                                                        const LRelation& R,
                                                        const Budget& b) {
  require_square_on_carrier(P, R, "is_complete_relation_bruteforce");
  const ResiduatedLattice& L = P.lattice();
  BruteCompletenessReport rep;

  CompatResult cr = is_compatible(R, P.approx());
  rep.compatibility = {cr.compatible, cr.witness};

  std::size_t count = lset_count(L, P.carrier(), b.max_enumeration);
  std::vector<LSet> sets;
  sets.reserve(count);
  std::vector<int> infs(count), sups(count);
  for (std::size_t i = 0; i < count; ++i) {
    sets.push_back(decode_lset(L, P.carrier_ptr(), i));
    auto in = infimum(P, sets.back());
    auto su = supremum(P, sets.back());
    if (!in || !su)
      throw_input("is_complete_relation_bruteforce: carrier is not completely "
                  "lattice (no inf/sup for " + sets.back().to_string() + ")");
    infs[i] = *in;
    sups[i] = *su;
  }
  rep.mode = "exhaustive(" + std::to_string(count) + "^2 pairs)";

  std::vector<int> plus = power_table(R, sets);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      int p = plus[i * count + j];
      if (rep.inf_clause.pass &&
          !L.leq_i(p, R.at_i(infs[i], infs[j]))) {
        rep.inf_clause.pass = false;
        rep.inf_clause.witness = Witness{
            {sets[i].to_string(), sets[j].to_string()},
            "R+(V1,V2) = " + L.name(p) + " !<= R(inf V1, inf V2) = " +
                L.name(R.at_i(infs[i], infs[j])) + " at V1 = " +
                sets[i].to_string() + ", V2 = " + sets[j].to_string()};
      }
      if (rep.sup_clause.pass &&
          !L.leq_i(p, R.at_i(sups[i], sups[j]))) {
        rep.sup_clause.pass = false;
        rep.sup_clause.witness = Witness{
            {sets[i].to_string(), sets[j].to_string()},
            "R+(V1,V2) = " + L.name(p) + " !<= R(sup V1, sup V2) = " +
                L.name(R.at_i(sups[i], sups[j])) + " at V1 = " +
                sets[i].to_string() + ", V2 = " + sets[j].to_string()};
      }
      if (!rep.inf_clause.pass && !rep.sup_clause.pass) return rep;
    }
  return rep;
}

LSet class_of(const LOrderedSet& P, const LRelation& tol, int u) {
  require_square_on_carrier(P, tol, "class_of");
  if (u < 0 || u >= P.size()) throw_input("class_of: element out of range");
  std::vector<int> m(P.size());
  for (int v = 0; v < P.size(); ++v) m[v] = tol.at_i(u, v);
  return LSet(P.lattice(), P.carrier_ptr(), std::move(m));
}

std::pair<int, int> tol_endpoints(const LOrderedSet& P, const LRelation& tol,
                                  int u) {
  LSet cls = class_of(P, tol, u);
  auto lo = infimum(P, cls);
  auto hi = supremum(P, cls);
  if (!lo || !hi)
    throw_input("tol_endpoints: class of " + P.element_name(u) +
                " has no infimum or supremum; the carrier is not completely "
                "lattice");
  return {*lo, *hi};
}

GaloisPair pair_from_tolerance(const LOrderedSet& P, const LRelation& tol) {
  require_tolerance(P, tol, "pair_from_tolerance");
  GaloisPair pair;
  pair.f.resize(P.size());
  pair.g.resize(P.size());
  for (int u = 0; u < P.size(); ++u) {
    auto [lo, hi] = tol_endpoints(P, tol, u);
    pair.f[u] = lo;
    pair.g[u] = hi;
  }
  GaloisCheck gc = is_isotone_galois(P, pair);
  if (!gc.ok)
    throw_input("pair_from_tolerance: endpoint maps are not an isotone Galois "
                "connection (the tolerance is not complete); defect at (" +
                P.element_name(gc.worst_u) + ", " + P.element_name(gc.worst_v) +
                ")");
  ExtensivityReport er = is_extensive(P, pair);
  if (!er.extensive)
    throw_input("pair_from_tolerance: endpoint maps are not extensive (the "
                "tolerance is not complete)");
  return pair;
}

LRelation tolerance_from_pair(const LOrderedSet& P, const GaloisPair& pair) {
  GaloisCheck gc = is_isotone_galois(P, pair);
  if (!gc.ok)
    throw_input("tolerance_from_pair: not an isotone Galois connection");
  ExtensivityReport er = is_extensive(P, pair);
  if (!er.extensive) throw_input("tolerance_from_pair: pair is not extensive");

  const ResiduatedLattice& L = P.lattice();
  int n = P.size();
  std::vector<int> m(std::size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      m[std::size_t(u) * n + v] =
          L.meet_i(P.order_i(pair.f[u], v), P.order_i(v, pair.g[u]));
  LRelation tol(L, P.carrier_ptr(), P.carrier_ptr(), std::move(m));

  for (int u = 0; u < n; ++u) {
    auto [lo, hi] = tol_endpoints(P, tol, u);
    if (lo != pair.f[u] || hi != pair.g[u])
      throw_input("tolerance_from_pair: endpoints of the induced tolerance "
                  "do not reproduce the pair at " + P.element_name(u));
  }
  return tol;
}

FastCompletenessReport is_complete_tolerance_fast(const LOrderedSet& P,
                                                  const LRelation& tol) {
  require_tolerance(P, tol, "is_complete_tolerance_fast");
  const ResiduatedLattice& L = P.lattice();
  FastCompletenessReport rep;
  rep.endpoints.f.resize(P.size());
  rep.endpoints.g.resize(P.size());
  for (int u = 0; u < P.size(); ++u) {
    auto [lo, hi] = tol_endpoints(P, tol, u);
    rep.endpoints.f[u] = lo;
    rep.endpoints.g[u] = hi;
  }

  GaloisCheck gc = is_isotone_galois(P, rep.endpoints);
  ExtensivityReport er = is_extensive(P, rep.endpoints);
  rep.pair_valid = gc.ok && er.extensive;
  if (!gc.ok) rep.galois_defect = gc;

  rep.reconstruction_ok = true;
  int n = P.size();
  for (int u = 0; u < n && rep.reconstruction_ok; ++u)
    for (int v = 0; v < n && rep.reconstruction_ok; ++v) {
      int rebuilt = L.meet_i(P.order_i(rep.endpoints.f[u], v),
                             P.order_i(v, rep.endpoints.g[u]));
      if (rebuilt != tol.at_i(u, v)) {
        rep.reconstruction_ok = false;
        rep.defect = Witness{
            {P.element_name(u), P.element_name(v)},
            "(u~ <= v) & (v <= u^~) = " + L.name(rebuilt) + " but (u ~ v) = " +
                L.name(tol.at_i(u, v)) + " at (u,v) = (" + P.element_name(u) +
                ", " + P.element_name(v) + ")"};
      }
    }

  rep.complete = rep.pair_valid && rep.reconstruction_ok;
  return rep;
}

bool is_block(const LRelation& tol, const LSet& B) {
  const ResiduatedLattice& L = tol.lattice();
  int n = B.size();
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (!L.leq_i(L.tensor_i(B.memb_i(x), B.memb_i(y)), tol.at_i(x, y)))
        return false;
  return true;
}

namespace {

std::vector<LSet> blocks_fast(const LOrderedSet& P, const LRelation& tol) {
  FastCompletenessReport rep = is_complete_tolerance_fast(P, tol);
  if (!rep.complete)
    throw_input("maximal_blocks: tolerance is not complete" +
                (rep.defect ? " (" + rep.defect->detail + ")" : std::string()));
  FixpointSet fps = fixpoints(P, rep.endpoints);
  std::vector<LSet> out;
  out.reserve(fps.pairs.size());
  for (auto [u, v] : fps.pairs) out.push_back(interval(P, v, u).membership);
  return out;
}

std::vector<LSet> blocks_brute(const LOrderedSet& P, const LRelation& tol,
                               const Budget& b) {
  const ResiduatedLattice& L = P.lattice();
  std::size_t count = lset_count(L, P.carrier(), b.max_enumeration);
  std::vector<LSet> blocks;
  for (std::size_t i = 0; i < count; ++i) {
    LSet B = decode_lset(L, P.carrier_ptr(), i);
    if (is_block(tol, B)) blocks.push_back(std::move(B));
  }
  std::vector<LSet> maximal;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool strictly_below = false;
    for (std::size_t j = 0; j < blocks.size() && !strictly_below; ++j)
      if (i != j && pointwise_leq(blocks[i], blocks[j]) &&
          !(blocks[i] == blocks[j]))
        strictly_below = true;
    if (!strictly_below) maximal.push_back(blocks[i]);
  }
  return maximal;
}

void sort_canonically(std::vector<LSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const LSet& a, const LSet& b) {
    return encode_lset(a) < encode_lset(b);
  });
}

} // namespace

std::vector<LSet> maximal_blocks(const LOrderedSet& P, const LRelation& tol,
                                 BlockMode mode, const Budget& b) {
  require_tolerance(P, tol, "maximal_blocks");
  std::vector<LSet> out =
      mode == BlockMode::Fast ? blocks_fast(P, tol) : blocks_brute(P, tol, b);
  sort_canonically(out);
  return out;
}

Interval class_structure(const LOrderedSet& P, const LRelation& tol, int u) {
  auto [lo, hi] = tol_endpoints(P, tol, u);
  Interval iv = interval(P, lo, hi);
  if (!(iv.membership == class_of(P, tol, u)))
    throw_input("class_structure: the class of " + P.element_name(u) +
                " is not the interval between its endpoints; the tolerance "
                "is not complete");
  return iv;
}

FactorResult factor(const LOrderedSet& P, const LRelation& tol,
                    const Budget& b) {
  require_tolerance(P, tol, "factor");
  FastCompletenessReport rep = is_complete_tolerance_fast(P, tol);
  if (!rep.complete)
    throw_input("factor: tolerance is not complete" +
                (rep.defect ? " (" + rep.defect->detail + ")" : std::string()));

  FactorResult res{.factor = P,
                   .blocks = {},
                   .fixpoints = fixpoints(P, rep.endpoints),
                   .block_to_fixpoint = {},
                   .isomorphism_ok = false,
                   .completely_lattice_checked = false,
                   .completely_lattice = false};

  // blocks in canonical order, each tied to its fixpoint
  struct Entry {
    Interval iv;
    int fixpoint;
    std::size_t key;
  };
  std::vector<Entry> entries;
  entries.reserve(res.fixpoints.pairs.size());
  for (std::size_t k = 0; k < res.fixpoints.pairs.size(); ++k) {
    auto [u, v] = res.fixpoints.pairs[k];
    Interval iv = interval(P, v, u);
    std::size_t key = encode_lset(iv.membership);
    entries.push_back(Entry{std::move(iv), int(k), key});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });

  const ResiduatedLattice& L = P.lattice();
  int n = int(entries.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (const Entry& e : entries)
    names.push_back("[" + P.element_name(e.iv.lo) + "," +
                    P.element_name(e.iv.hi) + "]");
  UniversePtr carrier = make_universe(std::move(names));

  std::vector<int> ord(std::size_t(n) * n), app(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ord[std::size_t(i) * n + j] =
          interval_power_shortcut(P, entries[i].iv, entries[j].iv,
                                  IntervalRelation::Order)
              .index;
      app[std::size_t(i) * n + j] =
          interval_power_shortcut(P, entries[i].iv, entries[j].iv,
                                  IntervalRelation::Approx)
              .index;
    }
  res.factor =
      LOrderedSet(L, carrier, LRelation(L, carrier, carrier, std::move(app)),
                  LRelation(L, carrier, carrier, std::move(ord)));
  for (Entry& e : entries) {
    res.blocks.push_back(std::move(e.iv));
    res.block_to_fixpoint.push_back(e.fixpoint);
  }

  res.isomorphism_ok =
      is_isomorphism(res.factor, res.fixpoints.order, res.block_to_fixpoint);

  auto carrier_size = checked_pow(std::size_t(L.size()), std::size_t(n));
  if (carrier_size && *carrier_size <= b.max_enumeration) {
    res.completely_lattice_checked = true;
    res.completely_lattice = is_completely_lattice(res.factor, b).complete;
  }
  return res;
}

Degree ctol_order(const LRelation& t1, const LRelation& t2) {
  if (!same_universe(t1.source_ptr(), t2.source_ptr()) ||
      !same_universe(t1.target_ptr(), t2.target_ptr()))
    throw_input("ctol_order: relations live on different universes");
  if (!t1.lattice().same_instance(t2.lattice()))
    throw_input("ctol_order: lattice mismatch");
  const ResiduatedLattice& L = t1.lattice();
  int acc = L.top_i();
  for (std::size_t k = 0; k < t1.entries().size(); ++k)
    acc = L.meet_i(acc, L.impl_i(t1.entries()[k], t2.entries()[k]));
  return L.at(acc);
}

Degree ctol_approx(const LRelation& t1, const LRelation& t2) {
  return meet(ctol_order(t1, t2), ctol_order(t2, t1));
}

std::vector<LRelation> enumerate_complete_tolerances(const LOrderedSet& P,
                                                     const Budget& b) {
  const ResiduatedLattice& L = P.lattice();
  int n = P.size();
  std::size_t free_entries = std::size_t(n) * (n - 1) / 2;
  auto count = checked_pow(std::size_t(L.size()), free_entries);
  if (!count || *count > b.max_enumeration)
    throw_budget("enumeration of " + std::to_string(L.size()) + "^" +
                 std::to_string(free_entries) +
                 " reflexive symmetric candidates exceeds the budget of " +
                 std::to_string(b.max_enumeration));

  std::vector<LRelation> found;
  for (std::size_t idx = 0; idx < *count; ++idx) {
    std::vector<int> m(std::size_t(n) * n, L.top_i());
    std::size_t rest = idx;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        int d = int(rest % L.size());
        rest /= L.size();
        m[std::size_t(x) * n + y] = d;
        m[std::size_t(y) * n + x] = d;
      }
    LRelation cand(L, P.carrier_ptr(), P.carrier_ptr(), std::move(m));
    if (is_complete_tolerance_fast(P, cand).complete)
      found.push_back(std::move(cand));
  }
  return found;
}

ToleranceAnalysis analyze_tolerance(const LOrderedSet& P, const LRelation& tol,
                                    const Budget& b) {
  GaloisPair endpoints = pair_from_tolerance(P, tol);
  FastCompletenessReport rep = is_complete_tolerance_fast(P, tol);
  if (!rep.complete)
    throw_input("analyze_tolerance: tolerance is not complete" +
                (rep.defect ? " (" + rep.defect->detail + ")" : std::string()));
  return ToleranceAnalysis{tol, std::move(endpoints), fixpoints(P, rep.endpoints),
                           factor(P, tol, b)};
}

} // namespace fuzzlat
