#include "fuzzlat/generate.hpp"

#include <algorithm>

namespace fuzzlat {

LSet random_lset(const ResiduatedLattice& L, const UniversePtr& uni,
                 SplitMix64& rng) {
  std::vector<int> m(uni->size());
  for (int& d : m) d = int(rng.below(L.size()));
  return LSet(L, uni, std::move(m));
}

LRelation random_relation(const ResiduatedLattice& L, const UniversePtr& src,
                          const UniversePtr& tgt, SplitMix64& rng) {
  std::vector<int> m(std::size_t(src->size()) * tgt->size());
  for (int& d : m) d = int(rng.below(L.size()));
  return LRelation(L, src, tgt, std::move(m));
}

LRelation random_reflexive_symmetric(const ResiduatedLattice& L,
                                     const UniversePtr& uni, SplitMix64& rng) {
  int n = uni->size();
  std::vector<int> m(std::size_t(n) * n, L.top_i());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int d = int(rng.below(L.size()));
      m[std::size_t(x) * n + y] = d;
      m[std::size_t(y) * n + x] = d;
    }
  return LRelation(L, uni, uni, std::move(m));
}

std::vector<int> random_deflating_map(const LOrderedSet& P, SplitMix64& rng) {
  std::vector<int> f(P.size());
  for (int u = 0; u < P.size(); ++u) {
    std::vector<int> below;
    for (int w = 0; w < P.size(); ++w)
      if (P.leq1(w, u)) below.push_back(w);
    f[u] = below[std::size_t(rng.below(below.size()))];
  }
  return f;
}

std::vector<int> random_inflating_map(const LOrderedSet& P, SplitMix64& rng) {
  std::vector<int> g(P.size());
  for (int u = 0; u < P.size(); ++u) {
    std::vector<int> above;
    for (int w = 0; w < P.size(); ++w)
      if (P.leq1(u, w)) above.push_back(w);
    g[u] = above[std::size_t(rng.below(above.size()))];
  }
  return g;
}

std::vector<int> random_isotone_map(const LOrderedSet& P, SplitMix64& rng,
                                    int tries) {
  for (int t = 0; t < tries; ++t) {
    std::vector<int> f(P.size());
    for (int& v : f) v = int(rng.below(P.size()));
    if (is_isotone(P, P, f)) return f;
  }
  std::vector<int> id(P.size());
  for (int u = 0; u < P.size(); ++u) id[u] = u;
  return id;
}

namespace {

// Solve f(u) <= v = u <= g(v) for g given f; nullopt when f has no adjoint.
std::optional<std::vector<int>> solve_adjoint(const LOrderedSet& P,
                                              const std::vector<int>& f) {
  std::vector<int> g(P.size(), -1);
  for (int v = 0; v < P.size(); ++v) {
    for (int w = 0; w < P.size(); ++w) {
      bool ok = true;
      for (int u = 0; u < P.size() && ok; ++u)
        ok = P.order_i(f[u], v) == P.order_i(u, w);
      if (ok) {
        g[v] = w;
        break;
      }
    }
    if (g[v] < 0) return std::nullopt;
  }
  return g;
}

std::optional<int> cut_bottom(const LOrderedSet& P) {
  for (int u = 0; u < P.size(); ++u) {
    bool ok = true;
    for (int v = 0; v < P.size() && ok; ++v) ok = P.leq1(u, v);
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<int> cut_top(const LOrderedSet& P) {
  for (int u = 0; u < P.size(); ++u) {
    bool ok = true;
    for (int v = 0; v < P.size() && ok; ++v) ok = P.leq1(v, u);
    if (ok) return u;
  }
  return std::nullopt;
}

} // namespace

GaloisPair random_extensive_pair(const LOrderedSet& P, SplitMix64& rng,
                                 int tries) {
  for (int t = 0; t < tries; ++t) {
    std::vector<int> f = random_deflating_map(P, rng);
    if (!is_isotone(P, P, f)) continue;
    auto g = solve_adjoint(P, f);
    if (!g) continue;
    GaloisPair pair{std::move(f), std::move(*g)};
    if (is_isotone_galois(P, pair).ok && is_extensive(P, pair).extensive)
      return pair;
  }
  auto bot = cut_bottom(P);
  auto top = cut_top(P);
  if (bot && top && rng.below(2) == 0) {
    GaloisPair pair{std::vector<int>(P.size(), *bot),
                    std::vector<int>(P.size(), *top)};
    if (is_isotone_galois(P, pair).ok) return pair;
  }
  std::vector<int> id(P.size());
  for (int u = 0; u < P.size(); ++u) id[u] = u;
  return GaloisPair{id, id};
}

std::vector<GaloisPair> enumerate_galois_pairs(const LOrderedSet& P,
                                               const Budget& b,
                                               bool extensive_only) {
  int n = P.size();
  auto count = checked_pow(std::size_t(n), std::size_t(n));
  if (!count || *count > b.max_enumeration)
    throw_budget("enumeration of " + std::to_string(n) + "^" +
                 std::to_string(n) + " maps exceeds the budget of " +
                 std::to_string(b.max_enumeration));
  std::vector<GaloisPair> out;
  for (std::size_t idx = 0; idx < *count; ++idx) {
    std::vector<int> f(n);
    std::size_t rest = idx;
    for (int u = 0; u < n; ++u) {
      f[u] = int(rest % n);
      rest /= n;
    }
    auto g = solve_adjoint(P, f);
    if (!g) continue;
    GaloisPair pair{std::move(f), std::move(*g)};
    if (extensive_only && !is_extensive(P, pair).extensive) continue;
    out.push_back(std::move(pair));
  }
  return out;
}

namespace {

GaloisPair shift_pair(const LOrderedSet& P, int a) {
  const ResiduatedLattice& L = P.lattice();
  std::vector<int> f(P.size()), g(P.size());
  Degree ad = L.at(a);
  for (int i = 0; i < P.size(); ++i) {
    f[i] = P.encode(scalar_tensor(ad, P.decode(i)));
    g[i] = P.encode(scalar_shift(ad, P.decode(i)));
  }
  return GaloisPair{std::move(f), std::move(g)};
}

// per-trial brute sweeps stay cheap when the carrier's L-set space is small
constexpr std::size_t kPoolSetLimit = 1024;

void add_factors(std::vector<GeneratedModel>& pool, const LOrderedSet& base,
                 const std::string& base_name, const ResiduatedLattice& L,
                 int min_carrier, int max_carrier, const Budget& b) {
  for (int a = 0; a < L.size(); ++a) {
    if (a == L.top_i()) continue; // identity shift factors to the base itself
    GaloisPair pair = shift_pair(base, a);
    if (!is_isotone_galois(base, pair).ok) continue;
    LRelation tol = tolerance_from_pair(base, pair);
    FactorResult fr = factor(base, tol, b);
    int k = fr.factor.size();
    if (k < min_carrier || k > max_carrier) continue;
    auto cnt = checked_pow(std::size_t(L.size()), std::size_t(k));
    if (!cnt || *cnt > kPoolSetLimit) continue;
    pool.push_back(GeneratedModel{
        "factor(" + base_name + ", shift " + L.name(a) + ")", fr.factor});
  }
}

} // namespace

std::vector<GeneratedModel> search_model_pool(const ResiduatedLattice& L,
                                              int min_carrier, int max_carrier,
                                              const Budget& b,
                                              const std::string& label) {
  std::string prefix = label.empty() ? "" : label + ":";
  std::vector<GeneratedModel> pool;
  UniversePtr X1 = make_universe({"x"});
  LOrderedSet P1 = power_lattice(L, X1, b);
  if (P1.size() >= min_carrier && P1.size() <= max_carrier) {
    auto cnt = checked_pow(std::size_t(L.size()), std::size_t(P1.size()));
    if (cnt && *cnt <= kPoolSetLimit)
      pool.push_back(GeneratedModel{prefix + "power(x)", P1});
  }
  add_factors(pool, P1, prefix + "power(x)", L, min_carrier, max_carrier, b);

  auto carrier2 = checked_pow(std::size_t(L.size()), 2);
  if (carrier2 && *carrier2 <= b.max_enumeration) {
    UniversePtr X2 = make_universe({"x", "y"});
    LOrderedSet P2 = power_lattice(L, X2, b);
    if (P2.size() >= min_carrier && P2.size() <= max_carrier) {
      auto cnt = checked_pow(std::size_t(L.size()), std::size_t(P2.size()));
      if (cnt && *cnt <= kPoolSetLimit)
        pool.push_back(GeneratedModel{prefix + "power(x,y)", P2});
    }
    add_factors(pool, P2, prefix + "power(x,y)", L, min_carrier, max_carrier,
                b);
  }
  if (pool.empty())
    throw_input("no completely lattice models with carrier size in [" +
                std::to_string(min_carrier) + ", " +
                std::to_string(max_carrier) + "] could be generated");
  return pool;
}

namespace {

struct PreparedModel {
  const GeneratedModel* model = nullptr;
  std::vector<LSet> sets;
  std::vector<int> infs, sups;
};

PreparedModel prepare(const GeneratedModel& m) {
  PreparedModel p;
  p.model = &m;
  const ResiduatedLattice& L = m.P.lattice();
  std::size_t count = lset_count(L, m.P.carrier(), kPoolSetLimit);
  p.sets.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    p.sets.push_back(decode_lset(L, m.P.carrier_ptr(), i));
    auto in = infimum(m.P, p.sets.back());
    auto su = supremum(m.P, p.sets.back());
    if (!in || !su)
      throw_input("search pool model '" + m.name +
                  "' is not completely lattice");
    p.infs.push_back(*in);
    p.sups.push_back(*su);
  }
  return p;
}

// Both inf/sup clauses, with early exit on the first violation.
bool inf_sup_clauses_hold(const PreparedModel& pm, const LRelation& R) {
  const LOrderedSet& P = pm.model->P;
  const ResiduatedLattice& L = P.lattice();
  const int n = P.size();
  const std::size_t k = pm.sets.size();
  std::vector<int> rob(k * n), aor(k * n);
  for (std::size_t s = 0; s < k; ++s) {
    LSet f = compose(R, pm.sets[s]);
    LSet g = compose(pm.sets[s], R);
    for (int x = 0; x < n; ++x) {
      rob[s * n + x] = f.memb_i(x);
      aor[s * n + x] = g.memb_i(x);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      int fwd = L.top_i();
      for (int x = 0; x < n; ++x)
        fwd = L.meet_i(fwd, L.impl_i(pm.sets[i].memb_i(x), rob[j * n + x]));
      int bwd = L.top_i();
      for (int x = 0; x < n; ++x)
        bwd = L.meet_i(bwd, L.impl_i(pm.sets[j].memb_i(x), aor[i * n + x]));
      int p = L.meet_i(fwd, bwd);
      if (!L.leq_i(p, R.at_i(pm.infs[i], pm.infs[j]))) return false;
      if (!L.leq_i(p, R.at_i(pm.sups[i], pm.sups[j]))) return false;
    }
  return true;
}

} // namespace

json SearchVerdict::to_json() const {
  json cands = json::array();
  for (const SearchCandidate& c : candidates)
    cands.push_back(json{{"model", c.model},
                         {"relation", c.relation},
                         {"inf_clause_pass", c.inf_clause_pass},
                         {"sup_clause_pass", c.sup_clause_pass},
                         {"compatible", c.compatible},
                         {"compat_witness", c.compat_witness}});
  return json{{"seed", seed},
              {"trials", trials},
              {"models", models},
              {"clause_pass_count", clause_pass_count},
              {"complete_count", complete_count},
              {"counterexamples", cands},
              {"verdict", candidates.empty()
                              ? "no counterexample in " +
                                    std::to_string(trials) + " trials"
                              : "counterexample found"}};
}

SearchVerdict search_compat_counterexample(
    const std::vector<GeneratedModel>& pool, std::size_t trials,
    std::uint64_t seed, const Budget& b) {
  if (pool.empty()) throw_input("search needs a non-empty model pool");
  std::vector<PreparedModel> prepared;
  prepared.reserve(pool.size());
  for (const GeneratedModel& m : pool) prepared.push_back(prepare(m));

  SearchVerdict verdict;
  verdict.seed = seed;
  verdict.trials = trials;
  for (const GeneratedModel& m : pool) verdict.models.push_back(m.name);

  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PreparedModel& pm = prepared[std::size_t(rng.below(prepared.size()))];
    const LOrderedSet& P = pm.model->P;
    LRelation R =
        random_reflexive_symmetric(P.lattice(), P.carrier_ptr(), rng);
    if (!inf_sup_clauses_hold(pm, R)) continue;
    verdict.clause_pass_count++;
    CompatResult cr = is_compatible(R, P.approx());
    if (cr.compatible) {
      verdict.complete_count++;
      continue;
    }
    // re-verify the candidate from scratch before reporting it
    BruteCompletenessReport re = is_complete_relation_bruteforce(P, R, b);
    SearchCandidate cand;
    cand.model = pm.model->name;
    cand.relation = relation_to_json(R);
    cand.inf_clause_pass = re.inf_clause.pass;
    cand.sup_clause_pass = re.sup_clause.pass;
    cand.compatible = re.compatibility.pass;
    if (re.compatibility.witness)
      cand.compat_witness = re.compatibility.witness->detail;
    if (cand.inf_clause_pass && cand.sup_clause_pass && !cand.compatible)
      verdict.candidates.push_back(std::move(cand));
  }
  return verdict;
}

} // namespace fuzzlat
