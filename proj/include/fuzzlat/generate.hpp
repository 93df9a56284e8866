#pragma once

#include "fuzzlat/json_io.hpp"

namespace fuzzlat {

LSet random_lset(const ResiduatedLattice& L, const UniversePtr& uni,
                 SplitMix64& rng);
LRelation random_relation(const ResiduatedLattice& L, const UniversePtr& src,
                          const UniversePtr& tgt, SplitMix64& rng);
LRelation random_reflexive_symmetric(const ResiduatedLattice& L,
                                     const UniversePtr& uni, SplitMix64& rng);

// Random map f with f(u) <= u (resp. >= u) in the 1-cut, drawn uniformly
// from each element's cone.
std::vector<int> random_deflating_map(const LOrderedSet& P, SplitMix64& rng);
std::vector<int> random_inflating_map(const LOrderedSet& P, SplitMix64& rng);

// Random isotone map by rejection; falls back to the identity when the
// try budget runs out.
std::vector<int> random_isotone_map(const LOrderedSet& P, SplitMix64& rng,
                                    int tries = 256);

// Random extensive isotone Galois connection: draws a deflating isotone f,
// solves for its adjoint g, and validates; retries on failure. Always
// terminates: the identity pair and <const bot, const top> back the pool.
GaloisPair random_extensive_pair(const LOrderedSet& P, SplitMix64& rng,
                                 int tries = 64);

// Exhaustive enumeration of (extensive) isotone Galois connections on P by
// scanning all |U|^|U| maps f and solving each for its adjoint. Refuses
// past the budget.
std::vector<GaloisPair> enumerate_galois_pairs(const LOrderedSet& P,
                                               const Budget& b,
                                               bool extensive_only);

// Small completely lattice fixtures derived from a lattice: power lattices
// of one- and two-element universes and their factors by shift-pair
// tolerances <a (x) -, a -> ->, valid by construction.
struct GeneratedModel {
  std::string name;
  LOrderedSet P;
};

// label prefixes the model names so pools over different lattices stay
// distinguishable in one verdict.
std::vector<GeneratedModel> search_model_pool(const ResiduatedLattice& L,
                                              int min_carrier, int max_carrier,
                                              const Budget& b,
                                              const std::string& label = "");

// One reported candidate, re-verified from scratch.
struct SearchCandidate {
  std::string model;
  json relation;
  bool inf_clause_pass = false;
  bool sup_clause_pass = false;
  bool compatible = true;
  std::string compat_witness;
};

struct SearchVerdict {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<std::string> models;
  std::size_t clause_pass_count = 0; // relations passing both inf/sup clauses
  std::size_t complete_count = 0;    // of those, also compatible
  std::vector<SearchCandidate> candidates;

  bool found() const { return !candidates.empty(); }
  json to_json() const;
};

// Probes whether the compatibility condition can fail while both inf/sup
// clauses of completeness hold: draws random reflexive symmetric relations
// on the pool models, tests the two clauses by brute force without assuming
// compatibility, then tests compatibility separately. Deterministic in the
// seed.
SearchVerdict search_compat_counterexample(
    const std::vector<GeneratedModel>& pool, std::size_t trials,
    std::uint64_t seed, const Budget& b);

} // namespace fuzzlat
