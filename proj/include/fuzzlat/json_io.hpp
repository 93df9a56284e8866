#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "fuzzlat/tolerance.hpp"

namespace fuzzlat {

using json = nlohmann::json;

// Lattices: {"type":"chain","kind":"lukasiewicz"|"godel"|"goguen","n":k}
// or {"type":"tables","elements":[...],"meet":[[...]],...,"bot":"0","top":"1"}
// with matrix entries given by element name. Table input is verified.
ResiduatedLattice lattice_from_json(const json& j);
json lattice_to_json(const ResiduatedLattice& L); // always the tables form

// {"universe":[...],"membership":{"x":"1/2",...}}; omitted elements are 0.
// The universe may be left out when a default is supplied.
LSet lset_from_json(const json& j, const ResiduatedLattice& L,
                    const UniversePtr& default_universe = nullptr);
json lset_to_json(const LSet& A);

// {"source":[...],"target":[...],"matrix":[[...]]}; a bare matrix or an
// object without source/target uses the default universe on both sides.
LRelation relation_from_json(const json& j, const ResiduatedLattice& L,
                             const UniversePtr& default_universe = nullptr);
json relation_to_json(const LRelation& R);

// {"carrier":[...],"approx":[[...]],"order":[[...]]} or
// {"power_of":{"universe":[...]}}.
LOrderedSet ordered_set_from_json(const json& j, const ResiduatedLattice& L,
                                  const Budget& b);
json ordered_set_to_json(const LOrderedSet& P);

// {"f":{"u":"v",...},"g":{...}} over carrier element names.
GaloisPair galois_pair_from_json(const json& j, const LOrderedSet& P);
json galois_pair_to_json(const GaloisPair& p, const LOrderedSet& P);

// One self-contained document: a lattice plus named components sharing it.
struct ModelBundle {
  ResiduatedLattice lattice;
  std::optional<LOrderedSet> ordered_set;
  std::map<std::string, LSet> sets;
  std::map<std::string, LRelation> relations;
  std::map<std::string, GaloisPair> pairs;

  const LOrderedSet& require_ordered_set() const;
  const LSet& require_set(const std::string& name) const;
  const LRelation& require_relation(const std::string& name) const;
  const GaloisPair& require_pair(const std::string& name) const;
};

// Parses and fully validates: lattice axioms for table input, order axioms
// for explicit ordered sets (power lattices are correct by construction),
// universe/lattice agreement for every named component.
ModelBundle bundle_from_json(const json& j, const Budget& b);
ModelBundle load_model(const std::string& path, const Budget& b);
json bundle_to_json(const ModelBundle& mb);

json witness_to_json(const Witness& w);
json axiom_report_to_json(const AxiomReport& r);
json brute_report_to_json(const BruteCompletenessReport& r);
json fast_report_to_json(const FastCompletenessReport& r, const LOrderedSet& P);
json analysis_to_json(const ToleranceAnalysis& a, const LOrderedSet& P);

} // namespace fuzzlat
