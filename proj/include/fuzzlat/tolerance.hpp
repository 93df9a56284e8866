#pragma once

#include "fuzzlat/galois.hpp"
#include "fuzzlat/power.hpp"

namespace fuzzlat {

struct ClauseResult {
  bool pass = true;
  std::optional<Witness> witness;
};

// Completeness of an arbitrary relation, straight from the definition:
// compatibility with the L-equality plus the two power-relation bounds
// R+(V1,V2) <= R(inf V1, inf V2) and R+(V1,V2) <= R(sup V1, sup V2),
// swept over every pair of L-sets on the carrier. The compatibility clause
// is reported separately from the inf/sup clauses so a search can probe
// whether the latter ever hold without the former.
struct BruteCompletenessReport {
  ClauseResult compatibility;
  ClauseResult inf_clause;
  ClauseResult sup_clause;
  std::string mode;

  bool complete() const {
    return compatibility.pass && inf_clause.pass && sup_clause.pass;
  }
  bool inf_sup_pass() const { return inf_clause.pass && sup_clause.pass; }
};

BruteCompletenessReport is_complete_relation_bruteforce(const LOrderedSet& P,
                                                        const LRelation& R,
                                                        const Budget& b);

// The class of u: v -> (u ~ v).
LSet class_of(const LOrderedSet& P, const LRelation& tol, int u);

// (inf of class, sup of class); requires both to exist.
std::pair<int, int> tol_endpoints(const LOrderedSet& P, const LRelation& tol,
                                  int u);

// Endpoint maps of a complete tolerance, verified to form an extensive
// isotone Galois connection. Verification failure signals an incomplete
// input tolerance.
GaloisPair pair_from_tolerance(const LOrderedSet& P, const LRelation& tol);

// u ~ v = (f(u) <= v) & (v <= g(u)); asserts the endpoints of the result
// are exactly (f, g).
LRelation tolerance_from_pair(const LOrderedSet& P, const GaloisPair& pair);

struct FastCompletenessReport {
  bool complete = false;
  bool pair_valid = false;        // endpoint pair is extensive isotone Galois
  bool reconstruction_ok = false; // tol == tolerance_from_pair(endpoints)
  std::optional<GaloisCheck> galois_defect;
  std::optional<Witness> defect; // reconstruction mismatch pair
  GaloisPair endpoints;
};

// Representation-theorem route: compute endpoints, check the pair, rebuild
// the tolerance and compare. Sound and complete for reflexive symmetric
// relations on completely lattice carriers.
FastCompletenessReport is_complete_tolerance_fast(const LOrderedSet& P,
                                                  const LRelation& tol);

// B(x1) (x) B(x2) <= x1 ~ x2 for all pairs.
bool is_block(const LRelation& tol, const LSet& B);

enum class BlockMode { Fast, Brute };

// Fast: intervals of the endpoint-pair fixpoints (requires the fast
// completeness check to pass). Brute: enumerate all L-sets under the budget,
// keep blocks maximal under pointwise inclusion. Both sorted canonically.
std::vector<LSet> maximal_blocks(const LOrderedSet& P, const LRelation& tol,
                                 BlockMode mode, const Budget& b);

// The class of u as the interval between its endpoints; asserts pointwise
// equality with class_of.
Interval class_structure(const LOrderedSet& P, const LRelation& tol, int u);

struct FactorResult {
  LOrderedSet factor;            // carrier = maximal blocks, named "[lo,hi]"
  std::vector<Interval> blocks;  // aligned with the factor carrier
  FixpointSet fixpoints;
  std::vector<int> block_to_fixpoint; // isomorphism factor -> fixpoint set
  bool isomorphism_ok = false;
  bool completely_lattice_checked = false;
  bool completely_lattice = false;
};

// Factor of P by a complete tolerance: maximal blocks under the power
// relations, computed by the interval endpoint formulas; checks the stated
// isomorphism onto the fixpoint set, and complete-latticeness when the
// budget allows.
FactorResult factor(const LOrderedSet& P, const LRelation& tol,
                    const Budget& b);

// Tolerances ordered by graded subsethood as L-sets on U x U.
Degree ctol_order(const LRelation& t1, const LRelation& t2);
Degree ctol_approx(const LRelation& t1, const LRelation& t2);

// All complete tolerances on P: reflexive symmetric degree assignments
// filtered by the fast test. Throws past the budget.
std::vector<LRelation> enumerate_complete_tolerances(const LOrderedSet& P,
                                                     const Budget& b);

// Everything the CLI reports about one tolerance, verified complete first.
struct ToleranceAnalysis {
  LRelation tolerance;
  GaloisPair endpoints;
  FixpointSet fixpoints;
  FactorResult factorization;
};

ToleranceAnalysis analyze_tolerance(const LOrderedSet& P, const LRelation& tol,
                                    const Budget& b);

} // namespace fuzzlat
