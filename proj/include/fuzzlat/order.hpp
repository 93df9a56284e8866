#pragma once

#include <optional>
#include <span>

#include "fuzzlat/budget.hpp"
#include "fuzzlat/fuzz.hpp"

namespace fuzzlat {

// Carrier with an L-equality and an L-order over one lattice. Construction
// does not verify the axioms; verify_order_axioms reports on them.
class LOrderedSet {
public:
  LOrderedSet(ResiduatedLattice lat, UniversePtr carrier, LRelation approx,
              LRelation order);

  const ResiduatedLattice& lattice() const { return lat_; }
  const Universe& carrier() const { return *carrier_; }
  const UniversePtr& carrier_ptr() const { return carrier_; }
  const LRelation& approx() const { return approx_; }
  const LRelation& order() const { return order_; }
  int size() const { return carrier_->size(); }

  int approx_i(int u, int v) const { return approx_.at_i(u, v); }
  int order_i(int u, int v) const { return order_.at_i(u, v); }
  // the classical order: 1-cut of the L-order
  bool leq1(int u, int v) const { return order_i(u, v) == lat_.top_i(); }

  const std::string& element_name(int u) const {
    return carrier_->elements[u];
  }

  // Power-lattice provenance: set when this ordered set is <L^X,S> for a
  // base universe X; carrier index i decodes to the i-th canonical L-set.
  bool is_power() const { return base_ != nullptr; }
  const UniversePtr& base_universe() const { return base_; }
  LSet decode(int carrier_index) const;
  int encode(const LSet& member) const;

private:
  friend LOrderedSet power_lattice(const ResiduatedLattice&, UniversePtr,
                                   const Budget&);
  ResiduatedLattice lat_;
  UniversePtr carrier_;
  LRelation approx_, order_;
  UniversePtr base_;
};

// Exhaustive check of the five defining conditions: approx is an L-equality,
// order is reflexive, transitive, approx-compatible, and antisymmetric.
AxiomReport verify_order_axioms(const LOrderedSet& P);

LSet lower_set(const LOrderedSet& P, const LSet& V);
LSet upper_set(const LOrderedSet& P, const LSet& V);
LSet lower_cone(const LOrderedSet& P, const LSet& V);
LSet upper_cone(const LOrderedSet& P, const LSet& V);

LSet singleton(const LOrderedSet& P, int u);

struct Interval {
  int lo = -1;
  int hi = -1;
  LSet membership;
};

// Requires lo <= hi in the 1-cut; membership is UpperCone{lo} & LowerCone{hi}.
Interval interval(const LOrderedSet& P, int lo, int hi);

// V equals the intersection of its lower and upper set.
bool is_convex(const LOrderedSet& P, const LSet& V);

// Definitional infimum: the unique u with LV(u) & U(LV)(u) = 1, if any.
// Two qualifying elements mean the order axioms are violated (input error).
std::optional<int> infimum(const LOrderedSet& P, const LSet& V);
std::optional<int> supremum(const LOrderedSet& P, const LSet& V);

std::optional<int> minimum(const LOrderedSet& P, const LSet& V);
std::optional<int> maximum(const LOrderedSet& P, const LSet& V);

struct CompletelyLatticeResult {
  bool complete = true;
  std::optional<LSet> witness; // first L-set lacking an infimum or supremum
};

// Enumerates every L-set on the carrier; refuses past the budget.
CompletelyLatticeResult is_completely_lattice(const LOrderedSet& P,
                                              const Budget& b);

// <L^X, similarity, subsethood> with the canonical carrier enumeration.
// Carrier elements are named by their membership tuples, e.g. "{0,1/2}".
LOrderedSet power_lattice(const ResiduatedLattice& L, UniversePtr X,
                          const Budget& b);

// Closed-form infimum/supremum of a power lattice, as an L-set on the base
// universe: (inf V)(x) = meet over carrier W of V(W) -> W(x), dually with
// join and tensor for sup. V is an L-set on the carrier.
LSet power_inf(const LOrderedSet& P, const LSet& V);
LSet power_sup(const LOrderedSet& P, const LSet& V);

// f maps P-carrier indices to Q-carrier indices.
bool is_isotone(const LOrderedSet& P, const LOrderedSet& Q,
                std::span<const int> f);
bool is_isomorphism(const LOrderedSet& P, const LOrderedSet& Q,
                    std::span<const int> f);

// Zadeh image of an L-set of carrier elements under a carrier map.
LSet carrier_image(std::span<const int> f, const LOrderedSet& target,
                   const LSet& V);

} // namespace fuzzlat
