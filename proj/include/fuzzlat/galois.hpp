#pragma once

#include "fuzzlat/order.hpp"

namespace fuzzlat {

// A pair of total maps f: U -> V, g: V -> U, candidates for an isotone
// Galois connection f(u) <= v = u <= g(v). Both maps are stored explicitly;
// validation asserts they determine each other instead of reconstructing one.
struct GaloisPair {
  std::vector<int> f, g;

  bool operator==(const GaloisPair&) const = default;
};

struct GaloisCheck {
  bool ok = true;
  // worst-defect witness: the (u, v) minimizing biresiduum(lhs, rhs),
  // first such pair in canonical scan order
  int worst_u = -1, worst_v = -1;
  int lhs = -1, rhs = -1; // degree indices of the two sides at the witness
};

GaloisCheck is_isotone_galois(const LOrderedSet& P, const LOrderedSet& Q,
                              const GaloisPair& pair);
GaloisCheck is_isotone_galois(const LOrderedSet& P, const GaloisPair& pair);

struct ExtensivityReport {
  bool extensive = false;
  bool f_deflating = false; // f(u) <= u in the 1-cut, all u
  bool g_inflating = false; // g(u) >= u in the 1-cut, all u
  int witness = -1;         // first element violating either condition
  // For a valid pair each condition implies the other; both are checked and
  // reported so a discrepancy exposes a non-Galois input.
  bool one_implied_other() const { return f_deflating == g_inflating; }
};

ExtensivityReport is_extensive(const LOrderedSet& P, const GaloisPair& pair);

struct FixpointSet {
  std::vector<std::pair<int, int>> pairs; // <u, v> with f(u) = v, g(v) = u
  LOrderedSet order;                      // inherited from the u-side

  int find(int u, int v) const;
};

// Fixpoints of a valid pair: exactly the u with g(f(u)) = u, emitted as
// <u, f(u)> with the inherited order. The u-side and v-side degrees must
// agree; disagreement means the pair was not a Galois connection.
FixpointSet fixpoints(const LOrderedSet& P, const LOrderedSet& Q,
                      const GaloisPair& pair);
FixpointSet fixpoints(const LOrderedSet& P, const GaloisPair& pair);

std::vector<int> closure_from_pair(const GaloisPair& pair);  // g after f
std::vector<int> interior_from_pair(const GaloisPair& pair); // f after g

AxiomReport verify_closure(const LOrderedSet& P, std::span<const int> C);
AxiomReport verify_interior(const LOrderedSet& P, std::span<const int> I);

// L-order and L-equality on isotone Galois connections between P and Q.
// Note the direction: pair1 <= pair2 iff f2 <= f1 and g1 <= g2 pointwise.
Degree igal_order(const LOrderedSet& P, const LOrderedSet& Q,
                  const GaloisPair& p1, const GaloisPair& p2);
Degree igal_approx(const LOrderedSet& P, const LOrderedSet& Q,
                   const GaloisPair& p1, const GaloisPair& p2);
Degree igal_order(const LOrderedSet& P, const GaloisPair& p1,
                  const GaloisPair& p2);
Degree igal_approx(const LOrderedSet& P, const GaloisPair& p1,
                   const GaloisPair& p2);

} // namespace fuzzlat
