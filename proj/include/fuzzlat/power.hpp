#pragma once

#include "fuzzlat/order.hpp"

namespace fuzzlat {

// Degree to which each element of A is related by R to an element of B:
// S(A, R o B).
Degree power_forward(const LRelation& R, const LSet& A, const LSet& B);
// The backward dual, S(B, A o R).
Degree power_backward(const LRelation& R, const LSet& A, const LSet& B);
// The power L-relation R+ = forward & backward.
Degree power(const LRelation& R, const LSet& A, const LSet& B);

// R+ materialized over an explicit list of L-sets, flattened row-major.
std::vector<int> power_table(const LRelation& R, std::span<const LSet> sets);

// Ordered set of convex L-sets under the power relations of P. Rejects a
// non-convex member with a witness.
LOrderedSet power_order_on_convex(const LOrderedSet& P, std::vector<LSet> M);

enum class IntervalRelation { Order, Approx };

// Endpoint formulas for power relations on intervals:
// order: (lo1 <= lo2) & (hi1 <= hi2); approx likewise with the L-equality.
Degree interval_power_shortcut(const LOrderedSet& P, const Interval& a,
                               const Interval& b, IntervalRelation which);

} // namespace fuzzlat
