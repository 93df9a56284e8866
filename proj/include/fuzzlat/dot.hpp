#pragma once

#include <string>

#include "fuzzlat/order.hpp"

namespace fuzzlat {

// Hasse diagram of the 1-cut of the L-order, as a DOT digraph drawn bottom
// to top. Cover edges carry the L-equality degree of their endpoints as a
// label when it is neither 0 nor 1. Requires the 1-cut to be a partial
// order. Output is deterministic: nodes in carrier order, edges by index.
std::string hasse_dot(const LOrderedSet& P, const std::string& graph_name);

} // namespace fuzzlat
