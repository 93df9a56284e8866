#include "fuzzlat/dot.hpp"

#include <sstream>

namespace fuzzlat {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::string hasse_dot(const LOrderedSet& P, const std::string& graph_name) {
  const int n = P.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && P.leq1(u, v) && P.leq1(v, u))
        throw_input("hasse_dot: the 1-cut is not antisymmetric at (" +
                    P.element_name(u) + ", " + P.element_name(v) + ")");

  std::ostringstream os;
  os << "digraph \"" << escape(graph_name) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int u = 0; u < n; ++u)
    os << "  n" << u << " [label=\"" << escape(P.element_name(u)) << "\"];\n";
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !P.leq1(u, v)) continue;
      bool cover = true;
      for (int w = 0; w < n && cover; ++w)
        if (w != u && w != v && P.leq1(u, w) && P.leq1(w, v)) cover = false;
      if (!cover) continue;
      os << "  n" << u << " -> n" << v;
      int a = P.approx_i(u, v);
      if (a != P.lattice().bot_i() && a != P.lattice().top_i())
        os << " [label=\"" << escape(P.lattice().name(a)) << "\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace fuzzlat
