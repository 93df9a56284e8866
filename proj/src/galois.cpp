#include "fuzzlat/galois.hpp"

namespace fuzzlat {

namespace {

void require_pair_shape(const LOrderedSet& P, const LOrderedSet& Q,
                        const GaloisPair& pair) {
  if (int(pair.f.size()) != P.size() || int(pair.g.size()) != Q.size())
    throw_input("galois pair maps are not total");
  for (int v : pair.f)
    if (v < 0 || v >= Q.size()) throw_input("f value out of range");
  for (int u : pair.g)
    if (u < 0 || u >= P.size()) throw_input("g value out of range");
}

} // namespace

GaloisCheck is_isotone_galois(const LOrderedSet& P, const LOrderedSet& Q,
                              const GaloisPair& pair) {
  require_pair_shape(P, Q, pair);
  const ResiduatedLattice& L = P.lattice();
  GaloisCheck res;
  int worst = L.top_i();
  for (int u = 0; u < P.size(); ++u)
    for (int v = 0; v < Q.size(); ++v) {
      int lhs = Q.order_i(pair.f[u], v);
      int rhs = P.order_i(u, pair.g[v]);
      if (lhs != rhs) {
        res.ok = false;
        int b = L.bires_i(lhs, rhs);
        if (res.worst_u < 0 || (L.leq_i(b, worst) && b != worst)) {
          worst = b;
          res.worst_u = u;
          res.worst_v = v;
          res.lhs = lhs;
          res.rhs = rhs;
        }
      }
    }
  return res;
}

GaloisCheck is_isotone_galois(const LOrderedSet& P, const GaloisPair& pair) {
  return is_isotone_galois(P, P, pair);
}

ExtensivityReport is_extensive(const LOrderedSet& P, const GaloisPair& pair) {
  require_pair_shape(P, P, pair);
  ExtensivityReport rep;
  rep.f_deflating = true;
  rep.g_inflating = true;
  for (int u = 0; u < P.size(); ++u) {
    bool fd = P.leq1(pair.f[u], u);
    bool gi = P.leq1(u, pair.g[u]);
    if ((!fd || !gi) && rep.witness < 0) rep.witness = u;
    rep.f_deflating = rep.f_deflating && fd;
    rep.g_inflating = rep.g_inflating && gi;
  }
  rep.extensive = rep.f_deflating && rep.g_inflating;
  return rep;
}

int FixpointSet::find(int u, int v) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first == u && pairs[i].second == v) return int(i);
  return -1;
}

FixpointSet fixpoints(const LOrderedSet& P, const LOrderedSet& Q,
                      const GaloisPair& pair) {
  require_pair_shape(P, Q, pair);
  const ResiduatedLattice& L = P.lattice();
  std::vector<std::pair<int, int>> fps;
  for (int u = 0; u < P.size(); ++u)
    if (pair.g[pair.f[u]] == u) fps.emplace_back(u, pair.f[u]);

  // inherited relations; u-side and v-side must agree for a genuine pair
  int k = int(fps.size());
  std::vector<int> ord(std::size_t(k) * k), app(std::size_t(k) * k);
  std::vector<std::string> names;
  names.reserve(k);
  for (auto [u, v] : fps)
    names.push_back("(" + P.element_name(u) + "," + Q.element_name(v) + ")");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int du = P.order_i(fps[i].first, fps[j].first);
      int dv = Q.order_i(fps[i].second, fps[j].second);
      if (du != dv)
        throw_input("corrupted pair: fixpoint order disagrees between sides "
                    "at (" + names[i] + ", " + names[j] + "); the maps are "
                    "not an isotone Galois connection");
      ord[std::size_t(i) * k + j] = du;
      app[std::size_t(i) * k + j] = P.approx_i(fps[i].first, fps[j].first);
    }
  UniversePtr carrier = make_universe(std::move(names));
  LOrderedSet order(L, carrier, LRelation(L, carrier, carrier, std::move(app)),
                    LRelation(L, carrier, carrier, std::move(ord)));
  return FixpointSet{std::move(fps), std::move(order)};
}

FixpointSet fixpoints(const LOrderedSet& P, const GaloisPair& pair) {
  return fixpoints(P, P, pair);
}

std::vector<int> closure_from_pair(const GaloisPair& pair) {
  std::vector<int> c(pair.f.size());
  for (std::size_t u = 0; u < pair.f.size(); ++u) c[u] = pair.g[pair.f[u]];
  return c;
}

std::vector<int> interior_from_pair(const GaloisPair& pair) {
  std::vector<int> c(pair.g.size());
  for (std::size_t v = 0; v < pair.g.size(); ++v) c[v] = pair.f[pair.g[v]];
  return c;
}

namespace {

AxiomReport verify_operator(const LOrderedSet& P, std::span<const int> C,
                            bool closure) {
  if (int(C.size()) != P.size()) throw_input("operator map is not total");
  for (int v : C)
    if (v < 0 || v >= P.size()) throw_input("operator value out of range");
  const ResiduatedLattice& L = P.lattice();
  AxiomReport r;

  {
    AxiomCheck c{closure ? "inflationary" : "deflationary", true, std::nullopt};
    for (int u = 0; u < P.size() && c.pass; ++u) {
      bool ok = closure ? P.leq1(u, C[u]) : P.leq1(C[u], u);
      if (!ok) {
        c.pass = false;
        c.witness = Witness{{P.element_name(u)},
                            "fails at " + P.element_name(u) + " -> " +
                                P.element_name(C[u])};
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"idempotent", true, std::nullopt};
    for (int u = 0; u < P.size() && c.pass; ++u)
      if (C[C[u]] != C[u]) {
        c.pass = false;
        c.witness = Witness{{P.element_name(u)},
                            "C(C(" + P.element_name(u) + ")) = " +
                                P.element_name(C[C[u]]) + " != C(u) = " +
                                P.element_name(C[u])};
      }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"isotone", true, std::nullopt};
    for (int u = 0; u < P.size() && c.pass; ++u)
      for (int v = 0; v < P.size() && c.pass; ++v)
        if (!L.leq_i(P.order_i(u, v), P.order_i(C[u], C[v]))) {
          c.pass = false;
          c.witness = Witness{{P.element_name(u), P.element_name(v)},
                              "isotony fails at (" + P.element_name(u) + "," +
                                  P.element_name(v) + ")"};
        }
    r.checks.push_back(std::move(c));
  }

  return r;
}

} // namespace

AxiomReport verify_closure(const LOrderedSet& P, std::span<const int> C) {
  return verify_operator(P, C, true);
}

AxiomReport verify_interior(const LOrderedSet& P, std::span<const int> I) {
  return verify_operator(P, I, false);
}

Degree igal_order(const LOrderedSet& P, const LOrderedSet& Q,
                  const GaloisPair& p1, const GaloisPair& p2) {
  require_pair_shape(P, Q, p1);
  require_pair_shape(P, Q, p2);
  const ResiduatedLattice& L = P.lattice();
  int acc = L.top_i();
  for (int u = 0; u < P.size(); ++u)
    acc = L.meet_i(acc, Q.order_i(p2.f[u], p1.f[u]));
  for (int v = 0; v < Q.size(); ++v)
    acc = L.meet_i(acc, P.order_i(p1.g[v], p2.g[v]));
  return L.at(acc);
}

Degree igal_approx(const LOrderedSet& P, const LOrderedSet& Q,
                   const GaloisPair& p1, const GaloisPair& p2) {
  require_pair_shape(P, Q, p1);
  require_pair_shape(P, Q, p2);
  const ResiduatedLattice& L = P.lattice();
  int acc = L.top_i();
  for (int u = 0; u < P.size(); ++u)
    acc = L.meet_i(acc, Q.approx_i(p2.f[u], p1.f[u]));
  for (int v = 0; v < Q.size(); ++v)
    acc = L.meet_i(acc, P.approx_i(p1.g[v], p2.g[v]));
  return L.at(acc);
}

Degree igal_order(const LOrderedSet& P, const GaloisPair& p1,
                  const GaloisPair& p2) {
  return igal_order(P, P, p1, p2);
}

Degree igal_approx(const LOrderedSet& P, const GaloisPair& p1,
                   const GaloisPair& p2) {
  return igal_approx(P, P, p1, p2);
}

} // namespace fuzzlat
