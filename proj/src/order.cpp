#include "fuzzlat/order.hpp"

#include <sstream>

namespace fuzzlat {

LOrderedSet::LOrderedSet(ResiduatedLattice lat, UniversePtr carrier,
                         LRelation approx, LRelation order)
    : lat_(std::move(lat)), carrier_(std::move(carrier)),
      approx_(std::move(approx)), order_(std::move(order)) {
  if (!approx_.square() || !order_.square())
    throw_input("ordered set relations must be square");
  if (!same_universe(approx_.source_ptr(), carrier_) ||
      !same_universe(order_.source_ptr(), carrier_))
    throw_input("ordered set relations must live on the carrier");
  if (!lat_.same_instance(approx_.lattice()) ||
      !lat_.same_instance(order_.lattice()))
    throw_input("ordered set components must share one lattice");
}

LSet LOrderedSet::decode(int carrier_index) const {
  if (!is_power()) throw_input("not a power lattice");
  return decode_lset(lat_, base_, std::size_t(carrier_index));
}

int LOrderedSet::encode(const LSet& member) const {
  if (!is_power()) throw_input("not a power lattice");
  if (!same_universe(member.universe_ptr(), base_))
    throw_input("encode: L-set lives on a different base universe");
  return int(encode_lset(member));
}

AxiomReport verify_order_axioms(const LOrderedSet& P) {
  const ResiduatedLattice& L = P.lattice();
  const Universe& U = P.carrier();
  int n = P.size();
  AxiomReport r;

  {
    AxiomCheck c{"approx-is-equality", true, std::nullopt};
    PropertyReport pr = relation_properties(P.approx());
    if (!pr.equality) {
      c.pass = false;
      if (!pr.reflexive) c.witness = pr.reflexive_witness;
      else if (!pr.symmetric) c.witness = pr.symmetric_witness;
      else if (!pr.transitive) c.witness = pr.transitive_witness;
      else c.witness = pr.separation_witness;
    }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"order-reflexive", true, std::nullopt};
    for (int u = 0; u < n && c.pass; ++u)
      if (P.order_i(u, u) != L.top_i()) {
        c.pass = false;
        c.witness = Witness{{U.elements[u]},
                            "(" + U.elements[u] + " <= " + U.elements[u] +
                                ") = " + L.name(P.order_i(u, u))};
      }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"order-transitive", true, std::nullopt};
    for (int u = 0; u < n && c.pass; ++u)
      for (int v = 0; v < n && c.pass; ++v)
        for (int w = 0; w < n && c.pass; ++w) {
          int lhs = L.tensor_i(P.order_i(u, v), P.order_i(v, w));
          if (!L.leq_i(lhs, P.order_i(u, w))) {
            c.pass = false;
            c.witness =
                Witness{{U.elements[u], U.elements[v], U.elements[w]},
                        "transitivity fails through " + U.elements[v]};
          }
        }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"order-compatible", true, std::nullopt};
    CompatResult cr = is_compatible(P.order(), P.approx());
    if (!cr.compatible) {
      c.pass = false;
      c.witness = cr.witness;
    }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"antisymmetry", true, std::nullopt};
    for (int u = 0; u < n && c.pass; ++u)
      for (int v = 0; v < n && c.pass; ++v) {
        int both = L.meet_i(P.order_i(u, v), P.order_i(v, u));
        if (!L.leq_i(both, P.approx_i(u, v))) {
          c.pass = false;
          c.witness = Witness{
              {U.elements[u], U.elements[v]},
              "(" + U.elements[u] + " <= " + U.elements[v] + ") & (" +
                  U.elements[v] + " <= " + U.elements[u] + ") = " +
                  L.name(both) + " !<= approx = " + L.name(P.approx_i(u, v))};
        }
      }
    r.checks.push_back(std::move(c));
  }

  return r;
}

namespace {

void require_on_carrier(const LOrderedSet& P, const LSet& V, const char* what) {
  if (!same_universe(V.universe_ptr(), P.carrier_ptr()))
    throw_input(std::string(what) + ": L-set does not live on the carrier");
  if (!P.lattice().same_instance(V.lattice()))
    throw_input(std::string(what) + ": lattice mismatch");
}

} // namespace

LSet lower_set(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "lower_set");
  return compose(P.order(), V);
}

LSet upper_set(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "upper_set");
  return compose(V, P.order());
}

LSet lower_cone(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "lower_cone");
  const ResiduatedLattice& L = P.lattice();
  int n = P.size();
  std::vector<int> m(n);
  for (int v = 0; v < n; ++v) {
    int acc = L.top_i();
    for (int u = 0; u < n; ++u)
      acc = L.meet_i(acc, L.impl_i(V.memb_i(u), P.order_i(v, u)));
    m[v] = acc;
  }
  return LSet(L, P.carrier_ptr(), std::move(m));
}

LSet upper_cone(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "upper_cone");
  const ResiduatedLattice& L = P.lattice();
  int n = P.size();
  std::vector<int> m(n);
  for (int v = 0; v < n; ++v) {
    int acc = L.top_i();
    for (int u = 0; u < n; ++u)
      acc = L.meet_i(acc, L.impl_i(V.memb_i(u), P.order_i(u, v)));
    m[v] = acc;
  }
  return LSet(L, P.carrier_ptr(), std::move(m));
}

LSet singleton(const LOrderedSet& P, int u) {
  if (u < 0 || u >= P.size()) throw_input("singleton: element out of range");
  int arr[1] = {u};
  return LSet::crisp(P.lattice(), P.carrier_ptr(), arr);
}

Interval interval(const LOrderedSet& P, int lo, int hi) {
  if (lo < 0 || lo >= P.size() || hi < 0 || hi >= P.size())
    throw_input("interval: endpoint out of range");
  if (!P.leq1(lo, hi))
    throw_input("invalid interval: " + P.element_name(lo) + " !<= " +
                P.element_name(hi) + " in the 1-cut");
  LSet m = intersect(upper_cone(P, singleton(P, lo)),
                     lower_cone(P, singleton(P, hi)));
  return Interval{lo, hi, std::move(m)};
}

bool is_convex(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "is_convex");
  return intersect(lower_set(P, V), upper_set(P, V)) == V;
}

namespace {

std::optional<int> extremum(const LOrderedSet& P, const LSet& bound_cone,
                            const LSet& opposite_cone, const char* what) {
  const ResiduatedLattice& L = P.lattice();
  std::optional<int> found;
  for (int u = 0; u < P.size(); ++u) {
    if (bound_cone.memb_i(u) == L.top_i() &&
        opposite_cone.memb_i(u) == L.top_i()) {
      if (found)
        throw_input(std::string(what) + ": two qualifying elements (" +
                    P.element_name(*found) + ", " + P.element_name(u) +
                    "); the order axioms are violated");
      found = u;
    }
  }
  return found;
}

} // namespace

std::optional<int> infimum(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "infimum");
  LSet lc = lower_cone(P, V);
  LSet ulc = upper_cone(P, lc);
  return extremum(P, lc, ulc, "infimum");
}

std::optional<int> supremum(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "supremum");
  LSet uc = upper_cone(P, V);
  LSet luc = lower_cone(P, uc);
  return extremum(P, uc, luc, "supremum");
}

std::optional<int> minimum(const LOrderedSet& P, const LSet& V) {
  auto u = infimum(P, V);
  if (u && V.memb_i(*u) == P.lattice().top_i()) return u;
  return std::nullopt;
}

std::optional<int> maximum(const LOrderedSet& P, const LSet& V) {
  auto u = supremum(P, V);
  if (u && V.memb_i(*u) == P.lattice().top_i()) return u;
  return std::nullopt;
}

CompletelyLatticeResult is_completely_lattice(const LOrderedSet& P,
                                              const Budget& b) {
  std::size_t count =
      lset_count(P.lattice(), P.carrier(), b.max_enumeration);
  for (std::size_t i = 0; i < count; ++i) {
    LSet V = decode_lset(P.lattice(), P.carrier_ptr(), i);
    if (!infimum(P, V) || !supremum(P, V)) return {false, std::move(V)};
  }
  return {true, std::nullopt};
}

LOrderedSet power_lattice(const ResiduatedLattice& L, UniversePtr X,
                          const Budget& b) {
  std::size_t count = lset_count(L, *X, b.max_enumeration);
  std::vector<LSet> members;
  members.reserve(count);
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    members.push_back(decode_lset(L, X, i));
    std::ostringstream os;
    os << "{";
    for (int k = 0; k < members.back().size(); ++k) {
      if (k) os << ",";
      os << L.name(members.back().memb_i(k));
    }
    os << "}";
    names.push_back(os.str());
  }
  UniversePtr carrier = make_universe(std::move(names));
  int n = int(count);
  std::vector<int> ord(std::size_t(n) * n), app(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Degree s = subsethood(members[i], members[j]);
      ord[std::size_t(i) * n + j] = s.index;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      app[std::size_t(i) * n + j] =
          L.meet_i(ord[std::size_t(i) * n + j], ord[std::size_t(j) * n + i]);
  LOrderedSet P(L, carrier, LRelation(L, carrier, carrier, std::move(app)),
                LRelation(L, carrier, carrier, std::move(ord)));
  P.base_ = std::move(X);
  return P;
}

LSet power_inf(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "power_inf");
  if (!P.is_power()) throw_input("power_inf: not a power lattice");
  const ResiduatedLattice& L = P.lattice();
  const UniversePtr& X = P.base_universe();
  std::vector<int> m(X->size(), L.top_i());
  for (int w = 0; w < P.size(); ++w) {
    LSet W = P.decode(w);
    for (int x = 0; x < X->size(); ++x)
      m[x] = L.meet_i(m[x], L.impl_i(V.memb_i(w), W.memb_i(x)));
  }
  return LSet(L, X, std::move(m));
}

LSet power_sup(const LOrderedSet& P, const LSet& V) {
  require_on_carrier(P, V, "power_sup");
  if (!P.is_power()) throw_input("power_sup: not a power lattice");
  const ResiduatedLattice& L = P.lattice();
  const UniversePtr& X = P.base_universe();
  std::vector<int> m(X->size(), L.bot_i());
  for (int w = 0; w < P.size(); ++w) {
    LSet W = P.decode(w);
    for (int x = 0; x < X->size(); ++x)
      m[x] = L.join_i(m[x], L.tensor_i(V.memb_i(w), W.memb_i(x)));
  }
  return LSet(L, X, std::move(m));
}

namespace {

void require_total_map(const LOrderedSet& P, const LOrderedSet& Q,
                       std::span<const int> f) {
  if (int(f.size()) != P.size()) throw_input("map is not total on the carrier");
  for (int v : f)
    if (v < 0 || v >= Q.size()) throw_input("map value out of range");
}

} // namespace

bool is_isotone(const LOrderedSet& P, const LOrderedSet& Q,
                std::span<const int> f) {
  require_total_map(P, Q, f);
  const ResiduatedLattice& L = P.lattice();
  for (int u = 0; u < P.size(); ++u)
    for (int v = 0; v < P.size(); ++v)
      if (!L.leq_i(P.order_i(u, v), Q.order_i(f[u], f[v]))) return false;
  return true;
}

bool is_isomorphism(const LOrderedSet& P, const LOrderedSet& Q,
                    std::span<const int> f) {
  require_total_map(P, Q, f);
  if (P.size() != Q.size()) return false;
  std::vector<bool> hit(Q.size(), false);
  for (int v : f) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < P.size(); ++u)
    for (int v = 0; v < P.size(); ++v)
      if (P.order_i(u, v) != Q.order_i(f[u], f[v])) return false;
  return true;
}

LSet carrier_image(std::span<const int> f, const LOrderedSet& target,
                   const LSet& V) {
  return zadeh_image(f, target.carrier_ptr(), V);
}

} // namespace fuzzlat
