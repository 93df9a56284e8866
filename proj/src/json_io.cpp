#include "fuzzlat/json_io.hpp"

#include <fstream>

namespace fuzzlat {

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw_input("missing key '" + std::string(key) + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw_input(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw_input(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::vector<int>> degree_matrix(const json& j,
                                            const ResiduatedLattice& L,
                                            const char* what) {
  if (!j.is_array()) throw_input(std::string(what) + " must be a matrix");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw_input(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_string())
        throw_input(std::string(what) + " entries must be degree names");
      r.push_back(L.by_name(e.get<std::string>()).index);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<int>> name_matrix(const json& j,
                                          const std::vector<std::string>& names,
                                          const char* what) {
  if (!j.is_array()) throw_input(std::string(what) + " must be a matrix");
  auto idx = [&](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return int(i);
    throw_input(std::string(what) + ": unknown element name '" + s + "'");
  };
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw_input(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_string())
        throw_input(std::string(what) + " entries must be element names");
      r.push_back(idx(e.get<std::string>()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

json matrix_to_json(const LRelation& R) {
  json rows = json::array();
  for (int x = 0; x < R.rows(); ++x) {
    json row = json::array();
    for (int y = 0; y < R.cols(); ++y)
      row.push_back(R.lattice().name(R.at_i(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

ResiduatedLattice lattice_from_json(const json& j) {
  std::string type = expect(j, "type").get<std::string>();
  if (type == "chain") {
    std::string kind = expect(j, "kind").get<std::string>();
    int n = expect(j, "n").get<int>();
    ChainKind ck;
    if (kind == "lukasiewicz") ck = ChainKind::Lukasiewicz;
    else if (kind == "godel") ck = ChainKind::Godel;
    else if (kind == "goguen") ck = ChainKind::Goguen;
    else throw_input("unknown chain kind '" + kind + "'");
    return ResiduatedLattice::chain(ck, n);
  }
  if (type == "tables") {
    LatticeTables t;
    t.elements = string_list(expect(j, "elements"), "elements");
    auto find = [&](const std::string& s) {
      for (std::size_t i = 0; i < t.elements.size(); ++i)
        if (t.elements[i] == s) return int(i);
      throw_input("unknown element name '" + s + "'");
    };
    t.meet = name_matrix(expect(j, "meet"), t.elements, "meet");
    t.join = name_matrix(expect(j, "join"), t.elements, "join");
    t.tensor = name_matrix(expect(j, "tensor"), t.elements, "tensor");
    t.impl = name_matrix(expect(j, "impl"), t.elements, "impl");
    t.bot = find(expect(j, "bot").get<std::string>());
    t.top = find(expect(j, "top").get<std::string>());
    return ResiduatedLattice::from_tables(t);
  }
  throw_input("unknown lattice type '" + type + "'");
}

json lattice_to_json(const ResiduatedLattice& L) {
  const LatticeTables& t = L.tables();
  auto table = [&](const std::vector<std::vector<int>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (int v : row) r.push_back(t.elements[v]);
      rows.push_back(std::move(r));
    }
    return rows;
  };
  return json{{"type", "tables"},    {"elements", t.elements},
              {"meet", table(t.meet)}, {"join", table(t.join)},
              {"tensor", table(t.tensor)}, {"impl", table(t.impl)},
              {"bot", t.elements[t.bot]}, {"top", t.elements[t.top]}};
}

LSet lset_from_json(const json& j, const ResiduatedLattice& L,
                    const UniversePtr& default_universe) {
  UniversePtr uni = default_universe;
  const json* memb = &j;
  if (j.is_object() && j.contains("membership")) {
    if (j.contains("universe"))
      uni = make_universe(string_list(j.at("universe"), "universe"));
    memb = &j.at("membership");
  }
  if (!uni) throw_input("L-set needs a universe");
  if (!memb->is_object()) throw_input("membership must be an object");
  std::vector<int> m(uni->size(), L.bot_i());
  for (const auto& [key, val] : memb->items()) {
    int i = uni->require(key);
    if (!val.is_string()) throw_input("membership degrees must be names");
    m[i] = L.by_name(val.get<std::string>()).index;
  }
  return LSet(L, uni, std::move(m));
}

json lset_to_json(const LSet& A) {
  json memb = json::object();
  for (int i = 0; i < A.size(); ++i)
    memb[A.universe().elements[i]] = A.lattice().name(A.memb_i(i));
  return json{{"universe", A.universe().elements}, {"membership", memb}};
}

LRelation relation_from_json(const json& j, const ResiduatedLattice& L,
                             const UniversePtr& default_universe) {
  UniversePtr src = default_universe, tgt = default_universe;
  const json* matrix = &j;
  if (j.is_object()) {
    if (j.contains("source"))
      src = make_universe(string_list(j.at("source"), "source"));
    if (j.contains("target"))
      tgt = make_universe(string_list(j.at("target"), "target"));
    matrix = &expect(j, "matrix");
  }
  if (!src || !tgt) throw_input("relation needs source and target universes");
  auto m = degree_matrix(*matrix, L, "matrix");
  if (int(m.size()) != src->size())
    throw_input("relation matrix has " + std::to_string(m.size()) +
                " rows for a source of size " + std::to_string(src->size()));
  std::vector<int> flat;
  for (const auto& row : m) {
    if (int(row.size()) != tgt->size())
      throw_input("relation matrix row width does not match the target");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return LRelation(L, src, tgt, std::move(flat));
}

json relation_to_json(const LRelation& R) {
  return json{{"source", R.source().elements},
              {"target", R.target().elements},
              {"matrix", matrix_to_json(R)}};
}

LOrderedSet ordered_set_from_json(const json& j, const ResiduatedLattice& L,
                                  const Budget& b) {
  if (j.contains("power_of")) {
    const json& p = j.at("power_of");
    UniversePtr X = make_universe(string_list(expect(p, "universe"), "universe"));
    return power_lattice(L, X, b);
  }
  UniversePtr carrier =
      make_universe(string_list(expect(j, "carrier"), "carrier"));
  LRelation approx = relation_from_json(expect(j, "approx"), L, carrier);
  LRelation order = relation_from_json(expect(j, "order"), L, carrier);
  return LOrderedSet(L, carrier, std::move(approx), std::move(order));
}

json ordered_set_to_json(const LOrderedSet& P) {
  if (P.is_power())
    return json{{"power_of", json{{"universe", P.base_universe()->elements}}}};
  return json{{"carrier", P.carrier().elements},
              {"approx", matrix_to_json(P.approx())},
              {"order", matrix_to_json(P.order())}};
}

GaloisPair galois_pair_from_json(const json& j, const LOrderedSet& P) {
  auto read_map = [&](const json& m, const char* what) {
    if (!m.is_object()) throw_input(std::string(what) + " must be an object");
    std::vector<int> f(P.size(), -1);
    for (const auto& [key, val] : m.items()) {
      int u = P.carrier().require(key);
      if (!val.is_string()) throw_input("map values must be element names");
      f[u] = P.carrier().require(val.get<std::string>());
    }
    for (int v : f)
      if (v < 0) throw_input(std::string(what) + " is not total on the carrier");
    return f;
  };
  GaloisPair p;
  p.f = read_map(expect(j, "f"), "f");
  p.g = read_map(expect(j, "g"), "g");
  return p;
}

json galois_pair_to_json(const GaloisPair& p, const LOrderedSet& P) {
  json f = json::object(), g = json::object();
  for (int u = 0; u < P.size(); ++u) {
    f[P.element_name(u)] = P.element_name(p.f[u]);
    g[P.element_name(u)] = P.element_name(p.g[u]);
  }
  return json{{"f", f}, {"g", g}};
}

const LOrderedSet& ModelBundle::require_ordered_set() const {
  if (!ordered_set) throw_input("the model has no ordered_set");
  return *ordered_set;
}

const LSet& ModelBundle::require_set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw_input("unknown set '" + name + "'");
  return it->second;
}

const LRelation& ModelBundle::require_relation(const std::string& name) const {
  auto it = relations.find(name);
  if (it == relations.end()) throw_input("unknown relation '" + name + "'");
  return it->second;
}

const GaloisPair& ModelBundle::require_pair(const std::string& name) const {
  auto it = pairs.find(name);
  if (it == pairs.end()) throw_input("unknown pair '" + name + "'");
  return it->second;
}

ModelBundle bundle_from_json(const json& j, const Budget& b) {
  if (!j.is_object()) throw_input("model document must be an object");
  ModelBundle mb{lattice_from_json(expect(j, "lattice")),
                 std::nullopt,
                 {},
                 {},
                 {}};

  UniversePtr carrier;
  if (j.contains("ordered_set")) {
    mb.ordered_set = ordered_set_from_json(j.at("ordered_set"), mb.lattice, b);
    carrier = mb.ordered_set->carrier_ptr();
    if (!mb.ordered_set->is_power()) {
      AxiomReport r = verify_order_axioms(*mb.ordered_set);
      if (!r.all_pass()) throw AxiomError(std::move(r));
    }
  }

  if (j.contains("sets"))
    for (const auto& [name, val] : j.at("sets").items())
      mb.sets.emplace(name, lset_from_json(val, mb.lattice, carrier));
  if (j.contains("relations"))
    for (const auto& [name, val] : j.at("relations").items())
      mb.relations.emplace(name, relation_from_json(val, mb.lattice, carrier));
  if (j.contains("pairs")) {
    if (!mb.ordered_set) throw_input("pairs need an ordered_set");
    for (const auto& [name, val] : j.at("pairs").items())
      mb.pairs.emplace(name, galois_pair_from_json(val, *mb.ordered_set));
  }
  return mb;
}

ModelBundle load_model(const std::string& path, const Budget& b) {
  std::ifstream in(path);
  if (!in) throw_input("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw_input("parse error in '" + path + "': " + e.what());
  }
  return bundle_from_json(j, b);
}

json bundle_to_json(const ModelBundle& mb) {
  json j{{"lattice", lattice_to_json(mb.lattice)}};
  if (mb.ordered_set) j["ordered_set"] = ordered_set_to_json(*mb.ordered_set);
  if (!mb.sets.empty()) {
    json s = json::object();
    for (const auto& [name, v] : mb.sets) s[name] = lset_to_json(v);
    j["sets"] = std::move(s);
  }
  if (!mb.relations.empty()) {
    json s = json::object();
    for (const auto& [name, v] : mb.relations) s[name] = relation_to_json(v);
    j["relations"] = std::move(s);
  }
  if (!mb.pairs.empty()) {
    json s = json::object();
    for (const auto& [name, v] : mb.pairs)
      s[name] = galois_pair_to_json(v, *mb.ordered_set);
    j["pairs"] = std::move(s);
  }
  return j;
}

json witness_to_json(const Witness& w) {
  return json{{"items", w.items}, {"detail", w.detail}};
}

json axiom_report_to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"axiom", c.axiom}, {"pass", c.pass}};
    if (c.witness) e["witness"] = witness_to_json(*c.witness);
    checks.push_back(std::move(e));
  }
  return json{{"pass", r.all_pass()}, {"checks", checks}};
}

namespace {

json clause_to_json(const ClauseResult& c) {
  json j{{"pass", c.pass}};
  if (c.witness) j["witness"] = witness_to_json(*c.witness);
  return j;
}

} // namespace

json brute_report_to_json(const BruteCompletenessReport& r) {
  return json{{"complete", r.complete()},
              {"compatibility", clause_to_json(r.compatibility)},
              {"inf_clause", clause_to_json(r.inf_clause)},
              {"sup_clause", clause_to_json(r.sup_clause)},
              {"mode", r.mode}};
}

json fast_report_to_json(const FastCompletenessReport& r,
                         const LOrderedSet& P) {
  json j{{"complete", r.complete},
         {"pair_valid", r.pair_valid},
         {"reconstruction_ok", r.reconstruction_ok},
         {"endpoints", galois_pair_to_json(r.endpoints, P)}};
  if (r.defect) j["defect"] = witness_to_json(*r.defect);
  if (r.galois_defect)
    j["galois_defect"] = json{
        {"u", P.element_name(r.galois_defect->worst_u)},
        {"v", P.element_name(r.galois_defect->worst_v)},
        {"lhs", P.lattice().name(r.galois_defect->lhs)},
        {"rhs", P.lattice().name(r.galois_defect->rhs)}};
  return j;
}

json analysis_to_json(const ToleranceAnalysis& a, const LOrderedSet& P) {
  json fixpoints = json::array();
  for (auto [u, v] : a.fixpoints.pairs)
    fixpoints.push_back(json::array({P.element_name(u), P.element_name(v)}));
  json blocks = json::array();
  for (const Interval& iv : a.factorization.blocks) {
    json memb = json::object();
    for (int i = 0; i < iv.membership.size(); ++i)
      memb[P.element_name(i)] = P.lattice().name(iv.membership.memb_i(i));
    blocks.push_back(json{{"lo", P.element_name(iv.lo)},
                          {"hi", P.element_name(iv.hi)},
                          {"membership", memb}});
  }
  return json{{"complete", true},
              {"endpoints", galois_pair_to_json(a.endpoints, P)},
              {"fixpoints", fixpoints},
              {"blocks", blocks},
              {"factor",
               json{{"carrier", a.factorization.factor.carrier().elements},
                    {"approx", matrix_to_json(a.factorization.factor.approx())},
                    {"order", matrix_to_json(a.factorization.factor.order())},
                    {"isomorphic_to_fixpoints", a.factorization.isomorphism_ok},
                    {"completely_lattice_checked",
                     a.factorization.completely_lattice_checked},
                    {"completely_lattice",
                     a.factorization.completely_lattice}}}};
}

} // namespace fuzzlat
