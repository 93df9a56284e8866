#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "fuzzlat/dot.hpp"
#include "fuzzlat/generate.hpp"
#include "fuzzlat/json_io.hpp"
#include "fuzzlat/suites.hpp"

using namespace fuzzlat;

namespace {

// exit codes: 0 pass, 1 property failure, 2 input error, 3 budget refusal
constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudgetRefusal = 3;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw_input("cannot write '" + out_path + "'");
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw_input("cannot write '" + out_path + "'");
  out << text;
}

struct Options {
  std::string file;
  std::string suite;
  std::string set_name;
  std::string relation;
  std::string mode = "fast";
  std::string dot_path;
  std::string out_path;
  std::string what;
  std::string kind;
  std::string chain_kind = "lukasiewicz";
  std::string max_degree;
  int n = 3;
  std::vector<std::string> universe;
  std::size_t trials = 1000;
  int min_carrier = 3;
  int max_carrier = 4;
  Budget budget;
};

int cmd_validate(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  json j{{"ok", true},
         {"lattice_size", mb.lattice.size()},
         {"sets", json::array()},
         {"relations", json::array()},
         {"pairs", json::array()}};
  if (mb.ordered_set) {
    j["carrier_size"] = mb.ordered_set->size();
    j["power_lattice"] = mb.ordered_set->is_power();
  }
  for (const auto& [name, _] : mb.sets) j["sets"].push_back(name);
  for (const auto& [name, _] : mb.relations) j["relations"].push_back(name);
  for (const auto& [name, _] : mb.pairs) j["pairs"].push_back(name);
  emit(j, o.out_path);
  return kPass;
}

int cmd_suite(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  SuiteReport rep = run_suite(mb, o.suite, o.budget);
  emit(suite_report_to_json(rep), o.out_path);
  return rep.passed() ? kPass : kPropertyFailure;
}

int cmd_infsup(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  const LSet& V = mb.require_set(o.set_name);
  if (!same_universe(V.universe_ptr(), P.carrier_ptr()))
    throw_input("set '" + o.set_name + "' does not live on the carrier");
  auto in = infimum(P, V);
  auto su = supremum(P, V);
  json j{{"set", o.set_name},
         {"infimum", in ? json(P.element_name(*in)) : json(nullptr)},
         {"supremum", su ? json(P.element_name(*su)) : json(nullptr)}};
  emit(j, o.out_path);
  return kPass;
}

int cmd_check_complete(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  const LRelation& R = mb.require_relation(o.relation);
  json j{{"relation", o.relation}, {"mode", o.mode}};
  bool complete = false;
  if (o.mode == "fast" || o.mode == "both") {
    PropertyReport pr = relation_properties(R);
    if (!pr.tolerance)
      throw_input("the fast test applies only to reflexive symmetric "
                  "relations; use --mode brute");
    FastCompletenessReport fr = is_complete_tolerance_fast(P, R);
    j["fast"] = fast_report_to_json(fr, P);
    complete = fr.complete;
  }
  if (o.mode == "brute" || o.mode == "both") {
    BruteCompletenessReport br = is_complete_relation_bruteforce(P, R, o.budget);
    j["brute"] = brute_report_to_json(br);
    complete = br.complete();
    if (o.mode == "both")
      j["testers_agree"] = j["fast"]["complete"].get<bool>() == br.complete();
  }
  if (o.mode != "fast" && o.mode != "brute" && o.mode != "both")
    throw_input("unknown mode '" + o.mode + "'");
  j["complete"] = complete;
  emit(j, o.out_path);
  return complete ? kPass : kPropertyFailure;
}

int cmd_blocks(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  const LRelation& R = mb.require_relation(o.relation);
  FastCompletenessReport fr = is_complete_tolerance_fast(P, R);
  if (!fr.complete) {
    emit(json{{"relation", o.relation},
              {"complete", false},
              {"report", fast_report_to_json(fr, P)}},
         o.out_path);
    return kPropertyFailure;
  }
  std::vector<LSet> blocks;
  if (o.mode == "brute")
    blocks = maximal_blocks(P, R, BlockMode::Brute, o.budget);
  else blocks = maximal_blocks(P, R, BlockMode::Fast, o.budget);
  json arr = json::array();
  for (const LSet& bset : blocks) arr.push_back(lset_to_json(bset));
  emit(json{{"relation", o.relation},
            {"complete", true},
            {"count", blocks.size()},
            {"blocks", arr}},
       o.out_path);
  return kPass;
}

int cmd_factor(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  const LRelation& R = mb.require_relation(o.relation);
  FastCompletenessReport fr = is_complete_tolerance_fast(P, R);
  if (!fr.complete) {
    json j{{"relation", o.relation},
           {"complete", false},
           {"refusal", "the relation is not a complete tolerance"},
           {"report", fast_report_to_json(fr, P)}};
    emit(j, o.out_path);
    return kPropertyFailure;
  }
  ToleranceAnalysis a = analyze_tolerance(P, R, o.budget);
  if (!o.dot_path.empty())
    emit_text(hasse_dot(a.factorization.factor, "factor"), o.dot_path);
  emit(analysis_to_json(a, P), o.out_path);
  return kPass;
}

int cmd_enumerate_ctol(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  const ResiduatedLattice& L = mb.lattice;
  std::vector<LRelation> ctols = enumerate_complete_tolerances(P, o.budget);

  auto member = [&](const LRelation& r) {
    for (const LRelation& t : ctols)
      if (t == r) return true;
    return false;
  };
  bool inter_closed = true, shift_closed = true, has_total = false;
  for (const LRelation& t1 : ctols)
    for (const LRelation& t2 : ctols)
      inter_closed = inter_closed && member(intersect(t1, t2));
  for (const LRelation& t : ctols)
    for (int a = 0; a < L.size(); ++a)
      shift_closed = shift_closed && member(scalar_shift(L.at(a), t));
  for (const LRelation& t : ctols) {
    bool total = true;
    for (int d : t.entries()) total = total && d == L.top_i();
    has_total = has_total || total;
  }

  json arr = json::array();
  for (const LRelation& t : ctols) arr.push_back(relation_to_json(t));
  json j{{"count", ctols.size()},
         {"tolerances", arr},
         {"closure_laws",
          json{{"intersection_closed", inter_closed},
               {"shift_closed", shift_closed},
               {"contains_total", has_total}}}};
  emit(j, o.out_path);
  return inter_closed && shift_closed && has_total ? kPass : kPropertyFailure;
}

int cmd_search(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  std::vector<GeneratedModel> pool;
  if (mb.ordered_set)
    pool.push_back(GeneratedModel{"model", *mb.ordered_set});
  else
    pool = search_model_pool(mb.lattice, o.min_carrier, o.max_carrier,
                             o.budget);
  SearchVerdict v = search_compat_counterexample(pool, o.trials,
                                                 o.budget.seed, o.budget);
  emit(v.to_json(), o.out_path);
  return kPass;
}

int cmd_generate(const Options& o) {
  SplitMix64 rng(o.budget.seed);
  if (o.kind == "chain") {
    ChainKind ck;
    if (o.chain_kind == "lukasiewicz") ck = ChainKind::Lukasiewicz;
    else if (o.chain_kind == "godel") ck = ChainKind::Godel;
    else if (o.chain_kind == "goguen") ck = ChainKind::Goguen;
    else throw_input("unknown chain kind '" + o.chain_kind + "'");
    ResiduatedLattice::chain(ck, o.n); // validates n and representability
    emit(json{{"lattice",
               json{{"type", "chain"}, {"kind", o.chain_kind}, {"n", o.n}}}},
         o.out_path);
    return kPass;
  }
  if (o.kind == "relation" || o.kind == "pair" || o.kind == "tolerance") {
    if (o.file.empty()) throw_input("generate --kind " + o.kind +
                                    " needs --file with an ordered_set");
    ModelBundle mb = load_model(o.file, o.budget);
    const LOrderedSet& P = mb.require_ordered_set();
    if (o.kind == "relation") {
      int cap = mb.lattice.size() - 1;
      if (!o.max_degree.empty())
        cap = mb.lattice.by_name(o.max_degree).index; // errors when unknown
      std::vector<int> m(std::size_t(P.size()) * P.size());
      for (int& d : m) {
        d = int(rng.below(mb.lattice.size()));
        while (!mb.lattice.leq_i(d, cap)) d = int(rng.below(mb.lattice.size()));
      }
      LRelation R(mb.lattice, P.carrier_ptr(), P.carrier_ptr(), std::move(m));
      emit(json{{"relation", relation_to_json(R)}}, o.out_path);
      return kPass;
    }
    GaloisPair p = random_extensive_pair(P, rng);
    if (o.kind == "pair") {
      emit(json{{"pair", galois_pair_to_json(p, P)},
                {"extensive", is_extensive(P, p).extensive},
                {"isotone_galois", is_isotone_galois(P, p).ok}},
           o.out_path);
      return kPass;
    }
    LRelation tol = tolerance_from_pair(P, p);
    emit(json{{"relation", relation_to_json(tol)},
              {"complete", is_complete_tolerance_fast(P, tol).complete}},
         o.out_path);
    return kPass;
  }
  if (o.kind == "model") {
    ChainKind ck;
    if (o.chain_kind == "lukasiewicz") ck = ChainKind::Lukasiewicz;
    else if (o.chain_kind == "godel") ck = ChainKind::Godel;
    else if (o.chain_kind == "goguen") ck = ChainKind::Goguen;
    else throw_input("unknown chain kind '" + o.chain_kind + "'");
    ResiduatedLattice L = ResiduatedLattice::chain(ck, o.n);
    if (o.universe.empty()) throw_input("generate --kind model needs --universe");
    UniversePtr X = make_universe(o.universe);
    LOrderedSet P = power_lattice(L, X, o.budget);
    GaloisPair p = random_extensive_pair(P, rng);
    LRelation tol = tolerance_from_pair(P, p);
    json j{{"lattice",
            json{{"type", "chain"}, {"kind", o.chain_kind}, {"n", o.n}}},
           {"ordered_set", json{{"power_of", json{{"universe", o.universe}}}}},
           {"relations", json{{"generated", relation_to_json(tol)}}},
           {"pairs", json{{"generated", galois_pair_to_json(p, P)}}}};
    emit(j, o.out_path);
    return kPass;
  }
  throw_input("unknown generate kind '" + o.kind + "'");
}

int cmd_export_dot(const Options& o) {
  ModelBundle mb = load_model(o.file, o.budget);
  const LOrderedSet& P = mb.require_ordered_set();
  if (o.what == "order") {
    emit_text(hasse_dot(P, "order"), o.out_path);
    return kPass;
  }
  if (o.what == "factor") {
    if (o.relation.empty()) throw_input("--what factor needs --relation");
    const LRelation& R = mb.require_relation(o.relation);
    FastCompletenessReport fr = is_complete_tolerance_fast(P, R);
    if (!fr.complete) {
      std::cerr << "relation '" << o.relation
                << "' is not a complete tolerance\n";
      return kPropertyFailure;
    }
    FactorResult res = factor(P, R, o.budget);
    emit_text(hasse_dot(res.factor, "factor"), o.out_path);
    return kPass;
  }
  throw_input("unknown --what '" + o.what + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"computing with finite residuated-lattice-valued ordered "
               "structures: fuzzy complete lattices, power relations, "
               "complete tolerances, factor lattices"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--budget", o.budget.max_enumeration,
                 "max exhaustive enumeration size");
  app.add_option("--seed", o.budget.seed, "seed for sampled sweeps");
  app.add_option("--samples", o.budget.samples,
                 "sample count past the budget");

  auto* validate = app.add_subcommand("validate", "load and validate a model");
  validate->add_option("file", o.file)->required();

  auto* suite = app.add_subcommand("suite", "run a named property suite");
  suite->add_option("file", o.file)->required();
  suite->add_option("--suite", o.suite, "suite name")->required();
  suite->add_option("--out", o.out_path);

  auto* infsup = app.add_subcommand("infsup", "infimum/supremum of an L-set");
  infsup->add_option("file", o.file)->required();
  infsup->add_option("--set", o.set_name)->required();

  auto* checkc = app.add_subcommand("check-complete",
                                    "test a relation for completeness");
  checkc->add_option("file", o.file)->required();
  checkc->add_option("--relation", o.relation)->required();
  checkc->add_option("--mode", o.mode, "fast | brute | both");

  auto* blocks = app.add_subcommand("blocks",
                                    "maximal blocks of a complete tolerance");
  blocks->add_option("file", o.file)->required();
  blocks->add_option("--relation", o.relation)->required();
  blocks->add_option("--mode", o.mode, "fast | brute");

  auto* factor_cmd = app.add_subcommand("factor",
                                        "factor lattice of a complete "
                                        "tolerance, with DOT export");
  factor_cmd->add_option("file", o.file)->required();
  factor_cmd->add_option("--relation", o.relation)->required();
  factor_cmd->add_option("--dot", o.dot_path, "write the Hasse diagram here");
  factor_cmd->add_option("--out", o.out_path);

  auto* ectol = app.add_subcommand("enumerate-ctol",
                                   "all complete tolerances on the model");
  ectol->add_option("file", o.file)->required();

  auto* search = app.add_subcommand("search-open-problem",
                                    "look for relations satisfying the "
                                    "inf/sup clauses but not compatibility");
  search->add_option("file", o.file)->required();
  search->add_option("--trials", o.trials);
  search->add_option("--out", o.out_path);
  search->add_option("--min-carrier", o.min_carrier);
  search->add_option("--max-carrier", o.max_carrier);

  auto* gen = app.add_subcommand("generate", "emit random valid structures");
  gen->add_option("--kind", o.kind, "chain | relation | pair | tolerance | model")
      ->required();
  gen->add_option("--file", o.file, "model supplying the ordered set");
  gen->add_option("--chain-kind", o.chain_kind);
  gen->add_option("--n", o.n);
  gen->add_option("--universe", o.universe)->delimiter(',');
  gen->add_option("--max-degree", o.max_degree);
  gen->add_option("--out", o.out_path);

  auto* xdot = app.add_subcommand("export-dot", "Hasse diagram export");
  xdot->add_option("file", o.file)->required();
  xdot->add_option("--what", o.what, "order | factor")->required();
  xdot->add_option("--relation", o.relation);
  xdot->add_option("--out", o.out_path);

  for (CLI::App* sub : {validate, suite, infsup, checkc, blocks, factor_cmd,
                        ectol, search, gen, xdot})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (suite->parsed()) return cmd_suite(o);
    if (infsup->parsed()) return cmd_infsup(o);
    if (checkc->parsed()) return cmd_check_complete(o);
    if (blocks->parsed()) return cmd_blocks(o);
    if (factor_cmd->parsed()) return cmd_factor(o);
    if (ectol->parsed()) return cmd_enumerate_ctol(o);
    if (search->parsed()) return cmd_search(o);
    if (gen->parsed()) return cmd_generate(o);
    if (xdot->parsed()) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Budget ? kBudgetRefusal : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
