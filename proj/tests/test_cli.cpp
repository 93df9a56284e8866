#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CLI_PATH
#error "CLI_PATH must be defined"
#endif
#ifndef MODELS_DIR
#error "MODELS_DIR must be defined"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out_path =
      "cli_out_" + std::to_string(counter++) + ".tmp";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_path +
                    " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

std::string model(const char* name) {
  return std::string(MODELS_DIR) + "/" + name;
}

} // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + model("luk3_chain.json")).exit_code == 0);
  CHECK(run("validate " + model("crisp_two_chain.json")).exit_code == 0);
  CHECK(run("validate " + model("bad_impl_tables.json")).exit_code == 2);
  CHECK(run("validate " + model("broken_order.json")).exit_code == 2);
  CHECK(run("validate " + model("no_such_file.json")).exit_code == 2);
}

TEST_CASE("suite command") {
  RunResult ok = run("suite " + model("luk3_chain.json") +
                     " --suite lattice-axioms");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"passed\": true") != std::string::npos);

  CHECK(run("suite " + model("luk3_chain.json") + " --suite cone-calculus")
            .exit_code == 0);
  CHECK(run("suite " + model("luk3_chain.json") + " --suite nonsense")
            .exit_code == 2);

  // identical invocations give byte-identical reports
  RunResult a = run("suite " + model("luk3_chain.json") +
                    " --suite galois --seed 7");
  RunResult b = run("suite " + model("luk3_chain.json") +
                    " --suite galois --seed 7");
  CHECK(a.out == b.out);
}

TEST_CASE("infsup") {
  RunResult r = run("infsup " + model("luk3_chain.json") + " --set V");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"infimum\": \"{1/2}\"") != std::string::npos);
  CHECK(r.out.find("\"supremum\": \"{1/2}\"") != std::string::npos);

  RunResult whole = run("infsup " + model("luk3_chain.json") + " --set whole");
  CHECK(whole.out.find("\"infimum\": \"{0}\"") != std::string::npos);
  CHECK(whole.out.find("\"supremum\": \"{1}\"") != std::string::npos);

  CHECK(run("infsup " + model("luk3_chain.json") + " --set nope").exit_code ==
        2);
}

TEST_CASE("check-complete") {
  CHECK(run("check-complete " + model("luk3_chain.json") + " --relation eq")
            .exit_code == 0);
  RunResult bad = run("check-complete " + model("luk3_chain.json") +
                      " --relation crisp_chain --mode both");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"testers_agree\": true") != std::string::npos);
  CHECK(bad.out.find("\"complete\": false") != std::string::npos);

  RunResult both = run("check-complete " + model("luk3_chain.json") +
                       " --relation half_gap --mode both");
  CHECK(both.exit_code == 0);
  CHECK(both.out.find("\"testers_agree\": true") != std::string::npos);
}

TEST_CASE("blocks") {
  RunResult r =
      run("blocks " + model("luk3_chain.json") + " --relation total");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"count\": 1") != std::string::npos);

  RunResult eq = run("blocks " + model("luk3_chain.json") +
                     " --relation eq --mode brute");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("\"count\": 3") != std::string::npos);

  CHECK(run("blocks " + model("luk3_chain.json") + " --relation crisp_chain")
            .exit_code == 1);
}

TEST_CASE("factor with dot export") {
  std::string dot_path = "factor_test.dot";
  RunResult r = run("factor " + model("luk3_chain.json") +
                    " --relation half_gap --dot " + dot_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"complete\": true") != std::string::npos);
  std::string dot = slurp(dot_path);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("[{0},{1/2}]") != std::string::npos);
  CHECK(dot.find("[{1/2},{1}]") != std::string::npos);
  std::remove(dot_path.c_str());

  RunResult refused = run("factor " + model("luk3_chain.json") +
                          " --relation crisp_chain");
  CHECK(refused.exit_code == 1);
  CHECK(refused.out.find("\"refusal\"") != std::string::npos);
  CHECK(refused.out.find("defect") != std::string::npos);
}

TEST_CASE("enumerate-ctol") {
  RunResult r = run("enumerate-ctol " + model("luk3_chain.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"count\": 3") != std::string::npos);
  CHECK(r.out.find("\"intersection_closed\": true") != std::string::npos);
  CHECK(r.out.find("\"shift_closed\": true") != std::string::npos);
  CHECK(r.out.find("\"contains_total\": true") != std::string::npos);
}

TEST_CASE("search-open-problem") {
  RunResult r = run("search-open-problem " + model("luk3_chain.json") +
                    " --trials 200 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"trials\": 200") != std::string::npos);
  CHECK(r.out.find("\"verdict\"") != std::string::npos);

  RunResult again = run("search-open-problem " + model("luk3_chain.json") +
                        " --trials 200 --seed 5");
  CHECK(again.out == r.out);

  RunResult zero = run("search-open-problem " + model("luk3_chain.json") +
                       " --trials 0 --seed 5");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("no counterexample in 0 trials") != std::string::npos);

  // model without an ordered set: the pool is generated from the lattice
  RunResult gen = run("search-open-problem " + model("luk4_chain.json") +
                      " --trials 50 --seed 3");
  CHECK(gen.exit_code == 0);
}

TEST_CASE("generate") {
  RunResult chain = run("generate --kind chain --chain-kind lukasiewicz --n 4");
  CHECK(chain.exit_code == 0);
  CHECK(chain.out.find("\"n\": 4") != std::string::npos);

  CHECK(run("generate --kind chain --chain-kind goguen --n 3").exit_code == 2);
  CHECK(run("generate --kind chain --chain-kind goguen --n 2").exit_code == 0);
  CHECK(run("generate --kind wat").exit_code == 2);

  RunResult pair = run("generate --kind pair --file " +
                       model("luk3_chain.json") + " --seed 7");
  CHECK(pair.exit_code == 0);
  CHECK(pair.out.find("\"extensive\": true") != std::string::npos);
  CHECK(pair.out.find("\"isotone_galois\": true") != std::string::npos);

  RunResult tol = run("generate --kind tolerance --file " +
                      model("luk3_chain.json") + " --seed 9");
  CHECK(tol.exit_code == 0);
  CHECK(tol.out.find("\"complete\": true") != std::string::npos);

  // out-of-range degree name in the parameters
  CHECK(run("generate --kind relation --file " + model("luk3_chain.json") +
            " --max-degree 2/3")
            .exit_code == 2);
  CHECK(run("generate --kind relation --file " + model("luk3_chain.json") +
            " --max-degree 1/2 --seed 1")
            .exit_code == 0);

  RunResult mdl = run("generate --kind model --chain-kind lukasiewicz --n 3 "
                      "--universe x --seed 11");
  CHECK(mdl.exit_code == 0);
  CHECK(mdl.out.find("power_of") != std::string::npos);
}

TEST_CASE("export-dot") {
  RunResult order = run("export-dot " + model("luk3_chain.json") +
                        " --what order");
  CHECK(order.exit_code == 0);
  CHECK(order.out.find("rankdir=BT") != std::string::npos);

  RunResult factor = run("export-dot " + model("luk3_chain.json") +
                         " --what factor --relation eq");
  CHECK(factor.exit_code == 0);
  CHECK(factor.out.find("n0 -> n1") != std::string::npos);

  CHECK(run("export-dot " + model("luk3_chain.json") + " --what nope")
            .exit_code == 2);
  CHECK(run("export-dot " + model("luk3_chain.json") +
            " --what factor --relation crisp_chain")
            .exit_code == 1);
}

TEST_CASE("budget refusals exit with the dedicated code") {
  CHECK(run("validate " + model("boolean_diamond.json") + " --budget 2")
            .exit_code == 3);
  CHECK(run("enumerate-ctol " + model("boolean_diamond.json") + " --budget 2")
            .exit_code == 3);
}
