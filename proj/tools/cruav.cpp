// cruav — command-line front end.
//
// Exit codes: 0 yes/valid/sat, 1 no/invalid/unsat/none-up-to, 2 usage or I/O
// error, 3 resource budget exceeded. Every successful run ends with a single
// machine-readable line prefixed "RESULT:".

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cruav/generators.hpp"
#include "cruav/instance.hpp"
#include "cruav/periodic_sat.hpp"
#include "cruav/reduction.hpp"
#include "cruav/solver.hpp"

namespace {

using namespace cruav;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

Instance load_instance(const std::string& path) { return parse_instance(read_input(path)); }

Word load_word(const std::string& path) { return parse_word(read_input(path)); }

int cmd_decide(const std::string& in, bool no_pruning, std::uint64_t max_states) {
  Instance inst = load_instance(in);
  if (auto bad = check_metric(inst); !bad.empty()) {
    std::cerr << "error: instance is not metric, e.g. ft(" << bad[0].a << "," << bad[0].c
              << ") > ft(" << bad[0].a << "," << bad[0].b << ") + ft(" << bad[0].b << ","
              << bad[0].c << ")\n";
    return kExitUsage;
  }
  DecideResult r = decide(inst, no_pruning ? Pruning::Off : Pruning::On, max_states);
  std::cout << "explored " << r.explored << " states\n";
  switch (r.kind) {
    case DecideResult::Kind::Yes:
      std::cout << "lasso prefix:" << (r.lasso->prefix.empty() ? " (empty)" : "");
      for (Vertex v : r.lasso->prefix) std::cout << ' ' << v;
      std::cout << "\nlasso cycle:";
      for (Vertex v : r.lasso->cycle) std::cout << ' ' << v;
      std::cout << "\nRESULT: decide yes\n";
      return kExitYes;
    case DecideResult::Kind::No:
      std::cout << "RESULT: decide no\n";
      return kExitNo;
    case DecideResult::Kind::BudgetExceeded:
      std::cout << "RESULT: budget-exceeded\n";
      return kExitBudget;
  }
  return kExitUsage;
}

int cmd_shortest_period(const std::string& in, int max_len, std::uint64_t max_nodes) {
  Instance inst = load_instance(in);
  if (!check_metric(inst).empty()) {
    std::cerr << "error: instance is not metric\n";
    return kExitUsage;
  }
  if (max_len < inst.n) {
    std::cerr << "error: --max-len must be >= n = " << inst.n << "\n";
    return kExitUsage;
  }
  ShortestPeriodResult r = shortest_period(inst, max_len, max_nodes);
  std::cout << "explored " << r.explored << " nodes\n";
  switch (r.kind) {
    case ShortestPeriodResult::Kind::Found:
      std::cout << serialize_word(r.word);
      std::cout << "duration " << word_duration(inst, r.word) << "\n";
      std::cout << "RESULT: shortest-period " << r.length << "\n";
      return kExitYes;
    case ShortestPeriodResult::Kind::NoneUpTo:
      std::cout << "RESULT: none-up-to " << r.max_len << "\n";
      return kExitNo;
    case ShortestPeriodResult::Kind::BudgetExceeded:
      std::cout << "RESULT: budget-exceeded\n";
      return kExitBudget;
  }
  return kExitUsage;
}

int cmd_validate(const std::string& in, const std::string& word_path) {
  Instance inst = load_instance(in);
  Word u = load_word(word_path);
  if (auto v = validate_word(inst, u)) {
    std::cout << "RESULT: invalid " << to_string(*v) << "\n";
    return kExitNo;
  }
  std::cout << "length " << u.size() << " duration " << word_duration(inst, u) << "\n";
  std::cout << "RESULT: valid\n";
  return kExitYes;
}

int cmd_bound(const std::string& in) {
  Instance inst = load_instance(in);
  std::cout << "RESULT: bound " << claim1_bound(inst) << "\n";
  return kExitYes;
}

int cmd_simulate(const std::string& in, const std::string& word_path, int periods) {
  Instance inst = load_instance(in);
  Word u = load_word(word_path);
  if (periods < 1) {
    std::cerr << "error: --periods must be >= 1\n";
    return kExitUsage;
  }
  SimulateResult r = simulate(inst, u, periods);
  for (std::size_t s = 0; s < r.trace.size(); ++s) {
    std::cout << "step " << s << " at " << u[s % u.size()] << " clocks";
    for (Duration c : r.trace[s]) std::cout << ' ' << c;
    std::cout << "\n";
  }
  if (r.violation) {
    std::cout << "RESULT: invalid " << to_string(*r.violation) << "\n";
    return kExitNo;
  }
  std::cout << "RESULT: valid\n";
  return kExitYes;
}

int cmd_psat_decide(const std::string& formula) {
  PeriodicCnf cnf = parse_pcnf(read_input(formula));
  PsatResult r = decide_periodic_sat(cnf);
  if (!r.sat) {
    std::cout << "RESULT: unsat\n";
    return kExitNo;
  }
  std::cout << "blocks";
  for (Block b : r.blocks) std::cout << ' ' << b;
  std::cout << "\nRESULT: sat period " << r.blocks.size() << "\n";
  return kExitYes;
}

int cmd_compile(const std::string& formula, const std::string& dir) {
  PeriodicCnf cnf = parse_pcnf(read_input(formula));
  ReductionOutput r = compile(cnf);
  std::filesystem::create_directories(dir);
  write_output(dir + "/raw.cruav", serialize_instance(r.raw));
  write_output(dir + "/complete.cruav", serialize_instance(r.complete));
  write_output(dir + "/map.txt", serialize_map(r.map));
  std::cout << "wrote raw.cruav, complete.cruav, map.txt to " << dir << "\n";
  std::cout << "RESULT: compiled n " << r.complete.n << " l " << r.l << " T " << r.T << "\n";
  return kExitYes;
}

int cmd_witness(const std::string& formula, const std::string& out) {
  PeriodicCnf cnf = parse_pcnf(read_input(formula));
  PsatResult sat = decide_periodic_sat(cnf);
  if (!sat.sat) {
    std::cout << "RESULT: unsat\n";
    return kExitNo;
  }
  ReductionOutput r = compile(cnf);
  Word u = build_witness_solution(r, sat.blocks);
  write_output(out, serialize_word(u));
  std::cout << "RESULT: witness length " << u.size() << " segments " << sat.blocks.size() << "\n";
  return kExitYes;
}

int cmd_decode(const std::string& dir, const std::string& word_path) {
  GadgetMap map = parse_map(read_input(dir + "/map.txt"));
  Instance complete = load_instance(dir + "/complete.cruav");
  Word u = load_word(word_path);
  try {
    std::vector<Block> blocks = decode_solution(map, complete, u);
    std::cout << "blocks";
    for (Block b : blocks) std::cout << ' ' << b;
    std::cout << "\nRESULT: decoded period " << blocks.size() << "\n";
    return kExitYes;
  } catch (const DecodeError& e) {
    std::cout << "RESULT: invalid " << e.what() << "\n";
    return kExitNo;
  }
}

// RESULT is only printed when writing to a file; streaming to stdout stays a
// clean instance document for pipelines.
int emit_instance(const Instance& inst, const std::string& out, const std::string& what) {
  write_output(out, serialize_instance(inst));
  if (out != "-") std::cout << "RESULT: generated " << what << " n " << inst.n << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for single-vehicle cyclic routing with relative deadlines"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker thread count (results are deterministic)");

  std::string in_path, word_path, formula_path, out_path = "-", dir_path;
  bool no_pruning = false;
  std::uint64_t max_states = cruav::kDefaultStateBudget;
  int max_len = 0, periods = 2;

  auto* decide_cmd = app.add_subcommand("decide", "is the instance solvable at all?");
  decide_cmd->add_option("-i,--instance", in_path, "instance file ('-' = stdin)")->required();
  decide_cmd->add_flag("--no-pruning", no_pruning, "disable domination pruning");
  decide_cmd->add_option("--max-states", max_states, "state exploration budget");

  auto* sp_cmd = app.add_subcommand("shortest-period", "minimum solution word length");
  sp_cmd->add_option("-i,--instance", in_path, "instance file ('-' = stdin)")->required();
  sp_cmd->add_option("--max-len", max_len, "largest word length to try")->required();
  sp_cmd->add_option("--max-states", max_states, "search node budget");

  auto* val_cmd = app.add_subcommand("validate", "is u^omega a solution?");
  val_cmd->add_option("-i,--instance", in_path, "instance file ('-' = stdin)")->required();
  val_cmd->add_option("-w,--word", word_path, "word file ('-' = stdin)")->required();

  auto* bound_cmd = app.add_subcommand("bound", "max-deadline / min-flight-time period bound");
  bound_cmd->add_option("-i,--instance", in_path, "instance file ('-' = stdin)")->required();

  auto* sim_cmd = app.add_subcommand("simulate", "replay a word with full clock traces");
  sim_cmd->add_option("-i,--instance", in_path, "instance file ('-' = stdin)")->required();
  sim_cmd->add_option("-w,--word", word_path, "word file ('-' = stdin)")->required();
  sim_cmd->add_option("--periods", periods, "number of repetitions to replay")->required();

  auto* psat_cmd = app.add_subcommand("psat-decide", "decide a periodic CNF");
  psat_cmd->add_option("-f,--formula", formula_path, "pcnf file ('-' = stdin)")->required();

  auto* compile_cmd = app.add_subcommand("compile", "compile a periodic CNF to an instance");
  compile_cmd->add_option("-f,--formula", formula_path, "pcnf file ('-' = stdin)")->required();
  compile_cmd->add_option("-o,--output", dir_path, "output directory")->required();

  auto* wit_cmd = app.add_subcommand("witness", "solve the CNF and emit a solution word");
  wit_cmd->add_option("-f,--formula", formula_path, "pcnf file ('-' = stdin)")->required();
  wit_cmd->add_option("-o,--output", out_path, "word output file ('-' = stdout)")->required();

  auto* dec_cmd = app.add_subcommand("decode", "read the assignment back off a solution word");
  dec_cmd->add_option("-d,--dir", dir_path, "directory written by compile")->required();
  dec_cmd->add_option("-w,--word", word_path, "word file ('-' = stdin)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit benchmark instances");
  gen_cmd->require_subcommand(1);
  auto* gen_cx = gen_cmd->add_subcommand("counterexample", "4-vertex period-bound refuter");
  gen_cx->add_option("-o,--output", out_path, "instance output ('-' = stdout)");
  int fam_n = 1;
  std::string witness_out;
  auto* gen_pf = gen_cmd->add_subcommand("prime-family", "exponential-period diamond family");
  gen_pf->add_option("--n", fam_n, "diamond count")->required();
  gen_pf->add_option("-o,--output", out_path, "instance output ('-' = stdout)");
  gen_pf->add_option("--witness-out", witness_out, "also write the round-robin witness word");
  int rnd_n = 4;
  cruav::Duration rd_max = 12, ft_max = 4;
  std::uint64_t seed = 0;
  auto* gen_rnd = gen_cmd->add_subcommand("random", "seeded random metric instance");
  gen_rnd->add_option("--n", rnd_n, "vertex count")->required();
  gen_rnd->add_option("--rd-max", rd_max, "deadline upper bound")->required();
  gen_rnd->add_option("--ft-max", ft_max, "flight-time upper bound")->required();
  gen_rnd->add_option("--seed", seed, "RNG seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decide_cmd) return cmd_decide(in_path, no_pruning, max_states);
    if (*sp_cmd) return cmd_shortest_period(in_path, max_len, max_states);
    if (*val_cmd) return cmd_validate(in_path, word_path);
    if (*bound_cmd) return cmd_bound(in_path);
    if (*sim_cmd) return cmd_simulate(in_path, word_path, periods);
    if (*psat_cmd) return cmd_psat_decide(formula_path);
    if (*compile_cmd) return cmd_compile(formula_path, dir_path);
    if (*wit_cmd) return cmd_witness(formula_path, out_path);
    if (*dec_cmd) return cmd_decode(dir_path, word_path);
    if (*gen_cx) return emit_instance(cruav::gen_counterexample(), out_path, "counterexample");
    if (*gen_pf) {
      cruav::PrimeFamilyInstance fam = cruav::gen_prime_family(fam_n);
      if (!witness_out.empty()) {
        if (fam.canonical_witness.empty()) throw IoError("witness too large to materialize");
        write_output(witness_out, cruav::serialize_word(fam.canonical_witness));
      }
      return emit_instance(fam.instance, out_path, "prime-family");
    }
    if (*gen_rnd) return emit_instance(cruav::gen_random_metric(rnd_n, rd_max, ft_max, seed),
                                       out_path, "random");
  } catch (const cruav::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
