#include <random>

#include "cruav/periodic_sat.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cruav;

namespace {

// deterministic random formula; literals on distinct variables, so clauses
// are never trivial
PeriodicCnf random_cnf(std::mt19937_64& rng, int m, int h) {
  PeriodicCnf cnf;
  cnf.m = m;
  cnf.h = h;
  for (int j = 0; j < h; ++j) {
    int width = 1 + static_cast<int>(rng() % 3);
    std::vector<int> vars;
    std::vector<int> clause;
    while (static_cast<int>(clause.size()) < width) {
      int var = 1 + static_cast<int>(rng() % (2 * m));
      bool dup = false;
      for (int v : vars) dup |= v == var;
      if (dup) continue;
      vars.push_back(var);
      clause.push_back(rng() % 2 ? var : -var);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

}  // namespace

TEST_CASE("parse_pcnf reads the block encoding") {
  PeriodicCnf cnf = parse_pcnf("p pcnf 3 1\n1 5 0\n");
  CHECK(cnf.m == 3);
  CHECK(cnf.h == 1);
  REQUIRE(cnf.clauses.size() == 1);
  CHECK(cnf.clauses[0] == std::vector<int>{1, 5});  // x1 of block 0, x2 of block 1
  CHECK(parse_pcnf(serialize_pcnf(cnf)).clauses == cnf.clauses);
}

TEST_CASE("parse_pcnf skips comments and rejects invariant violations") {
  PeriodicCnf cnf = parse_pcnf("c a comment\np pcnf 3 2\n1 0\nc mid\n-4 6 0\n");
  CHECK(cnf.clauses.size() == 2);

  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 1\n1 -1 0\n"), ParseError);  // trivial clause
  CHECK_THROWS_AS(parse_pcnf("p pcnf 2 1\n1 0\n"), ParseError);     // m <= 2
  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 0\n"), ParseError);          // h = 0
  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 1\n0\n"), ParseError);       // empty clause
  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 1\n7 0\n"), ParseError);     // literal out of range
  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 1\n1 2\n"), ParseError);     // missing terminator
  CHECK_THROWS_AS(parse_pcnf("p pcnf 3 2\n1 0\n"), ParseError);     // clause count mismatch
}

TEST_CASE("eval_transition evaluates the two-block formula") {
  PeriodicCnf cnf = parse_pcnf("p pcnf 3 1\n1 5 0\n");  // x1^0 or x2^1
  CHECK(eval_transition(cnf, 0b000, 0b010));
  CHECK(!eval_transition(cnf, 0b000, 0b000));
  CHECK(eval_transition(cnf, 0b001, 0b000));

  PeriodicCnf chain = parse_pcnf("p pcnf 3 2\n1 0\n-4 0\n");  // x1^0 and not x1^1
  CHECK(eval_transition(chain, 0b001, 0b000));
  CHECK(!eval_transition(chain, 0b001, 0b001));
  CHECK(!eval_transition(chain, 0b000, 0b000));
}

TEST_CASE("decide_periodic_sat reference cases") {
  PeriodicCnf sat1 = parse_pcnf("p pcnf 3 1\n1 5 0\n");
  PsatResult r = decide_periodic_sat(sat1);
  REQUIRE(r.sat);
  CHECK(r.blocks.size() == 1);
  CHECK(eval_transition(sat1, r.blocks[0], r.blocks[0]));

  // x1^0 and not-x1^1: every edge leaves x1 true and arrives x1 false
  PeriodicCnf unsat = parse_pcnf("p pcnf 3 2\n1 0\n-4 0\n");
  CHECK(!decide_periodic_sat(unsat).sat);

  // block-0-only clause satisfiable by a self-loop
  PeriodicCnf selfloop = parse_pcnf("p pcnf 3 1\n2 3 0\n");
  PsatResult s = decide_periodic_sat(selfloop);
  REQUIRE(s.sat);
  CHECK(s.blocks.size() == 1);
}

TEST_CASE("sat witnesses satisfy every cyclic transition") {
  std::mt19937_64 rng(11);
  int sat_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PeriodicCnf cnf = random_cnf(rng, 3 + trial % 2, 1 + trial % 3);
    PsatResult r = decide_periodic_sat(cnf);
    if (!r.sat) continue;
    ++sat_seen;
    REQUIRE(!r.blocks.empty());
    std::size_t p = r.blocks.size();
    for (std::size_t j = 0; j < p; ++j)
      CHECK(eval_transition(cnf, r.blocks[j], r.blocks[(j + 1) % p]));
  }
  CHECK(sat_seen > 20);
}

TEST_CASE("decide_periodic_sat agrees with the closure and unrolling oracles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    PeriodicCnf cnf = random_cnf(rng, 3 + trial % 2, 1 + trial % 3);
    bool sat = decide_periodic_sat(cnf).sat;
    CHECK(sat == oracle::naive_periodic_sat(cnf));
    int horizon = (1 << cnf.m) + 1;
    if (sat) {
      CHECK(oracle::naive_has_walk(cnf, horizon));
    } else {
      CHECK(!oracle::naive_has_walk(cnf, horizon));
    }
  }
}

TEST_CASE("decide_periodic_sat is deterministic and budget-guarded") {
  PeriodicCnf cnf = parse_pcnf("p pcnf 4 2\n1 -6 0\n-2 7 0\n");
  PsatResult a = decide_periodic_sat(cnf);
  PsatResult b = decide_periodic_sat(cnf);
  CHECK(a.sat == b.sat);
  CHECK(a.blocks == b.blocks);
  CHECK_THROWS_AS(decide_periodic_sat(cnf, 3), std::runtime_error);
}
