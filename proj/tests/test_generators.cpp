#include <algorithm>

#include "cruav/generators.hpp"
#include "cruav/solver.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cruav;

TEST_CASE("counterexample instance matches the reference values") {
  Instance cx = gen_counterexample();
  CHECK(cx.n == 4);
  CHECK(cx.rd == std::vector<Duration>{5, 10, 6, 9});
  CHECK(cx.at(0, 1) == 1);
  CHECK(cx.at(2, 3) == 1);
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w)
      if (v != w && !((v == 0 && w == 1) || (v == 1 && w == 0) || (v == 2 && w == 3) ||
                      (v == 3 && w == 2)))
        CHECK(cx.at(v, w) == 2);
  CHECK(check_metric(cx).empty());
  CHECK(claim1_bound(cx) == 10);
  CHECK(!validate_word(cx, Word{3, 2, 0, 1, 0, 2, 3, 0, 2, 1, 0}));
}

TEST_CASE("counterexample refutes the period bound") {
  Instance cx = gen_counterexample();
  CHECK(decide(cx, Pruning::On).kind == DecideResult::Kind::Yes);
  ShortestPeriodResult r = shortest_period(cx, 12);
  REQUIRE(r.kind == ShortestPeriodResult::Kind::Found);
  CHECK(r.length == 11);
  CHECK(r.length > claim1_bound(cx));
}

TEST_CASE("prime family n=1") {
  PrimeFamilyInstance fam = gen_prime_family(1);
  CHECK(fam.T == 4);
  CHECK(fam.instance.n == 5);  // v_t, two branches, v_b, v_m
  // branch deadlines 2T = 8, everything else T = 4
  int branch_count = 0;
  for (int v = 0; v < fam.instance.n; ++v) {
    if (fam.names[v].rfind("d1:", 0) == 0) {
      CHECK(fam.instance.rd[v] == 8);
      ++branch_count;
    } else {
      CHECK(fam.instance.rd[v] == 4);
    }
  }
  CHECK(branch_count == 2);
  CHECK(fam.canonical_witness.size() == 8);
  CHECK(!validate_word(fam.instance, fam.canonical_witness));
  // every branch gap in the round-robin is exactly tight: lap duration is T
  CHECK(word_duration(fam.instance, fam.canonical_witness) == 2 * fam.T);
}

TEST_CASE("prime family n=2 and n=3 structure") {
  PrimeFamilyInstance two = gen_prime_family(2);
  CHECK(two.canonical_witness.size() == 36);  // (2*2+2) * 6
  CHECK(!validate_word(two.instance, two.canonical_witness));
  CHECK(word_duration(two.instance, two.canonical_witness) == 6 * two.T);

  PrimeFamilyInstance three = gen_prime_family(3);
  CHECK(three.instance.n == 15);  // 2+3+5 branches, 2 connectors, v_t, v_b, v_m
  CHECK(*std::max_element(three.instance.rd.begin(), three.instance.rd.end()) == 60);  // 5T
  Instance copy = three.instance;
  CHECK(check_metric(copy).empty());
}

TEST_CASE("prime family witnesses validate for n up to 4") {
  for (int n = 1; n <= 4; ++n) {
    PrimeFamilyInstance fam = gen_prime_family(n);
    REQUIRE(!fam.canonical_witness.empty());
    CHECK(!validate_word(fam.instance, fam.canonical_witness));
  }
}

TEST_CASE("one lap fewer breaks the round-robin") {
  for (int n = 1; n <= 2; ++n) {
    PrimeFamilyInstance fam = gen_prime_family(n);
    std::size_t lap = 2 * static_cast<std::size_t>(n) + 2;
    Word shorter(fam.canonical_witness.begin(), fam.canonical_witness.end() - lap);
    CHECK(validate_word(fam.instance, shorter).has_value());
  }
}

TEST_CASE("prime family witness length grows super-polynomially") {
  // |witness| / largest-constant, computed from the construction formulas so
  // large instances need not be materialized
  long long primes[6] = {2, 3, 5, 7, 11, 13};
  double previous_ratio = 0;
  long long product = 1;
  for (int n = 1; n <= 6; ++n) {
    product *= primes[n - 1];
    double letters = static_cast<double>(2 * n + 2) * static_cast<double>(product);
    double largest_constant = static_cast<double>(primes[n - 1]) * 4 * n;
    double ratio = letters / largest_constant;
    if (n >= 3) CHECK(ratio >= 2 * previous_ratio);
    previous_ratio = ratio;
    if (n <= 4) {
      PrimeFamilyInstance fam = gen_prime_family(n);
      CHECK(static_cast<double>(fam.canonical_witness.size()) == letters);
      CHECK(*std::max_element(fam.instance.rd.begin(), fam.instance.rd.end()) ==
            static_cast<Duration>(largest_constant));
    }
  }
}

TEST_CASE("prime family rejects out-of-range sizes") {
  CHECK_THROWS_AS(gen_prime_family(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_prime_family(17), std::invalid_argument);
}

TEST_CASE("random metric generator is deterministic and metric") {
  Instance a = gen_random_metric(5, 12, 4, 424242);
  Instance b = gen_random_metric(5, 12, 4, 424242);
  CHECK(a == b);
  Instance c = gen_random_metric(5, 12, 4, 424243);
  CHECK(!(a == c));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance inst = gen_random_metric(2 + seed % 4, 12, 4, seed);
    CHECK(check_metric(inst).empty());
    for (int v = 0; v < inst.n; ++v) {
      CHECK(inst.rd[v] >= 1);
      CHECK(inst.rd[v] <= 12);
      for (int w = 0; w < inst.n; ++w) {
        CHECK(inst.at(v, w) == inst.at(w, v));
        if (v != w) {
          CHECK(inst.at(v, w) >= 1);
          CHECK(inst.at(v, w) <= 4);
        }
      }
    }
  }
}
