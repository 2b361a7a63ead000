#ifndef CRUAV_GENERATORS_HPP
#define CRUAV_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cruav/instance.hpp"

namespace cruav {

/// The 4-vertex instance refuting the max-RD/min-FT period bound:
/// rd = [5, 10, 6, 9], ft(0,1) = ft(2,3) = 1, all other off-diagonal 2.
Instance gen_counterexample();

/// Layered diamond instance with exponentially long shortest periods:
/// diamond i has p_i branch vertices (p_i the i-th prime) with rd = p_i * T,
/// T = 4n; the round-robin canonical witness is tight on every branch.
struct PrimeFamilyInstance {
  int n = 0;
  Duration T = 0;
  Instance instance;
  Word canonical_witness;
  std::vector<std::string> names;  // per-vertex, for inspection
};

PrimeFamilyInstance gen_prime_family(int n, int max_n = 16);

/// Seed-deterministic random instance: symmetric weights in [1, ft_max]
/// closed under shortest paths, rd in [1, rd_max].
Instance gen_random_metric(int nv, Duration rd_max, Duration ft_max, std::uint64_t seed);

}  // namespace cruav

#endif
