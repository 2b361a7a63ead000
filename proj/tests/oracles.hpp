#ifndef CRUAV_TESTS_ORACLES_HPP
#define CRUAV_TESTS_ORACLES_HPP

// Deliberately naive reference implementations, kept independent of the
// library's search code so the two can be checked against each other.

#include <cstdint>
#include <vector>

#include "cruav/instance.hpp"
#include "cruav/periodic_sat.hpp"

namespace oracle {

// Minimum length of a valid cyclic word with length <= max_len, by plain
// enumeration of all adjacent-distinct words starting at vertex 0 (every
// valid word covers vertex 0 and validity is rotation-invariant), each
// checked with validate_word. Returns 0 if none exists up to max_len.
int naive_shortest_period(const cruav::Instance& inst, int max_len);

// Whether a length-k chain of block assignments A_0..A_k exists with every
// consecutive transition satisfying the formula (the k-step unrolling).
bool naive_has_walk(const cruav::PeriodicCnf& cnf, int k);

// Periodic satisfiability by boolean-matrix transitive closure over the 2^m
// block assignments: sat iff some assignment reaches itself.
bool naive_periodic_sat(const cruav::PeriodicCnf& cnf);

}  // namespace oracle

#endif
