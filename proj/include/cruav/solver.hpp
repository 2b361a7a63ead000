#ifndef CRUAV_SOLVER_HPP
#define CRUAV_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cruav/instance.hpp"

namespace cruav {

/// Node of the implicit configuration graph: current vertex plus, for every
/// vertex, the time elapsed since its last visit. States with any clock past
/// its deadline are never materialized.
struct ConfigState {
  Vertex at = 0;
  std::vector<Duration> clock;
};

/// prefix then cycle repeated indefinitely, replayed from all-zero clocks,
/// is an infinite deadline-respecting run; cycle covers every vertex.
struct Lasso {
  Word prefix;
  Word cycle;
};

enum class Pruning { Off, On };

constexpr std::uint64_t kDefaultStateBudget = 100'000'000ULL;

struct DecideResult {
  enum class Kind { Yes, No, BudgetExceeded } kind = Kind::No;
  std::optional<Lasso> lasso;
  std::uint64_t explored = 0;
};

/// Exact solvability decision by cycle search over the configuration graph.
/// Pruning::Off is the plain explicit search (the oracle); Pruning::On adds
/// domination pruning. Both return the same yes/no answer.
DecideResult decide(const Instance& inst, Pruning pruning,
                    std::uint64_t max_states = kDefaultStateBudget);

struct ShortestPeriodResult {
  enum class Kind { Found, NoneUpTo, BudgetExceeded } kind = Kind::NoneUpTo;
  int length = 0;  // valid when Found
  Word word;
  int max_len = 0;
  std::uint64_t explored = 0;
};

/// Minimum |u| over all valid solution words with |u| <= max_len, by
/// iterative deepening with partial-gap pruning. Only canonical rotations
/// (first letter = minimum vertex of the word) are enumerated; the returned
/// witness is the lexicographically least one of minimum length.
ShortestPeriodResult shortest_period(const Instance& inst, int max_len,
                                     std::uint64_t max_nodes = kDefaultStateBudget);

/// floor(max rd / min off-diagonal ft) — the literature's (refuted) period bound.
Duration claim1_bound(const Instance& inst);

struct SimulateResult {
  // clock vector after each arrival, starting with the all-zero initial state
  std::vector<std::vector<Duration>> trace;
  std::optional<Violation> violation;
};

/// Step-by-step replay of u repeated `periods` times from all-zero clocks.
/// Independent oracle for validate_word: for periods >= 2 they agree.
SimulateResult simulate(const Instance& inst, const Word& u, int periods);

}  // namespace cruav

#endif
