#ifndef CRUAV_REDUCTION_HPP
#define CRUAV_REDUCTION_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "cruav/instance.hpp"
#include "cruav/periodic_sat.hpp"

namespace cruav {

/// Bidirectional map between structured vertex names and dense ids.
/// Names: v_top, v_bot, v_mid, v{k}; side:{i}:{t|m|b}:{L|R};
/// cb:{i}:{j}:{a..f}; sb:{i}:{j}:{a..f}; cl:{j}; pvt:{i}:{L|R};
/// in:{i}:{down|up}:{L|R}; out:{i}:{down|up}:{L|R}.
struct GadgetMap {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> ids;

  Vertex add(const std::string& name);
  Vertex id(const std::string& name) const;  // throws on unknown name
  const std::string& name(Vertex v) const { return names.at(v); }
  int size() const { return static_cast<int>(names.size()); }
};

std::string serialize_map(const GadgetMap& map);
GadgetMap parse_map(const std::string& text);

struct ReductionOutput {
  Instance raw;       // with placeholder 2T entries
  Instance complete;  // metric-completed, passes check_metric
  GadgetMap map;
  Duration l = 0;
  Duration T = 0;
  int m = 0;
  int h = 0;
  PeriodicCnf cnf;
};

/// Compiles a PERIODIC SAT formula into a cyclic-routing instance whose
/// solvability matches satisfiability of the infinite conjunction.
ReductionOutput compile(const PeriodicCnf& cnf);

/// Builds the explicit solution word for a cyclic block sequence whose
/// consecutive transitions all satisfy the formula: one v_mid-prefixed
/// segment per block, each running v_top through all 2m variable gadgets to
/// v_bot, traversing each gadget in the direction of its assigned value and
/// detouring through every clause vertex exactly once.
Word build_witness_solution(const ReductionOutput& r, const std::vector<Block>& blocks);

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads the block sequence back off a valid solution word: splits at v_mid,
/// reads each gadget's direction from the vertex following its top anchor,
/// and checks block-1 gadgets of each segment against block-0 gadgets of the
/// next. Throws DecodeError on structural or consistency failure.
std::vector<Block> decode_solution(const GadgetMap& map, const Instance& complete, const Word& u);

}  // namespace cruav

#endif
