#ifndef CRUAV_PERIODIC_SAT_HPP
#define CRUAV_PERIODIC_SAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cruav/instance.hpp"  // ParseError

namespace cruav {

/// CNF over two variable blocks. A literal is a signed integer: |v| in
/// [1, m] refers to x_{|v|} of block 0, |v| in (m, 2m] to x_{|v|-m} of
/// block 1; the sign is the polarity.
struct PeriodicCnf {
  int m = 0;  // variables per block, m > 2
  int h = 0;  // clause count, h > 0
  std::vector<std::vector<int>> clauses;
};

/// Truth assignment to one block, bit i-1 = x_i.
using Block = std::uint32_t;

PeriodicCnf parse_pcnf(const std::string& text);
std::string serialize_pcnf(const PeriodicCnf& cnf);

/// True iff the formula holds with block 0 assigned a and block 1 assigned b.
bool eval_transition(const PeriodicCnf& cnf, Block a, Block b);

struct PsatResult {
  bool sat = false;
  // cyclic block sequence A_0..A_{p-1}: every consecutive (cyclic) pair is a
  // satisfying transition
  std::vector<Block> blocks;
};

/// Decides the infinite conjunction by cycle search over the 2^m block
/// assignments (edge a->b iff eval_transition(a,b)). Throws
/// std::runtime_error when m exceeds the enumeration limit.
PsatResult decide_periodic_sat(const PeriodicCnf& cnf, int max_m = 20);

}  // namespace cruav

#endif
