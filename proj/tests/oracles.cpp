#include "oracles.hpp"

namespace oracle {

namespace {

bool enumerate(const cruav::Instance& inst, cruav::Word& u, int target) {
  if (static_cast<int>(u.size()) == target) return !cruav::validate_word(inst, u).has_value();
  for (cruav::Vertex w = 0; w < inst.n; ++w) {
    if (w == u.back()) continue;
    u.push_back(w);
    if (enumerate(inst, u, target)) return true;
    u.pop_back();
  }
  return false;
}

}  // namespace

int naive_shortest_period(const cruav::Instance& inst, int max_len) {
  for (int len = 2; len <= max_len; ++len) {
    cruav::Word u{0};
    if (enumerate(inst, u, len)) return len;
  }
  return 0;
}

bool naive_has_walk(const cruav::PeriodicCnf& cnf, int k) {
  const std::size_t count = std::size_t{1} << cnf.m;
  std::vector<char> alive(count, 1);  // assignments from which a length-j walk remains
  for (int j = 0; j < k; ++j) {
    std::vector<char> next(count, 0);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (alive[b] && cruav::eval_transition(cnf, static_cast<cruav::Block>(a),
                                               static_cast<cruav::Block>(b))) {
          next[a] = 1;
          break;
        }
    alive.swap(next);
  }
  for (char x : alive)
    if (x) return true;
  return false;
}

bool naive_periodic_sat(const cruav::PeriodicCnf& cnf) {
  const std::size_t count = std::size_t{1} << cnf.m;
  std::vector<char> reach(count * count, 0);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      reach[a * count + b] = cruav::eval_transition(cnf, static_cast<cruav::Block>(a),
                                                    static_cast<cruav::Block>(b));
  for (std::size_t via = 0; via < count; ++via)
    for (std::size_t a = 0; a < count; ++a)
      if (reach[a * count + via])
        for (std::size_t b = 0; b < count; ++b)
          if (reach[via * count + b]) reach[a * count + b] = 1;
  for (std::size_t a = 0; a < count; ++a)
    if (reach[a * count + a]) return true;
  return false;
}

}  // namespace oracle
