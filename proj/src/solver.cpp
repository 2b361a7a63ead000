#include "cruav/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>

namespace cruav {

namespace {

void require_metric(const Instance& inst) {
  if (inst.metric_checked) return;
  for (int a = 0; a < inst.n; ++a)
    for (int b = 0; b < inst.n; ++b)
      for (int c = 0; c < inst.n; ++c)
        if (inst.at(a, c) > inst.at(a, b) + inst.at(b, c))
          throw std::invalid_argument("solver requires a metric instance (check_metric failed)");
}

// vertex followed by the clock vector
using StateKey = std::vector<Duration>;

struct KeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (Duration d : k) {
      h ^= static_cast<std::size_t>(d);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

bool dominates(const std::vector<Duration>& small, const std::vector<Duration>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

struct PathNode {
  Vertex at;
  std::vector<Duration> clock;
  StateKey key;
};

StateKey make_key(Vertex at, const std::vector<Duration>& clock) {
  StateKey k;
  k.reserve(clock.size() + 1);
  k.push_back(at);
  k.insert(k.end(), clock.begin(), clock.end());
  return k;
}

}  // namespace

DecideResult decide(const Instance& inst, Pruning pruning, std::uint64_t max_states) {
  require_metric(inst);
  const int n = inst.n;
  DecideResult result;

  // gray states carry their path index, black states -1
  std::unordered_map<StateKey, std::ptrdiff_t, KeyHash> colors;
  std::vector<PathNode> path;
  std::vector<std::vector<std::ptrdiff_t>> gray_at(n);        // path indices, per vertex
  std::vector<std::vector<std::vector<Duration>>> closed(n);  // black antichains, per vertex

  struct Frame {
    std::ptrdiff_t node;
    int next;
  };
  std::vector<Frame> frames;

  auto make_lasso = [&](std::ptrdiff_t ancestor, Vertex closing) {
    Lasso lasso;
    for (std::ptrdiff_t i = 0; i <= ancestor; ++i) lasso.prefix.push_back(path[i].at);
    for (std::ptrdiff_t i = ancestor + 1; i < static_cast<std::ptrdiff_t>(path.size()); ++i)
      lasso.cycle.push_back(path[i].at);
    lasso.cycle.push_back(closing);
    return lasso;
  };

  auto push_state = [&](Vertex at, std::vector<Duration> clock) {
    StateKey key = make_key(at, clock);
    colors[key] = static_cast<std::ptrdiff_t>(path.size());
    gray_at[at].push_back(static_cast<std::ptrdiff_t>(path.size()));
    path.push_back(PathNode{at, std::move(clock), std::move(key)});
    frames.push_back(Frame{static_cast<std::ptrdiff_t>(path.size()) - 1, 0});
    ++result.explored;
  };

  for (Vertex start = 0; start < n; ++start) {
    std::vector<Duration> zero(n, 0);
    if (colors.count(make_key(start, zero))) continue;
    if (result.explored >= max_states) {
      result.kind = DecideResult::Kind::BudgetExceeded;
      return result;
    }
    push_state(start, std::move(zero));

    while (!frames.empty()) {
      Frame& f = frames.back();
      const PathNode& node = path[f.node];
      bool descended = false;

      while (f.next < n) {
        Vertex w = f.next++;
        if (w == node.at) continue;
        Duration t = inst.at(node.at, w);
        bool feasible = true;
        for (Vertex x = 0; x < n; ++x)
          if (x != w && node.clock[x] + t > inst.rd[x]) {
            feasible = false;
            break;
          }
        if (!feasible || node.clock[w] + t > inst.rd[w]) continue;

        std::vector<Duration> c2(node.clock);
        for (Vertex x = 0; x < n; ++x) c2[x] += t;
        c2[w] = 0;

        StateKey key2 = make_key(w, c2);
        if (auto it = colors.find(key2); it != colors.end()) {
          if (it->second >= 0) {  // exact repeat of an on-path state
            result.kind = DecideResult::Kind::Yes;
            result.lasso = make_lasso(it->second, w);
            return result;
          }
          continue;  // fully explored, no cycle beneath it
        }
        if (pruning == Pruning::On) {
          // clocks pointwise <= an on-path occurrence of w: the path segment
          // from that occurrence can repeat forever
          bool closed_cycle = false;
          for (std::ptrdiff_t g : gray_at[w])
            if (dominates(c2, path[g].clock)) {
              result.kind = DecideResult::Kind::Yes;
              result.lasso = make_lasso(g, w);
              closed_cycle = true;
              break;
            }
          if (closed_cycle) return result;
          bool pruned = false;
          for (const auto& b : closed[w])
            if (dominates(b, c2)) {
              pruned = true;
              break;
            }
          if (pruned) continue;
        }
        if (result.explored >= max_states) {
          result.kind = DecideResult::Kind::BudgetExceeded;
          return result;
        }
        push_state(w, std::move(c2));
        descended = true;
        break;
      }
      if (descended) continue;

      // finished: mark black
      PathNode& done = path[f.node];
      colors[done.key] = -1;
      gray_at[done.at].pop_back();
      if (pruning == Pruning::On) {
        auto& store = closed[done.at];
        bool dominated = false;
        for (const auto& b : store)
          if (dominates(b, done.clock)) {
            dominated = true;
            break;
          }
        if (!dominated) {
          std::erase_if(store, [&](const std::vector<Duration>& b) { return dominates(done.clock, b); });
          store.push_back(done.clock);
        }
      }
      path.pop_back();
      frames.pop_back();
    }
  }
  result.kind = DecideResult::Kind::No;
  return result;
}

namespace {

struct WordSearch {
  const Instance& inst;
  int length;
  std::uint64_t* nodes;
  std::uint64_t max_nodes;
  bool budget_hit = false;

  Word u;
  std::vector<Duration> arrival;
  std::vector<Duration> last;   // arrival time of latest occurrence, -1 if unseen
  std::vector<Duration> first;  // arrival time of first occurrence, -1 if unseen
  int seen = 0;

  WordSearch(const Instance& i, int len, std::uint64_t* n, std::uint64_t mx)
      : inst(i), length(len), nodes(n), max_nodes(mx), last(i.n, -1), first(i.n, -1) {
    u.reserve(len);
    arrival.reserve(len);
  }

  bool complete() {
    Duration total = arrival.back() + inst.at(u.back(), u.front());
    for (Vertex v = 0; v < inst.n; ++v) {
      if (first[v] < 0) return false;
      if (total - last[v] + first[v] > inst.rd[v]) return false;
    }
    return true;
  }

  bool extend() {
    int k = static_cast<int>(u.size());
    if (k == length) return complete();
    Vertex prev = u.back();
    Duration tprev = arrival.back();
    for (Vertex w = 0; w < inst.n; ++w) {
      if (w == prev) continue;
      if (k == length - 1 && w == u.front()) continue;
      if (++*nodes > max_nodes) {
        budget_hit = true;
        return false;
      }
      Duration t = tprev + inst.at(prev, w);
      // a revisit later than rd after the previous visit can never recover
      bool dead = false;
      for (Vertex x = 0; x < inst.n; ++x) {
        if (last[x] < 0) continue;
        Duration deadline = last[x] + inst.rd[x];
        if (x == w ? t > deadline : t >= deadline) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      int unseen = inst.n - seen - (last[w] < 0 ? 1 : 0);
      if (unseen > length - 1 - k) continue;

      Duration old_last = last[w];
      bool fresh = first[w] < 0;
      if (fresh) {
        first[w] = t;
        ++seen;
      }
      last[w] = t;
      u.push_back(w);
      arrival.push_back(t);
      if (extend()) return true;
      if (budget_hit) return false;
      u.pop_back();
      arrival.pop_back();
      last[w] = old_last;
      if (fresh) {
        first[w] = -1;
        --seen;
      }
    }
    return false;
  }

  bool run() {
    u.push_back(0);
    arrival.push_back(0);
    first[0] = last[0] = 0;
    seen = 1;
    return extend();
  }
};

}  // namespace

ShortestPeriodResult shortest_period(const Instance& inst, int max_len, std::uint64_t max_nodes) {
  require_metric(inst);
  if (max_len < inst.n) throw std::invalid_argument("shortest_period: max_len must be >= n");
  ShortestPeriodResult result;
  result.max_len = max_len;
  for (int len = std::max(2, inst.n); len <= max_len; ++len) {
    WordSearch search(inst, len, &result.explored, max_nodes);
    if (search.run()) {
      result.kind = ShortestPeriodResult::Kind::Found;
      result.length = len;
      result.word = search.u;
      return result;
    }
    if (search.budget_hit) {
      result.kind = ShortestPeriodResult::Kind::BudgetExceeded;
      return result;
    }
  }
  result.kind = ShortestPeriodResult::Kind::NoneUpTo;
  return result;
}

Duration claim1_bound(const Instance& inst) {
  Duration max_rd = *std::max_element(inst.rd.begin(), inst.rd.end());
  Duration min_ft = 0;
  bool any = false;
  for (int v = 0; v < inst.n; ++v)
    for (int w = 0; w < inst.n; ++w)
      if (v != w && (!any || inst.at(v, w) < min_ft)) {
        min_ft = inst.at(v, w);
        any = true;
      }
  return max_rd / min_ft;
}

SimulateResult simulate(const Instance& inst, const Word& u, int periods) {
  if (periods < 1) throw std::invalid_argument("simulate: periods must be >= 1");
  SimulateResult result;
  for (Vertex v : u)
    if (v < 0 || v >= inst.n) {
      result.violation = Violation{v, 0, 0, ViolationKind::BadId};
      return result;
    }
  if (u.empty()) {
    result.violation = Violation{-1, 0, 0, ViolationKind::BadId};
    return result;
  }

  const std::size_t len = u.size();
  std::vector<Duration> clock(inst.n, 0);
  std::vector<bool> visited(inst.n, false);
  visited[u[0]] = true;
  result.trace.push_back(clock);

  std::size_t steps = static_cast<std::size_t>(periods) * len - 1;
  Vertex cur = u[0];
  for (std::size_t s = 1; s <= steps; ++s) {
    Vertex w = u[s % len];
    if (w == cur) {
      result.violation = Violation{w, 0, 0, ViolationKind::AdjacentRepeat};
      return result;
    }
    Duration t = inst.at(cur, w);
    for (Vertex x = 0; x < inst.n; ++x) {
      if (clock[x] + t > inst.rd[x]) {
        result.violation =
            Violation{x, clock[x] + t, inst.rd[x], ViolationKind::DeadlineExceeded};
        return result;
      }
    }
    for (Vertex x = 0; x < inst.n; ++x) clock[x] += t;
    clock[w] = 0;
    visited[w] = true;
    cur = w;
    result.trace.push_back(clock);
  }
  for (Vertex v = 0; v < inst.n; ++v)
    if (!visited[v]) {
      result.violation = Violation{v, 0, inst.rd[v], ViolationKind::VertexNeverVisited};
      return result;
    }
  return result;
}

}  // namespace cruav
