#include "cruav/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cruav {

Vertex GadgetMap::add(const std::string& name) {
  auto [it, inserted] = ids.emplace(name, static_cast<Vertex>(names.size()));
  if (!inserted) throw std::logic_error("GadgetMap: duplicate name " + name);
  names.push_back(name);
  return it->second;
}

Vertex GadgetMap::id(const std::string& name) const {
  auto it = ids.find(name);
  if (it == ids.end()) throw std::out_of_range("GadgetMap: unknown name " + name);
  return it->second;
}

std::string serialize_map(const GadgetMap& map) {
  std::ostringstream out;
  for (Vertex v = 0; v < map.size(); ++v) out << v << ' ' << map.names[v] << "\n";
  return out.str();
}

GadgetMap parse_map(const std::string& text) {
  GadgetMap map;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    long long id = -1;
    std::string name;
    if (!(ls >> id >> name)) {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(number, "expected '<id> <name>'");
    }
    if (id != map.size()) throw ParseError(number, "ids must be dense and ascending");
    map.add(name);
  }
  return map;
}

namespace {

std::string side_name(int g, char row, char lr) {
  return "side:" + std::to_string(g) + ":" + row + ":" + lr;
}

std::string box_name(bool separator, int g, int j, char letter) {
  return std::string(separator ? "sb" : "cb") + ":" + std::to_string(g) + ":" + std::to_string(j) +
         ":" + letter;
}

std::string pvt_name(int i, char lr) { return "pvt:" + std::to_string(i) + ":" + lr; }

std::string inout_name(const char* kind, int i, const char* dir, char lr) {
  return std::string(kind) + ":" + std::to_string(i) + ":" + dir + ":" + lr;
}

std::string clause_name(int j) { return "cl:" + std::to_string(j); }

// Column c (1-based, of 4h+2) of gadget g's row: box, column letters and
// whether it is the odd (a,b,c) or even (f,e,d) half.
struct Column {
  bool separator;
  int box;   // sb: 0..h, cb: 1..h
  bool odd;  // first column of its box
};

Column column_info(int h, int c) {
  // boxes in order: sb0, cb1, sb1, cb2, ..., cbh, sbh; two columns each
  int box_index = (c - 1) / 2;  // 0-based box position in the row
  bool odd = (c % 2) == 1;
  if (box_index % 2 == 0) return {true, box_index / 2, odd};
  return {false, box_index / 2 + 1, odd};
}

std::string column_vertex(int g, int h, int c, int row) {
  // row: 0 = top, 1 = mid, 2 = bottom
  Column col = column_info(h, c);
  static const char odd_letters[3] = {'a', 'b', 'c'};
  static const char even_letters[3] = {'f', 'e', 'd'};
  char letter = col.odd ? odd_letters[row] : even_letters[row];
  return box_name(col.separator, g, col.box, letter);
}

}  // namespace

ReductionOutput compile(const PeriodicCnf& cnf) {
  if (cnf.m <= 2 || cnf.h <= 0) throw std::invalid_argument("compile: requires m > 2 and h > 0");
  const int m = cnf.m, h = cnf.h;
  const Duration l = 24LL * h + 34;
  const Duration T =
      2 * (m * (2 * (3 * m + 1) * l + l) + m * (2 * (3 * m + 2) * l + l) + l + 2 * h);

  ReductionOutput r;
  r.m = m;
  r.h = h;
  r.l = l;
  r.T = T;
  r.cnf = cnf;
  GadgetMap& map = r.map;

  map.add("v_top");
  map.add("v_bot");
  map.add("v_mid");
  for (int k = 1; k <= 2 * m - 1; ++k) map.add("v" + std::to_string(k));
  for (int g = 1; g <= 2 * m; ++g) {
    for (char lr : {'L', 'R'})
      for (char row : {'t', 'm', 'b'}) map.add(side_name(g, row, lr));
    for (int j = 0; j <= h; ++j)
      for (char letter : {'a', 'b', 'c', 'd', 'e', 'f'}) map.add(box_name(true, g, j, letter));
    for (int j = 1; j <= h; ++j)
      for (char letter : {'a', 'b', 'c', 'd', 'e', 'f'}) map.add(box_name(false, g, j, letter));
  }
  for (int j = 1; j <= h; ++j) map.add(clause_name(j));
  for (int i = 1; i <= m; ++i) {
    for (char lr : {'L', 'R'}) {
      map.add(pvt_name(i, lr));
      map.add(inout_name("in", i, "down", lr));
      map.add(inout_name("out", i, "up", lr));
      map.add(inout_name("in", i, "up", lr));
      map.add(inout_name("out", i, "down", lr));
    }
  }

  const int n = map.size();
  Instance& inst = r.raw;
  inst.n = n;
  inst.rd.assign(n, 0);
  inst.ft.assign(static_cast<std::size_t>(n) * n, 2 * T);
  inst.placeholder = 2 * T;
  for (int v = 0; v < n; ++v) inst.at(v, v) = 0;

  auto edge = [&](const std::string& a, const std::string& b, Duration w) {
    Vertex va = map.id(a), vb = map.id(b);
    inst.at(va, vb) = w;
    inst.at(vb, va) = w;
  };
  auto set_rd = [&](const std::string& name, Duration value) { inst.rd[map.id(name)] = value; };

  // relative deadlines
  set_rd("v_top", T);
  set_rd("v_bot", T);
  set_rd("v_mid", T);
  for (int k = 1; k <= 2 * m - 1; ++k) set_rd("v" + std::to_string(k), T + 2 * h);
  for (int g = 1; g <= 2 * m; ++g) {
    for (char lr : {'L', 'R'})
      for (char row : {'t', 'm', 'b'}) set_rd(side_name(g, row, lr), T + l + 2 * h);
    for (int c = 1; c <= 4 * h + 2; ++c)
      for (int row = 0; row < 3; ++row) set_rd(column_vertex(g, h, c, row), T + l + 2 * h);
  }
  for (int j = 1; j <= h; ++j) set_rd(clause_name(j), 3 * T / 2);
  for (int i = 1; i <= m; ++i) {
    Duration pvt_rd = T / 2 + m * (2 * (3 * m + 2) * l + l) - (2 * i - 1) * l + 4 * h;
    for (char lr : {'L', 'R'}) {
      set_rd(pvt_name(i, lr), pvt_rd);
      set_rd(inout_name("in", i, "down", lr), 3 * T / 2);
      set_rd(inout_name("out", i, "up", lr), 3 * T / 2);
      set_rd(inout_name("in", i, "up", lr), 3 * T / 2);
      set_rd(inout_name("out", i, "down", lr), 3 * T / 2);
    }
  }

  // variable gadget rows and sides
  for (int g = 1; g <= 2 * m; ++g) {
    for (char lr : {'L', 'R'}) {
      edge(side_name(g, 't', lr), side_name(g, 'm', lr), 2);
      edge(side_name(g, 'm', lr), side_name(g, 'b', lr), 2);
    }
    for (int c = 1; c <= 4 * h + 2; ++c) {
      edge(column_vertex(g, h, c, 0), column_vertex(g, h, c, 1), 2);
      edge(column_vertex(g, h, c, 1), column_vertex(g, h, c, 2), 2);
      if (c > 1) {
        edge(column_vertex(g, h, c - 1, 0), column_vertex(g, h, c, 0), 2);
        edge(column_vertex(g, h, c - 1, 2), column_vertex(g, h, c, 2), 2);
      }
    }
    std::string top_anchor = g == 1 ? "v_top" : "v" + std::to_string(g - 1);
    std::string bot_anchor = g == 2 * m ? "v_bot" : "v" + std::to_string(g);
    Duration w_top = (g <= m ? (3 * m + 1) : (3 * m + 2)) * l;
    Duration w_bot = (g >= m ? (3 * m + 2) : (3 * m + 1)) * l;  // gadget m's exit is the exception
    edge(top_anchor, side_name(g, 't', 'L'), w_top);
    edge(top_anchor, side_name(g, 't', 'R'), w_top);
    edge(side_name(g, 'b', 'L'), bot_anchor, w_bot);
    edge(side_name(g, 'b', 'R'), bot_anchor, w_bot);
  }

  // clause attachment
  for (int j = 1; j <= h; ++j) {
    for (int lit : cnf.clauses[j - 1]) {
      int var = std::abs(lit);
      int g = var;  // var <= m is block 0 (gadget var), var > m is block 1 (gadget var)
      if (lit > 0) {
        edge(clause_name(j), box_name(false, g, j, 'c'), 2);
        edge(clause_name(j), box_name(false, g, j, 'd'), 2);
      } else {
        edge(clause_name(j), box_name(false, g, j, 'a'), 2);
        edge(clause_name(j), box_name(false, g, j, 'f'), 2);
      }
    }
  }

  // consistency gadgets
  for (int i = 1; i <= m; ++i) {
    for (char lr : {'L', 'R'}) {
      edge(pvt_name(i, lr), inout_name("in", i, "down", lr), 2);
      edge(pvt_name(i, lr), inout_name("out", i, "up", lr), 2);
      edge(pvt_name(i, lr), inout_name("in", i, "up", lr), 2);
      edge(pvt_name(i, lr), inout_name("out", i, "down", lr), 2);
    }
    edge(inout_name("in", i, "down", 'L'), side_name(i, 'b', 'L'), 2);
    edge(inout_name("in", i, "down", 'L'), box_name(true, i, 0, 'c'), 2);
    edge(inout_name("out", i, "up", 'L'), side_name(i, 't', 'L'), 2);
    edge(inout_name("out", i, "up", 'L'), box_name(true, i, 0, 'a'), 2);
    edge(inout_name("in", i, "down", 'R'), box_name(true, i, h, 'f'), 2);
    edge(inout_name("in", i, "down", 'R'), side_name(i, 'b', 'R'), 2);
    edge(inout_name("out", i, "up", 'R'), box_name(true, i, h, 'd'), 2);
    edge(inout_name("out", i, "up", 'R'), side_name(i, 't', 'R'), 2);
    edge(inout_name("in", i, "up", 'L'), side_name(i + m, 'b', 'L'), 2);
    edge(inout_name("in", i, "up", 'L'), box_name(true, i + m, 0, 'c'), 2);
    edge(inout_name("out", i, "down", 'L'), side_name(i + m, 't', 'L'), 2);
    edge(inout_name("out", i, "down", 'L'), box_name(true, i + m, 0, 'a'), 2);
    edge(inout_name("in", i, "up", 'R'), box_name(true, i + m, h, 'f'), 2);
    edge(inout_name("in", i, "up", 'R'), side_name(i + m, 'b', 'R'), 2);
    edge(inout_name("out", i, "down", 'R'), box_name(true, i + m, h, 'd'), 2);
    edge(inout_name("out", i, "down", 'R'), side_name(i + m, 't', 'R'), 2);
  }

  edge("v_mid", "v_top", T / 4);
  edge("v_mid", "v_bot", T / 4);

  r.complete = metric_complete(r.raw, 2 * T);
  if (!check_metric(r.complete).empty())
    throw std::logic_error("compile: completed instance fails the metric check");
  return r;
}

namespace {

// One gadget's interior traversal, anchor to anchor exclusive. `value` picks
// the direction, `block1` picks the up-entry/down-exit consistency vertices.
// detour_at[j] true means this gadget serves clause j in this segment.
void traverse_gadget(const ReductionOutput& r, int g, bool value,
                     const std::vector<bool>& detour_at, std::vector<std::string>& out) {
  const int h = r.h;
  const bool block1 = g > r.m;
  const int i = block1 ? g - r.m : g;
  const char* entry_dir = block1 ? "up" : "down";
  const char* exit_dir = block1 ? "down" : "up";
  const int cols = 4 * h + 2;

  auto column_down = [&](int c) {
    for (int row = 0; row < 3; ++row) out.push_back(column_vertex(g, h, c, row));
  };
  auto column_up = [&](int c) {
    for (int row = 2; row >= 0; --row) out.push_back(column_vertex(g, h, c, row));
  };
  auto maybe_detour = [&](int c) {
    // within-box horizontal step from column c to its partner; clause boxes
    // occupy columns 4j-1, 4j
    Column col = column_info(h, c);
    if (!col.separator && detour_at[col.box]) out.push_back(clause_name(col.box));
  };

  if (value) {
    // enter left, serpentine left-to-right, leave right
    out.push_back(side_name(g, 't', 'L'));
    out.push_back(side_name(g, 'm', 'L'));
    out.push_back(side_name(g, 'b', 'L'));
    out.push_back(inout_name("in", i, entry_dir, 'L'));
    out.push_back(pvt_name(i, 'L'));
    out.push_back(inout_name("out", i, exit_dir, 'L'));
    for (int c = 1; c <= cols; c += 2) {
      column_down(c);       // ends at bottom
      maybe_detour(c);      // bottom step c -> d detours for positive literals
      column_up(c + 1);     // ends at top
    }
    out.push_back(inout_name("in", i, entry_dir, 'R'));
    out.push_back(pvt_name(i, 'R'));
    out.push_back(inout_name("out", i, exit_dir, 'R'));
    out.push_back(side_name(g, 't', 'R'));
    out.push_back(side_name(g, 'm', 'R'));
    out.push_back(side_name(g, 'b', 'R'));
  } else {
    // mirror image: enter right, serpentine right-to-left, leave left
    out.push_back(side_name(g, 't', 'R'));
    out.push_back(side_name(g, 'm', 'R'));
    out.push_back(side_name(g, 'b', 'R'));
    out.push_back(inout_name("in", i, entry_dir, 'R'));
    out.push_back(pvt_name(i, 'R'));
    out.push_back(inout_name("out", i, exit_dir, 'R'));
    for (int c = cols; c >= 2; c -= 2) {
      column_up(c);         // ends at top
      maybe_detour(c);      // top step f -> a detours for negative literals
      column_down(c - 1);   // ends at bottom
    }
    out.push_back(inout_name("in", i, entry_dir, 'L'));
    out.push_back(pvt_name(i, 'L'));
    out.push_back(inout_name("out", i, exit_dir, 'L'));
    out.push_back(side_name(g, 't', 'L'));
    out.push_back(side_name(g, 'm', 'L'));
    out.push_back(side_name(g, 'b', 'L'));
  }
}

bool block_bit(Block b, int var) { return (b >> (var - 1)) & 1; }

}  // namespace

Word build_witness_solution(const ReductionOutput& r, const std::vector<Block>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("build_witness_solution: empty block sequence");
  const int m = r.m, h = r.h;
  const std::size_t p = blocks.size();

  std::vector<std::string> names;
  for (std::size_t seg = 0; seg < p; ++seg) {
    Block a = blocks[seg];
    Block b = blocks[(seg + 1) % p];
    auto value_of = [&](int g) { return g <= m ? block_bit(a, g) : block_bit(b, g - m); };

    // which gadget serves each clause: the lowest-index one whose literal is
    // satisfied under (a, b)
    std::vector<int> server(h + 1, 0);
    for (int j = 1; j <= h; ++j) {
      int best = 0;
      for (int lit : r.cnf.clauses[j - 1]) {
        int g = std::abs(lit);
        bool value = value_of(g);
        if (value == (lit > 0) && (best == 0 || g < best)) best = g;
      }
      if (best == 0)
        throw std::logic_error("build_witness_solution: clause " + std::to_string(j) +
                               " unsatisfied in segment " + std::to_string(seg));
      server[j] = best;
    }

    names.push_back("v_mid");
    names.push_back("v_top");
    for (int g = 1; g <= 2 * m; ++g) {
      std::vector<bool> detour_at(h + 1, false);
      for (int j = 1; j <= h; ++j) detour_at[j] = server[j] == g;
      traverse_gadget(r, g, value_of(g), detour_at, names);
      names.push_back(g == 2 * m ? "v_bot" : "v" + std::to_string(g));
    }
  }

  Word u;
  u.reserve(names.size());
  for (const std::string& name : names) u.push_back(r.map.id(name));
  return u;
}

std::vector<Block> decode_solution(const GadgetMap& map, const Instance& complete, const Word& u) {
  // recover m and h from the name space
  int m = 0, h = 0;
  for (const std::string& name : map.names) {
    if (name.rfind("pvt:", 0) == 0) ++m;
    if (name.rfind("cl:", 0) == 0) ++h;
  }
  m /= 2;  // L and R
  if (m <= 2 || h <= 0) throw DecodeError("map does not describe a reduction instance");

  if (validate_word(complete, u)) throw DecodeError("word is not a valid solution");

  const Vertex v_mid = map.id("v_mid");
  const Vertex v_top = map.id("v_top");
  const Vertex v_bot = map.id("v_bot");

  std::vector<std::size_t> mids;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] == v_mid) mids.push_back(k);
  if (mids.empty()) throw DecodeError("word contains no v_mid; cannot split into segments");

  std::vector<Word> segments;
  for (std::size_t s = 0; s < mids.size(); ++s) {
    std::size_t begin = mids[s] + 1;
    std::size_t end = s + 1 < mids.size() ? mids[s + 1] : u.size();
    Word seg(u.begin() + begin, u.begin() + end);
    if (s + 1 == mids.size())  // wrap: the tail before the first v_mid
      seg.insert(seg.end(), u.begin(), u.begin() + mids[0]);
    if (seg.empty()) throw DecodeError("empty segment between v_mid occurrences");
    segments.push_back(std::move(seg));
  }

  if (segments[0].front() == v_bot && segments[0].back() == v_top) {
    Word reversed(u.rbegin(), u.rend());
    return decode_solution(map, complete, reversed);
  }
  for (const Word& seg : segments)
    if (seg.front() != v_top || seg.back() != v_bot)
      throw DecodeError("segment does not run v_top to v_bot");

  const std::size_t p = segments.size();
  // direction of every gadget in every segment
  std::vector<std::vector<bool>> value(p, std::vector<bool>(2 * m + 1, false));
  for (std::size_t s = 0; s < p; ++s) {
    const Word& seg = segments[s];
    for (int g = 1; g <= 2 * m; ++g) {
      Vertex anchor = g == 1 ? v_top : map.id("v" + std::to_string(g - 1));
      auto it = std::find(seg.begin(), seg.end(), anchor);
      if (it == seg.end() || it + 1 == seg.end())
        throw DecodeError("segment misses anchor of gadget " + std::to_string(g));
      Vertex following = *(it + 1);
      if (following == map.id(side_name(g, 't', 'L')))
        value[s][g] = true;
      else if (following == map.id(side_name(g, 't', 'R')))
        value[s][g] = false;
      else
        throw DecodeError("gadget " + std::to_string(g) + " not entered via a side top vertex");
    }
  }
  // block-1 gadgets of segment s must agree with block-0 gadgets of segment s+1
  for (std::size_t s = 0; s < p; ++s)
    for (int i = 1; i <= m; ++i)
      if (value[s][i + m] != value[(s + 1) % p][i])
        throw DecodeError("inconsistent assignment of variable " + std::to_string(i) +
                          " between segments " + std::to_string(s) + " and " +
                          std::to_string((s + 1) % p));

  std::vector<Block> blocks(p, 0);
  for (std::size_t s = 0; s < p; ++s)
    for (int i = 1; i <= m; ++i)
      if (value[s][i]) blocks[s] |= Block{1} << (i - 1);
  return blocks;
}

}  // namespace cruav
