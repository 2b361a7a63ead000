#include "cruav/periodic_sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cruav {

namespace {

struct PcnfLine {
  int number;
  std::vector<std::string> tokens;
};

std::vector<PcnfLine> tokenize(const std::string& text) {
  std::vector<PcnfLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    PcnfLine line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const PcnfLine& line, const std::string& tok) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line.number, "non-integer token '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line.number, "non-integer token '" + tok + "'");
  if (value < -1'000'000 || value > 1'000'000)
    throw ParseError(line.number, "value out of range: " + tok);
  return static_cast<int>(value);
}

}  // namespace

PeriodicCnf parse_pcnf(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const PcnfLine& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "pcnf")
    throw ParseError(header.number, "expected header 'p pcnf <m> <h>'");
  PeriodicCnf cnf;
  cnf.m = parse_int(header, header.tokens[2]);
  cnf.h = parse_int(header, header.tokens[3]);
  if (cnf.m <= 2) throw ParseError(header.number, "m must be > 2");
  if (cnf.h <= 0) throw ParseError(header.number, "h must be > 0");

  if (static_cast<int>(lines.size()) != cnf.h + 1)
    throw ParseError(lines.back().number, "expected exactly " + std::to_string(cnf.h) + " clauses");
  for (int j = 1; j <= cnf.h; ++j) {
    const PcnfLine& line = lines[j];
    std::vector<int> clause;
    bool terminated = false;
    for (const std::string& tok : line.tokens) {
      int lit = parse_int(line, tok);
      if (lit == 0) {
        terminated = true;
        break;
      }
      int var = std::abs(lit);
      if (var > 2 * cnf.m)
        throw ParseError(line.number, "literal " + tok + " out of range (m=" + std::to_string(cnf.m) + ")");
      for (int other : clause)
        if (other == -lit)
          throw ParseError(line.number, "trivial clause " + std::to_string(j) +
                                            ": both polarities of variable " + std::to_string(var));
      if (std::find(clause.begin(), clause.end(), lit) == clause.end()) clause.push_back(lit);
    }
    if (!terminated) throw ParseError(line.number, "clause not terminated by 0");
    if (clause.empty()) throw ParseError(line.number, "empty clause " + std::to_string(j));
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

std::string serialize_pcnf(const PeriodicCnf& cnf) {
  std::ostringstream out;
  out << "p pcnf " << cnf.m << ' ' << cnf.h << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

bool eval_transition(const PeriodicCnf& cnf, Block a, Block b) {
  for (const auto& clause : cnf.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      int var = std::abs(lit);
      bool value = var <= cnf.m ? ((a >> (var - 1)) & 1) : ((b >> (var - cnf.m - 1)) & 1);
      if (value == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

PsatResult decide_periodic_sat(const PeriodicCnf& cnf, int max_m) {
  if (cnf.m > max_m)
    throw std::runtime_error("decide_periodic_sat: m=" + std::to_string(cnf.m) +
                             " exceeds enumeration limit " + std::to_string(max_m));
  const Block count = Block{1} << cnf.m;

  // 0 = white, 1 = gray, 2 = black
  std::vector<unsigned char> color(count, 0);
  std::vector<Block> path;
  std::vector<std::size_t> pos_on_path(count, 0);

  struct Frame {
    Block node;
    Block next;
  };
  std::vector<Frame> frames;

  for (Block start = 0; start < count; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    pos_on_path[start] = path.size();
    path.push_back(start);
    frames.push_back({start, 0});

    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next < count) {
        Block b = f.next++;
        if (!eval_transition(cnf, f.node, b)) continue;
        if (color[b] == 1) {  // cycle found
          PsatResult result;
          result.sat = true;
          result.blocks.assign(path.begin() + pos_on_path[b], path.end());
          // rotate so the smallest block leads, for a canonical witness
          auto least = std::min_element(result.blocks.begin(), result.blocks.end());
          std::rotate(result.blocks.begin(), least, result.blocks.end());
          return result;
        }
        if (color[b] == 2) continue;
        color[b] = 1;
        pos_on_path[b] = path.size();
        path.push_back(b);
        frames.push_back({b, 0});
        descended = true;
        break;
      }
      if (descended) continue;
      color[f.node] = 2;
      path.pop_back();
      frames.pop_back();
    }
  }
  return PsatResult{};
}

}  // namespace cruav
