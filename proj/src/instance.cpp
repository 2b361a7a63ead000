#include "cruav/instance.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace cruav {

namespace {

// Keeps sums over any realistic word comfortably inside int64.
constexpr Duration kMaxMagnitude = 1'000'000'000'000'000LL;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Duration parse_int(const Line& line, const std::string& tok) {
  std::size_t pos = 0;
  Duration value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line.number, "non-integer token '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line.number, "non-integer token '" + tok + "'");
  if (value > kMaxMagnitude || value < -kMaxMagnitude)
    throw ParseError(line.number, "value out of range: " + tok);
  return value;
}

}  // namespace

std::string to_string(const Violation& v) {
  std::ostringstream out;
  switch (v.kind) {
    case ViolationKind::DeadlineExceeded:
      out << "deadline-exceeded vertex " << v.vertex << " gap " << v.gap << " limit " << v.limit;
      break;
    case ViolationKind::VertexNeverVisited:
      out << "vertex-never-visited vertex " << v.vertex;
      break;
    case ViolationKind::AdjacentRepeat:
      out << "adjacent-repeat vertex " << v.vertex;
      break;
    case ViolationKind::BadId:
      out << "bad-id vertex " << v.vertex;
      break;
  }
  return out.str();
}

Instance parse_instance(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t k = 0;
  auto next = [&]() -> const Line& {
    if (k >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "unexpected end of file");
    return lines[k++];
  };

  const Line& header = next();
  if (header.tokens.size() != 2 || header.tokens[0] != "cruav-instance" || header.tokens[1] != "v1")
    throw ParseError(header.number, "malformed header, expected 'cruav-instance v1'");

  const Line& nline = next();
  if (nline.tokens.size() != 2 || nline.tokens[0] != "n")
    throw ParseError(nline.number, "expected 'n <N>'");
  Duration n64 = parse_int(nline, nline.tokens[1]);
  if (n64 < 2 || n64 > 1'000'000) throw ParseError(nline.number, "n must be in [2, 1e6]");
  int n = static_cast<int>(n64);

  Instance inst;
  inst.n = n;
  inst.rd.resize(n);
  inst.ft.assign(static_cast<std::size_t>(n) * n, 0);

  const Line& rdline = next();
  if (rdline.tokens.empty() || rdline.tokens[0] != "rd" ||
      static_cast<int>(rdline.tokens.size()) != n + 1)
    throw ParseError(rdline.number, "expected 'rd' with " + std::to_string(n) + " values");
  for (int v = 0; v < n; ++v) {
    inst.rd[v] = parse_int(rdline, rdline.tokens[v + 1]);
    if (inst.rd[v] < 1) throw ParseError(rdline.number, "rd must be >= 1");
  }

  const Line* ftline = &next();
  if (!ftline->tokens.empty() && ftline->tokens[0] == "placeholder") {
    if (ftline->tokens.size() != 2) throw ParseError(ftline->number, "expected 'placeholder <P>'");
    Duration p = parse_int(*ftline, ftline->tokens[1]);
    if (p < 1) throw ParseError(ftline->number, "placeholder must be >= 1");
    inst.placeholder = p;
    ftline = &next();
  }
  if (ftline->tokens.size() != 1 || ftline->tokens[0] != "ft")
    throw ParseError(ftline->number, "expected 'ft'");

  for (int v = 0; v < n; ++v) {
    const Line& row = next();
    if (static_cast<int>(row.tokens.size()) != n)
      throw ParseError(row.number, "expected " + std::to_string(n) + " matrix entries");
    for (int w = 0; w < n; ++w) {
      Duration x = parse_int(row, row.tokens[w]);
      if (v == w && x != 0) throw ParseError(row.number, "nonzero diagonal entry");
      if (v != w && x < 1) throw ParseError(row.number, "off-diagonal entries must be >= 1");
      inst.at(v, w) = x;
      if (w < v && inst.at(w, v) != x)
        throw ParseError(row.number, "asymmetric matrix at (" + std::to_string(v) + "," +
                                         std::to_string(w) + ")");
    }
  }
  if (k < lines.size()) throw ParseError(lines[k].number, "trailing content");
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "cruav-instance v1\n";
  out << "n " << inst.n << "\n";
  out << "rd";
  for (int v = 0; v < inst.n; ++v) out << ' ' << inst.rd[v];
  out << "\n";
  if (inst.placeholder) out << "placeholder " << *inst.placeholder << "\n";
  out << "ft\n";
  for (int v = 0; v < inst.n; ++v) {
    for (int w = 0; w < inst.n; ++w) out << (w ? " " : "") << inst.at(v, w);
    out << "\n";
  }
  return out.str();
}

Word parse_word(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(lines.empty() ? 1 : lines[1].number, "expected a single 'word' line");
  const Line& line = lines[0];
  if (line.tokens.empty() || line.tokens[0] != "word")
    throw ParseError(line.number, "expected 'word <v0> <v1> ...'");
  if (line.tokens.size() < 2) throw ParseError(line.number, "empty word");
  Word u;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    Duration v = parse_int(line, line.tokens[i]);
    if (v < 0 || v > std::numeric_limits<int>::max())
      throw ParseError(line.number, "vertex id out of range");
    u.push_back(static_cast<Vertex>(v));
  }
  return u;
}

std::string serialize_word(const Word& u) {
  std::ostringstream out;
  out << "word";
  for (Vertex v : u) out << ' ' << v;
  out << "\n";
  return out.str();
}

std::vector<MetricViolation> check_metric(Instance& inst) {
  std::vector<MetricViolation> bad;
  for (int a = 0; a < inst.n; ++a)
    for (int b = 0; b < inst.n; ++b)
      for (int c = 0; c < inst.n; ++c)
        if (inst.at(a, c) > inst.at(a, b) + inst.at(b, c)) bad.push_back({a, b, c});
  if (bad.empty()) inst.metric_checked = true;
  return bad;
}

Instance metric_complete(const Instance& inst, Duration placeholder) {
  const int n = inst.n;
  constexpr Duration kInf = std::numeric_limits<Duration>::max() / 4;
  std::vector<Duration> d(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      Duration x = inst.at(v, w);
      d[static_cast<std::size_t>(v) * n + w] = (v != w && x == placeholder) ? kInf : x;
    }
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      Duration ab = d[static_cast<std::size_t>(a) * n + b];
      if (ab >= kInf) continue;
      for (int c = 0; c < n; ++c) {
        Duration bc = d[static_cast<std::size_t>(b) * n + c];
        if (bc >= kInf) continue;
        Duration& ac = d[static_cast<std::size_t>(a) * n + c];
        if (ab + bc < ac) ac = ab + bc;
      }
    }
  Instance out = inst;
  out.placeholder.reset();
  out.metric_checked = false;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      Duration closed = d[static_cast<std::size_t>(v) * n + w];
      Duration orig = inst.at(v, w);
      if (v != w && orig == placeholder) {
        if (closed >= kInf)
          throw std::runtime_error("metric_complete: placeholder pair (" + std::to_string(v) +
                                   "," + std::to_string(w) + ") is disconnected");
        out.at(v, w) = closed;
      } else if (closed != orig) {
        throw std::runtime_error("metric_complete: construction inconsistency, explicit entry (" +
                                 std::to_string(v) + "," + std::to_string(w) + ")=" +
                                 std::to_string(orig) + " exceeds shortest path " +
                                 std::to_string(closed));
      }
    }
  return out;
}

namespace {

std::optional<Violation> check_well_formed(const Instance& inst, const Word& u) {
  if (u.empty()) return Violation{-1, 0, 0, ViolationKind::BadId};
  for (Vertex v : u)
    if (v < 0 || v >= inst.n) return Violation{v, 0, 0, ViolationKind::BadId};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Vertex a = u[i], b = u[(i + 1) % u.size()];
    if (a == b) return Violation{a, 0, 0, ViolationKind::AdjacentRepeat};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_word(const Instance& inst, const Word& u) {
  if (auto bad = check_well_formed(inst, u)) return bad;
  const std::size_t len = u.size();
  // arrival[i] = time of arrival at u[i], with arrival[0] = 0
  std::vector<Duration> arrival(len, 0);
  for (std::size_t i = 1; i < len; ++i) arrival[i] = arrival[i - 1] + inst.at(u[i - 1], u[i]);
  Duration total = arrival[len - 1] + inst.at(u[len - 1], u[0]);

  std::vector<Duration> first(inst.n, -1), last(inst.n, -1);
  for (std::size_t i = 0; i < len; ++i) {
    Vertex v = u[i];
    if (first[v] < 0) {
      first[v] = arrival[i];
    } else {
      Duration gap = arrival[i] - last[v];
      if (gap > inst.rd[v]) return Violation{v, gap, inst.rd[v], ViolationKind::DeadlineExceeded};
    }
    last[v] = arrival[i];
  }
  for (Vertex v = 0; v < inst.n; ++v) {
    if (first[v] < 0) return Violation{v, 0, inst.rd[v], ViolationKind::VertexNeverVisited};
    Duration wrap = total - last[v] + first[v];
    if (wrap > inst.rd[v]) return Violation{v, wrap, inst.rd[v], ViolationKind::DeadlineExceeded};
  }
  return std::nullopt;
}

Duration word_duration(const Instance& inst, const Word& u) {
  if (u.empty()) throw std::invalid_argument("word_duration: empty word");
  for (Vertex v : u)
    if (v < 0 || v >= inst.n) throw std::invalid_argument("word_duration: bad vertex id");
  Duration total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += inst.at(u[i], u[(i + 1) % u.size()]);
  return total;
}

}  // namespace cruav
