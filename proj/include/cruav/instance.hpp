#ifndef CRUAV_INSTANCE_HPP
#define CRUAV_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cruav {

using Vertex = int;
using Duration = std::int64_t;
using Word = std::vector<Vertex>;

/// A single-UAV cyclic-routing instance: n targets, a per-target relative
/// deadline rd[v] and a symmetric flight-time matrix ft. Matrices may be
/// stored pre-completion, with entries equal to `placeholder` standing for
/// not-yet-computed shortest distances.
struct Instance {
  int n = 0;
  std::vector<Duration> rd;
  std::vector<Duration> ft;  // n*n, row-major
  bool metric_checked = false;
  std::optional<Duration> placeholder;

  Duration& at(int v, int w) { return ft[static_cast<std::size_t>(v) * n + w]; }
  Duration at(int v, int w) const { return ft[static_cast<std::size_t>(v) * n + w]; }

  bool operator==(const Instance& o) const {
    return n == o.n && rd == o.rd && ft == o.ft && placeholder == o.placeholder;
  }
};

enum class ViolationKind { DeadlineExceeded, VertexNeverVisited, AdjacentRepeat, BadId };

struct Violation {
  Vertex vertex = -1;
  Duration gap = 0;
  Duration limit = 0;
  ViolationKind kind = ViolationKind::BadId;
};

std::string to_string(const Violation& v);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Word parse_word(const std::string& text);
std::string serialize_word(const Word& u);

struct MetricViolation {
  int a, b, c;  // ft(a,c) > ft(a,b) + ft(b,c)
};

/// Empty result means the triangle inequality holds for all ordered triples;
/// sets inst.metric_checked on success.
std::vector<MetricViolation> check_metric(Instance& inst);

/// Replaces every `placeholder` entry with the all-pairs shortest-path
/// distance over the explicit edges. Throws std::runtime_error if the closure
/// would shorten an explicit entry (a generator/compiler bug) or if some
/// placeholder pair is disconnected.
Instance metric_complete(const Instance& inst, Duration placeholder);

/// nullopt iff u^omega from all-zero clocks is a solution: u covers every
/// vertex and every cyclic inter-visit gap is <= rd (closed constraints).
std::optional<Violation> validate_word(const Instance& inst, const Word& u);

/// Cyclic duration of u: sum of ft over consecutive pairs plus the wrap edge.
Duration word_duration(const Instance& inst, const Word& u);

}  // namespace cruav

#endif
