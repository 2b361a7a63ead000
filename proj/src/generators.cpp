#include "cruav/generators.hpp"

#include <random>
#include <stdexcept>

namespace cruav {

Instance gen_counterexample() {
  Instance inst;
  inst.n = 4;
  inst.rd = {5, 10, 6, 9};
  inst.ft.assign(16, 2);
  for (int v = 0; v < 4; ++v) inst.at(v, v) = 0;
  inst.at(0, 1) = inst.at(1, 0) = 1;
  inst.at(2, 3) = inst.at(3, 2) = 1;
  return inst;
}

namespace {

constexpr int kPrimes[16] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Beyond this the round-robin witness is too large to materialize; the
// instance itself is still emitted.
constexpr long long kMaxWitnessLetters = 10'000'000;

}  // namespace

PrimeFamilyInstance gen_prime_family(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("gen_prime_family: n must be >= 1");
  if (n > max_n || max_n > 16)
    throw std::invalid_argument("gen_prime_family: n exceeds the size cap");

  PrimeFamilyInstance out;
  out.n = n;
  const Duration T = 4 * static_cast<Duration>(n);
  out.T = T;

  // vertex order: v_t, diamond 1 branches, connector 1, diamond 2 branches,
  // ..., diamond n branches, v_b, v_m
  std::vector<std::vector<Vertex>> branches(n);
  std::vector<Vertex> connectors;  // connector i sits between diamonds i and i+1
  out.names.push_back("v_t");
  const Vertex v_t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < kPrimes[i]; ++j) {
      branches[i].push_back(static_cast<Vertex>(out.names.size()));
      out.names.push_back("d" + std::to_string(i + 1) + ":b" + std::to_string(j));
    }
    if (i + 1 < n) {
      connectors.push_back(static_cast<Vertex>(out.names.size()));
      out.names.push_back("c" + std::to_string(i + 1));
    }
  }
  const Vertex v_b = static_cast<Vertex>(out.names.size());
  out.names.push_back("v_b");
  const Vertex v_m = static_cast<Vertex>(out.names.size());
  out.names.push_back("v_m");

  const int nv = static_cast<int>(out.names.size());
  Instance raw;
  raw.n = nv;
  raw.rd.assign(nv, T);
  const Duration placeholder = 2 * T;
  raw.placeholder = placeholder;
  raw.ft.assign(static_cast<std::size_t>(nv) * nv, placeholder);
  for (int v = 0; v < nv; ++v) raw.at(v, v) = 0;

  auto edge = [&](Vertex a, Vertex b, Duration w) {
    raw.at(a, b) = w;
    raw.at(b, a) = w;
  };
  for (int i = 0; i < n; ++i) {
    Vertex above = i == 0 ? v_t : connectors[i - 1];
    Vertex below = i + 1 == n ? v_b : connectors[i];
    for (Vertex b : branches[i]) {
      raw.rd[b] = kPrimes[i] * T;
      edge(above, b, 1);
      edge(b, below, 1);
    }
  }
  edge(v_m, v_t, n);
  edge(v_m, v_b, n);

  out.instance = metric_complete(raw, placeholder);

  long long laps = 1;
  for (int i = 0; i < n; ++i) laps *= kPrimes[i];
  if (laps * (2LL * n + 2) <= kMaxWitnessLetters) {
    out.canonical_witness.reserve(laps * (2 * n + 2));
    for (long long k = 0; k < laps; ++k) {
      out.canonical_witness.push_back(v_t);
      for (int i = 0; i < n; ++i) {
        out.canonical_witness.push_back(branches[i][k % kPrimes[i]]);
        if (i + 1 < n) out.canonical_witness.push_back(connectors[i]);
      }
      out.canonical_witness.push_back(v_b);
      out.canonical_witness.push_back(v_m);
    }
  }
  return out;
}

Instance gen_random_metric(int nv, Duration rd_max, Duration ft_max, std::uint64_t seed) {
  if (nv < 2) throw std::invalid_argument("gen_random_metric: nv must be >= 2");
  if (rd_max < 2) throw std::invalid_argument("gen_random_metric: rd_max must be >= 2");
  if (ft_max < 1) throw std::invalid_argument("gen_random_metric: ft_max must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Duration> weight(1, ft_max);
  std::uniform_int_distribution<Duration> deadline(1, rd_max);

  Instance inst;
  inst.n = nv;
  inst.ft.assign(static_cast<std::size_t>(nv) * nv, 0);
  for (int v = 0; v < nv; ++v)
    for (int w = v + 1; w < nv; ++w) {
      Duration x = weight(rng);
      inst.at(v, w) = x;
      inst.at(w, v) = x;
    }
  // shortest-path closure keeps the matrix symmetric and makes it metric
  for (int b = 0; b < nv; ++b)
    for (int a = 0; a < nv; ++a)
      for (int c = 0; c < nv; ++c)
        if (inst.at(a, b) + inst.at(b, c) < inst.at(a, c))
          inst.at(a, c) = inst.at(a, b) + inst.at(b, c);

  inst.rd.resize(nv);
  for (int v = 0; v < nv; ++v) inst.rd[v] = deadline(rng);
  return inst;
}

}  // namespace cruav
