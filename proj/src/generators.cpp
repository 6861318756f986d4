#include "sbub/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sbub/rng.hpp"

namespace sbub {

void GeneratorSpec::validate() const {
  switch (family) {
    case Family::er:
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
      break;
    case Family::ba:
      if (n < 2) throw std::invalid_argument("n must be at least 2");
      break;
    case Family::ws:
      if (k < 1 || 2ULL * k >= n) throw std::invalid_argument("k must satisfy 1 <= k < n/2");
      if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
      break;
  }
}

std::string GeneratorSpec::describe() const {
  std::ostringstream out;
  switch (family) {
    case Family::er: out << "er n=" << n << " p=" << p; break;
    case Family::ba: out << "ba n=" << n; break;
    case Family::ws: out << "ws n=" << n << " k=" << k << " beta=" << beta; break;
  }
  out << " seed=" << seed << " rng=splitmix64";
  return out.str();
}

Digraph gen_er(VertexId n, double p, std::uint64_t seed) {
  GeneratorSpec{Family::er, n, p, 0, 0.0, seed}.validate();
  std::vector<Arc> arcs;
  if (n < 2 || p == 0.0) return Digraph::from_arcs(n, std::move(arcs));

  const std::uint64_t row = n - 1;
  const std::uint64_t pairs = std::uint64_t{n} * row;
  SplitMix64 rng(seed);
  const double log_q = std::log1p(-p);
  // index enumerates ordered pairs row by row, skipping the diagonal
  std::uint64_t index = 0;
  while (true) {
    if (p < 1.0) {
      const double skip = std::floor(std::log(1.0 - rng.uniform()) / log_q);
      if (skip >= static_cast<double>(pairs - index)) break;
      index += static_cast<std::uint64_t>(skip);
    }
    if (index >= pairs) break;
    const auto u = static_cast<VertexId>(index / row);
    auto v = static_cast<VertexId>(index % row);
    if (v >= u) ++v;
    arcs.emplace_back(u, v);
    ++index;
  }
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph gen_ba(VertexId n, std::uint64_t seed) {
  GeneratorSpec{Family::ba, n, 0.0, 0, 0.0, seed}.validate();
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(n - 1);
  // every arc contributes both endpoints, so a uniform pick from this pool
  // is a pick proportional to total degree
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * std::size_t{n});
  for (VertexId v = 1; v < n; ++v) {
    const VertexId target = endpoints.empty() ? 0 : endpoints[rng.below(endpoints.size())];
    arcs.emplace_back(v, target);
    endpoints.push_back(v);
    endpoints.push_back(target);
  }
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph gen_ws(VertexId n, std::uint32_t k, double beta, std::uint64_t seed) {
  GeneratorSpec{Family::ws, n, 0.0, k, beta, seed}.validate();
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(std::size_t{n} * k);
  std::vector<VertexId> targets(k);
  for (VertexId i = 0; i < n; ++i) {
    for (std::uint32_t d = 0; d < k; ++d) targets[d] = static_cast<VertexId>((std::uint64_t{i} + d + 1) % n);
    for (std::uint32_t d = 0; d < k; ++d) {
      if (!(rng.uniform() < beta)) continue;
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.below(n));
      } while (w == i || std::find(targets.begin(), targets.end(), w) != targets.end());
      targets[d] = w;
    }
    for (VertexId w : targets) arcs.emplace_back(i, w);
  }
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::er: return gen_er(spec.n, spec.p, spec.seed);
    case Family::ba: return gen_ba(spec.n, spec.seed);
    case Family::ws: return gen_ws(spec.n, spec.k, spec.beta, spec.seed);
  }
  throw std::invalid_argument("unknown generator family");
}

}  // namespace sbub
