#include "vmc/graph_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vmc/rng.hpp"
#include "vmc/union_find.hpp"

namespace vmc {

std::vector<std::uint64_t> partition_counts(const std::vector<double>& alpha, std::uint64_t n) {
  const std::size_t k = alpha.size();
  std::vector<std::uint64_t> counts(k);
  std::vector<double> remainders(k);
  long double exact_total = 0.0L;
  std::uint64_t base_total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double exact = alpha[i] * static_cast<double>(n);
    exact_total += exact;
    counts[i] = static_cast<std::uint64_t>(std::floor(exact));
    remainders[i] = exact - std::floor(exact);
    base_total += counts[i];
  }
  const std::uint64_t target = static_cast<std::uint64_t>(std::llroundl(exact_total));
  std::uint64_t leftover = target > base_total ? target - base_total : 0;

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t pos = 0; leftover > 0; pos = (pos + 1) % k, --leftover) {
    ++counts[order[pos]];
  }
  return counts;
}

namespace {

struct PairSpace {
  std::uint64_t decode_a(std::uint64_t e) const;  // defined per block kind below
};

// Triangular decode: pairs (a, b), a < b, over m vertices, ordered by a then b.
// f(a) = a(2m - a - 1)/2 pairs precede row a.
std::uint64_t row_of_triangular(std::uint64_t e, std::uint64_t m) {
  const double md = static_cast<double>(m);
  const double disc = (2.0 * md - 1.0) * (2.0 * md - 1.0) - 8.0 * static_cast<double>(e);
  std::uint64_t a = static_cast<std::uint64_t>(
      std::max(0.0, std::floor(((2.0 * md - 1.0) - std::sqrt(std::max(0.0, disc))) / 2.0)));
  auto pairs_before = [m](std::uint64_t row) { return row * (2 * m - row - 1) / 2; };
  while (a + 1 < m && pairs_before(a + 1) <= e) ++a;
  while (a > 0 && pairs_before(a) > e) --a;
  return a;
}

}  // namespace

GraphSample sample_graph(const ModelParams& params, double t, std::uint64_t n,
                         std::uint64_t seed) {
  if (t < 0.0) throw std::invalid_argument("sample_graph: t must be nonnegative");
  if (n < static_cast<std::uint64_t>(params.k))
    throw std::invalid_argument("sample_graph: need n >= k");
  for (int i = 0; i < params.k; ++i)
    for (int j = 0; j < params.k; ++j)
      if (params.V(i, j) * t / static_cast<double>(n) >= 1.0)
        throw std::invalid_argument("sample_graph: v_ij t / n must stay below 1 (sparse regime)");

  GraphSample out;
  out.n = n;
  out.seed = seed;
  out.part_sizes = partition_counts(params.alpha, n);

  const int k = params.k;
  std::vector<std::uint64_t> offsets(k + 1, 0);
  for (int i = 0; i < k; ++i) offsets[i + 1] = offsets[i] + out.part_sizes[i];
  const std::uint64_t vertex_total = offsets[k];

  UnionFind uf(vertex_total);
  SplitMix64 rng(seed);

  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double p = -std::expm1(-params.V(i, j) * t / static_cast<double>(n));
      if (p <= 0.0) continue;
      const std::uint64_t ni = out.part_sizes[i];
      const std::uint64_t nj = out.part_sizes[j];
      const std::uint64_t space = (i == j) ? (ni < 2 ? 0 : ni * (ni - 1) / 2) : ni * nj;
      if (space == 0) continue;
      std::uint64_t pos = sample_geometric_skip(rng, p);
      while (pos < space) {
        std::uint64_t a, b;
        if (i == j) {
          a = row_of_triangular(pos, ni);
          b = a + 1 + (pos - a * (2 * ni - a - 1) / 2);
        } else {
          a = pos / nj;
          b = pos % nj;
        }
        const std::uint64_t u = offsets[i] + a;
        const std::uint64_t v = offsets[j] + b;
        const std::uint64_t ru = uf.find(u);
        const std::uint64_t rv = uf.find(v);
        if (ru != rv) uf.unite_roots(ru, rv);
        pos += 1 + sample_geometric_skip(rng, p);
      }
    }
  }

  // Per-root type composition.
  std::vector<std::uint32_t> composition(vertex_total * k, 0);
  for (int type = 0; type < k; ++type) {
    for (std::uint64_t v = offsets[type]; v < offsets[type + 1]; ++v) {
      ++composition[uf.find(v) * k + type];
    }
  }

  // Largest component (ties: smallest root) becomes the giant.
  std::uint64_t giant_root = vertex_total;
  std::uint64_t giant_size = 0;
  for (std::uint64_t v = 0; v < vertex_total; ++v) {
    if (uf.find(v) != v) continue;
    const std::uint64_t size = uf.size_of(v);
    if (size > giant_size) {
      giant_size = size;
      giant_root = v;
    }
  }
  out.giant.size = giant_size;
  out.giant.composition.assign(k, 0);
  if (giant_root < vertex_total) {
    for (int type = 0; type < k; ++type)
      out.giant.composition[type] = composition[giant_root * k + type];
  }

  ClusterSize x;
  x.counts.assign(k, 0);
  for (std::uint64_t v = 0; v < vertex_total; ++v) {
    if (uf.find(v) != v || v == giant_root) continue;
    for (int type = 0; type < k; ++type) x.counts[type] = static_cast<int>(composition[v * k + type]);
    ++out.census[x];
  }
  return out;
}

std::map<ClusterSize, double> empirical_phi(const GraphSample& sample) {
  std::map<ClusterSize, double> out;
  for (const auto& [x, count] : sample.census) {
    out[x] = static_cast<double>(count) / static_cast<double>(sample.n);
  }
  return out;
}

}  // namespace vmc
