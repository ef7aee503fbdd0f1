#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "support/oracles.hpp"
#include "vmc/graph_sim.hpp"
#include "vmc/lambert_euler.hpp"
#include "vmc/smoluchowski.hpp"

using namespace vmc;

namespace {

ModelParams one_type() {
  ModelParams p;
  p.k = 1;
  p.V = Matrix{{1.0}};
  p.alpha = {1.0};
  return validate(p);
}

ModelParams bipartite(double a1, double a2) {
  ModelParams p;
  p.k = 2;
  p.V = Matrix{{0.0, 1.0}, {1.0, 0.0}};
  p.alpha = {a1, a2};
  return validate(p);
}

void check_conservation(const GraphSample& s) {
  std::vector<std::uint64_t> totals(s.giant.composition);
  for (const auto& [x, count] : s.census) {
    for (std::size_t i = 0; i < totals.size(); ++i)
      totals[i] += count * static_cast<std::uint64_t>(x.counts[i]);
  }
  CHECK(totals == s.part_sizes);
}

}  // namespace

TEST_SUITE("graph_sim") {

TEST_CASE("partition counts use largest-remainder rounding") {
  CHECK(partition_counts({1.0}, 100) == std::vector<std::uint64_t>{100});
  CHECK(partition_counts({15.0, 2.0}, 100) == std::vector<std::uint64_t>{1500, 200});
  CHECK(partition_counts({0.5, 0.5}, 10) == std::vector<std::uint64_t>{5, 5});
  CHECK(partition_counts({1.0 / 3.0, 2.0 / 3.0}, 10) == std::vector<std::uint64_t>{3, 7});
  // Remainder ties resolve toward the lower index.
  CHECK(partition_counts({0.5, 0.5}, 11) == std::vector<std::uint64_t>{6, 5});
}

TEST_CASE("time zero yields only singletons") {
  const ModelParams p = bipartite(1.0, 1.5);
  const GraphSample s = sample_graph(p, 0.0, 1000, 7);
  CHECK(s.giant.size == 1);
  check_conservation(s);
  std::uint64_t singleton_total = s.giant.size;
  for (const auto& [x, count] : s.census) {
    CHECK(x.total() == 1);
    singleton_total += count;
  }
  CHECK(singleton_total == s.part_sizes[0] + s.part_sizes[1]);
}

TEST_CASE("conservation holds exactly on every run") {
  SplitMix64 rng(8080);
  for (int trial = 0; trial < 8; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(3));
    const ModelParams p = oracle::random_model(rng, k);
    const double t = gelation_time(p) * (0.4 + 1.2 * rng.next_double());
    const GraphSample s = sample_graph(p, t, 2000 + rng.next_below(3000), rng.next_u64());
    check_conservation(s);
    CHECK(s.giant.size >= 1);
    std::uint64_t comp_total = 0;
    for (std::uint64_t c : s.giant.composition) comp_total += c;
    CHECK(comp_total == s.giant.size);
  }
}

TEST_CASE("samples are bit-for-bit deterministic in the seed") {
  const ModelParams p = bipartite(1.0, 1.0);
  const GraphSample a = sample_graph(p, 0.4, 20000, 99);
  const GraphSample b = sample_graph(p, 0.4, 20000, 99);
  CHECK(a.census == b.census);
  CHECK(a.giant.size == b.giant.size);
  CHECK(a.giant.composition == b.giant.composition);

  const GraphSample c = sample_graph(p, 0.4, 20000, 100);
  CHECK(a.census != c.census);  // different stream
}

TEST_CASE("sparse-regime and size preconditions are enforced") {
  const ModelParams p = one_type();
  CHECK_THROWS_AS(sample_graph(p, 10.0, 5, 1), std::invalid_argument);  // v t / n >= 1
  ModelParams q = bipartite(1.0, 1.0);
  CHECK_THROWS_AS(sample_graph(q, 0.1, 1, 1), std::invalid_argument);  // n < k
}

TEST_CASE("subcritical census tracks the analytic densities") {
  const ModelParams p = one_type();
  const double t = 0.5;
  const std::uint64_t n = 30000;
  int passes = 0;
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    const GraphSample s = sample_graph(p, t, n, seed);
    bool all_in = true;
    for (int l = 1; l <= 12; ++l) {
      const double expected = zeta(p, ClusterSize{{l}}, t) * double(n);
      if (expected < 50.0) continue;
      const auto it = s.census.find(ClusterSize{{l}});
      const double observed = it == s.census.end() ? 0.0 : double(it->second);
      all_in = all_in && oracle::within_band(observed, expected, expected, 5.0);
    }
    passes += all_in;
  }
  CHECK(passes >= 2);
}

TEST_CASE("bipartite subcritical census tracks the analytic densities") {
  const ModelParams p = bipartite(1.0, 1.0);
  const double t = 0.3;  // 0.3 * T_gel, T_gel = 1
  const std::uint64_t n = 30000;
  int passes = 0;
  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    const GraphSample s = sample_graph(p, t, n, seed);
    bool all_in = true;
    for_each_size(2, 5, [&](const ClusterSize& x) {
      const double expected = zeta(p, x, t) * double(n);
      if (expected < 50.0) return;
      const auto it = s.census.find(x);
      const double observed = it == s.census.end() ? 0.0 : double(it->second);
      all_in = all_in && oracle::within_band(observed, expected, expected, 5.0);
    });
    passes += all_in;
  }
  CHECK(passes >= 2);
}

TEST_CASE("cross-type-only interactions never produce pure components") {
  const ModelParams p = bipartite(1.0, 1.0);
  const GraphSample s = sample_graph(p, 0.4, 20000, 31415);
  for (const auto& [x, count] : s.census) {
    if (x.total() < 2) continue;
    CHECK(x.counts[0] > 0);
    CHECK(x.counts[1] > 0);
  }
}

TEST_CASE("giant mass deficit matches the inversion") {
  const ModelParams p = one_type();
  const std::uint64_t n = 30000;
  const double expected = 1.0 - invert_1d(2.0) / 2.0;
  const GraphSample s = sample_graph(p, 2.0, n, 2718);
  CHECK(std::abs(double(s.giant.size) / double(n) - expected) < 0.015);
}

TEST_CASE("giant emerges across the critical time") {
  const ModelParams p = one_type();
  const std::uint64_t n = 100000;
  const GraphSample below = sample_graph(p, 0.9, n, 555);
  const GraphSample above = sample_graph(p, 1.5, n, 555);
  CHECK(double(below.giant.size) / double(n) < 0.01);
  CHECK(double(above.giant.size) / double(n) > 0.05);
}

TEST_CASE("empirical phi is the census scaled by n") {
  const ModelParams p = one_type();
  const GraphSample s = sample_graph(p, 0.5, 5000, 13);
  const auto phi = empirical_phi(s);
  for (const auto& [x, count] : s.census) {
    CHECK(phi.at(x) == double(count) / 5000.0);
  }
}

}  // TEST_SUITE
