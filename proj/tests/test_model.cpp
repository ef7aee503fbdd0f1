#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support/oracles.hpp"
#include "vmc/model.hpp"

using namespace vmc;

namespace {

ModelParams bipartite_15_2() {
  ModelParams p;
  p.k = 2;
  p.V = Matrix{{0.0, 1.0}, {1.0, 0.0}};
  p.alpha = {15.0, 2.0};
  return validate(p);
}

ModelParams one_type(double v = 1.0, double a = 1.0) {
  ModelParams p;
  p.k = 1;
  p.V = Matrix{{v}};
  p.alpha = {a};
  return validate(p);
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("validate accepts the smallest model") {
  const ModelParams p = one_type();
  CHECK(p.k == 1);
  CHECK(p.V(0, 0) == 1.0);
}

TEST_CASE("validate accepts the bipartite example") {
  const ModelParams p = bipartite_15_2();
  CHECK(p.alpha[0] == 15.0);
}

TEST_CASE("validate rejects an empty support graph as reducible") {
  ModelParams p;
  p.k = 2;
  p.V = Matrix{{0.0, 0.0}, {0.0, 0.0}};
  p.alpha = {1.0, 1.0};
  CHECK_THROWS_AS(validate(p), ValidationError);
  try {
    validate(p);
  } catch (const ValidationError& e) {
    CHECK(e.fault() == ValidationFault::ReducibleMatrix);
    CHECK(e.path() == "/V");
  }
}

TEST_CASE("validate rejects disconnected blocks") {
  ModelParams p;
  p.k = 3;
  p.V = Matrix{{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  p.alpha = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("validate names the other violated hypotheses") {
  ModelParams p;
  p.k = 2;
  p.V = Matrix{{0.0, 1.0}, {2.0, 0.0}};
  p.alpha = {1.0, 1.0};
  try {
    validate(p);
    FAIL("expected AsymmetricMatrix");
  } catch (const ValidationError& e) {
    CHECK(e.fault() == ValidationFault::AsymmetricMatrix);
    CHECK(e.path() == "/V/0/1");
  }

  p.V = Matrix{{0.0, -1.0}, {-1.0, 0.0}};
  try {
    validate(p);
    FAIL("expected NegativeEntry");
  } catch (const ValidationError& e) {
    CHECK(e.fault() == ValidationFault::NegativeEntry);
  }

  p.V = Matrix{{0.0, 1.0}, {1.0, 0.0}};
  p.alpha = {1.0, 0.0};
  try {
    validate(p);
    FAIL("expected NonpositiveAlpha");
  } catch (const ValidationError& e) {
    CHECK(e.fault() == ValidationFault::NonpositiveAlpha);
    CHECK(e.path() == "/alpha/1");
  }
}

TEST_CASE("spectral radius of fixed matrices") {
  CHECK(spectral_radius(Matrix{{1.0}}) == doctest::Approx(1.0).epsilon(1e-12));
  // V D[alpha] for the bipartite example; the Perron root is sqrt(30).
  CHECK(spectral_radius(Matrix{{0.0, 2.0}, {15.0, 0.0}}) ==
        doctest::Approx(std::sqrt(30.0)).epsilon(1e-11));
  CHECK(spectral_radius(Matrix{{2.0, 1.0}, {1.0, 2.0}}) == doctest::Approx(3.0).epsilon(1e-11));
}

TEST_CASE("spectral radius is positively homogeneous") {
  SplitMix64 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(5));
    const ModelParams p = oracle::random_model(rng, k);
    const Matrix a = scale_columns(p.V, p.alpha);
    const double rho = spectral_radius(a);
    for (double c : {0.5, 2.0, 7.25}) {
      CHECK(spectral_radius(a * c) == doctest::Approx(c * rho).epsilon(1e-10));
    }
  }
}

TEST_CASE("spectral radius reports non-convergence on a defective nilpotent input") {
  CHECK_THROWS_AS(spectral_radius(Matrix{{0.0, 1.0}, {0.0, 0.0}}), NoConvergence);
}

TEST_CASE("gelation time examples") {
  CHECK(gelation_time(one_type()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gelation_time(bipartite_15_2()) ==
        doctest::Approx(1.0 / std::sqrt(30.0)).epsilon(1e-11));
  CHECK(gelation_time(one_type(2.0, 3.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("gelation time is invariant under type relabeling") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 2 + static_cast<int>(rng.next_below(4));
    const ModelParams p = oracle::random_model(rng, k);

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = k - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(std::uint64_t(i) + 1)]);

    ModelParams q;
    q.k = k;
    q.V = Matrix(k, k);
    q.alpha.resize(k);
    for (int i = 0; i < k; ++i) {
      q.alpha[perm[i]] = p.alpha[i];
      for (int j = 0; j < k; ++j) q.V(perm[i], perm[j]) = p.V(i, j);
    }
    CHECK(gelation_time(validate(q)) == doctest::Approx(gelation_time(p)).epsilon(1e-10));
  }
}

TEST_CASE("classify brackets the bipartite gelation time") {
  const ModelParams p = bipartite_15_2();
  const double t_gel = 1.0 / std::sqrt(30.0);

  const PhaseRegion sub = classify(p, 0.1);
  CHECK(sub.region == Region::Subcritical);
  CHECK(sub.rho == doctest::Approx(0.1 * std::sqrt(30.0)).epsilon(1e-10));

  CHECK(classify(p, t_gel).region == Region::Critical);

  const PhaseRegion super = classify(p, 1.0);
  CHECK(super.region == Region::Supercritical);
  CHECK(super.rho == doctest::Approx(std::sqrt(30.0)).epsilon(1e-10));

  CHECK(classify(p, 0.0).region == Region::Subcritical);
}

TEST_CASE("region transitions are monotone in t with the switch at the gelation time") {
  SplitMix64 rng(991);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(4));
    const ModelParams p = oracle::random_model(rng, k);
    const double t_gel = gelation_time(p);

    int last_rank = -1;
    for (double f : {0.2, 0.6, 0.999999999, 1.0, 1.000000001, 1.5, 3.0}) {
      const PhaseRegion r = classify(p, f * t_gel);
      const int rank = r.region == Region::Subcritical ? 0 : r.region == Region::Critical ? 1 : 2;
      CHECK(rank >= last_rank);
      last_rank = rank;
    }
    CHECK(classify(p, t_gel).region == Region::Critical);
    CHECK(classify(p, 0.9 * t_gel).region == Region::Subcritical);
    CHECK(classify(p, 1.1 * t_gel).region == Region::Supercritical);
  }
}

TEST_CASE("cluster size helpers") {
  const ClusterSize u = ClusterSize::unit(3, 1);
  CHECK(u.counts == std::vector<int>{0, 1, 0});
  CHECK(u.total() == 1);
  const ClusterSize x{{2, 0, 5}};
  CHECK(x.total() == 7);
}

}  // TEST_SUITE
