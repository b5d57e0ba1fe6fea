#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lais/weighting.hpp"

using namespace lais;

namespace {

double std_normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

ProposalTable table_of(std::vector<std::vector<ProposalComponent>> iterations) {
  ProposalTable t;
  for (auto& pop : iterations) t.push_iteration(std::move(pop));
  return t;
}

Gaussian g1d(double mean, double var = 1.0) {
  return Gaussian(Vector::Constant(1, mean), var * Matrix::Identity(1, 1));
}

}  // namespace

TEST_CASE("proposal table indexing") {
  auto table = table_of({{g1d(0), g1d(1)}, {g1d(2), g1d(3)}});
  CHECK(table.chains() == 2);
  CHECK(table.iterations() == 2);
  CHECK(table.at(1, 2).mean()[0] == 3.0);
  CHECK_THROWS_AS(table.at(2, 1), UnknownIndex);
  CHECK_THROWS_AS(table.at(0, 0), UnknownIndex);
  CHECK_THROWS_AS(table.at(0, 3), UnknownIndex);
  CHECK_THROWS_AS(table.push_iteration({g1d(0)}), ConfigError);  // size change
}

TEST_CASE("history cap errors instead of truncating") {
  ProposalTable table(3);
  table.push_iteration({g1d(0), g1d(1)});
  CHECK_THROWS_AS(table.push_iteration({g1d(2), g1d(3)}), MemoryCapExceeded);
}

TEST_CASE("identical proposals collapse every denominator variant") {
  std::vector<ProposalComponent> pop(3, g1d(0.7, 2.0));
  auto table = table_of({pop, pop});
  const Vector x = Vector::Constant(1, 1.3);
  const double expected = g1d(0.7, 2.0).log_pdf(x);
  for (MixtureScheme v : {MixtureScheme::Standard, MixtureScheme::Spatial,
                          MixtureScheme::Temporal, MixtureScheme::Full}) {
    DenominatorScheme scheme;
    scheme.variant = v;
    CHECK(denominator_log_value(scheme, table, 1, 2, x) ==
          Catch::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("spatial mixture hand value via reflection symmetry") {
  // N(0,1) and N(2,1) at x=1: both terms equal, so the mean equals either term
  auto table = table_of({{g1d(0), g1d(2)}});
  DenominatorScheme spatial;
  spatial.variant = MixtureScheme::Spatial;
  const Vector x = Vector::Constant(1, 1.0);
  CHECK(denominator_log_value(spatial, table, 0, 1, x) ==
        Catch::Approx(std::log(std_normal_pdf(1.0))).epsilon(1e-12));
}

TEST_CASE("singleton partitions reduce to the standard scheme") {
  auto table = table_of({{g1d(-1), g1d(4, 3.0)}, {g1d(2, 0.5), g1d(0)}});
  DenominatorScheme partition;
  partition.variant = MixtureScheme::Partition;
  for (int n = 0; n < 2; ++n)
    for (int t = 1; t <= 2; ++t) partition.partition_sets.push_back({{n, t}});
  DenominatorScheme standard;
  standard.variant = MixtureScheme::Standard;
  RngStream rng(1, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = Vector::Constant(1, rng.uniform(-5, 5));
    for (int n = 0; n < 2; ++n)
      for (int t = 1; t <= 2; ++t)
        CHECK(denominator_log_value(partition, table, n, t, x) ==
              denominator_log_value(standard, table, n, t, x));
  }
  DenominatorScheme empty_partition;
  empty_partition.variant = MixtureScheme::Partition;
  CHECK_THROWS_AS(denominator_log_value(empty_partition, table, 0, 1, Vector::Zero(1)),
                  PartitionNotCovering);
}

TEST_CASE("unequal-count partition weights reduce to spatial when counts match") {
  auto table = table_of({{g1d(-1), g1d(1)}});
  DenominatorScheme partition;
  partition.variant = MixtureScheme::Partition;
  partition.partition_sets = {{{0, 1}, {1, 1}}};
  partition.per_chain_counts = {3, 3};
  DenominatorScheme spatial;
  spatial.variant = MixtureScheme::Spatial;
  RngStream rng(2, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = Vector::Constant(1, rng.uniform(-4, 4));
    CHECK(denominator_log_value(partition, table, 0, 1, x) ==
          Catch::Approx(denominator_log_value(spatial, table, 0, 1, x)).epsilon(1e-12));
  }
  // and unequal counts weight the components by M_j / sum M
  partition.per_chain_counts = {1, 3};
  const Vector x = Vector::Zero(1);
  const double expected =
      std::log(0.25 * std::exp(g1d(-1).log_pdf(x)) + 0.75 * std::exp(g1d(1).log_pdf(x)));
  CHECK(denominator_log_value(partition, table, 0, 1, x) ==
        Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("full mixture is invariant to proposal index permutation") {
  auto table_a = table_of({{g1d(-2), g1d(1)}, {g1d(3, 2.0), g1d(0, 0.5)}});
  auto table_b = table_of({{g1d(0, 0.5), g1d(3, 2.0)}, {g1d(1), g1d(-2)}});
  DenominatorScheme full;
  full.variant = MixtureScheme::Full;
  RngStream rng(3, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Vector x = Vector::Constant(1, rng.uniform(-6, 6));
    CHECK(denominator_log_value(full, table_a, 0, 1, x) ==
          Catch::Approx(denominator_log_value(full, table_b, 1, 2, x)).epsilon(1e-12));
  }
}

TEST_CASE("raw weights") {
  CHECK(raw_weight(neg_inf, -3.0) == 0.0);
  CHECK(raw_weight(neg_inf, neg_inf) == 0.0);  // outside everything: 0, not NaN
  CHECK(raw_weight(-1.0, -3.0) == Catch::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(raw_weight(std::nan(""), 0.0), NonFiniteWeight);
}

TEST_CASE("perfect proposal gives constant weights equal to Z") {
  // target exp(-x^2/2) with Z = sqrt(2*pi); proposal N(0,1)
  const TargetModel target = make_gauss1d();
  const CountingTarget counted(target);
  auto table = table_of({{g1d(0)}});
  DenominatorScheme standard;
  standard.variant = MixtureScheme::Standard;
  RngStream rng(4, 0);
  std::vector<WeightedSample> samples;
  for (int m = 0; m < 50; ++m) {
    WeightedSample s;
    s.x = table.at(0, 1).sample(rng);
    s.chain = 0;
    s.iteration = 1;
    s.replica = m;
    samples.push_back(s);
  }
  compute_weights(samples, counted, standard, table);
  CHECK(counted.count() == 50);
  for (const auto& s : samples)
    CHECK(s.raw_weight == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("deterministic-mixture weight hand value") {
  // proposals N(-1,1), N(1,1); target = sqrt(2*pi) * N(0,1) density
  const TargetModel target = make_gauss1d();
  auto table = table_of({{g1d(-1), g1d(1)}});
  DenominatorScheme spatial;
  spatial.variant = MixtureScheme::Spatial;
  std::vector<WeightedSample> samples(1);
  samples[0].x = Vector::Zero(1);
  samples[0].chain = 0;
  samples[0].iteration = 1;
  compute_weights(samples, {target.log_density(samples[0].x)}, spatial, table);
  const double expected = std::sqrt(2.0 * M_PI) * std_normal_pdf(0.0) /
                          (0.5 * (std_normal_pdf(1.0) + std_normal_pdf(-1.0)));
  CHECK(samples[0].raw_weight == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("weights stay finite for Gaussian proposals on benchmark targets") {
  const TargetModel target = make_mixture5();
  const CountingTarget counted(target);
  RngStream rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ProposalComponent> pop;
    for (int n = 0; n < 4; ++n) {
      Vector mu(2);
      mu << rng.uniform(-20, 20), rng.uniform(-20, 20);
      pop.push_back(Gaussian::isotropic(mu, rng.uniform(0.5, 10.0)));
    }
    auto table = table_of({pop});
    std::vector<WeightedSample> samples;
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 10; ++m) {
        WeightedSample s;
        s.x = table.at(n, 1).sample(rng);
        s.chain = n;
        s.iteration = 1;
        s.replica = m;
        samples.push_back(s);
      }
    for (MixtureScheme v :
         {MixtureScheme::Standard, MixtureScheme::Spatial, MixtureScheme::Full}) {
      DenominatorScheme scheme;
      scheme.variant = v;
      compute_weights(samples, counted, scheme, table);
      for (const auto& s : samples) {
        CHECK(std::isfinite(s.raw_weight));
        CHECK(s.raw_weight >= 0.0);
      }
    }
  }
}

TEST_CASE("all schemes coincide when every proposal is the same") {
  const TargetModel target = make_gauss1d();
  std::vector<ProposalComponent> pop(3, g1d(0.4, 1.7));
  auto table = table_of({pop, pop});
  RngStream rng(6, 0);
  std::vector<WeightedSample> samples;
  std::vector<double> log_pi;
  for (int n = 0; n < 3; ++n)
    for (int t = 1; t <= 2; ++t) {
      WeightedSample s;
      s.x = Vector::Constant(1, rng.uniform(-3, 3));
      s.chain = n;
      s.iteration = t;
      samples.push_back(s);
      log_pi.push_back(target.log_density(samples.back().x));
    }
  std::vector<std::vector<double>> results;
  for (MixtureScheme v : {MixtureScheme::Standard, MixtureScheme::Spatial,
                          MixtureScheme::Temporal, MixtureScheme::Full}) {
    DenominatorScheme scheme;
    scheme.variant = v;
    compute_weights(samples, log_pi, scheme, table);
    std::vector<double> w;
    for (const auto& s : samples) w.push_back(s.raw_weight);
    results.push_back(w);
  }
  for (std::size_t v = 1; v < results.size(); ++v)
    for (std::size_t i = 0; i < results[0].size(); ++i)
      CHECK(results[v][i] == Catch::Approx(results[0][i]).epsilon(1e-12));
}
