#ifndef LAIS_SAMPLERS_HPP
#define LAIS_SAMPLERS_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lais/adaptation.hpp"
#include "lais/core.hpp"
#include "lais/estimation.hpp"
#include "lais/gaussian.hpp"
#include "lais/targets.hpp"
#include "lais/weighting.hpp"

namespace lais {

enum class Algorithm { StaticMIS, RWIS, PopulationMAIS, GAMIS, StandardPMC, ParallelMHBaseline };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::StaticMIS: return "static-mis";
    case Algorithm::RWIS: return "rwis";
    case Algorithm::PopulationMAIS: return "mais";
    case Algorithm::GAMIS: return "gamis";
    case Algorithm::StandardPMC: return "pmc";
    case Algorithm::ParallelMHBaseline: return "parallel-mh";
  }
  return "?";
}

struct InitBox {
  Vector lo;
  Vector hi;
};

struct SamplerConfig {
  const TargetModel* target = nullptr;
  Algorithm algorithm = Algorithm::PopulationMAIS;
  int n_chains = 1;             // N
  int samples_per_proposal = 1; // M
  int iterations = 1;           // T
  DenominatorScheme denominator;
  AdaptationVariant adaptation = AdaptationVariant::ParallelMH;

  // lower-level proposal scale: isotropic sigma, or random diagonal
  // sigma_{n,j} ~ U([sigma_lo, sigma_hi]) drawn from the run's init stream
  double sigma = 1.0;
  bool random_diag_sigma = false;
  double sigma_lo = 1.0, sigma_hi = 10.0;

  // upper-level (adaptation) kernel scale; same convention
  double lambda = 1.0;
  bool random_diag_lambda = false;
  double lambda_lo = 1.0, lambda_hi = 10.0;

  std::vector<Vector> initial_means;  // explicit; else drawn from init_box
  std::optional<InitBox> init_box;

  std::uint64_t master_seed = 0;
  // offsets the per-chain stream ids so an N-chain run can be decomposed into
  // N single-chain runs with identical draws
  int chain_stream_offset = 0;

  bool keep_trace = false;
  bool keep_samples = false;
  int burn_in = 0;  // parallel-MH baseline only; estimators elsewhere use all iterations
  std::size_t history_cap = ProposalTable::kDefaultHistoryCap;
};

struct TraceEntry {
  int t;
  Vector i_hat;
  double z_hat;
};

struct RunResult {
  Vector i_hat;
  double z_hat = 0.0;
  bool z_available = true;  // false for MCMC-only baselines
  long long eval_count = 0;
  double wall_time_s = 0.0;
  std::vector<TraceEntry> trace;
  std::vector<Vector> final_means;
  std::vector<WeightedSample> samples;  // populated when keep_samples
  std::vector<double> sample_log_pi;
};

// --- stream layout -------------------------------------------------------------
// chain n: sampling stream 2n, adaptation stream 2n+1 (independent of N, so a
// single-chain run with chain_stream_offset = n replays chain n exactly);
// interacting adaptation and initialization use fixed high ids.
namespace stream {
constexpr std::uint64_t kInteracting = 0x10000000ULL;
constexpr std::uint64_t kInit = 0x10000001ULL;
inline std::uint64_t sampling(int chain) { return 2 * static_cast<std::uint64_t>(chain); }
inline std::uint64_t adaptation(int chain) { return 2 * static_cast<std::uint64_t>(chain) + 1; }
}  // namespace stream

// Exact fresh-target-evaluation count for a configured run. Initialization of
// the mean-population cache is excluded; only per-iteration work is budgeted.
inline long long eval_budget(const SamplerConfig& cfg) {
  const long long n = cfg.n_chains, m = cfg.samples_per_proposal, t = cfg.iterations;
  switch (cfg.algorithm) {
    case Algorithm::StaticMIS: return n * m;
    case Algorithm::RWIS: return m * t + t;
    case Algorithm::GAMIS:
    case Algorithm::PopulationMAIS:
      switch (cfg.adaptation) {
        case AdaptationVariant::None: return m * n * t;
        case AdaptationVariant::SMH: return m * n * t + t;
        case AdaptationVariant::PMCResample: return m * n * t;
        default: return m * n * t + n * t;  // parallel MH, block MH, MH-within-Gibbs
      }
    case Algorithm::StandardPMC: return n * m * t;
    case Algorithm::ParallelMHBaseline: return n * t;
  }
  throw ConfigError("eval_budget: unknown algorithm");
}

namespace detail {

inline void validate(const SamplerConfig& cfg) {
  if (!cfg.target) throw ConfigError("sampler config: no target");
  if (cfg.n_chains < 1 || cfg.samples_per_proposal < 1 || cfg.iterations < 1)
    throw ConfigError("sampler config: N, M, T must all be >= 1");
  if (cfg.initial_means.empty() && !cfg.init_box)
    throw ConfigError("sampler config: no initial means and no init box");
  if (cfg.init_box && (cfg.init_box->lo.size() != cfg.target->dim() ||
                       (cfg.init_box->lo.array() > cfg.init_box->hi.array()).any()))
    throw ConfigError("sampler config: malformed init box");
  if (cfg.sigma <= 0.0 || cfg.lambda <= 0.0)
    throw ConfigError("sampler config: scale parameters must be positive");
}

inline std::vector<Vector> draw_initial_means(const SamplerConfig& cfg, RngStream& init_rng) {
  if (!cfg.initial_means.empty()) {
    if (static_cast<int>(cfg.initial_means.size()) != cfg.n_chains)
      throw ConfigError("sampler config: initial mean count != N");
    return cfg.initial_means;
  }
  std::vector<Vector> means(static_cast<std::size_t>(cfg.n_chains));
  const int d = cfg.target->dim();
  for (auto& mu : means) {
    mu = Vector(d);
    for (int j = 0; j < d; ++j) mu[j] = init_rng.uniform(cfg.init_box->lo[j], cfg.init_box->hi[j]);
  }
  return means;
}

inline std::vector<Matrix> draw_scales(int n, int d, double iso, bool random_diag, double lo,
                                       double hi, RngStream& init_rng) {
  std::vector<Matrix> out(static_cast<std::size_t>(n));
  for (auto& c : out) {
    if (random_diag) {
      Matrix cov = Matrix::Zero(d, d);
      for (int j = 0; j < d; ++j) {
        const double s = init_rng.uniform(lo, hi);
        cov(j, j) = s * s;
      }
      c = cov;
    } else {
      c = iso * iso * Matrix::Identity(d, d);
    }
  }
  return out;
}

inline bool needs_history(MixtureScheme s) {
  return s == MixtureScheme::Temporal || s == MixtureScheme::Full ||
         s == MixtureScheme::Partition;
}

}  // namespace detail

// Iterative adaptive MIS engine shared by RWIS, population MAIS, generic GAMIS
// and standard PMC. Per iteration: adapt means, draw N*M samples, weight them
// against the configured mixture, fold into the running estimator. Temporal,
// full and partition mixtures re-weight the whole sample history each
// iteration from cached target values.
inline RunResult run_adaptive(const SamplerConfig& cfg) {
  detail::validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const int big_n = cfg.n_chains, big_m = cfg.samples_per_proposal, big_t = cfg.iterations;
  const int d = cfg.target->dim();
  const int off = cfg.chain_stream_offset;

  RngStream init_rng(cfg.master_seed, stream::kInit);
  std::vector<Vector> means = detail::draw_initial_means(cfg, init_rng);
  const std::vector<Matrix> lower_cov = detail::draw_scales(
      big_n, d, cfg.sigma, cfg.random_diag_sigma, cfg.sigma_lo, cfg.sigma_hi, init_rng);
  const std::vector<Matrix> upper_cov = detail::draw_scales(
      big_n, d, cfg.lambda, cfg.random_diag_lambda, cfg.lambda_lo, cfg.lambda_hi, init_rng);

  std::vector<Gaussian> kernels;
  kernels.reserve(static_cast<std::size_t>(big_n));
  for (int n = 0; n < big_n; ++n) kernels.emplace_back(Vector::Zero(d), upper_cov[n]);
  // SMH independent proposal: zero-mean Gaussian with the lambda scale
  const Gaussian smh_proposal(Vector::Zero(d), upper_cov[0]);

  CountingTarget target(*cfg.target);
  MeanPopulation population(means, target);
  target.reset();  // initialization evaluations are excluded from the budget

  std::vector<RngStream> sampling_rngs;
  std::vector<RngStream> adaptation_rngs;
  for (int n = 0; n < big_n; ++n) {
    sampling_rngs.emplace_back(cfg.master_seed, stream::sampling(off + n));
    adaptation_rngs.emplace_back(cfg.master_seed, stream::adaptation(off + n));
  }
  RngStream interacting_rng(cfg.master_seed, stream::kInteracting);

  const bool reweight_history = detail::needs_history(cfg.denominator.variant);
  const bool store = reweight_history || cfg.keep_samples;
  // the cap guards the O(NT) history kept for re-weighting mixtures; the other
  // schemes only ever read the current iteration
  ProposalTable table(reweight_history ? cfg.history_cap
                                       : std::numeric_limits<std::size_t>::max());
  const MomentFunction f = identity_moment();

  RunningEstimator est;
  std::vector<WeightedSample> all_samples;
  std::vector<double> all_log_pi;
  RunResult result;

  for (int t = 1; t <= big_t; ++t) {
    // --- adaptation -----------------------------------------------------------
    const bool adapt_now = cfg.algorithm != Algorithm::StaticMIS && t >= 1;
    if (adapt_now) {
      switch (cfg.adaptation) {
        case AdaptationVariant::None:
          break;
        case AdaptationVariant::ParallelMH:
          for (int n = 0; n < big_n; ++n) {
            const MhResult step = mh_transition(population.means[n], population.log_pi[n],
                                                kernels[n], target, adaptation_rngs[n]);
            population.means[n] = step.mu;
            population.log_pi[n] = step.log_pi;
          }
          break;
        case AdaptationVariant::BlockMH:
          block_mh_transition(population, kernels, target, interacting_rng);
          break;
        case AdaptationVariant::SMH:
          smh_transition(population, smh_proposal, target, interacting_rng);
          break;
        case AdaptationVariant::MHwithinGibbs:
          mh_within_gibbs_sweep(population, kernels, target, interacting_rng);
          break;
        case AdaptationVariant::PMCResample:
          break;  // resampling happens after weighting, below
      }
    }

    std::vector<ProposalComponent> current;
    current.reserve(static_cast<std::size_t>(big_n));
    for (int n = 0; n < big_n; ++n) current.emplace_back(population.means[n], lower_cov[n]);

    // temporal/full mixtures need the whole history; spatial/standard only the
    // current iteration, which is kept at slot t anyway for re-weighting APIs
    table.push_iteration(current);

    // --- generation and weighting ----------------------------------------------
    std::vector<WeightedSample> batch;
    std::vector<double> batch_log_pi;
    batch.reserve(static_cast<std::size_t>(big_n) * big_m);
    for (int n = 0; n < big_n; ++n)
      for (int m = 0; m < big_m; ++m) {
        WeightedSample s;
        s.x = current[static_cast<std::size_t>(n)].sample(sampling_rngs[n]);
        s.chain = n;
        s.iteration = t;
        s.replica = m;
        batch.push_back(std::move(s));
      }
    for (auto& s : batch) batch_log_pi.push_back(target.log_density(s.x));
    compute_weights(batch, batch_log_pi, cfg.denominator, table);

    if (cfg.adaptation == AdaptationVariant::PMCResample) {
      std::vector<double> w(batch.size());
      for (std::size_t i = 0; i < batch.size(); ++i) w[i] = batch[i].raw_weight;
      const std::vector<std::size_t> idx =
          pmc_resample_indices(w, static_cast<std::size_t>(big_n), interacting_rng);
      for (int n = 0; n < big_n; ++n) {
        population.means[n] = batch[idx[static_cast<std::size_t>(n)]].x;
        population.log_pi[n] = batch_log_pi[idx[static_cast<std::size_t>(n)]];
      }
    }

    if (store) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        all_samples.push_back(batch[i]);
        all_log_pi.push_back(batch_log_pi[i]);
      }
    }

    // --- estimator update --------------------------------------------------------
    if (reweight_history) {
      compute_weights(all_samples, all_log_pi, cfg.denominator, table);
      double h = 0.0;
      Vector acc = Vector::Zero(d);
      for (const auto& s : all_samples) {
        h += s.raw_weight;
        if (s.raw_weight > 0.0) acc += s.raw_weight * f(s.x);
      }
      est.h = h;
      est.t = t;
      est.total_samples = static_cast<long long>(all_samples.size());
      if (h > 0.0) est.i_hat = acc / h;
      est.z_hat = est.h / static_cast<double>(est.total_samples);
    } else {
      est = recursive_update(std::move(est), batch, f);
    }
    if (cfg.keep_trace) result.trace.push_back({t, est.i_hat, est.z_hat});
  }

  if (!(est.h > 0.0)) throw AllZeroWeights();
  result.i_hat = est.i_hat;
  result.z_hat = est.z_hat;
  result.eval_count = target.count();
  result.final_means = population.means;
  if (cfg.keep_samples) {
    result.samples = std::move(all_samples);
    result.sample_log_pi = std::move(all_log_pi);
  }
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

inline RunResult run_static_mis(SamplerConfig cfg) {
  cfg.algorithm = Algorithm::StaticMIS;
  if (cfg.adaptation != AdaptationVariant::None)
    throw ConfigError("static MIS requires adaptation = none");
  cfg.iterations = 1;
  return run_adaptive(cfg);
}

inline RunResult run_population_mais(SamplerConfig cfg) {
  cfg.algorithm = Algorithm::PopulationMAIS;
  if (cfg.adaptation == AdaptationVariant::None ||
      cfg.adaptation == AdaptationVariant::PMCResample)
    throw ConfigError("population MAIS requires an MCMC adaptation kernel");
  return run_adaptive(cfg);
}

inline RunResult run_rwis(SamplerConfig cfg) {
  cfg.algorithm = Algorithm::RWIS;
  if (cfg.n_chains != 1) throw ConfigError("RWIS is the single-chain case (N = 1)");
  cfg.adaptation = AdaptationVariant::ParallelMH;
  return run_adaptive(cfg);
}

inline RunResult run_gamis(SamplerConfig cfg) {
  cfg.algorithm = Algorithm::GAMIS;
  return run_adaptive(cfg);
}

inline RunResult run_standard_pmc(SamplerConfig cfg) {
  cfg.algorithm = Algorithm::StandardPMC;
  cfg.adaptation = AdaptationVariant::PMCResample;
  if (cfg.denominator.variant != MixtureScheme::Standard &&
      cfg.denominator.variant != MixtureScheme::Spatial)
    throw ConfigError("standard PMC supports standard or spatial mixtures");
  return run_adaptive(cfg);
}

// N independent MH chains, estimate = pooled mean of all kept states. No IS
// layer, so the normalizing constant is unavailable.
inline RunResult run_parallel_mh_baseline(const SamplerConfig& cfg) {
  detail::validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const int big_n = cfg.n_chains, big_t = cfg.iterations;
  const int d = cfg.target->dim();

  RngStream init_rng(cfg.master_seed, stream::kInit);
  std::vector<Vector> means = detail::draw_initial_means(cfg, init_rng);
  const std::vector<Matrix> cov = detail::draw_scales(big_n, d, cfg.sigma, cfg.random_diag_sigma,
                                                      cfg.sigma_lo, cfg.sigma_hi, init_rng);
  CountingTarget target(*cfg.target);
  MeanPopulation population(means, target);
  target.reset();

  std::vector<RngStream> rngs;
  for (int n = 0; n < big_n; ++n)
    rngs.emplace_back(cfg.master_seed, stream::adaptation(cfg.chain_stream_offset + n));
  std::vector<Gaussian> kernels;
  for (int n = 0; n < big_n; ++n) kernels.emplace_back(Vector::Zero(d), cov[n]);

  Vector acc = Vector::Zero(d);
  long long kept = 0;
  for (int t = 1; t <= big_t; ++t) {
    for (int n = 0; n < big_n; ++n) {
      const MhResult step =
          mh_transition(population.means[n], population.log_pi[n], kernels[n], target, rngs[n]);
      population.means[n] = step.mu;
      population.log_pi[n] = step.log_pi;
      if (t > cfg.burn_in) {
        acc += step.mu;
        ++kept;
      }
    }
  }
  RunResult result;
  result.i_hat = acc / static_cast<double>(kept);
  result.z_hat = std::numeric_limits<double>::quiet_NaN();
  result.z_available = false;
  result.eval_count = target.count();
  result.final_means = population.means;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

inline RunResult run(const SamplerConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::StaticMIS: return run_static_mis(cfg);
    case Algorithm::RWIS: return run_rwis(cfg);
    case Algorithm::PopulationMAIS: return run_population_mais(cfg);
    case Algorithm::GAMIS: return run_gamis(cfg);
    case Algorithm::StandardPMC: return run_standard_pmc(cfg);
    case Algorithm::ParallelMHBaseline: return run_parallel_mh_baseline(cfg);
  }
  throw ConfigError("unknown algorithm");
}

// --- equivalent-mixture (kernel estimate) convergence check ------------------------

// Midpoint-rule grid over a box; works for 1-D and 2-D checks.
struct GridSpec {
  Vector lo;
  Vector hi;
  std::vector<int> bins;

  std::size_t cell_count() const {
    std::size_t c = 1;
    for (int b : bins) c *= static_cast<std::size_t>(b);
    return c;
  }
  double cell_volume() const {
    double v = 1.0;
    for (std::size_t j = 0; j < bins.size(); ++j)
      v *= (hi[static_cast<Eigen::Index>(j)] - lo[static_cast<Eigen::Index>(j)]) / bins[j];
    return v;
  }
  Vector midpoint(std::size_t flat) const {
    Vector x(static_cast<Eigen::Index>(bins.size()));
    for (std::size_t j = 0; j < bins.size(); ++j) {
      const std::size_t idx = flat % static_cast<std::size_t>(bins[j]);
      flat /= static_cast<std::size_t>(bins[j]);
      const double w =
          (hi[static_cast<Eigen::Index>(j)] - lo[static_cast<Eigen::Index>(j)]) / bins[j];
      x[static_cast<Eigen::Index>(j)] = lo[static_cast<Eigen::Index>(j)] + (idx + 0.5) * w;
    }
    return x;
  }
};

// Grid L1 distance between psi(x) = (1/J) sum q(x | mu_j, C) and a normalized
// target density.
inline double kernel_mixture_l1(const std::vector<Vector>& means, const Matrix& bandwidth,
                                const std::function<double(const Vector&)>& target_pdf,
                                const GridSpec& grid) {
  std::vector<Gaussian> kernels;
  kernels.reserve(means.size());
  for (const auto& mu : means) kernels.emplace_back(mu, bandwidth);
  const double log_j = std::log(static_cast<double>(means.size()));
  double dist = 0.0;
  std::vector<double> terms(means.size());
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const Vector x = grid.midpoint(c);
    for (std::size_t j = 0; j < kernels.size(); ++j) terms[j] = kernels[j].log_pdf(x);
    const double psi = std::exp(log_sum_exp(terms) - log_j);
    dist += std::abs(psi - target_pdf(x)) * grid.cell_volume();
  }
  return dist;
}

// For each J in the ladder, builds psi from the first J of the given means
// with bandwidth C(J) and returns the grid-L1 distance to the target.
inline std::vector<double> equivalent_mixture_check(
    const std::vector<Vector>& means, const std::function<Matrix(int)>& bandwidth_for,
    const std::function<double(const Vector&)>& target_pdf, const GridSpec& grid,
    const std::vector<int>& ladder) {
  std::vector<double> distances;
  distances.reserve(ladder.size());
  for (int j : ladder) {
    if (j < 1 || j > static_cast<int>(means.size()))
      throw ConfigError("equivalent_mixture_check: ladder exceeds available means");
    std::vector<Vector> head(means.begin(), means.begin() + j);
    distances.push_back(kernel_mixture_l1(head, bandwidth_for(j), target_pdf, grid));
  }
  return distances;
}

}  // namespace lais

#endif  // LAIS_SAMPLERS_HPP
