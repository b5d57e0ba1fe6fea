#ifndef LAIS_ADAPTATION_HPP
#define LAIS_ADAPTATION_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "lais/core.hpp"
#include "lais/gaussian.hpp"
#include "lais/targets.hpp"

namespace lais {

struct DegenerateInverseWeights : std::runtime_error {
  DegenerateInverseWeights()
      : std::runtime_error("all SMH inverse weights are zero or non-finite") {}
};

enum class AdaptationVariant { None, ParallelMH, BlockMH, SMH, MHwithinGibbs, PMCResample };

inline const char* to_string(AdaptationVariant v) {
  switch (v) {
    case AdaptationVariant::None: return "none";
    case AdaptationVariant::ParallelMH: return "parallel-mh";
    case AdaptationVariant::BlockMH: return "block-mh";
    case AdaptationVariant::SMH: return "smh";
    case AdaptationVariant::MHwithinGibbs: return "mh-gibbs";
    case AdaptationVariant::PMCResample: return "pmc-resample";
  }
  return "?";
}

// Population of proposal means with cached target log-densities. The cache is
// the single source of truth for pi(mu): kernels read through it so the
// evaluation-budget formulas hold exactly.
struct MeanPopulation {
  std::vector<Vector> means;
  std::vector<double> log_pi;

  MeanPopulation() = default;
  MeanPopulation(std::vector<Vector> initial, const CountingTarget& target)
      : means(std::move(initial)) {
    log_pi.reserve(means.size());
    for (const auto& mu : means) log_pi.push_back(target.log_density(mu));
  }

  std::size_t size() const { return means.size(); }
};

struct MhResult {
  Vector mu;
  double log_pi;
  bool accepted;
};

// One Metropolis-Hastings step with a symmetric Gaussian random-walk kernel.
// Exactly one fresh target evaluation; pi(mu') = 0 is a certain rejection.
inline MhResult mh_transition(const Vector& mu, double cached_log_pi, const Gaussian& kernel,
                              const CountingTarget& target, RngStream& rng) {
  const Vector proposal = mu + (kernel.sample(rng) - kernel.mean());
  const double log_pi_prop = target.log_density(proposal);
  const double log_alpha = log_pi_prop - cached_log_pi;
  const bool accept = log_pi_prop != neg_inf &&
                      (log_alpha >= 0.0 || std::log(rng.uniform()) < log_alpha);
  if (accept) return {std::move(proposal), log_pi_prop, true};
  return {mu, cached_log_pi, false};
}

// Joint block move of all N means with a product random-walk kernel; accept or
// reject the whole population. N fresh target evaluations per call.
inline bool block_mh_transition(MeanPopulation& population, const std::vector<Gaussian>& kernels,
                                const CountingTarget& target, RngStream& rng) {
  const std::size_t n = population.size();
  std::vector<Vector> proposed(n);
  std::vector<double> log_pi_prop(n);
  double log_ratio = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    proposed[i] = population.means[i] + (kernels[i].sample(rng) - kernels[i].mean());
    log_pi_prop[i] = target.log_density(proposed[i]);
    log_ratio += log_pi_prop[i] - population.log_pi[i];
  }
  const bool accept =
      !std::isnan(log_ratio) && log_ratio != neg_inf &&
      (log_ratio >= 0.0 || std::log(rng.uniform()) < log_ratio);
  if (accept) {
    population.means = std::move(proposed);
    population.log_pi = std::move(log_pi_prop);
  }
  return accept;
}

// SMH acceptance probability from log inverse weights log(phi/pi):
//   alpha = sum_{n=1..N} iw_n / (sum_{i=0..N} iw_i - min_i iw_i),
// candidate entry included in the denominator sums.
inline double smh_acceptance(const std::vector<double>& log_inv_population,
                             double log_inv_candidate) {
  const double inf = std::numeric_limits<double>::infinity();
  if (log_inv_candidate == inf) return 0.0;  // pi(candidate) = 0
  bool pop_has_inf = false;
  double shift = log_inv_candidate;
  for (double l : log_inv_population) {
    if (l == inf) pop_has_inf = true;
    else shift = std::max(shift, l);
  }
  if (pop_has_inf) return 1.0;  // an infinitely bad member is always replaced
  double num = 0.0;
  double min_iw = std::exp(log_inv_candidate - shift);
  for (double l : log_inv_population) {
    const double iw = std::exp(l - shift);
    num += iw;
    min_iw = std::min(min_iw, iw);
  }
  const double den = num + std::exp(log_inv_candidate - shift) - min_iw;
  if (den <= 0.0) throw DegenerateInverseWeights();
  return std::min(1.0, num / den);
}

// One Sample Metropolis-Hastings step: draw a candidate from the independent
// proposal phi, select a "bad" member with probability proportional to
// phi(mu)/pi(mu), and swap with probability alpha. At most one member changes;
// exactly one fresh target evaluation per call.
inline bool smh_transition(MeanPopulation& population, const Gaussian& phi,
                           const CountingTarget& target, RngStream& rng) {
  const std::size_t n = population.size();
  const Vector candidate = phi.sample(rng);
  const double log_pi_cand = target.log_density(candidate);
  const double log_phi_cand = phi.log_pdf(candidate);

  std::vector<double> log_inv(n);
  for (std::size_t i = 0; i < n; ++i)
    log_inv[i] = phi.log_pdf(population.means[i]) - population.log_pi[i];
  const double log_inv_cand = log_phi_cand - log_pi_cand;

  // selection: multinomial over the population inverse weights. A member with
  // pi = 0 (infinite inverse weight) is selected with certainty.
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t k = n;  // selected index
  const double sel_u = rng.uniform();
  for (std::size_t i = 0; i < n; ++i)
    if (log_inv[i] == inf) {
      k = i;
      break;
    }
  if (k == n) {
    double shift = neg_inf;
    for (double l : log_inv) shift = std::max(shift, l);
    if (shift == neg_inf) throw DegenerateInverseWeights();
    std::vector<double> sel(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sel[i] = std::exp(log_inv[i] - shift);
      total += sel[i];
    }
    if (!(total > 0.0)) throw DegenerateInverseWeights();
    const double u = sel_u * total;
    double acc = 0.0;
    k = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      acc += sel[i];
      if (u <= acc) {
        k = i;
        break;
      }
    }
  }
  if (rng.uniform() < smh_acceptance(log_inv, log_inv_cand)) {
    population.means[k] = candidate;
    population.log_pi[k] = log_pi_cand;
    return true;
  }
  return false;
}

// MH-within-Gibbs sweep, threaded form: a single chain runs through the
// population indices, each step conditioning on the previous component's new
// value (mu_{0,t} = mu_{N,t-1}). N fresh target evaluations.
inline void mh_within_gibbs_sweep(MeanPopulation& population, const std::vector<Gaussian>& kernels,
                                  const CountingTarget& target, RngStream& rng) {
  const std::size_t n = population.size();
  Vector prev = population.means[n - 1];
  double prev_log_pi = population.log_pi[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    const MhResult step = mh_transition(prev, prev_log_pi, kernels[i], target, rng);
    population.means[i] = step.mu;
    population.log_pi[i] = step.log_pi;
    prev = step.mu;
    prev_log_pi = step.log_pi;
  }
}

// Multinomial resampling: n_draws independent index draws from the weighted
// empirical measure.
inline std::vector<std::size_t> pmc_resample_indices(const std::vector<double>& weights,
                                                     std::size_t n_draws, RngStream& rng) {
  const std::vector<double> p = normalize_weights(weights);  // throws on all-zero
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  std::vector<std::size_t> out;
  out.reserve(n_draws);
  for (std::size_t i = 0; i < n_draws; ++i) {
    const double u = rng.uniform();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::size_t>(it - cdf.begin()));
  }
  return out;
}

// Every output is one of the input positions.
inline std::vector<Vector> pmc_resample(const std::vector<Vector>& positions,
                                        const std::vector<double>& weights, RngStream& rng) {
  const std::vector<std::size_t> idx = pmc_resample_indices(weights, positions.size(), rng);
  std::vector<Vector> out;
  out.reserve(positions.size());
  for (std::size_t i : idx) out.push_back(positions[i]);
  return out;
}

}  // namespace lais

#endif  // LAIS_ADAPTATION_HPP
