#ifndef LAIS_ESTIMATION_HPP
#define LAIS_ESTIMATION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "lais/core.hpp"

namespace lais {

struct AllZeroPartials : std::runtime_error {
  AllZeroPartials() : std::runtime_error("every partial estimator has zero mass") {}
};

using MomentFunction = std::function<Vector(const Vector&)>;

inline MomentFunction identity_moment() {
  return [](const Vector& x) { return x; };
}

// Self-normalized IS estimate over one batch:
//   I_hat = sum(rho_bar * f(x)),  Z_hat = mean(raw weights).
inline std::pair<Vector, double> batch_estimate(const std::vector<WeightedSample>& samples,
                                                const MomentFunction& f) {
  if (samples.empty()) throw AllZeroWeights();
  double total = 0.0;
  for (const auto& s : samples) {
    if (!std::isfinite(s.raw_weight) || s.raw_weight < 0.0) throw NonFiniteWeight();
    total += s.raw_weight;
  }
  if (total <= 0.0) throw AllZeroWeights();
  Vector acc = Vector::Zero(f(samples.front().x).size());
  for (const auto& s : samples)
    if (s.raw_weight > 0.0) acc += s.raw_weight * f(s.x);
  return {acc / total, total / static_cast<double>(samples.size())};
}

// Running accumulators H_t, I_hat_t, Z_hat_t. The recursive update is the
// convex combination I_t = (H_{t-1} I_{t-1} + sum w f) / H_t with
// H_t = H_{t-1} + S_t and Z_t = H_t / total_samples.
struct RunningEstimator {
  double h = 0.0;
  Vector i_hat;
  double z_hat = 0.0;
  long long total_samples = 0;
  int t = 0;
};

inline RunningEstimator recursive_update(RunningEstimator state,
                                         const std::vector<WeightedSample>& batch,
                                         const MomentFunction& f) {
  double s_t = 0.0;
  Vector acc;
  bool acc_init = false;
  for (const auto& s : batch) {
    if (!std::isfinite(s.raw_weight) || s.raw_weight < 0.0) throw NonFiniteWeight();
    if (s.raw_weight <= 0.0) continue;
    Vector fx = f(s.x);
    if (!acc_init) {
      acc = Vector::Zero(fx.size());
      acc_init = true;
    }
    acc += s.raw_weight * fx;
    s_t += s.raw_weight;
  }
  state.t += 1;
  state.total_samples += static_cast<long long>(batch.size());
  if (s_t > 0.0) {
    const double h_new = state.h + s_t;
    if (state.i_hat.size() == 0) state.i_hat = Vector::Zero(acc.size());
    state.i_hat = (state.h * state.i_hat + acc) / h_new;
    state.h = h_new;
  }
  state.z_hat = state.total_samples > 0 ? state.h / static_cast<double>(state.total_samples) : 0.0;
  return state;
}

struct PartialEstimate {
  Vector i_hat;
  double z_hat = 0.0;
  long long sample_count = 0;
};

// Z-weighted convex combination of partial estimators. With unequal sample
// counts the weights are M_n * Z_hat_n; the global Z is the count-weighted
// mean of the partial Z's.
inline std::pair<Vector, double> combine_partial_estimators(
    const std::vector<PartialEstimate>& partials) {
  if (partials.empty()) throw AllZeroPartials();
  double mass = 0.0;
  double count = 0.0;
  Vector acc = Vector::Zero(partials.front().i_hat.size());
  for (const auto& p : partials) {
    const double m = static_cast<double>(p.sample_count) * p.z_hat;
    if (m > 0.0) acc += m * p.i_hat;
    mass += m;
    count += static_cast<double>(p.sample_count);
  }
  if (mass <= 0.0) throw AllZeroPartials();
  return {acc / mass, mass / count};
}

struct ParticleApproximation {
  std::vector<Vector> support;
  std::vector<double> probabilities;
};

inline ParticleApproximation particle_approximation(const std::vector<WeightedSample>& samples) {
  if (samples.empty()) throw AllZeroWeights();
  ParticleApproximation out;
  out.support.reserve(samples.size());
  std::vector<double> weights;
  weights.reserve(samples.size());
  for (const auto& s : samples) {
    out.support.push_back(s.x);
    weights.push_back(s.raw_weight);
  }
  out.probabilities = normalize_weights(weights);
  return out;
}

}  // namespace lais

#endif  // LAIS_ESTIMATION_HPP
