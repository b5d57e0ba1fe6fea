#ifndef LAIS_CORE_HPP
#define LAIS_CORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lais {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// --- errors ---------------------------------------------------------------

struct AllZeroWeights : std::runtime_error {
  AllZeroWeights() : std::runtime_error("all importance weights are zero") {}
};

struct NonFiniteWeight : std::runtime_error {
  NonFiniteWeight() : std::runtime_error("non-finite importance weight") {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// --- weighted samples -------------------------------------------------------

struct WeightedSample {
  Vector x;
  double raw_weight = 0.0;  // >= 0, finite
  int chain = 0;            // n
  int iteration = 0;        // t (1-based)
  int replica = 0;          // m
};

// --- rng -------------------------------------------------------------------

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Derives a child seed from (master_seed, stream_id). Identical inputs give
// identical streams; distinct stream ids give statistically independent ones.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
  return detail::splitmix64(detail::splitmix64(master_seed) ^ detail::splitmix64(~stream_id));
}

class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : engine_(derive_seed(master_seed, stream_id)) {}

  double uniform() { return unif_(engine_); }
  double normal() { return norm_(engine_); }

  Vector normal_vector(Eigen::Index dim) {
    Vector z(dim);
    for (Eigen::Index i = 0; i < dim; ++i) z[i] = norm_(engine_);
    return z;
  }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * unif_(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> norm_{0.0, 1.0};
};

// --- numerics ----------------------------------------------------------------

// log(sum_i exp(v_i)), max-shifted. -inf entries are allowed; an all -inf
// input returns -inf.
inline double log_sum_exp(const std::vector<double>& log_values) {
  if (log_values.empty()) throw std::invalid_argument("log_sum_exp: empty input");
  const double m = *std::max_element(log_values.begin(), log_values.end());
  if (!std::isfinite(m)) return m;  // all -inf (or +inf propagates)
  double acc = 0.0;
  for (double v : log_values) acc += std::exp(v - m);
  return m + std::log(acc);
}

inline double log_sum_exp(const double* v, std::size_t n) {
  const double m = *std::max_element(v, v + n);
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::exp(v[i] - m);
  return m + std::log(acc);
}

// weights[i] / sum(weights); throws on all-zero or non-finite input.
inline std::vector<double> normalize_weights(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw NonFiniteWeight();
    total += w;
  }
  if (total <= 0.0) throw AllZeroWeights();
  std::vector<double> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i] / total;
  return out;
}

}  // namespace lais

#endif  // LAIS_CORE_HPP
