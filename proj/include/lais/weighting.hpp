#ifndef LAIS_WEIGHTING_HPP
#define LAIS_WEIGHTING_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lais/core.hpp"
#include "lais/gaussian.hpp"
#include "lais/targets.hpp"

namespace lais {

using ProposalComponent = Gaussian;

struct UnknownIndex : std::runtime_error {
  UnknownIndex() : std::runtime_error("proposal index (n,t) out of range") {}
};

struct PartitionNotCovering : std::runtime_error {
  PartitionNotCovering() : std::runtime_error("partition sets do not cover index (n,t)") {}
};

struct MemoryCapExceeded : std::runtime_error {
  MemoryCapExceeded()
      : std::runtime_error("proposal history exceeds the configured cap "
                           "(temporal/full mixtures store all NT proposals)") {}
};

// Immutable-per-iteration store of the proposals q_{n,t}. Iterations are
// 1-based to match the run indexing; chains are 0-based.
class ProposalTable {
 public:
  explicit ProposalTable(std::size_t history_cap = kDefaultHistoryCap)
      : history_cap_(history_cap) {}

  void push_iteration(std::vector<ProposalComponent> population) {
    if (!by_iteration_.empty() && population.size() != by_iteration_.front().size())
      throw ConfigError("ProposalTable: population size changed between iterations");
    if ((by_iteration_.size() + 1) * population.size() > history_cap_) throw MemoryCapExceeded();
    by_iteration_.push_back(std::move(population));
  }

  const ProposalComponent& at(int n, int t) const {
    if (t < 1 || t > static_cast<int>(by_iteration_.size())) throw UnknownIndex();
    const auto& pop = by_iteration_[static_cast<std::size_t>(t - 1)];
    if (n < 0 || n >= static_cast<int>(pop.size())) throw UnknownIndex();
    return pop[static_cast<std::size_t>(n)];
  }

  int iterations() const { return static_cast<int>(by_iteration_.size()); }
  int chains() const {
    return by_iteration_.empty() ? 0 : static_cast<int>(by_iteration_.front().size());
  }

  static constexpr std::size_t kDefaultHistoryCap = 1u << 22;

 private:
  std::vector<std::vector<ProposalComponent>> by_iteration_;
  std::size_t history_cap_;
};

enum class MixtureScheme { Standard, Spatial, Temporal, Full, Partition };

inline const char* to_string(MixtureScheme s) {
  switch (s) {
    case MixtureScheme::Standard: return "standard";
    case MixtureScheme::Spatial: return "spatial";
    case MixtureScheme::Temporal: return "temporal";
    case MixtureScheme::Full: return "full";
    case MixtureScheme::Partition: return "partition";
  }
  return "?";
}

// Which mixture Phi_{n,t} divides the weights. Partition sets hold (n,t)
// pairs (t 1-based) and must be disjoint and covering. per_chain_counts
// holds M_n for unequal-count mixtures; empty means equal counts.
struct DenominatorScheme {
  MixtureScheme variant = MixtureScheme::Spatial;
  std::vector<std::vector<std::pair<int, int>>> partition_sets;
  std::vector<int> per_chain_counts;

  double count_of(int n) const {
    if (per_chain_counts.empty()) return 1.0;
    if (n < 0 || n >= static_cast<int>(per_chain_counts.size())) throw UnknownIndex();
    return static_cast<double>(per_chain_counts[static_cast<std::size_t>(n)]);
  }
};

// log Phi_{n,t}(x). All mixture evaluations go through log-sum-exp.
inline double denominator_log_value(const DenominatorScheme& scheme, const ProposalTable& table,
                                    int n, int t, const Vector& x) {
  const int big_n = table.chains();
  const int big_t = table.iterations();
  switch (scheme.variant) {
    case MixtureScheme::Standard:
      return table.at(n, t).log_pdf(x);
    case MixtureScheme::Spatial: {
      std::vector<double> terms(static_cast<std::size_t>(big_n));
      double total = 0.0;
      for (int k = 0; k < big_n; ++k) total += scheme.count_of(k);
      for (int k = 0; k < big_n; ++k)
        terms[static_cast<std::size_t>(k)] =
            std::log(scheme.count_of(k) / total) + table.at(k, t).log_pdf(x);
      return log_sum_exp(terms);
    }
    case MixtureScheme::Temporal: {
      std::vector<double> terms(static_cast<std::size_t>(big_t));
      for (int r = 1; r <= big_t; ++r)
        terms[static_cast<std::size_t>(r - 1)] = table.at(n, r).log_pdf(x);
      return log_sum_exp(terms) - std::log(static_cast<double>(big_t));
    }
    case MixtureScheme::Full: {
      std::vector<double> terms;
      terms.reserve(static_cast<std::size_t>(big_n) * static_cast<std::size_t>(big_t));
      for (int r = 1; r <= big_t; ++r)
        for (int k = 0; k < big_n; ++k) terms.push_back(table.at(k, r).log_pdf(x));
      return log_sum_exp(terms) - std::log(static_cast<double>(big_n * big_t));
    }
    case MixtureScheme::Partition: {
      for (const auto& set : scheme.partition_sets) {
        bool member = false;
        for (const auto& [k, r] : set)
          if (k == n && r == t) {
            member = true;
            break;
          }
        if (!member) continue;
        // members referring to iterations not yet generated are excluded, so a
        // partial-history evaluation mixes only over the proposals seen so far
        std::vector<double> terms;
        terms.reserve(set.size());
        double total = 0.0;
        for (const auto& [k, r] : set)
          if (r <= big_t) total += scheme.count_of(k);
        for (const auto& [k, r] : set)
          if (r <= big_t)
            terms.push_back(std::log(scheme.count_of(k) / total) + table.at(k, r).log_pdf(x));
        return log_sum_exp(terms);
      }
      throw PartitionNotCovering();
    }
  }
  throw ConfigError("unknown mixture scheme");
}

// raw weight = exp(log pi(x) - log Phi_{n,t}(x)); 0 where pi(x) = 0, never NaN.
inline double raw_weight(double log_pi, double log_phi) {
  if (log_pi == neg_inf) return 0.0;
  const double w = std::exp(log_pi - log_phi);
  if (std::isnan(w)) throw NonFiniteWeight();
  return w;
}

// Recomputes the raw weights of stored samples against the current table.
// log_pi must hold the cached target log-density per sample; the target is
// never re-evaluated here.
inline void compute_weights(std::vector<WeightedSample>& samples, const std::vector<double>& log_pi,
                            const DenominatorScheme& scheme, const ProposalTable& table) {
  if (samples.size() != log_pi.size())
    throw DimensionMismatch("compute_weights: sample/log-density count mismatch");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double phi =
        denominator_log_value(scheme, table, samples[i].chain, samples[i].iteration, samples[i].x);
    samples[i].raw_weight = raw_weight(log_pi[i], phi);
  }
}

// Convenience overload that evaluates the target (and counts the evaluations).
inline std::vector<double> compute_weights(std::vector<WeightedSample>& samples,
                                           const CountingTarget& target,
                                           const DenominatorScheme& scheme,
                                           const ProposalTable& table) {
  std::vector<double> log_pi(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) log_pi[i] = target.log_density(samples[i].x);
  compute_weights(samples, log_pi, scheme, table);
  return log_pi;
}

}  // namespace lais

#endif  // LAIS_WEIGHTING_HPP
