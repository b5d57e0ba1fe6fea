#ifndef LAIS_BENCH_HPP
#define LAIS_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "lais/core.hpp"
#include "lais/samplers.hpp"
#include "lais/targets.hpp"

namespace lais {

// --- experiment description ----------------------------------------------------

struct ExperimentSpec {
  std::string experiment = "experiment";

  // target
  std::string target_name;
  int target_dim = 2;           // highdim only
  std::string dataset_path;     // sensor only
  std::string reference_path;   // cached quadrature reference, if any
  double prior_std = 5.0;       // sensor only

  SamplerConfig base;  // template; target pointer is attached by the runner

  // sweeps; an empty list means "use the template value"
  std::vector<double> sigma_sweep;
  std::vector<double> lambda_sweep;
  std::vector<int> n_sweep;
  std::vector<int> m_sweep;
  std::vector<int> t_sweep;

  int replications = 1;
  int jobs = 1;
  std::uint64_t master_seed = 0;
  std::string reference_source = "analytic";  // analytic | quadrature | frozen
};

struct ResultRecord {
  std::string experiment;
  std::string algorithm;
  std::string target;
  int n = 0, m = 0, t = 0;
  double sigma = 0.0, lambda = 0.0;
  std::string scheme;
  std::string adaptation;
  int replication = 0;
  std::uint64_t seed = 0;
  std::vector<double> i_hat;
  double z_hat = 0.0;
  long long e = 0;
  double wall_time_s = 0.0;
};

// --- config file ----------------------------------------------------------------
// INI-style: [target] / [algorithm] / [sweep] / [harness] sections of
// "key = value" lines; '#' starts a comment.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

[[noreturn]] inline void config_fail(const std::string& path, int line, const std::string& what) {
  throw ConfigError(path + ":" + std::to_string(line) + ": " + what);
}

inline double parse_double(const std::string& path, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    config_fail(path, line, "expected a number, got '" + v + "'");
  }
}

inline long long parse_int(const std::string& path, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    config_fail(path, line, "expected an integer, got '" + v + "'");
  }
}

inline Algorithm parse_algorithm(const std::string& path, int line, const std::string& v) {
  for (Algorithm a : {Algorithm::StaticMIS, Algorithm::RWIS, Algorithm::PopulationMAIS,
                      Algorithm::GAMIS, Algorithm::StandardPMC, Algorithm::ParallelMHBaseline})
    if (v == to_string(a)) return a;
  config_fail(path, line, "unknown algorithm '" + v + "'");
}

inline MixtureScheme parse_scheme(const std::string& path, int line, const std::string& v) {
  for (MixtureScheme s : {MixtureScheme::Standard, MixtureScheme::Spatial, MixtureScheme::Temporal,
                          MixtureScheme::Full, MixtureScheme::Partition})
    if (v == to_string(s)) return s;
  config_fail(path, line, "unknown mixture scheme '" + v + "'");
}

inline AdaptationVariant parse_adaptation(const std::string& path, int line, const std::string& v) {
  for (AdaptationVariant a :
       {AdaptationVariant::None, AdaptationVariant::ParallelMH, AdaptationVariant::BlockMH,
        AdaptationVariant::SMH, AdaptationVariant::MHwithinGibbs, AdaptationVariant::PMCResample})
    if (v == to_string(a)) return a;
  config_fail(path, line, "unknown adaptation '" + v + "'");
}

// init = in1 | in2 | box:lo1,hi1[,lo2,hi2,...]
// A single lo,hi pair is replicated across all coordinates at run time.
inline InitBox parse_init(const std::string& path, int line, const std::string& v, int dim) {
  auto box = [dim](double lo, double hi) {
    return InitBox{Vector::Constant(dim, lo), Vector::Constant(dim, hi)};
  };
  if (v == "in1") return box(-4.0, 4.0);
  if (v == "in2") return box(-20.0, 20.0);
  if (v.rfind("box:", 0) == 0) {
    const auto parts = split(v.substr(4), ',');
    if (parts.size() == 2)
      return box(parse_double(path, line, parts[0]), parse_double(path, line, parts[1]));
    if (parts.size() != 2 * static_cast<std::size_t>(dim))
      config_fail(path, line, "init box needs 2 or 2*dim numbers");
    InitBox b{Vector(dim), Vector(dim)};
    for (int j = 0; j < dim; ++j) {
      b.lo[j] = parse_double(path, line, parts[2 * static_cast<std::size_t>(j)]);
      b.hi[j] = parse_double(path, line, parts[2 * static_cast<std::size_t>(j) + 1]);
    }
    return b;
  }
  config_fail(path, line, "init must be in1, in2 or box:...");
}

}  // namespace detail

inline ExperimentSpec parse_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ExperimentSpec spec;
  std::string section;
  std::string raw;
  int line_no = 0;
  std::optional<std::pair<int, std::string>> pending_init;  // resolved once dim is known

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') detail::config_fail(path, line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "target" && section != "algorithm" && section != "sweep" &&
          section != "harness")
        detail::config_fail(path, line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) detail::config_fail(path, line_no, "expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) detail::config_fail(path, line_no, "empty key or value");

    if (section == "target") {
      if (key == "name") spec.target_name = value;
      else if (key == "dim") spec.target_dim = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "dataset") spec.dataset_path = value;
      else if (key == "reference") spec.reference_path = value;
      else if (key == "prior_std") spec.prior_std = detail::parse_double(path, line_no, value);
      else detail::config_fail(path, line_no, "unknown [target] key '" + key + "'");
    } else if (section == "algorithm") {
      if (key == "name") spec.base.algorithm = detail::parse_algorithm(path, line_no, value);
      else if (key == "N") spec.base.n_chains = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "M") spec.base.samples_per_proposal = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "T") spec.base.iterations = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "sigma") spec.base.sigma = detail::parse_double(path, line_no, value);
      else if (key == "lambda") spec.base.lambda = detail::parse_double(path, line_no, value);
      else if (key == "scheme") spec.base.denominator.variant = detail::parse_scheme(path, line_no, value);
      else if (key == "adaptation") spec.base.adaptation = detail::parse_adaptation(path, line_no, value);
      else if (key == "init") pending_init = {line_no, value};
      else if (key == "burn_in") spec.base.burn_in = static_cast<int>(detail::parse_int(path, line_no, value));
      else detail::config_fail(path, line_no, "unknown [algorithm] key '" + key + "'");
    } else if (section == "sweep") {
      const auto parts = detail::split(value, ',');
      if (key == "sigma" || key == "lambda") {
        std::vector<double> vals;
        for (const auto& p : parts) vals.push_back(detail::parse_double(path, line_no, p));
        (key == "sigma" ? spec.sigma_sweep : spec.lambda_sweep) = vals;
      } else if (key == "N" || key == "M" || key == "T") {
        std::vector<int> vals;
        for (const auto& p : parts) vals.push_back(static_cast<int>(detail::parse_int(path, line_no, p)));
        (key == "N" ? spec.n_sweep : key == "M" ? spec.m_sweep : spec.t_sweep) = vals;
      } else {
        detail::config_fail(path, line_no, "unknown [sweep] key '" + key + "'");
      }
    } else if (section == "harness") {
      if (key == "experiment") spec.experiment = value;
      else if (key == "replications") spec.replications = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "jobs") spec.jobs = static_cast<int>(detail::parse_int(path, line_no, value));
      else if (key == "seed") spec.master_seed = static_cast<std::uint64_t>(detail::parse_int(path, line_no, value));
      else if (key == "reference") spec.reference_source = value;
      else detail::config_fail(path, line_no, "unknown [harness] key '" + key + "'");
    } else {
      detail::config_fail(path, line_no, "key outside any section");
    }
  }
  if (spec.target_name.empty()) throw ConfigError(path + ": [target] name is required");
  if (spec.replications < 1) throw ConfigError(path + ": replications must be >= 1");
  if (spec.jobs < 1) throw ConfigError(path + ": jobs must be >= 1");

  int dim = 2;
  if (spec.target_name == "highdim") dim = spec.target_dim;
  else if (spec.target_name == "sensor") dim = 4;
  else if (spec.target_name == "gauss1d" || spec.target_name == "bimodal1d") dim = 1;
  spec.target_dim = dim;
  if (pending_init)
    spec.base.init_box = detail::parse_init(path, pending_init->first, pending_init->second, dim);
  return spec;
}

// --- target registry + quadrature references -------------------------------------

inline std::vector<std::string> registered_targets() {
  return {"mixture5", "highdim", "banana", "gauss1d", "bimodal1d", "sensor"};
}

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string file_contents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// Canonical description of the configured target; its hash keys the
// quadrature-reference cache so a stale cache is rejected.
inline std::string target_spec_string(const ExperimentSpec& spec) {
  std::ostringstream ss;
  ss << "name=" << spec.target_name << ";dim=" << spec.target_dim;
  if (spec.target_name == "sensor") {
    ss << ";prior_std=" << std::setprecision(17) << spec.prior_std;
    ss << ";dataset=" << detail::fnv1a64(detail::file_contents(spec.dataset_path));
  }
  return ss.str();
}

struct QuadratureReference {
  Vector mean;
  double z = 0.0;
  std::uint64_t spec_hash = 0;
};

// Midpoint-rule quadrature of the unnormalized target over a box grid.
inline QuadratureReference grid_quadrature(const TargetModel& target, const GridSpec& grid) {
  const double vol = grid.cell_volume();
  double z = 0.0;
  Vector first = Vector::Zero(target.dim());
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const Vector x = grid.midpoint(c);
    const double p = std::exp(target.log_density(x));
    z += p * vol;
    first += p * vol * x;
  }
  if (z <= 0.0) throw AllZeroWeights();
  QuadratureReference ref;
  ref.mean = first / z;
  ref.z = z;
  return ref;
}

// Default integration boxes, wide enough to hold >1-1e-9 of each target's mass.
inline GridSpec default_quadrature_grid(const std::string& target_name, int dim) {
  auto box = [](std::initializer_list<double> lo, std::initializer_list<double> hi,
                std::initializer_list<int> bins) {
    GridSpec g;
    g.lo = Vector(static_cast<Eigen::Index>(lo.size()));
    g.hi = Vector(static_cast<Eigen::Index>(hi.size()));
    Eigen::Index i = 0;
    for (double v : lo) g.lo[i++] = v;
    i = 0;
    for (double v : hi) g.hi[i++] = v;
    g.bins.assign(bins);
    return g;
  };
  if (target_name == "banana") return box({-25, -15}, {25, 15}, {1250, 750});
  if (target_name == "mixture5") return box({-25, -25}, {25, 25}, {1000, 1000});
  if (target_name == "gauss1d") return box({-10}, {10}, {4000});
  if (target_name == "bimodal1d") return box({-12}, {12}, {4800});
  if (target_name == "sensor") return box({-12, -12, -45, 0.02}, {15, 15, 5, 20}, {54, 54, 54, 54});
  if (target_name == "highdim" && dim <= 2) {
    GridSpec g;
    g.lo = Vector::Constant(dim, -35.0);
    g.hi = Vector::Constant(dim, 35.0);
    g.bins.assign(static_cast<std::size_t>(dim), 1400);
    return g;
  }
  throw ConfigError("no quadrature grid for target '" + target_name + "'");
}

inline void save_reference(const QuadratureReference& ref, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write reference file: " + path);
  out << std::setprecision(17);
  out << "hash " << ref.spec_hash << "\n";
  out << "z " << ref.z << "\n";
  out << "mean";
  for (Eigen::Index j = 0; j < ref.mean.size(); ++j) out << " " << ref.mean[j];
  out << "\n";
}

inline QuadratureReference load_reference(const std::string& path, std::uint64_t expected_hash) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read reference file: " + path);
  QuadratureReference ref;
  std::string key;
  std::vector<double> mean;
  while (in >> key) {
    if (key == "hash") in >> ref.spec_hash;
    else if (key == "z") in >> ref.z;
    else if (key == "mean") {
      double v;
      while (in >> v) mean.push_back(v);
    } else {
      throw ConfigError("malformed reference file: " + path);
    }
  }
  if (mean.empty()) throw ConfigError("reference file has no mean: " + path);
  ref.mean = Eigen::Map<const Vector>(mean.data(), static_cast<Eigen::Index>(mean.size()));
  if (ref.spec_hash != expected_hash)
    throw ConfigError("reference file " + path +
                      " is stale: target spec hash mismatch (re-run the quadrature subcommand)");
  return ref;
}

// Builds the configured target, attaching a cached quadrature reference when
// one is configured.
inline TargetModel make_target(const ExperimentSpec& spec) {
  std::optional<QuadratureReference> ref;
  if (!spec.reference_path.empty())
    ref = load_reference(spec.reference_path, detail::fnv1a64(target_spec_string(spec)));

  if (spec.target_name == "mixture5") return make_mixture5();
  if (spec.target_name == "highdim") return make_highdim_mixture(spec.target_dim);
  if (spec.target_name == "gauss1d") return make_gauss1d();
  if (spec.target_name == "bimodal1d") return make_bimodal1d();
  if (spec.target_name == "banana") {
    if (ref) return make_banana({}, ref->mean, ref->z);
    return make_banana();
  }
  if (spec.target_name == "sensor") {
    if (spec.dataset_path.empty()) throw ConfigError("sensor target requires a dataset file");
    SensorNetworkSpec data = load_sensor_data(spec.dataset_path);
    data.prior_std = spec.prior_std;
    if (ref) return make_sensor_posterior(std::move(data), ref->mean, ref->z);
    return make_sensor_posterior(std::move(data));
  }
  throw ConfigError("unknown target '" + spec.target_name + "'");
}

// --- harness ---------------------------------------------------------------------

inline std::vector<SamplerConfig> sweep_points(const ExperimentSpec& spec) {
  auto or_default = [](auto sweep, auto base) {
    if (sweep.empty()) sweep.push_back(base);
    return sweep;
  };
  const auto sigmas = or_default(spec.sigma_sweep, spec.base.sigma);
  const auto lambdas = or_default(spec.lambda_sweep, spec.base.lambda);
  const auto ns = or_default(spec.n_sweep, spec.base.n_chains);
  const auto ms = or_default(spec.m_sweep, spec.base.samples_per_proposal);
  const auto ts = or_default(spec.t_sweep, spec.base.iterations);
  std::vector<SamplerConfig> points;
  for (int n : ns)
    for (int m : ms)
      for (int t : ts)
        for (double sigma : sigmas)
          for (double lambda : lambdas) {
            SamplerConfig cfg = spec.base;
            cfg.n_chains = n;
            cfg.samples_per_proposal = m;
            cfg.iterations = t;
            cfg.sigma = sigma;
            cfg.lambda = lambda;
            points.push_back(std::move(cfg));
          }
  return points;
}

// Runs R replications of every sweep point on a worker pool of `jobs` threads.
// Replication r of every sweep point uses the derived seed
// derive_seed(master_seed, r); records come back in (sweep point, replication)
// order regardless of the pool width.
inline std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec,
                                                const TargetModel& target) {
  std::vector<SamplerConfig> points = sweep_points(spec);
  for (auto& p : points) p.target = &target;
  const std::size_t n_tasks = points.size() * static_cast<std::size_t>(spec.replications);
  std::vector<ResultRecord> records(n_tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks || failed.load()) return;
      const std::size_t point = task / static_cast<std::size_t>(spec.replications);
      const int rep = static_cast<int>(task % static_cast<std::size_t>(spec.replications));
      SamplerConfig cfg = points[point];
      cfg.master_seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(rep));
      try {
        const RunResult run_result = run(cfg);
        ResultRecord& rec = records[task];
        rec.experiment = spec.experiment;
        rec.algorithm = to_string(cfg.algorithm);
        rec.target = target.name();
        rec.n = cfg.n_chains;
        rec.m = cfg.samples_per_proposal;
        rec.t = cfg.iterations;
        rec.sigma = cfg.sigma;
        rec.lambda = cfg.lambda;
        rec.scheme = to_string(cfg.denominator.variant);
        rec.adaptation = to_string(cfg.algorithm == Algorithm::ParallelMHBaseline
                                       ? AdaptationVariant::None
                                       : cfg.adaptation);
        rec.replication = rep;
        rec.seed = cfg.master_seed;
        rec.i_hat.assign(run_result.i_hat.data(), run_result.i_hat.data() + run_result.i_hat.size());
        rec.z_hat = run_result.z_hat;
        rec.e = run_result.eval_count;
        rec.wall_time_s = run_result.wall_time_s;
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = ex.what();
        return;
      }
    }
  };

  const int width = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), n_tasks);
  std::vector<std::thread> pool;
  for (int k = 1; k < width; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failed.load()) throw std::runtime_error("replication failed: " + error_message);
  return records;
}

// MSE_d = (1/R) sum_r (I_hat_{d,r} - ref_d)^2; analogous for Z when a reference
// Z exists and the records carry one.
inline std::pair<Vector, std::optional<double>> compute_mse(
    const std::vector<ResultRecord>& records, const Vector& reference_mean,
    std::optional<double> reference_z = std::nullopt) {
  if (records.empty()) throw NoReference();
  Vector mse = Vector::Zero(reference_mean.size());
  double z_mse = 0.0;
  bool z_ok = reference_z.has_value();
  for (const auto& r : records) {
    if (static_cast<Eigen::Index>(r.i_hat.size()) != reference_mean.size())
      throw DimensionMismatch("compute_mse: record dimension mismatch");
    for (Eigen::Index d = 0; d < reference_mean.size(); ++d) {
      const double err = r.i_hat[static_cast<std::size_t>(d)] - reference_mean[d];
      mse[d] += err * err;
    }
    if (z_ok && std::isfinite(r.z_hat)) {
      const double err = r.z_hat - *reference_z;
      z_mse += err * err;
    } else {
      z_ok = z_ok && false;
    }
  }
  mse /= static_cast<double>(records.size());
  if (z_ok) return {mse, z_mse / static_cast<double>(records.size())};
  return {mse, std::nullopt};
}

// --- CSV -------------------------------------------------------------------------

inline void normalize_order(std::vector<ResultRecord>& records) {
  std::sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
    auto key = [](const ResultRecord& r) {
      return std::tuple<const std::string&, const std::string&, int, int, int, double, double,
                        const std::string&, const std::string&, int>(
          r.experiment, r.algorithm, r.n, r.m, r.t, r.sigma, r.lambda, r.scheme, r.adaptation,
          r.replication);
    };
    return key(a) < key(b);
  });
}

inline void export_csv(const std::vector<ResultRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write CSV: " + path);
  const std::size_t dim = records.empty() ? 1 : records.front().i_hat.size();
  out << "experiment,algorithm,target,N,M,T,sigma,lambda,scheme,adaptation,replication,seed";
  for (std::size_t d = 1; d <= dim; ++d) out << ",I_hat_" << d;
  out << ",Z_hat,E,wall_time_s\n";
  out << std::setprecision(17);
  for (const auto& r : records) {
    if (r.i_hat.size() != dim)
      throw DimensionMismatch("export_csv: records have inconsistent dimensions");
    out << r.experiment << ',' << r.algorithm << ',' << r.target << ',' << r.n << ',' << r.m << ','
        << r.t << ',' << r.sigma << ',' << r.lambda << ',' << r.scheme << ',' << r.adaptation
        << ',' << r.replication << ',' << r.seed;
    for (double v : r.i_hat) out << ',' << v;
    out << ',' << r.z_hat << ',' << r.e << ',' << r.wall_time_s << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<ResultRecord> parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read CSV: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty CSV: " + path);
  const auto columns = detail::split(header, ',');
  std::size_t dim = 0;
  for (const auto& c : columns)
    if (c.rfind("I_hat_", 0) == 0) ++dim;
  if (columns.size() != 15 + dim)
    throw std::runtime_error("unexpected CSV header in " + path);

  std::vector<ResultRecord> records;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split(line, ',');
    if (f.size() != columns.size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": wrong field count");
    ResultRecord r;
    std::size_t i = 0;
    r.experiment = f[i++];
    r.algorithm = f[i++];
    r.target = f[i++];
    r.n = std::stoi(f[i++]);
    r.m = std::stoi(f[i++]);
    r.t = std::stoi(f[i++]);
    r.sigma = std::stod(f[i++]);
    r.lambda = std::stod(f[i++]);
    r.scheme = f[i++];
    r.adaptation = f[i++];
    r.replication = std::stoi(f[i++]);
    r.seed = std::stoull(f[i++]);
    for (std::size_t d = 0; d < dim; ++d) r.i_hat.push_back(std::stod(f[i++]));
    r.z_hat = std::stod(f[i++]);
    r.e = std::stoll(f[i++]);
    r.wall_time_s = std::stod(f[i++]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace lais

#endif  // LAIS_BENCH_HPP
