#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include "lais/bench.hpp"

using namespace lais;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(std::string p, const std::string& contents = "") : path(std::move(p)) {
    if (!contents.empty()) {
      std::ofstream out(path);
      out << contents;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kSmallConfig = R"(# small smoke experiment
[target]
name = gauss1d

[algorithm]
name = rwis
N = 1
M = 5
T = 20
sigma = 1
lambda = 2
scheme = standard
init = box:-2,2

[harness]
experiment = smoke
replications = 3
seed = 12
jobs = 1
)";

}  // namespace

TEST_CASE("config parsing") {
  TempFile cfg("test_cfg_ok.ini", kSmallConfig);
  const ExperimentSpec spec = parse_experiment_config(cfg.path);
  CHECK(spec.experiment == "smoke");
  CHECK(spec.target_name == "gauss1d");
  CHECK(spec.base.algorithm == Algorithm::RWIS);
  CHECK(spec.base.samples_per_proposal == 5);
  CHECK(spec.base.iterations == 20);
  CHECK(spec.base.denominator.variant == MixtureScheme::Standard);
  CHECK(spec.replications == 3);
  CHECK(spec.master_seed == 12);
  REQUIRE(spec.base.init_box.has_value());
  CHECK(spec.base.init_box->lo[0] == -2.0);
  CHECK(spec.target_dim == 1);
}

TEST_CASE("config parse errors carry line diagnostics") {
  TempFile bad_key("test_cfg_badkey.ini", "[target]\nname = gauss1d\nbogus = 1\n");
  CHECK_THROWS_WITH(parse_experiment_config(bad_key.path),
                    Catch::Matchers::ContainsSubstring(":3:"));
  TempFile bad_num("test_cfg_badnum.ini",
                   "[target]\nname = gauss1d\n[algorithm]\nname = rwis\nT = twenty\n");
  CHECK_THROWS_WITH(parse_experiment_config(bad_num.path),
                    Catch::Matchers::ContainsSubstring(":5:"));
  TempFile bad_section("test_cfg_badsec.ini", "[nonsense]\nx = 1\n");
  CHECK_THROWS_AS(parse_experiment_config(bad_section.path), ConfigError);
  TempFile no_target("test_cfg_notarget.ini", "[harness]\nreplications = 1\n");
  CHECK_THROWS_AS(parse_experiment_config(no_target.path), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config("missing_file.ini"), ConfigError);
}

TEST_CASE("single-replication experiment matches a direct sampler call") {
  TempFile cfg("test_cfg_single.ini", kSmallConfig);
  ExperimentSpec spec = parse_experiment_config(cfg.path);
  spec.replications = 1;
  const TargetModel target = make_target(spec);
  const auto records = run_experiment(spec, target);
  REQUIRE(records.size() == 1);

  SamplerConfig direct = spec.base;
  direct.target = &target;
  direct.master_seed = derive_seed(spec.master_seed, 0);
  const RunResult r = run(direct);
  CHECK(records[0].i_hat[0] == r.i_hat[0]);
  CHECK(records[0].z_hat == r.z_hat);
  CHECK(records[0].e == r.eval_count);
  CHECK(records[0].seed == direct.master_seed);
  CHECK(records[0].replication == 0);
}

TEST_CASE("worker pool width does not change the records") {
  TempFile cfg("test_cfg_pool.ini", kSmallConfig);
  ExperimentSpec spec = parse_experiment_config(cfg.path);
  spec.replications = 4;
  const TargetModel target = make_target(spec);
  spec.jobs = 1;
  auto a = run_experiment(spec, target);
  spec.jobs = 4;
  auto b = run_experiment(spec, target);
  normalize_order(a);
  normalize_order(b);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].replication == b[i].replication);
    CHECK(a[i].i_hat == b[i].i_hat);
    CHECK(a[i].z_hat == b[i].z_hat);
    CHECK(a[i].seed == b[i].seed);
  }
}

TEST_CASE("sweep points cover the cartesian product") {
  TempFile cfg("test_cfg_sweep.ini", std::string(kSmallConfig) + "\n[sweep]\nsigma = 1,2\nT = 10,20,30\n");
  const ExperimentSpec spec = parse_experiment_config(cfg.path);
  const auto points = sweep_points(spec);
  REQUIRE(points.size() == 6);
  CHECK(points.front().sigma == 1.0);
  CHECK(points.front().iterations == 10);
  CHECK(points.back().sigma == 2.0);
  CHECK(points.back().iterations == 30);
}

TEST_CASE("MSE computation") {
  ResultRecord rec;
  rec.i_hat = {1.0, 2.0};
  rec.z_hat = 1.0;
  const Vector ref = (Vector(2) << 1.0, 2.0).finished();

  SECTION("estimates equal to the reference give zero") {
    const auto [mse, z_mse] = compute_mse({rec, rec}, ref, 1.0);
    CHECK(mse[0] == 0.0);
    CHECK(mse[1] == 0.0);
    CHECK(*z_mse == 0.0);
  }

  SECTION("single record one unit off gives one") {
    ResultRecord off = rec;
    off.i_hat[0] = 2.0;
    CHECK(compute_mse({off}, ref).first[0] == 1.0);
  }

  SECTION("errors +1 and -1 give one") {
    ResultRecord up = rec, down = rec;
    up.i_hat[0] = 2.0;
    down.i_hat[0] = 0.0;
    CHECK(compute_mse({up, down}, ref).first[0] == 1.0);
    // order invariance
    CHECK(compute_mse({down, up}, ref).first[0] == 1.0);
  }

  SECTION("errors") {
    CHECK_THROWS_AS(compute_mse({}, ref), NoReference);
  }
}

TEST_CASE("CSV export and parse round-trip bit-exactly") {
  std::vector<ResultRecord> records;
  RngStream rng(1, 0);
  for (int i = 0; i < 5; ++i) {
    ResultRecord r;
    r.experiment = "exp";
    r.algorithm = "mais";
    r.target = "mixture5";
    r.n = 10;
    r.m = 3;
    r.t = 7;
    r.sigma = rng.uniform() * 10;
    r.lambda = 1.0 / 3.0;
    r.scheme = "spatial";
    r.adaptation = "parallel-mh";
    r.replication = i;
    r.seed = derive_seed(9, static_cast<std::uint64_t>(i));
    r.i_hat = {rng.normal() * 1e-8, rng.normal() * 1e8};
    r.z_hat = rng.uniform();
    r.e = 123456789;
    r.wall_time_s = rng.uniform();
    records.push_back(r);
  }
  TempFile out("test_roundtrip.csv");
  export_csv(records, out.path);
  const auto parsed = parse_csv(out.path);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].experiment == records[i].experiment);
    CHECK(parsed[i].sigma == records[i].sigma);
    CHECK(parsed[i].lambda == records[i].lambda);
    CHECK(parsed[i].i_hat == records[i].i_hat);
    CHECK(parsed[i].z_hat == records[i].z_hat);
    CHECK(parsed[i].seed == records[i].seed);
    CHECK(parsed[i].e == records[i].e);
    CHECK(parsed[i].wall_time_s == records[i].wall_time_s);
  }

  // header and field counts
  std::ifstream in(out.path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("experiment,algorithm,target,N,M,T,sigma,lambda,scheme,adaptation,"
                     "replication,seed,I_hat_1,I_hat_2,Z_hat,E,wall_time_s", 0) == 0);
  std::string line;
  while (std::getline(in, line))
    CHECK(std::count(line.begin(), line.end(), ',') ==
          std::count(header.begin(), header.end(), ','));
}

TEST_CASE("empty record set exports a header-only file") {
  TempFile out("test_empty.csv");
  export_csv({}, out.path);
  std::ifstream in(out.path);
  std::string header, extra;
  CHECK(std::getline(in, header));
  CHECK_FALSE(std::getline(in, extra));
  CHECK(parse_csv(out.path).empty());
}

TEST_CASE("grid quadrature recovers the analytic normalizer") {
  const TargetModel g = make_gauss1d();
  const auto ref = grid_quadrature(g, default_quadrature_grid("gauss1d", 1));
  CHECK(ref.z == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-8));
  CHECK(std::abs(ref.mean[0]) < 1e-12);
}

TEST_CASE("reference cache rejects a stale hash") {
  QuadratureReference ref;
  ref.mean = Vector::Constant(2, 1.5);
  ref.z = 2.5;
  ref.spec_hash = 111;
  TempFile file("test_ref.txt");
  save_reference(ref, file.path);
  const auto loaded = load_reference(file.path, 111);
  CHECK(loaded.z == 2.5);
  CHECK(loaded.mean[1] == 1.5);
  CHECK_THROWS_WITH(load_reference(file.path, 222), Catch::Matchers::ContainsSubstring("stale"));
}

TEST_CASE("target registry") {
  const auto names = registered_targets();
  CHECK(std::find(names.begin(), names.end(), "banana") != names.end());

  ExperimentSpec spec;
  spec.target_name = "banana";
  CHECK(make_target(spec).dim() == 2);
  spec.target_name = "highdim";
  spec.target_dim = 5;
  CHECK(make_target(spec).dim() == 5);
  spec.target_name = "nope";
  CHECK_THROWS_AS(make_target(spec), ConfigError);
  spec.target_name = "sensor";
  spec.dataset_path = "";
  CHECK_THROWS_AS(make_target(spec), ConfigError);
}

TEST_CASE("frozen sensor dataset loads into a four-dimensional posterior") {
  ExperimentSpec spec;
  spec.target_name = "sensor";
  spec.dataset_path = "data/sensor_observations.txt";
  const TargetModel post = make_target(spec);
  CHECK(post.dim() == 4);
  Vector x(4);
  x << 3, 3, -20, 5;
  CHECK(std::isfinite(post.log_density(x)));
  x[3] = -1;
  CHECK(post.log_density(x) == neg_inf);
}

TEST_CASE("error spread narrows across the sigma sweep interior") {
  // coarse replica of the scale sweep: the proposal scale has a sweet spot
  TempFile cfg("test_cfg_ushape.ini", R"(
[target]
name = mixture5

[algorithm]
name = mais
N = 20
M = 9
T = 50
lambda = 10
scheme = spatial
adaptation = parallel-mh
init = in1

[sweep]
sigma = 0.5,2,10,70

[harness]
experiment = ushape
replications = 40
seed = 3
jobs = 1
)");
  const ExperimentSpec spec = parse_experiment_config(cfg.path);
  const TargetModel target = make_target(spec);
  const auto records = run_experiment(spec, target);
  const auto [ref_mean, ref_z] = target.true_moments();
  std::map<double, std::vector<ResultRecord>> by_sigma;
  for (const auto& r : records) by_sigma[r.sigma].push_back(r);
  std::vector<double> mse;
  for (const auto& [sigma, recs] : by_sigma)
    mse.push_back(compute_mse(recs, ref_mean).first[0]);
  REQUIRE(mse.size() == 4);
  const double interior = std::min(mse[1], mse[2]);
  CHECK(interior < mse[0]);
  CHECK(interior < mse[3]);
}
