#include "coopnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace coopnet {

void parallel_for_index(std::size_t jobs, std::size_t count,
                        const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const std::size_t n_workers = std::min(jobs, count);
  workers.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        task(i);
      }
    });
  }
  for (auto& t : workers) t.join();
}

std::uint64_t experiment_seed(const ExperimentConfig& config,
                              std::size_t grid_index, std::size_t replicate) {
  return derive_seed(config.master_seed, grid_index, replicate);
}

namespace {

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + tmp.string());
    f << content;
    if (!f) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename failed: " + path.string() + ": " + ec.message());
  }
}

std::string series_csv(const RunResult& run) {
  std::ostringstream os;
  os << "generation,node_count,edge_count,cooperator_fraction,nodes_deleted\n";
  char frac[16];
  for (const auto& rec : run.records) {
    std::snprintf(frac, sizeof(frac), "%.6f", rec.cooperator_fraction);
    os << rec.generation << ',' << rec.node_count << ',' << rec.edge_count
       << ',' << frac << ',' << rec.nodes_deleted << '\n';
  }
  return os.str();
}

std::string degrees_csv(const DegreeHistogram& h) {
  std::ostringstream os;
  os << "degree,count\n";
  for (const auto& [deg, count] : h.counts) {
    os << deg << ',' << count << '\n';
  }
  return os.str();
}

std::vector<double> grid_or_default(const std::vector<double>& grid,
                                    double fallback) {
  return grid.empty() ? std::vector<double>{fallback} : grid;
}

std::vector<double> coop_series(const RunResult& run) {
  std::vector<double> s;
  s.reserve(run.records.size());
  for (const auto& rec : run.records) s.push_back(rec.cooperator_fraction);
  return s;
}

GridPointSummary summarize(double b, double x,
                           std::vector<double> replicate_means) {
  GridPointSummary gp;
  gp.b = b;
  gp.x = x;
  gp.replicate_means = std::move(replicate_means);
  double sum = 0.0;
  for (double v : gp.replicate_means) sum += v;
  gp.grand_mean = gp.replicate_means.empty()
                      ? 0.0
                      : sum / static_cast<double>(gp.replicate_means.size());
  if (gp.replicate_means.size() >= 2) {
    auto [lo, hi] = ci95(gp.replicate_means);
    gp.ci_low = lo;
    gp.ci_high = hi;
  } else {
    gp.ci_low = gp.ci_high = gp.grand_mean;
  }
  return gp;
}

}  // namespace

std::vector<GridPointSummary> run_experiment(const ExperimentConfig& config) {
  const auto b_grid = grid_or_default(config.b_grid, config.params.b);
  const auto x_grid =
      grid_or_default(config.x_grid, config.params.truncation_percent);
  const bool writing = !config.output_dir.empty();
  fs::path out(config.output_dir);
  if (writing) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) {
      throw IoError("output directory unusable: " + out.string());
    }
  }

  std::vector<GridPointSummary> summaries;
  for (std::size_t bi = 0; bi < b_grid.size(); ++bi) {
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      const double b = b_grid[bi];
      const double x = x_grid[xi];
      const std::size_t g = bi * x_grid.size() + xi;

      std::vector<RunResult> runs(config.replicates);
      parallel_for_index(config.jobs, config.replicates, [&](std::size_t r) {
        SimParams p = config.params;
        p.b = b;
        p.truncation_percent = x;
        p.seed = experiment_seed(config, g, r);
        runs[r] = run_simulation(p);
      });

      std::vector<double> means;
      means.reserve(config.replicates);
      for (const auto& run : runs) {
        means.push_back(last_k_mean(coop_series(run), config.last_k));
      }
      GridPointSummary gp = summarize(b, x, std::move(means));
      summaries.push_back(gp);
      if (!writing) continue;

      const std::string tag = "b" + fmt_param(b) + "_x" + fmt_param(x);
      std::map<std::size_t, std::vector<double>> degree_freqs;
      for (std::size_t r = 0; r < config.replicates; ++r) {
        const std::string rep = tag + "_r" + std::to_string(r);
        atomic_write(out / ("series_" + rep + ".csv"), series_csv(runs[r]));
        DegreeHistogram h = degree_histogram(runs[r].final_network);
        atomic_write(out / ("degrees_" + rep + ".csv"), degrees_csv(h));
        for (const auto& [deg, count] : h.counts) {
          auto& v = degree_freqs[deg];
          v.resize(config.replicates, 0.0);
          v[r] = static_cast<double>(count);
        }
      }

      json summary;
      summary["b"] = b;
      summary["truncation_percent"] = x;
      summary["replicates"] = config.replicates;
      summary["last_k"] = config.last_k;
      summary["replicate_means"] = gp.replicate_means;
      summary["grand_mean"] = gp.grand_mean;
      summary["ci95"] = {gp.ci_low, gp.ci_high};
      atomic_write(out / ("summary_" + tag + ".json"),
                   summary.dump(2) + "\n");

      std::ostringstream agg;
      agg << "degree,mean_count,ci_low,ci_high\n";
      for (auto& [deg, counts] : degree_freqs) {
        counts.resize(config.replicates, 0.0);
        double mean = 0.0;
        for (double c : counts) mean += c;
        mean /= static_cast<double>(config.replicates);
        double lo = mean, hi = mean;
        if (config.replicates >= 2) std::tie(lo, hi) = ci95(counts);
        agg << deg << ',' << mean << ',' << lo << ',' << hi << '\n';
      }
      atomic_write(out / ("degrees_" + tag + "_agg.csv"), agg.str());
    }
  }
  return summaries;
}

FounderComparison compare_founders(const ExperimentConfig& config) {
  ExperimentConfig arm = config;
  arm.output_dir.clear();  // arms are in-memory; only the result is written
  arm.params.founder.kind = FounderSpec::Kind::CompleteK3;

  arm.params.founder.k3_strategy = Strategy::Cooperate;
  auto coop_arm = run_experiment(arm);
  arm.params.founder.k3_strategy = Strategy::Defect;
  auto defect_arm = run_experiment(arm);

  std::vector<std::pair<double, double>> a, b;
  for (std::size_t i = 0; i < coop_arm.size(); ++i) {
    for (std::size_t r = 0; r < coop_arm[i].replicate_means.size(); ++r) {
      a.emplace_back(coop_arm[i].b, coop_arm[i].replicate_means[r]);
      b.emplace_back(defect_arm[i].b, defect_arm[i].replicate_means[r]);
    }
  }
  auto [n, k] = pair_by_parameter(a, b);

  FounderComparison result;
  if (n == 0) {
    result.no_information = true;
    result.test.n = 0;
    result.test.k = 0;
    result.test.p_value = 1.0;
  } else {
    result.test = sign_test(n, k);
  }

  if (!config.output_dir.empty()) {
    fs::path out(config.output_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) {
      throw IoError("output directory unusable: " + out.string());
    }
    json j;
    j["n"] = result.test.n;
    j["k"] = result.test.k;
    if (result.no_information) {
      j["status"] = "NoInformation";
    } else {
      j["status"] = "ok";
      j["p_value"] = result.test.p_value;
    }
    atomic_write(out / "signtest.json", j.dump(2) + "\n");
  }
  return result;
}

std::vector<GridPointSummary> analyze_series_dir(const std::string& dir,
                                                 std::size_t last_k) {
  const std::regex name_re(R"(series_b([^_]+)_x([^_]+)_r(\d+)\.csv)");
  // (b, x) -> replicate index -> last-k mean
  std::map<std::pair<double, double>, std::map<std::size_t, double>> grid;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (!std::regex_match(name, m, name_re)) continue;
    const double b = std::stod(m[1].str());
    const double x = std::stod(m[2].str());
    const std::size_t r = std::stoull(m[3].str());

    std::ifstream f(entry.path());
    if (!f) throw IoError("cannot read " + entry.path().string());
    std::string line;
    std::getline(f, line);  // header
    std::vector<double> series;
    while (std::getline(f, line)) {
      std::istringstream ss(line);
      std::string field;
      for (int i = 0; i < 4; ++i) std::getline(ss, field, ',');
      series.push_back(std::stod(field));
    }
    grid[{b, x}][r] = last_k_mean(series, last_k);
  }
  std::vector<GridPointSummary> summaries;
  for (const auto& [key, reps] : grid) {
    std::vector<double> means;
    means.reserve(reps.size());
    for (const auto& [r, v] : reps) means.push_back(v);
    summaries.push_back(summarize(key.first, key.second, std::move(means)));
  }
  return summaries;
}

}  // namespace coopnet
