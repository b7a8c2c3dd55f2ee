#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopnet/experiment.hpp"
#include "coopnet/snapshot.hpp"

using namespace coopnet;

namespace {

struct CliOptions {
  ExperimentConfig config;
  std::string founder = "k3c";  // k3c | k3d | random
  std::string model = "fluctuation";
  std::string deletion = "leastfit";
};

void add_sim_options(CLI::App& app, CliOptions& opt) {
  auto& p = opt.config.params;
  app.set_config("--config", "", "Read options from a key=value file");
  app.add_option("-b,--b", p.b, "Temptation to defect (> 1)")
      ->check(CLI::Range(1.0 + 1e-12, 1e9));
  app.add_option("--epsilon", p.epsilon, "Attachment selection pressure")
      ->check(CLI::Range(0.0, 1.0 - 1e-12));
  app.add_option("-m,--edges-per-node", p.m, "Edges per new node");
  app.add_option("--nodes-per-gen", p.nodes_per_generation,
                 "New nodes added per generation");
  app.add_option("--n-max", p.n_max, "Maximum network size");
  app.add_option("-x,--truncation", p.truncation_percent,
                 "Truncation percent X")
      ->check(CLI::Range(0.0, 100.0));
  app.add_option("--model", opt.model, "epa | fluctuation | static")
      ->check(CLI::IsMember({"epa", "fluctuation", "static"}));
  app.add_option("--deletion", opt.deletion, "leastfit | random")
      ->check(CLI::IsMember({"leastfit", "random"}));
  app.add_flag("--prune-components", p.prune_components,
               "Keep only the fittest node's component after truncation");
  app.add_option("-g,--generations", p.generations, "Generations to run");
  app.add_option("--founder", opt.founder, "k3c | k3d | random")
      ->check(CLI::IsMember({"k3c", "k3d", "random"}));
  app.add_option("--founder-n", p.founder.n, "Random founder: node count");
  app.add_option("--founder-degree", p.founder.mean_degree,
                 "Random founder: mean degree");
  app.add_option("--coop-prob", p.founder.coop_probability,
                 "Random founder: cooperator probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--last-k", opt.config.last_k,
                 "Generations averaged per replicate");
  app.add_option("-o,--output", opt.config.output_dir, "Output directory");
  app.add_option("--seed,--master-seed", opt.config.master_seed,
                 "Master seed");
}

void resolve_enums(CliOptions& opt) {
  auto& p = opt.config.params;
  p.model = opt.model == "epa"
                ? Model::EPA
                : (opt.model == "static" ? Model::Static : Model::Fluctuation);
  p.deletion_mode =
      opt.deletion == "random" ? DeletionMode::Random : DeletionMode::LeastFit;
  if (opt.founder == "random") {
    p.founder.kind = FounderSpec::Kind::RandomGraph;
  } else {
    p.founder.kind = FounderSpec::Kind::CompleteK3;
    p.founder.k3_strategy =
        opt.founder == "k3d" ? Strategy::Defect : Strategy::Cooperate;
  }
}

void print_summaries(const std::vector<GridPointSummary>& summaries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& gp : summaries) {
    out.push_back({{"b", gp.b},
                   {"truncation_percent", gp.x},
                   {"replicate_means", gp.replicate_means},
                   {"grand_mean", gp.grand_mean},
                   {"ci95", {gp.ci_low, gp.ci_high}}});
  }
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperation dynamics on co-evolving networks"};
  app.require_subcommand(1);

  CliOptions run_opt, sweep_opt, founders_opt;
  std::string analyze_dir;
  std::size_t analyze_last_k = 20;
  std::size_t st_n = 0, st_k = 0;

  auto* run_cmd = app.add_subcommand("run", "Run one parameter point");
  add_sim_options(*run_cmd, run_opt);
  run_opt.config.replicates = 1;
  run_cmd->add_option("-r,--replicates", run_opt.config.replicates,
                      "Replicates at this point");
  run_cmd->add_option("-j,--jobs", run_opt.config.jobs, "Worker threads");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run b/X parameter grids");
  add_sim_options(*sweep_cmd, sweep_opt);
  sweep_cmd->add_option("--b-grid", sweep_opt.config.b_grid, "b values");
  sweep_cmd->add_option("--x-grid", sweep_opt.config.x_grid, "X values");
  sweep_cmd->add_option("-r,--replicates", sweep_opt.config.replicates,
                        "Replicates per grid point");
  sweep_cmd->add_option("-j,--jobs", sweep_opt.config.jobs, "Worker threads");

  auto* founders_cmd = app.add_subcommand(
      "founders", "Sign test: C-founded vs D-founded arms over a b grid");
  add_sim_options(*founders_cmd, founders_opt);
  founders_cmd->add_option("--b-grid", founders_opt.config.b_grid,
                           "b values");
  founders_cmd->add_option("-r,--replicates",
                           founders_opt.config.replicates,
                           "Replicates per grid point");
  founders_cmd->add_option("-j,--jobs", founders_opt.config.jobs,
                           "Worker threads");

  auto* st_cmd =
      app.add_subcommand("signtest", "Exact two-tailed sign test for (n, k)");
  st_cmd->add_option("-n", st_n, "Non-tied pairs")->required();
  st_cmd->add_option("-k", st_k, "Wins of the first arm")->required();

  auto* an_cmd = app.add_subcommand(
      "analyze", "Recompute summaries from stored series CSVs");
  an_cmd->add_option("dir", analyze_dir, "Directory of series_*.csv files")
      ->required();
  an_cmd->add_option("--last-k", analyze_last_k,
                     "Generations averaged per replicate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      resolve_enums(run_opt);
      print_summaries(run_experiment(run_opt.config));
    } else if (sweep_cmd->parsed()) {
      resolve_enums(sweep_opt);
      print_summaries(run_experiment(sweep_opt.config));
    } else if (founders_cmd->parsed()) {
      resolve_enums(founders_opt);
      FounderComparison result = compare_founders(founders_opt.config);
      nlohmann::json j;
      j["n"] = result.test.n;
      j["k"] = result.test.k;
      if (result.no_information) {
        j["status"] = "NoInformation";
      } else {
        j["status"] = "ok";
        j["p_value"] = result.test.p_value;
      }
      std::cout << j.dump(2) << "\n";
    } else if (st_cmd->parsed()) {
      SignTestResult r = sign_test(st_n, st_k);
      std::printf("n=%zu k=%zu p=%.6g\n", r.n, r.k, r.p_value);
    } else if (an_cmd->parsed()) {
      print_summaries(analyze_series_dir(analyze_dir, analyze_last_k));
    }
  } catch (const InvalidConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidCountsError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
