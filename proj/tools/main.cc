// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ssmtsp: instance generation, predictor training, benchmarks, parameter
// sweeps, per-iteration traces and bound checks.
//
// Exit codes: 0 success, 1 operational error, 2 validation failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "json_config.h"
#include "ssmtsp/bench.h"
#include "ssmtsp/bounds.h"
#include "ssmtsp/instance.h"
#include "ssmtsp/predict.h"
#include "ssmtsp/predictors.h"
#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"
#include "ssmtsp/training.h"

namespace ssmtsp::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;

// Thrown by commands whose checks failed; maps to exit code 2.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // Generation.
  std::size_t n = 1000;
  double c = 8.0;
  double f = 20.0;
  int i0 = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out = ".";
  bool paper_scale = false;
  std::string config;
  std::size_t train_count = 20000;
  std::size_t val_count = 2000;
  std::size_t test_count = 2000;

  // gen
  std::size_t count = 100;
  std::string split = "none";
  bool no_files = false;

  // train
  std::string kind = "mlp";
  std::string dataset;
  std::string test_dataset;
  int hidden = 16;
  int epochs = 47;
  int batch = 256;
  double lr = 1e-3;
  std::string optimizer = "adam";
  bool kfold = false;
  int folds = 4;
  std::vector<int> hidden_grid{8, 16, 32, 64, 128};
  int max_epochs = 100;

  // bench, sweep, trace
  std::string model;
  std::string instances;
  std::string instance;
  std::size_t index = 0;
  double alpha = 1.0;
  double beta = 1.05;
  std::string restart = "smart";
  bool per_instance = false;
  std::vector<double> alphas{1.00, 1.05, 1.10, 1.20, 1.50, 2.00};
  std::vector<double> betas{1.05, 1.10, 1.20, 1.50, 2.00};
  std::vector<std::string> algorithms{"oracle", "prune", "smart", "naive"};

  // verify
  double gamma = 2.0;
  double eps = 0.1;
  int runs = 500;
  int key_lemma_cases = 20;
  std::uint64_t key_lemma_trials = 100000;
};

GenParams MakeGenParams(const Options& o, std::uint64_t seed) {
  GenParams p;
  p.n = o.n;
  p.c = o.c;
  p.f = o.f;
  p.seed = seed;
  p.min_iterations = o.i0;
  return p;
}

std::uint64_t SplitSeed(std::uint64_t seed, const std::string& split) {
  if (split == "none") return seed;
  if (split == "train") return DeriveSeed(seed, 0);
  if (split == "val") return DeriveSeed(seed, 1);
  if (split == "test") return DeriveSeed(seed, 2);
  throw std::invalid_argument("unknown split: " + split);
}

std::size_t SplitCount(const Options& o, const std::string& split) {
  if (split == "train") return o.train_count;
  if (split == "val") return o.val_count;
  if (split == "test") return o.test_count;
  return o.count;
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::ifstream OpenInput(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

std::vector<Instance> LoadInstanceDir(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no instances in " + dir.string());
  std::vector<Instance> instances;
  instances.reserve(files.size());
  for (const fs::path& file : files) {
    instances.push_back(LoadInstanceFile(file.string()));
  }
  return instances;
}

// Instances from --instances, or the given split regenerated from --seed.
std::vector<Instance> ResolveInstances(const Options& o,
                                       const std::string& split,
                                       nlohmann::json& manifest) {
  if (!o.instances.empty()) {
    manifest["instances"] = {{"source", o.instances}};
    return LoadInstanceDir(o.instances);
  }
  const std::uint64_t seed = SplitSeed(o.seed, split);
  const std::size_t count = SplitCount(o, split);
  manifest["instances"] = {
      {"split", split}, {"stream_seed", seed}, {"count", count}};
  return GenerateAcceptedInstances(MakeGenParams(o, seed), count, o.jobs);
}

Dataset ResolveDataset(const Options& o, const std::string& path,
                       const std::string& split, nlohmann::json& manifest) {
  const Split tag = split == "test" ? Split::kTest : Split::kTrain;
  if (!path.empty()) {
    if (!fs::exists(path)) throw std::runtime_error("missing dataset " + path);
    std::ifstream in = OpenInput(path);
    manifest["datasets"][split] = {{"source", path}};
    Dataset dataset = ReadDatasetCsv(in, tag);
    if (dataset.i0 != o.i0) {
      throw std::runtime_error(path + ": trace length " +
                               std::to_string(dataset.i0) + " but --i0 is " +
                               std::to_string(o.i0));
    }
    return dataset;
  }
  const std::uint64_t seed = SplitSeed(o.seed, split);
  const std::size_t count = SplitCount(o, split);
  manifest["datasets"][split] = {{"stream_seed", seed}, {"count", count}};
  const std::vector<Instance> instances =
      GenerateAcceptedInstances(MakeGenParams(o, seed), count, o.jobs);
  return BuildDataset(instances, o.i0, tag);
}

nlohmann::json StartManifest(const CLI::App& app, const Options& o) {
  nlohmann::json manifest;
  manifest["tool"] = "ssmtsp";
  manifest["schema"] = 1;
  manifest["command"] = app.get_name();
  manifest["config"] = nlohmann::json::parse(app.config_to_str(true, false));
  manifest["seed"] = o.seed;
  manifest["generation"] = {
      {"n", o.n}, {"c", o.c}, {"f", o.f}, {"min_iterations", o.i0}};
  return manifest;
}

void FinishManifest(const fs::path& dir, nlohmann::json manifest,
                    double seconds) {
  manifest["elapsed_seconds"] = seconds;
  std::ofstream out = OpenOutput(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

PredictConfig MakePredictConfig(const Options& o) {
  PredictConfig config{.i0 = o.i0,
                       .alpha = o.alpha,
                       .beta = o.beta,
                       .restart = ParseRestartMode(o.restart)};
  config.Validate();
  return config;
}

std::unique_ptr<LearnedPredictor> LoadModel(const Options& o) {
  if (o.model.empty()) throw std::runtime_error("--model is required");
  std::unique_ptr<LearnedPredictor> model = LoadPredictorFile(o.model);
  if (model->i0() != o.i0) {
    throw std::runtime_error(o.model + ": model expects i0 = " +
                             std::to_string(model->i0()) + " but --i0 is " +
                             std::to_string(o.i0));
  }
  return model;
}

// --- gen ---------------------------------------------------------------

void RunGen(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const std::uint64_t seed = SplitSeed(o.seed, o.split);
  const std::size_t count = SplitCount(o, o.split);
  manifest["instances"] = {
      {"split", o.split}, {"stream_seed", seed}, {"count", count}};
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Instance> instances =
      GenerateAcceptedInstances(MakeGenParams(o, seed), count, o.jobs);
  if (!o.no_files) {
    const fs::path inst_dir = dir / "instances";
    fs::create_directories(inst_dir);
    for (std::size_t k = 0; k < instances.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof(name), "instance_%06zu.txt", k);
      SaveInstanceFile(instances[k], (inst_dir / name).string());
    }
  }

  std::ofstream csv = OpenOutput(dir / "manifest.csv");
  csv << "#schema=1\nindex,seed,n,m,targets,D,hops\n";
  csv.precision(17);
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    const ShortestPathSummary path = SummarizeShortestPath(inst);
    csv << k << ',' << inst.meta().seed << ',' << inst.num_nodes() << ','
        << inst.num_edges() << ',' << inst.NumTargets() << ','
        << path.distance << ',' << path.hops << '\n';
  }

  std::ofstream data = OpenOutput(dir / "dataset.csv");
  WriteDatasetCsv(BuildDataset(instances, o.i0), data);

  const InstanceStatistics stats = ComputeStatistics(instances);
  manifest["statistics"] = {{"mean_distance", stats.mean_distance},
                            {"mean_hops", stats.mean_hops},
                            {"mean_bfs_hops", stats.mean_bfs_hops}};
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  std::cout << "generated " << instances.size() << " instances in "
            << dir.string() << '\n';
}

// --- train -------------------------------------------------------------

void WriteMetricsRow(std::ostream& out, const std::string& split,
                     const std::string& kind, const Metrics& m,
                     std::size_t samples) {
  out << split << ',' << kind << ',' << m.mae << ',' << m.mape << ','
      << m.mape_excluded << ',' << samples << '\n';
}

void RunTrain(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const auto start = std::chrono::steady_clock::now();

  const Dataset train = ResolveDataset(o, o.dataset, "train", manifest);
  const Dataset test = ResolveDataset(o, o.test_dataset, "test", manifest);

  std::unique_ptr<LearnedPredictor> model;
  if (o.kind == "avg") {
    model = std::make_unique<AveragePredictor>(
        AveragePredictor::Fit(o.i0, train.targets));
  } else if (o.kind == "linreg") {
    model = std::make_unique<LinearRegressionPredictor>(
        LinearRegressionPredictor::Fit(o.i0, train.features, train.targets));
  } else if (o.kind == "mlp") {
    MlpTrainConfig config{.hidden = o.hidden,
                          .epochs = o.epochs,
                          .batch = o.batch,
                          .learning_rate = o.lr,
                          .optimizer = ParseOptimizer(o.optimizer),
                          .seed = DeriveSeed(o.seed, 10)};
    if (o.kfold) {
      KFoldConfig kc{.k = o.folds,
                     .hidden_sizes = o.hidden_grid,
                     .max_epochs = o.max_epochs,
                     .batch = o.batch,
                     .learning_rate = o.lr,
                     .optimizer = config.optimizer,
                     .seed = DeriveSeed(o.seed, 11)};
      const CvReport cv = KFoldSelect(train, kc);
      std::ofstream out = OpenOutput(dir / "cv.csv");
      WriteCvReportCsv(cv, out);
      config.hidden = cv.selected_hidden;
      config.epochs = cv.selected_epochs;
      manifest["kfold"] = {{"selected_hidden", cv.selected_hidden},
                           {"selected_epochs", cv.selected_epochs}};
      std::cout << "k-fold selected h=" << cv.selected_hidden << ", "
                << cv.selected_epochs << " epochs\n";
    }
    manifest["mlp"] = {{"hidden", config.hidden},
                       {"epochs", config.epochs},
                       {"seed", config.seed}};
    model = std::make_unique<MlpPredictor>(
        MlpPredictor::Fit(o.i0, train.features, train.targets, config));
  } else {
    throw std::invalid_argument("unknown predictor kind: " + o.kind);
  }

  SavePredictorFile(*model, (dir / "model.json").string());
  std::ofstream metrics = OpenOutput(dir / "metrics.csv");
  metrics << "#schema=1\nsplit,kind,mae,mape,mape_excluded,samples\n";
  const Metrics train_m = Evaluate(*model, train);
  const Metrics test_m = Evaluate(*model, test);
  WriteMetricsRow(metrics, "train", o.kind, train_m, train.size());
  WriteMetricsRow(metrics, "test", o.kind, test_m, test.size());
  manifest["test_mae"] = test_m.mae;
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  std::cout << o.kind << " test MAE " << test_m.mae << ", MAPE "
            << test_m.mape << '\n';
}

// --- bench -------------------------------------------------------------

void RunBenchCommand(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const auto start = std::chrono::steady_clock::now();
  const std::unique_ptr<LearnedPredictor> model = LoadModel(o);
  const PredictConfig config = MakePredictConfig(o);
  manifest["alpha"] = config.alpha;
  manifest["beta"] = config.beta;
  const std::vector<Instance> instances = ResolveInstances(o, "test", manifest);

  BenchReport report;
  try {
    report = RunBench(instances, *model, config, o.jobs);
  } catch (const ValidationError& e) {
    throw CheckFailed(std::string("distance mismatch: ") + e.what());
  }
  {
    std::ofstream out = OpenOutput(dir / "bench.csv");
    WriteBenchCsv(report, out);
  }
  if (o.per_instance) {
    std::ofstream out = OpenOutput(dir / "per_instance.csv");
    out << "#schema=1\nalgorithm,instance," << RunStatsCsvHeader() << '\n';
    for (const Algorithm a : kAllAlgorithms) {
      const auto& runs = report.runs[static_cast<std::size_t>(a)];
      for (std::size_t i = 0; i < runs.size(); ++i) {
        out << ToString(a) << ',' << i << ',' << RunStatsCsvRow(runs[i])
            << '\n';
      }
    }
  }
  const InstanceStatistics stats = ComputeStatistics(instances);
  {
    std::ofstream out = OpenOutput(dir / "stats.csv");
    out << "#schema=1\ninstances,mean_D,min_D,max_D,mean_hops,mean_weight,"
           "mean_bfs_hops,mean_bfs_weight\n"
        << stats.instances << ',' << stats.mean_distance << ','
        << stats.min_distance << ',' << stats.max_distance << ','
        << stats.mean_hops << ',' << stats.mean_weight << ','
        << stats.mean_bfs_hops << ',' << stats.mean_bfs_weight << '\n';
  }
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  WriteBenchCsv(report, std::cout);
}

// --- sweep -------------------------------------------------------------

void RunSweepCommand(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const auto start = std::chrono::steady_clock::now();
  const std::unique_ptr<LearnedPredictor> model = LoadModel(o);
  const std::vector<Instance> instances = ResolveInstances(o, "val", manifest);
  const SweepReport report =
      RunSweep(instances, *model, o.i0, o.alphas, o.betas, o.jobs);
  {
    std::ofstream out = OpenOutput(dir / "sweep.csv");
    out << "#schema=1\nalpha,beta,q,cum_q,trials\n";
    for (const SweepCell& cell : report.cells) {
      out << cell.alpha << ',' << cell.beta << ',' << cell.mean_q << ','
          << cell.mean_cum_q << ',' << cell.mean_trials << '\n';
    }
  }
  for (const char* field : {"q", "cum_q"}) {
    std::ofstream out =
        OpenOutput(dir / (std::string("sweep_") + field + ".csv"));
    WriteSweepMatrixCsv(report, field, out);
  }
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  WriteSweepMatrixCsv(report, "q", std::cout);
}

// --- trace -------------------------------------------------------------

void TracePruning(const Instance& inst, const std::string& name,
                  PruningOptions options, std::ostream& out) {
  PruningSearch search(inst, options);
  std::uint64_t iter = 0;
  while (const std::optional<NodeId> u = search.Step()) {
    ++iter;
    const IterationEvent event{iter, 1, *u, search.labels()[*u],
                               search.bound(), kInf, search.queue().Size(), 0};
    out << name << ',' << IterationEventCsvRow(event) << '\n';
  }
}

void RunTrace(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const auto start = std::chrono::steady_clock::now();

  Instance inst = [&] {
    if (!o.instance.empty()) {
      manifest["instance"] = {{"source", o.instance}};
      return LoadInstanceFile(o.instance);
    }
    const std::uint64_t seed = SplitSeed(o.seed, "test");
    manifest["instance"] = {{"split", "test"}, {"stream_seed", seed},
                            {"index", o.index}};
    std::vector<Instance> prefix =
        GenerateAcceptedInstances(MakeGenParams(o, seed), o.index + 1, o.jobs);
    return std::move(prefix.back());
  }();

  std::unique_ptr<LearnedPredictor> model;
  const bool needs_model = std::any_of(
      o.algorithms.begin(), o.algorithms.end(),
      [](const std::string& a) { return a == "smart" || a == "naive"; });
  if (needs_model) model = LoadModel(o);

  std::ofstream out = OpenOutput(dir / "trace.csv");
  out << "#schema=1\nalgorithm," << IterationEventCsvHeader() << '\n';
  const double distance = Dijkstra(inst).distance;
  for (const std::string& name : o.algorithms) {
    if (name == "dijkstra") {
      TracePruning(inst, name, {.prune = false}, out);
    } else if (name == "prune") {
      TracePruning(inst, name, {}, out);
    } else if (name == "oracle") {
      TracePruning(inst, name, {.initial_bound = distance}, out);
    } else if (name == "smart" || name == "naive" || name == "bfs" ||
               name == "wbfs") {
      PredictConfig config = MakePredictConfig(o);
      config.restart = name == "naive" ? RestartMode::kNaive
                                       : RestartMode::kSmart;
      std::unique_ptr<Predictor> heuristic;
      if (name == "bfs") heuristic = std::make_unique<BfsPredictor>(inst);
      if (name == "wbfs") {
        heuristic = std::make_unique<WeightedBfsPredictor>(inst);
      }
      const Predictor& predictor = heuristic ? *heuristic : *model;
      PredictionSearch search(inst, predictor, config);
      search.set_iteration_observer([&](const IterationEvent& event) {
        out << name << ',' << IterationEventCsvRow(event) << '\n';
      });
      search.Run();
    } else {
      throw std::invalid_argument("unknown algorithm: " + name);
    }
  }
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  std::cout << "wrote " << (dir / "trace.csv").string() << '\n';
}

// --- verify ------------------------------------------------------------

void RunVerify(const CLI::App& app, const Options& o) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  nlohmann::json manifest = StartManifest(app, o);
  const auto start = std::chrono::steady_clock::now();
  const GenParams params = MakeGenParams(o, SplitSeed(o.seed, "test"));

  std::ostringstream rows;
  rows.precision(10);
  bool all_passed = true;
  // `passed` < 0 marks an informational row.
  auto row = [&](const std::string& check, double value, double reference,
                 int passed) {
    rows << check << ',' << value << ',' << reference << ','
         << (passed < 0 ? "" : passed ? "true" : "false") << '\n';
    if (passed == 0) all_passed = false;
  };

  const InrReport inr = MeasureInr(params, o.eps, o.runs);
  row("inr_order_violations", static_cast<double>(inr.order_violations), 0,
      inr.order_violations == 0);
  row("inrs_mean", inr.mean_inrs, inr.inrs_estimate, -1);
  row("inrr_mean", inr.mean_inrr, inr.inrr_bound,
      inr.mean_inrr <= inr.inrr_bound);
  row("inrp_mean", inr.mean_inrp, inr.inrp_bound,
      inr.mean_inrp <= inr.inrp_bound);
  // Reference values for the two bounds at these parameters.
  row("inrr_bound", inr.inrr_bound, 137, -1);
  row("inrp_bound", inr.inrp_bound, 63, -1);
  row("mean_distance", inr.mean_distance, 0.553, -1);

  const Lemma1Report lemma =
      Lemma1MonteCarlo(params, {.gamma = o.gamma, .eps = o.eps}, o.runs);
  row("lemma1_frequency", lemma.frequency, lemma.bound, lemma.Passes());
  row("lemma1_edges", static_cast<double>(lemma.edges), 30, lemma.sufficient);
  row("lemma1_uniformity_p", lemma.uniformity_p_value, 0.01, -1);
  row("chernoff_satisfied_runs",
      static_cast<double>(lemma.chernoff_satisfied_runs),
      static_cast<double>(lemma.chernoff_eligible_runs), -1);

  const std::vector<KeyLemmaCase> cases =
      RandomKeyLemmaCases(o.key_lemma_cases, 10, DeriveSeed(o.seed, 20));
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const KeyLemmaReport r =
        KeyLemmaCheck(cases[i].a, cases[i].uppers, cases[i].p,
                      o.key_lemma_trials, DeriveSeed(o.seed, 100 + i));
    row("key_lemma_" + std::to_string(i), r.estimate, r.bound, r.Passes());
  }

  {
    std::ofstream out = OpenOutput(dir / "bounds.csv");
    out << "#schema=1\ncheck,value,reference,passed\n" << rows.str();
  }
  manifest["passed"] = all_passed;
  FinishManifest(dir, manifest,
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  std::cout << "check,value,reference,passed\n" << rows.str();
  if (!all_passed) throw CheckFailed("bound checks failed");
}

// --- wiring ------------------------------------------------------------

// Fills options the command line left unset from the JSON config.
void ApplyConfig(CLI::App* sub, const std::string& path) {
  std::ifstream in = OpenInput(path);
  for (const CLI::ConfigItem& item : JsonConfig().from_config(in)) {
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr || !opt->get_configurable()) {
      throw std::runtime_error(path + ": unknown option '" + item.name + "'");
    }
    if (opt->count() > 0) continue;
    if (opt->get_type_size() == 0) {
      if (item.inputs.size() == 1 && item.inputs.front() == "false") continue;
      opt->add_result(std::string("true"));
    } else {
      for (const std::string& value : item.inputs) opt->add_result(value);
    }
    opt->run_callback();
  }
}

CLI::App* AddCommand(CLI::App& app, const std::string& name,
                     const std::string& help, Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->config_formatter(std::make_shared<JsonConfig>());
  sub->add_option("--config", o.config, "JSON config; flags override it")
      ->configurable(false);
  sub->add_option("--n", o.n, "Nodes per instance")->capture_default_str();
  sub->add_option("--c", o.c, "Expected out-degree")->capture_default_str();
  sub->add_option("--f", o.f, "Expected number of targets")
      ->capture_default_str();
  sub->add_option("--i0", o.i0, "Trace length / acceptance threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Global seed")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out", o.out, "Output directory")->capture_default_str();
  sub->add_flag("--paper-scale", o.paper_scale,
                "Use 80k/10k/10k train/val/test instances");
  sub->add_option("--train-count", o.train_count)->capture_default_str();
  sub->add_option("--val-count", o.val_count)->capture_default_str();
  sub->add_option("--test-count", o.test_count)->capture_default_str();
  return sub;
}

void AddPredictionOptions(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "Trained predictor (JSON)");
  sub->add_option("--alpha", o.alpha, "Initial prediction inflation")
      ->capture_default_str();
  sub->add_option("--beta", o.beta, "Inflation per restart")
      ->capture_default_str();
}

int Main(int argc, char** argv) {
  Options o;
  CLI::App app{"Learning-augmented many-targets shortest path experiments"};
  app.require_subcommand(1);

  CLI::App* gen = AddCommand(app, "gen", "Generate accepted instances", o);
  gen->add_option("--count", o.count, "Instances (split none)")
      ->capture_default_str();
  gen->add_option("--split", o.split, "none, train, val or test")
      ->check(CLI::IsMember({"none", "train", "val", "test"}))
      ->capture_default_str();
  gen->add_flag("--no-files", o.no_files, "Skip per-instance files");

  CLI::App* train = AddCommand(app, "train", "Train a predictor", o);
  train->add_option("--kind", o.kind, "avg, linreg or mlp")
      ->check(CLI::IsMember({"avg", "linreg", "mlp"}))
      ->capture_default_str();
  train->add_option("--dataset", o.dataset,
                    "Training dataset CSV (default: regenerate)");
  train->add_option("--test-dataset", o.test_dataset,
                    "Test dataset CSV (default: regenerate)");
  train->add_option("--hidden", o.hidden)->capture_default_str();
  train->add_option("--epochs", o.epochs)->capture_default_str();
  train->add_option("--batch", o.batch)->capture_default_str();
  train->add_option("--lr", o.lr)->capture_default_str();
  train->add_option("--optimizer", o.optimizer, "sgd or adam")
      ->check(CLI::IsMember({"sgd", "adam"}))
      ->capture_default_str();
  train->add_flag("--kfold", o.kfold, "Select h and epochs by k-fold CV");
  train->add_option("--folds", o.folds)->capture_default_str();
  train->add_option("--hidden-grid", o.hidden_grid)->capture_default_str();
  train->add_option("--max-epochs", o.max_epochs)->capture_default_str();

  CLI::App* bench = AddCommand(app, "bench", "Compare all variants", o);
  AddPredictionOptions(bench, o);
  bench->add_option("--instances", o.instances, "Directory of instances");
  bench->add_flag("--per-instance", o.per_instance, "Write per_instance.csv");

  CLI::App* sweep = AddCommand(app, "sweep", "Grid over alpha and beta", o);
  sweep->add_option("--model", o.model, "Trained predictor (JSON)");
  sweep->add_option("--instances", o.instances, "Directory of instances");
  sweep->add_option("--alphas", o.alphas)->capture_default_str();
  sweep->add_option("--betas", o.betas)->capture_default_str();

  CLI::App* trace = AddCommand(app, "trace", "Per-iteration event log", o);
  AddPredictionOptions(trace, o);
  trace->add_option("--instance", o.instance, "Instance file");
  trace->add_option("--index", o.index, "Test-split instance index")
      ->capture_default_str();
  trace->add_option("--algorithms", o.algorithms)->capture_default_str();

  CLI::App* verify = AddCommand(app, "verify", "Check the savings bounds", o);
  verify->add_option("--gamma", o.gamma)->capture_default_str();
  verify->add_option("--eps", o.eps)->capture_default_str();
  verify->add_option("--runs", o.runs)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--key-lemma-cases", o.key_lemma_cases)
      ->capture_default_str();
  verify->add_option("--key-lemma-trials", o.key_lemma_trials)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Prints usage or help; only --help and --version count as success.
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (!o.config.empty()) {
    try {
      ApplyConfig(chosen, o.config);
    } catch (const std::exception& e) {
      std::cerr << "ssmtsp " << chosen->get_name() << ": " << e.what() << '\n';
      return kExitError;
    }
  }
  if (o.paper_scale) {
    if (chosen->count("--train-count") == 0) o.train_count = 80000;
    if (chosen->count("--val-count") == 0) o.val_count = 10000;
    if (chosen->count("--test-count") == 0) o.test_count = 10000;
  }

  try {
    if (chosen == gen) RunGen(*chosen, o);
    if (chosen == train) RunTrain(*chosen, o);
    if (chosen == bench) RunBenchCommand(*chosen, o);
    if (chosen == sweep) RunSweepCommand(*chosen, o);
    if (chosen == trace) RunTrace(*chosen, o);
    if (chosen == verify) RunVerify(*chosen, o);
  } catch (const CheckFailed& e) {
    std::cerr << "ssmtsp " << chosen->get_name() << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "ssmtsp " << chosen->get_name() << ": " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace
}  // namespace ssmtsp::cli

int main(int argc, char** argv) { return ssmtsp::cli::Main(argc, argv); }
