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

// Desk-scale acceptance run: one PASS/FAIL line per criterion, exit status
// 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ssmtsp/bench.h"
#include "ssmtsp/bounds.h"
#include "ssmtsp/instance.h"
#include "ssmtsp/mlp.h"
#include "ssmtsp/predict.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/predictors.h"
#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"
#include "ssmtsp/training.h"
#include "testing/oracles.h"

namespace ssmtsp {
namespace {

constexpr std::uint64_t kSeed = 1;
constexpr int kI0 = 10;
constexpr std::size_t kTrain = 20000;
constexpr std::size_t kVal = 500;
constexpr std::size_t kTest = 2000;

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records a named check and returns its result.
  bool Check(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += "FAILED " + what + "; ";
    }
    return ok;
  }
  void Note(const std::string& text) { detail += text + "; "; }
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b, c);
  return buffer;
}

bool Within(double value, double center, double tol) {
  return std::abs(value - center) <= tol;
}

GenParams Params(std::uint64_t seed) {
  GenParams params;
  params.n = 1000;
  params.c = 8.0;
  params.f = 20.0;
  params.min_iterations = kI0;
  params.seed = seed;
  return params;
}

struct Context {
  std::vector<Instance> train, val, test;
  std::unique_ptr<AveragePredictor> avg;
  std::unique_ptr<LinearRegressionPredictor> linreg;
  std::unique_ptr<MlpPredictor> mlp;
  Dataset test_set;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

Context Prepare() {
  Context ctx;
  auto start = std::chrono::steady_clock::now();
  ctx.train = GenerateAcceptedInstances(Params(DeriveSeed(kSeed, 0)), kTrain);
  ctx.val = GenerateAcceptedInstances(Params(DeriveSeed(kSeed, 1)), kVal);
  ctx.test = GenerateAcceptedInstances(Params(DeriveSeed(kSeed, 2)), kTest);
  std::printf("generated %zu/%zu/%zu instances in %.1f s\n", ctx.train.size(),
              ctx.val.size(), ctx.test.size(), Seconds(start));

  start = std::chrono::steady_clock::now();
  const Dataset train = BuildDataset(ctx.train, kI0, Split::kTrain);
  ctx.test_set = BuildDataset(ctx.test, kI0, Split::kTest);
  ctx.avg = std::make_unique<AveragePredictor>(
      AveragePredictor::Fit(kI0, train.targets));
  ctx.linreg = std::make_unique<LinearRegressionPredictor>(
      LinearRegressionPredictor::Fit(kI0, train.features, train.targets));
  MlpTrainConfig config;
  config.seed = DeriveSeed(kSeed, 10);
  ctx.mlp = std::make_unique<MlpPredictor>(
      MlpPredictor::Fit(kI0, train.features, train.targets, config));
  std::printf("trained predictors in %.1f s\n", Seconds(start));
  return ctx;
}

// 1. Every variant returns the exact minimum target distance.
Outcome Exactness(const Context& ctx) {
  Outcome out;
  std::vector<Instance> instances =
      testing::SmallRandomInstances(1000, DeriveSeed(kSeed, 30), 200);
  for (Instance& inst : testing::AdversarialInstances()) {
    instances.push_back(std::move(inst));
  }
  const ConstantPredictor tiny(0.001), infinite(kInf);
  std::uint64_t runs = 0, mismatches = 0, oracle_disagreements = 0;
  for (const Instance& inst : instances) {
    const double want = MinTargetDistance(inst, BellmanFord(inst));
    if (want != testing::ReferenceTargetDistance(inst)) ++oracle_disagreements;
    auto check = [&](double got) {
      ++runs;
      if (got != want) ++mismatches;
    };
    check(Dijkstra(inst).distance);
    check(DijkstraPruning(inst).distance);
    check(OracleRun(inst, want).distance);
    const BfsPredictor bfs(inst);
    const WeightedBfsPredictor wbfs(inst);
    const std::vector<const Predictor*> predictors = {
        ctx.mlp.get(), ctx.linreg.get(), ctx.avg.get(), &bfs, &wbfs,
        &tiny,         &infinite};
    for (const Predictor* predictor : predictors) {
      for (RestartMode mode : {RestartMode::kSmart, RestartMode::kNaive}) {
        PredictConfig config;
        config.i0 = kI0;
        config.restart = mode;
        check(DijkstraPrediction(inst, *predictor, config).distance);
      }
    }
  }
  out.Check(oracle_disagreements == 0, "Bellman-Ford vs relaxation oracle");
  out.Check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  out.Note(std::to_string(instances.size()) + " instances, " +
           std::to_string(runs) + " runs, " + std::to_string(mismatches) +
           " mismatches");
  return out;
}

// 2. Lockstep invariant against pruning.
Outcome Lockstep(const Context& ctx) {
  Outcome out;
  std::uint64_t checks = 0, failures = 0;
  std::string first;
  auto run = [&](const Instance& inst, const Predictor& predictor, int i0) {
    PredictConfig config;
    config.i0 = i0;
    const LockstepReport r = LockstepCheck(inst, predictor, config);
    ++checks;
    if (!r.passed) {
      ++failures;
      if (first.empty()) first = r.failed_property + ": " + r.message;
    }
  };
  for (std::size_t i = 0; i < 200; ++i) run(ctx.test[i], *ctx.mlp, kI0);
  const ConstantPredictor tiny(0.001), half(0.5), one(1.0);
  for (const Instance& inst : testing::AdversarialInstances()) {
    run(inst, *ctx.mlp, kI0);
    for (const Predictor* p : {&tiny, &half, &one}) {
      const Predictor& predictor = *p;
      run(inst, predictor, 1);
    }
  }
  out.Check(failures == 0, std::to_string(failures) + " lockstep failures" +
                               (first.empty() ? "" : " (" + first + ")"));
  out.Note(std::to_string(checks) + " lockstep runs");
  return out;
}

// 3. Instance statistics.
Outcome Statistics(const Context& ctx) {
  Outcome out;
  const InstanceStatistics s = ComputeStatistics(ctx.test);
  out.Check(Within(s.mean_distance, 0.553, 0.02),
            Fmt("mean D %.4f in 0.553+-0.02", s.mean_distance));
  out.Check(Within(s.mean_hops, 4.363, 0.25),
            Fmt("hops %.3f in 4.363+-0.25", s.mean_hops));
  out.Check(Within(s.mean_bfs_hops, 2.225, 0.15),
            Fmt("bfs hops %.3f in 2.225+-0.15", s.mean_bfs_hops));
  out.Check(Within(s.mean_weight, 0.127, 0.01),
            Fmt("edge weight %.4f in 0.127+-0.01", s.mean_weight));
  out.Note(Fmt("D %.4f, hops %.3f, bfs hops %.3f", s.mean_distance,
               s.mean_hops, s.mean_bfs_hops) +
           Fmt(", edge weight %.4f, bfs weight %.4f", s.mean_weight,
               s.mean_bfs_weight));
  return out;
}

// 4. Test MAE of the three learned predictors.
Outcome PredictionQuality(const Context& ctx) {
  Outcome out;
  const double avg = Evaluate(*ctx.avg, ctx.test_set).mae;
  const double linreg = Evaluate(*ctx.linreg, ctx.test_set).mae;
  const double mlp = Evaluate(*ctx.mlp, ctx.test_set).mae;
  out.Check(Within(avg, 0.148, 0.012), Fmt("avg MAE %.4f in 0.148+-0.012", avg));
  out.Check(Within(linreg, 0.088, 0.010),
            Fmt("linreg MAE %.4f in 0.088+-0.010", linreg));
  out.Check(mlp <= 0.075, Fmt("mlp MAE %.4f <= 0.075", mlp));
  out.Check(mlp < linreg, "mlp beats linreg");
  out.Note(Fmt("MAE avg %.4f, linreg %.4f, mlp %.4f", avg, linreg, mlp));
  return out;
}

// 5 and 11 share one bench run.
Outcome OperationCounts(const BenchReport& report) {
  Outcome out;
  auto m = [&](Algorithm a) -> const MeanStats& { return report.row(a).mean; };
  auto ratio = [&](Algorithm a) { return report.row(a).cum_q_ratio; };
  for (Algorithm a : {Algorithm::kOracle, Algorithm::kDijkstra,
                      Algorithm::kPrune, Algorithm::kSmart}) {
    out.Check(Within(m(a).rm, 59.4, 3.0),
              ToString(a) + Fmt(" RM %.2f in 59.4+-3", m(a).rm));
  }
  out.Check(m(Algorithm::kNaive).rm > m(Algorithm::kSmart).rm,
            Fmt("naive RM %.2f > smart RM %.2f", m(Algorithm::kNaive).rm,
                m(Algorithm::kSmart).rm));
  const double prune_is = m(Algorithm::kPrune).is;
  out.Check(Within(m(Algorithm::kDijkstra).is, 335.5, 15),
            Fmt("dijkstra IS %.2f in 335.5+-15", m(Algorithm::kDijkstra).is));
  out.Check(Within(prune_is, 122.9, 8), Fmt("prune IS %.2f in 122.9+-8", prune_is));
  out.Check(m(Algorithm::kSmart).is <= prune_is - 15,
            Fmt("smart IS %.2f <= prune IS - 15 = %.2f",
                m(Algorithm::kSmart).is, prune_is - 15));
  out.Check(m(Algorithm::kOracle).inr == 0.0, "oracle INR = 0");
  out.Check(Within(m(Algorithm::kDijkstra).inr, 276, 15),
            Fmt("dijkstra INR %.2f in 276+-15", m(Algorithm::kDijkstra).inr));
  out.Check(Within(m(Algorithm::kPrune).inr, 63.5, 8),
            Fmt("prune INR %.2f in 63.5+-8", m(Algorithm::kPrune).inr));
  out.Check(m(Algorithm::kSmart).inr <= 45,
            Fmt("smart INR %.2f <= 45", m(Algorithm::kSmart).inr));
  out.Check(Within(ratio(Algorithm::kDijkstra), 9.6, 1.0),
            Fmt("dijkstra ratio %.3f in 9.6+-1", ratio(Algorithm::kDijkstra)));
  out.Check(Within(ratio(Algorithm::kPrune), 3.6, 0.5),
            Fmt("prune ratio %.3f in 3.6+-0.5", ratio(Algorithm::kPrune)));
  out.Check(ratio(Algorithm::kSmart) <= 2.2,
            Fmt("smart ratio %.3f <= 2.2", ratio(Algorithm::kSmart)));
  for (Algorithm a : kAllAlgorithms) {
    out.Note(ToString(a) + Fmt(" rm %.2f is %.2f", m(a).rm, m(a).is) +
             Fmt(" inr %.2f trials %.2f ratio %.3f", m(a).inr, m(a).trials,
                 ratio(a)));
  }
  return out;
}

Outcome Dominance(const BenchReport& report) {
  Outcome out;
  auto runs = [&](Algorithm a) -> const std::vector<RunStats>& {
    return report.runs[static_cast<std::size_t>(a)];
  };
  std::uint64_t order = 0, rm = 0;
  for (std::size_t i = 0; i < report.instances; ++i) {
    const std::uint64_t o = runs(Algorithm::kOracle)[i].is;
    const std::uint64_t s = runs(Algorithm::kSmart)[i].is;
    const std::uint64_t p = runs(Algorithm::kPrune)[i].is;
    const std::uint64_t d = runs(Algorithm::kDijkstra)[i].is;
    if (!(o <= s && s <= p && p <= d)) ++order;
    if (runs(Algorithm::kSmart)[i].rm != runs(Algorithm::kPrune)[i].rm) ++rm;
  }
  out.Check(order == 0, std::to_string(order) + " IS ordering violations");
  out.Check(rm == 0, std::to_string(rm) + " smart/prune RM differences");
  out.Note(std::to_string(report.instances) + " instances checked");
  return out;
}

// 6. Shape of the alpha x beta sweep.
Outcome Sweep(const Context& ctx) {
  Outcome out;
  const std::vector<double> alphas{1.0, 1.05, 1.1, 1.2, 1.5, 2.0};
  const std::vector<double> betas{1.05, 1.1, 1.2, 1.5, 2.0};
  const SweepReport report = RunSweep(ctx.val, *ctx.mlp, kI0, alphas, betas);
  std::string row;
  double best = kInf;
  std::size_t best_index = 0;
  bool monotone = true;
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double q = report.at(a, 0).mean_q;
    row += Fmt(" %.2f", q);
    if (q < best) best = q, best_index = a;
    if (a > 0 && q < report.at(a - 1, 0).mean_q) monotone = false;
  }
  out.Check(best_index == 0,
            Fmt("argmin alpha at beta 1.05 is %.2f", alphas[best_index]));
  out.Check(monotone, "mean Q nondecreasing in alpha at beta 1.05");
  out.Note("mean Q at beta 1.05 over alpha:" + row);
  return out;
}

// 7. Inserted-never-removed counts and Lemma-1 frequency.
Outcome Bounds() {
  Outcome out;
  const GenParams params = Params(DeriveSeed(kSeed, 3));
  const InrReport inr = MeasureInr(params, 0.1, 500);
  out.Check(inr.order_violations == 0,
            std::to_string(inr.order_violations) + " INRP<=INRR<=INRS violations");
  out.Check(Within(inr.mean_inrs, 350, 35),
            Fmt("mean INRS %.2f in 350+-35", inr.mean_inrs));
  out.Check(inr.mean_inrp <= inr.inrp_bound,
            Fmt("mean INRP %.2f <= inrp_bound %.2f", inr.mean_inrp,
                inr.inrp_bound));
  out.Note(Fmt("INRS %.2f INRR %.2f INRP %.2f", inr.mean_inrs, inr.mean_inrr,
               inr.mean_inrp) +
           Fmt(", inrr_bound %.2f inrp_bound %.2f (reference 63), mean D %.4f",
               inr.inrr_bound, inr.inrp_bound, inr.mean_distance));

  const Lemma1Report lemma = Lemma1MonteCarlo(params, BoundsParams{2.0, 0.1}, 500);
  out.Check(lemma.sufficient, "at least 30 relevant edges");
  out.Check(lemma.Passes(), Fmt("prune frequency %.4f >= %.4f", lemma.frequency,
                                lemma.bound - 3 * lemma.std_error));
  out.Note(Fmt("lemma-1 frequency %.4f +- %.4f over %.0f edges",
               lemma.frequency, lemma.std_error,
               static_cast<double>(lemma.edges)) +
           Fmt(", uniformity p %.3f, chernoff %.0f/%.0f",
               lemma.uniformity_p_value,
               static_cast<double>(lemma.chernoff_satisfied_runs),
               static_cast<double>(lemma.chernoff_eligible_runs)));
  return out;
}

// 8. Key Lemma by Monte Carlo.
Outcome KeyLemma() {
  Outcome out;
  const auto cases = RandomKeyLemmaCases(20, 10, DeriveSeed(kSeed, 20));
  double worst = -kInf;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const KeyLemmaReport r = KeyLemmaCheck(cases[i].a, cases[i].uppers,
                                           cases[i].p, 100000,
                                           DeriveSeed(kSeed, 100 + i));
    out.Check(r.Passes(), "case " + std::to_string(i) +
                              Fmt(": %.5f > %.5f + 3*%.5f", r.estimate,
                                  r.bound, r.std_error));
    worst = std::max(worst, (r.estimate - r.bound) / std::max(r.std_error, 1e-12));
  }
  out.Note(std::to_string(cases.size()) + " cases" +
           Fmt(", largest (estimate - bound)/sigma %.2f", worst));
  return out;
}

// 9. Analytic vs finite-difference gradient.
Outcome Gradient() {
  Outcome out;
  const Mlp mlp({6, 5, 5, 1}, DeriveSeed(kSeed, 40));
  Xoshiro256StarStar rng(DeriveSeed(kSeed, 41));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> xs(16, std::vector<double>(6));
  std::vector<double> ys(16);
  for (auto& x : xs) {
    for (double& v : x) v = u(rng);
  }
  for (double& y : ys) y = 3.0 + u(rng);  // keeps residuals away from zero
  std::vector<std::size_t> all(xs.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<double> analytic;
  MaeLossAndGradient(mlp, xs, ys, all, &analytic);
  const std::vector<double> base = mlp.Parameters();
  Mlp probe = mlp;
  const double h = 1e-6;
  double worst = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<double> p = base;
    p[i] = base[i] + h;
    probe.SetParameters(p);
    const double up = MaeLossAndGradient(probe, xs, ys, all, nullptr);
    p[i] = base[i] - h;
    probe.SetParameters(p);
    const double down = MaeLossAndGradient(probe, xs, ys, all, nullptr);
    const double numeric = (up - down) / (2 * h);
    const double scale =
        std::max({std::abs(analytic[i]), std::abs(numeric), 1e-3});
    worst = std::max(worst, std::abs(analytic[i] - numeric) / scale);
  }
  out.Check(worst < 1e-5, Fmt("max relative error %.3g < 1e-5", worst));
  out.Note(Fmt("%.0f parameters, max relative error %.3g",
               static_cast<double>(base.size()), worst));
  return out;
}

// 10. Perfect prediction on the no-savings fixture prunes nothing.
Outcome NoSavings() {
  Outcome out;
  const Instance inst = GenerateNoSavingsInstance(0.0, 10);
  const ConstantPredictor perfect(1.0);
  for (RestartMode mode : {RestartMode::kSmart, RestartMode::kNaive}) {
    PredictConfig config;
    config.i0 = 1;
    config.restart = mode;
    const PredictionResult r = DijkstraPrediction(inst, perfect, config);
    out.Check(r.distance == 1.0, ToString(mode) + " distance 1");
    out.Check(r.stats.pruned == 0,
              ToString(mode) + " pruned " + std::to_string(r.stats.pruned));
    out.Check(r.stats.ris + r.stats.rdp == 0, ToString(mode) + " reserve unused");
  }
  out.Note("fan of 10, P = D = 1, pruned 0 in both modes");
  return out;
}

int Run() {
  const auto start = std::chrono::steady_clock::now();
  const Context ctx = Prepare();

  PredictConfig config;
  config.i0 = kI0;
  config.alpha = 1.0;
  config.beta = 1.05;
  const BenchReport bench = RunBench(ctx.test, *ctx.mlp, config);

  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"exactness", [&] { return Exactness(ctx); }},
          {"lockstep", [&] { return Lockstep(ctx); }},
          {"instance statistics", [&] { return Statistics(ctx); }},
          {"prediction MAE", [&] { return PredictionQuality(ctx); }},
          {"operation counts", [&] { return OperationCounts(bench); }},
          {"sweep shape", [&] { return Sweep(ctx); }},
          {"INR bounds and Lemma 1", Bounds},
          {"key lemma", KeyLemma},
          {"MLP gradient", Gradient},
          {"no-savings fixture", NoSavings},
          {"dominance", [&] { return Dominance(bench); }},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failed += !outcome.passed;
    std::printf("[%s] %2zu %s (%.1f s): %s\n", outcome.passed ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(), Seconds(t),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed,
              criteria.size(), Seconds(start));
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ssmtsp

int main() {
  try {
    return ssmtsp::Run();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 1;
  }
}
