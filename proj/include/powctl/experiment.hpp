#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powctl/bcq.hpp"
#include "powctl/dataset.hpp"

namespace powctl {

struct ExperimentConfig {
  EnvConfig monitored_env;                  // data-generating deployment
  EnvConfig unexplored_env;                 // evaluation deployment
  long dataset_size = 100000;
  double mix = 1.0;
  BcqHyper hyper;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  long eval_every = 250;                    // gradient steps per checkpoint
  int eval_slots = 100;                     // W slots per evaluation
  std::uint64_t collect_seed = 20240;
  std::uint64_t eval_seed = 90210;
  Objective objective;                      // reward used at evaluation time
  WmmseConfig wmmse;
  std::string out_dir = "runs";
  bool use_full_paper_sizes = false;        // enables the 1e6-record variants

  ExperimentConfig() { unexplored_env = monitored_env; }
  void validate() const;
};

// Fixed sequence of independently drawn slots (fresh topology, one mobility
// step, fresh channels). Reused verbatim across policies so comparisons are
// paired.
struct EvalStream {
  EnvConfig cfg;
  std::uint64_t seed = 0;
  std::vector<ChannelMatrix> slots;
};

EvalStream make_eval_stream(const EnvConfig& cfg, int slots, std::uint64_t seed);

double evaluate_policy(const Policy& policy, const EvalStream& stream, const Objective& obj);
double evaluate_wmmse(const EvalStream& stream, const Objective& obj, double p_max,
                      const WmmseConfig& cfg = {});
double evaluate_random(const EvalStream& stream, const Objective& obj, double p_max);

struct MetricsRow {
  long checkpoint = 0;
  double mean_reward = 0.0;
  double std_reward = 0.0;
  bool operator==(const MetricsRow&) const = default;
};

struct MetricsSeries {
  std::string label;
  std::vector<MetricsRow> rows;
  double wmmse_baseline = 0.0;
  double random_baseline = 0.0;
  bool operator==(const MetricsSeries&) const = default;
};

// Header "checkpoint,mean_reward,std_reward,wmmse_baseline,random_baseline";
// series are separated by "# series: <label>" comment lines.
void write_metrics_csv(const std::string& path, const std::vector<MetricsSeries>& series);
std::vector<MetricsSeries> read_metrics_csv(const std::string& path);

// Self-contained polyline plot with axes, ticks and a legend.
void write_metrics_svg(const std::string& path, const std::vector<MetricsSeries>& series,
                       const std::string& title);

// One training run evaluated at the checkpoint cadence.
struct RunResult {
  std::uint64_t seed = 0;
  std::vector<long> checkpoints;
  std::vector<double> rewards;
  double final_reward = 0.0;
  double wall_seconds = 0.0;
  TrainLog log;
};

RunResult run_training(const Dataset& ds, const BcqHyper& hyper, std::uint64_t seed,
                       const EvalStream& stream, const Objective& obj, long eval_every);

// Aggregates per-seed runs into a series (mean/std across seeds per
// checkpoint) and attaches the paired baselines.
MetricsSeries aggregate_runs(const std::string& label, const std::vector<RunResult>& runs,
                             double wmmse_baseline, double random_baseline);

enum class FigureId { Fig2, Fig3, Fig4, Fig5a, Fig5b };
FigureId figure_from_string(const std::string& name);
std::string to_string(FigureId fig);

// Reproduces one of the paper-style experiments and writes <fig>.csv and
// <fig>.svg into cfg.out_dir. A non-empty cache_dir reuses finished runs
// (JSON artifacts keyed by the run configuration).
std::vector<MetricsSeries> run_reproduction(FigureId fig, const ExperimentConfig& cfg,
                                            const std::string& cache_dir = "");

// Cached single run: loads a matching artifact from cache_dir if present,
// otherwise trains and stores it. An empty cache_dir always trains.
RunResult run_training_cached(const std::string& cache_dir, const std::string& run_key,
                              const Dataset& ds, const BcqHyper& hyper, std::uint64_t seed,
                              const EvalStream& stream, const Objective& obj, long eval_every);

double mean_of(const std::vector<double>& xs);
double sample_std(const std::vector<double>& xs);

}  // namespace powctl
