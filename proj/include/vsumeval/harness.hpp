#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsumeval/datamodel.hpp"
#include "vsumeval/ingest.hpp"
#include "vsumeval/metrics.hpp"
#include "vsumeval/random.hpp"
#include "vsumeval/segmentation.hpp"
#include "vsumeval/selection.hpp"

namespace vsumeval {

inline constexpr const char* kVersion = "0.1.0";

using Predictions = std::map<std::string, FrameScores>;

enum class ScorerKind { kRandom, kFromFile, kHumanAnnotator };

struct ScorerSpec {
  ScorerKind kind = ScorerKind::kRandom;
  std::string path;                // kFromFile
  std::size_t annotator_index = 0; // kHumanAnnotator
};

enum class Aggregation { kAvg, kMax, kBoth };

/// kTvsum regenerates reference summaries from annotator scores with each
/// trial's segmentation; kSumme evaluates against stored reference masks.
/// kAuto prefers stored masks when the bundle has them.
enum class EvalMode { kAuto, kTvsum, kSumme };

enum class CiMethod { kNormal, kBootstrap };

struct ExperimentConfig {
  SegmenterSpec segmenter = TwoPeakSpec{};
  ScorerSpec scorer;
  Pooling pooling = Pooling::kMean;
  double budget_fraction = 0.15;
  std::size_t trials = 100;
  std::uint64_t master_seed = 0;
  Aggregation aggregation = Aggregation::kBoth;
  EvalMode mode = EvalMode::kAuto;
  CiMethod ci_method = CiMethod::kNormal;
  std::size_t bootstrap_resamples = 2000;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;
};

void validate_config(const ExperimentConfig& cfg);

std::string to_string(ScorerKind kind);
std::string to_string(Aggregation agg);
std::string to_string(EvalMode mode);
std::string to_string(CiMethod method);
Aggregation aggregation_from_string(const std::string& name);
EvalMode eval_mode_from_string(const std::string& name);
CiMethod ci_method_from_string(const std::string& name);

struct Interval {
  double mean = 0.0;
  double half_width = 0.0;
};

/// mean +- 1.96 * sd / sqrt(n) with the sample (n - 1) standard deviation;
/// half width 0 for a single sample.
Interval confidence_interval(std::span<const double> samples);

/// Percentile bootstrap of the mean; half width is half the 95% range.
Interval bootstrap_interval(std::span<const double> samples, std::size_t resamples, std::uint64_t seed);

/// i.i.d. Uniform[0, 1) per frame.
FrameScores random_frame_scores(const VideoRecord& video, RandomEngine& rng);

struct VideoTrials {
  std::string video_id;
  std::size_t n_frames = 0;
  std::size_t budget_frames = 0;
  std::vector<double> avg_f1;  // one per trial
  std::vector<double> max_f1;
  std::vector<double> share_of_short;
  /// 1 when the median selected segment is shorter than the median unselected
  /// one; 0 otherwise (including when either group is empty).
  std::vector<std::uint8_t> selected_shorter;
  double mean_avg_f1 = 0.0;
  double mean_max_f1 = 0.0;
};

struct BiasSummary {
  std::size_t pairs = 0;
  std::size_t selected_shorter = 0;
  double selected_shorter_fraction = 0.0;
  double mean_share_of_short = 0.0;
};

struct ExperimentReport {
  std::string method;     // random, file, human-annotator, human-loo
  std::string segmenter;  // segmenter name
  std::string mode;       // tvsum or summe
  ExperimentConfig config;
  std::vector<VideoTrials> videos;
  std::vector<double> trial_avg_f1;  // dataset mean per trial
  std::vector<double> trial_max_f1;
  Interval avg_f1;
  Interval max_f1;
  std::optional<BiasSummary> bias;
};

/// Randomization test: segment, score, pool and select per (trial, video),
/// then evaluate against the references. Trial seeds derive from
/// (master_seed, trial, video_id).
ExperimentReport run_randomization_test(const DatasetBundle& bundle, const ExperimentConfig& cfg,
                                        const Predictions* predictions = nullptr);

/// Human leave-one-out baseline under the configured segmentation.
ExperimentReport run_human_loo(const DatasetBundle& bundle, const ExperimentConfig& cfg);

/// One report per budget fraction, same seeds for each.
std::vector<ExperimentReport> run_budget_sweep(const DatasetBundle& bundle, const ExperimentConfig& cfg,
                                               std::span<const double> fractions,
                                               const Predictions* predictions = nullptr);

enum class RankMode { kPredictions, kRandom, kLeaveOneOut };

struct RankEvalRow {
  std::string video_id;
  RankCorrelation correlation;
};

struct RankEvalReport {
  std::string method;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<RankEvalRow> per_video;
  double tau = 0.0;
  double rho = 0.0;
  std::size_t degenerate_pairs = 0;
  /// Random mode: dataset-mean tau/rho for each trial.
  std::vector<double> trial_tau;
  std::vector<double> trial_rho;
};

RankEvalReport run_rank_eval(const DatasetBundle& bundle, RankMode mode, const Predictions* predictions,
                             std::size_t trials, std::uint64_t master_seed, std::size_t jobs = 1,
                             const std::string& method_label = "");

/// Full JSON report (config echo, seed, per-video blocks, raw trial arrays).
std::string report_to_json(std::span<const ExperimentReport> reports);
/// Table with one row per report: method, segmenter, pooling, budget, avg/max
/// F1 and their 95% half widths.
std::string report_to_csv(std::span<const ExperimentReport> reports);

std::string rank_report_to_json(std::span<const RankEvalReport> reports);
/// `method,tau,rho` table.
std::string rank_report_to_csv(std::span<const RankEvalReport> reports);

/// Runs fn(0..n-1) on up to `jobs` threads. The first failing index (lowest)
/// has its exception rethrown.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace vsumeval
