#include "vsumeval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace vsumeval {

using ordered_json = nlohmann::ordered_json;

std::string to_string(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::kRandom: return "random";
    case ScorerKind::kFromFile: return "file";
    case ScorerKind::kHumanAnnotator: return "human-annotator";
  }
  return "?";
}

std::string to_string(Aggregation agg) {
  switch (agg) {
    case Aggregation::kAvg: return "avg";
    case Aggregation::kMax: return "max";
    case Aggregation::kBoth: return "both";
  }
  return "?";
}

std::string to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::kAuto: return "auto";
    case EvalMode::kTvsum: return "tvsum";
    case EvalMode::kSumme: return "summe";
  }
  return "?";
}

std::string to_string(CiMethod method) { return method == CiMethod::kNormal ? "normal" : "bootstrap"; }

Aggregation aggregation_from_string(const std::string& name) {
  if (name == "avg") return Aggregation::kAvg;
  if (name == "max") return Aggregation::kMax;
  if (name == "both") return Aggregation::kBoth;
  throw std::invalid_argument("unknown aggregation '" + name + "' (expected avg, max or both)");
}

EvalMode eval_mode_from_string(const std::string& name) {
  if (name == "auto") return EvalMode::kAuto;
  if (name == "tvsum") return EvalMode::kTvsum;
  if (name == "summe") return EvalMode::kSumme;
  throw std::invalid_argument("unknown evaluation mode '" + name + "' (expected auto, tvsum or summe)");
}

CiMethod ci_method_from_string(const std::string& name) {
  if (name == "normal") return CiMethod::kNormal;
  if (name == "bootstrap") return CiMethod::kBootstrap;
  throw std::invalid_argument("unknown CI method '" + name + "' (expected normal or bootstrap)");
}

void validate_config(const ExperimentConfig& cfg) {
  validate_segmenter(cfg.segmenter);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(cfg.budget_fraction > 0.0 && cfg.budget_fraction <= 1.0)) {
    throw std::invalid_argument("budget fraction must be in (0, 1]");
  }
  if (cfg.ci_method == CiMethod::kBootstrap && cfg.bootstrap_resamples < 1) {
    throw std::invalid_argument("bootstrap_resamples must be >= 1");
  }
}

Interval confidence_interval(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("confidence_interval: no samples");
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  return {mean, 1.96 * sd / std::sqrt(n)};
}

Interval bootstrap_interval(std::span<const double> samples, std::size_t resamples, std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("bootstrap_interval: no samples");
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() == 1 || resamples == 0) return {mean, 0.0};
  RandomEngine rng(splitmix64(seed ^ 0xB0075712A9ULL));
  std::vector<double> means(resamples);
  for (auto& m : means) {
    double s = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) s += samples[uniform_below(rng, samples.size())];
    m = s / n;
  }
  std::sort(means.begin(), means.end());
  auto at = [&](double q) {
    const auto idx = static_cast<std::size_t>(std::floor(q * static_cast<double>(resamples - 1) + 0.5));
    return means[std::min(idx, resamples - 1)];
  };
  return {mean, 0.5 * (at(0.975) - at(0.025))};
}

FrameScores random_frame_scores(const VideoRecord& video, RandomEngine& rng) {
  FrameScores out{video.video_id, std::vector<double>(video.n_frames)};
  for (auto& v : out.values) v = uniform01(rng);
  return out;
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_index = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

EvalMode resolve_mode(const DatasetBundle& bundle, EvalMode mode) {
  if (mode == EvalMode::kAuto) return bundle.reference_masks.empty() ? EvalMode::kTvsum : EvalMode::kSumme;
  return mode;
}

void require_references(const DatasetBundle& bundle, EvalMode mode) {
  if (bundle.videos.empty()) throw DataError("dataset has no videos");
  for (const auto& v : bundle.videos) {
    if (mode == EvalMode::kTvsum && !bundle.annotations.count(v.video_id)) {
      throw DataError("TVSum-mode evaluation needs annotations; video '" + v.video_id + "' has none");
    }
    if (mode == EvalMode::kSumme) {
      auto it = bundle.reference_masks.find(v.video_id);
      if (it == bundle.reference_masks.end() || it->second.empty()) {
        throw DataError("SumMe-mode evaluation needs reference masks; video '" + v.video_id + "' has none");
      }
    }
  }
}

const FeatureMatrix& features_for(const DatasetBundle& bundle, const std::string& id) {
  auto it = bundle.features.find(id);
  if (it == bundle.features.end()) throw DataError("KTS segmentation needs features; video '" + id + "' has none");
  return it->second;
}

/// Segmentations that do not change between trials (uniform, KTS, and the
/// KTS base of randomized KTS), computed once per video.
std::vector<std::optional<Segmentation>> fixed_segmentations(const DatasetBundle& bundle, const SegmenterSpec& spec,
                                                             std::size_t jobs) {
  std::vector<std::optional<Segmentation>> out(bundle.videos.size());
  const KtsSpec* kts = std::get_if<KtsSpec>(&spec);
  if (const auto* r = std::get_if<RandomizedKtsSpec>(&spec)) kts = &r->base;
  if (kts) {
    for (const auto& v : bundle.videos) features_for(bundle, v.video_id);
  }
  parallel_for(bundle.videos.size(), jobs, [&](std::size_t i) {
    const auto& v = bundle.videos[i];
    if (const auto* u = std::get_if<UniformSpec>(&spec)) {
      out[i] = segment_uniform(v, u->len_frames);
    } else if (kts) {
      out[i] = segment_kts(v, features_for(bundle, v.video_id), *kts);
    }
  });
  return out;
}

Segmentation trial_segmentation(const VideoRecord& video, const SegmenterSpec& spec,
                                const std::optional<Segmentation>& fixed, RandomEngine& rng) {
  return std::visit(overloaded{
                        [&](const UniformSpec&) { return *fixed; },
                        [&](const KtsSpec&) { return *fixed; },
                        [&](const OnePeakSpec& s) { return segment_one_peak(video, s.lambda, rng); },
                        [&](const TwoPeakSpec& s) {
                          return segment_two_peak(video, s.lambda_short, s.lambda_long, s.p_short, rng);
                        },
                        [&](const RandomizedKtsSpec&) { return randomize_kts(*fixed, rng); },
                    },
                    spec);
}

struct TrialOutcome {
  double avg_f1 = 0.0;
  double max_f1 = 0.0;
  double share_of_short = 0.0;
  std::uint8_t selected_shorter = 0;
};

Interval interval_for(const ExperimentConfig& cfg, std::span<const double> samples, std::uint64_t salt) {
  if (cfg.ci_method == CiMethod::kBootstrap) {
    return bootstrap_interval(samples, cfg.bootstrap_resamples, splitmix64(cfg.master_seed ^ salt));
  }
  return confidence_interval(samples);
}

ExperimentReport assemble(const DatasetBundle& bundle, const ExperimentConfig& cfg,
                          const std::vector<TrialOutcome>& outcomes, bool with_bias) {
  const std::size_t n_videos = bundle.videos.size();
  ExperimentReport report;
  report.config = cfg;
  report.segmenter = segmenter_name(cfg.segmenter);
  report.trial_avg_f1.assign(cfg.trials, 0.0);
  report.trial_max_f1.assign(cfg.trials, 0.0);
  BiasSummary bias;
  double share_sum = 0.0;
  for (std::size_t v = 0; v < n_videos; ++v) {
    VideoTrials vt;
    vt.video_id = bundle.videos[v].video_id;
    vt.n_frames = bundle.videos[v].n_frames;
    vt.budget_frames = Budget::of_fraction(cfg.budget_fraction).resolve(vt.n_frames);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto& o = outcomes[t * n_videos + v];
      vt.avg_f1.push_back(o.avg_f1);
      vt.max_f1.push_back(o.max_f1);
      report.trial_avg_f1[t] += o.avg_f1;
      report.trial_max_f1[t] += o.max_f1;
      if (with_bias) {
        vt.share_of_short.push_back(o.share_of_short);
        vt.selected_shorter.push_back(o.selected_shorter);
        ++bias.pairs;
        bias.selected_shorter += o.selected_shorter;
        share_sum += o.share_of_short;
      }
    }
    vt.mean_avg_f1 = std::accumulate(vt.avg_f1.begin(), vt.avg_f1.end(), 0.0) / static_cast<double>(cfg.trials);
    vt.mean_max_f1 = std::accumulate(vt.max_f1.begin(), vt.max_f1.end(), 0.0) / static_cast<double>(cfg.trials);
    report.videos.push_back(std::move(vt));
  }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    report.trial_avg_f1[t] /= static_cast<double>(n_videos);
    report.trial_max_f1[t] /= static_cast<double>(n_videos);
  }
  report.avg_f1 = interval_for(cfg, report.trial_avg_f1, 0xA7);
  report.max_f1 = interval_for(cfg, report.trial_max_f1, 0x3A);
  // Dataset means are defined as the mean of per-video means.
  double avg = 0.0;
  double max = 0.0;
  for (const auto& vt : report.videos) {
    avg += vt.mean_avg_f1;
    max += vt.mean_max_f1;
  }
  report.avg_f1.mean = avg / static_cast<double>(n_videos);
  report.max_f1.mean = max / static_cast<double>(n_videos);
  if (with_bias && bias.pairs > 0) {
    bias.selected_shorter_fraction = static_cast<double>(bias.selected_shorter) / static_cast<double>(bias.pairs);
    bias.mean_share_of_short = share_sum / static_cast<double>(bias.pairs);
    report.bias = bias;
  }
  return report;
}

std::vector<SummaryMask> without(const std::vector<SummaryMask>& refs, std::size_t skip) {
  std::vector<SummaryMask> out;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i != skip) out.push_back(refs[i]);
  }
  return out;
}

}  // namespace

ExperimentReport run_randomization_test(const DatasetBundle& bundle, const ExperimentConfig& cfg,
                                        const Predictions* predictions) {
  validate_config(cfg);
  const EvalMode mode = resolve_mode(bundle, cfg.mode);
  require_references(bundle, mode);

  Predictions loaded;
  if (cfg.scorer.kind == ScorerKind::kFromFile && !predictions) {
    if (cfg.scorer.path.empty()) throw DataError("file scorer needs a predictions path");
    loaded = load_prediction_scores(cfg.scorer.path, bundle);
    predictions = &loaded;
  }
  if (cfg.scorer.kind == ScorerKind::kHumanAnnotator) {
    for (const auto& v : bundle.videos) {
      auto it = bundle.annotations.find(v.video_id);
      if (it == bundle.annotations.end() || cfg.scorer.annotator_index >= it->second.annotator_count()) {
        throw DataError("video '" + v.video_id + "' has no annotator " + std::to_string(cfg.scorer.annotator_index));
      }
      if (mode == EvalMode::kTvsum && it->second.annotator_count() < 2) {
        throw DataError("annotator scoring in TVSum mode needs at least two annotators");
      }
    }
  }
  if (cfg.scorer.kind == ScorerKind::kFromFile) {
    for (const auto& v : bundle.videos) {
      if (!predictions->count(v.video_id)) throw DataError("no prediction scores for video '" + v.video_id + "'");
    }
  }

  const auto fixed = fixed_segmentations(bundle, cfg.segmenter, cfg.jobs);
  const std::size_t n_videos = bundle.videos.size();
  std::vector<TrialOutcome> outcomes(cfg.trials * n_videos);

  parallel_for(outcomes.size(), cfg.jobs, [&](std::size_t task) {
    const std::size_t t = task / n_videos;
    const std::size_t v = task % n_videos;
    const auto& video = bundle.videos[v];
    RandomEngine rng(derive_seed(cfg.master_seed, t, video.video_id));
    const Segmentation seg = trial_segmentation(video, cfg.segmenter, fixed[v], rng);

    FrameScores scores;
    switch (cfg.scorer.kind) {
      case ScorerKind::kRandom: scores = random_frame_scores(video, rng); break;
      case ScorerKind::kFromFile: scores = predictions->at(video.video_id); break;
      case ScorerKind::kHumanAnnotator:
        scores = bundle.annotations.at(video.video_id).annotators[cfg.scorer.annotator_index];
        break;
    }
    const std::size_t budget = Budget::of_fraction(cfg.budget_fraction).resolve(video.n_frames);
    const SummaryMask summary = knapsack_select(pool_scores(scores, seg, cfg.pooling), budget);

    VideoEvaluation eval;
    if (mode == EvalMode::kTvsum) {
      auto refs = tvsum_reference_summaries(bundle.annotations.at(video.video_id), seg,
                                            Budget::of_fraction(cfg.budget_fraction));
      if (cfg.scorer.kind == ScorerKind::kHumanAnnotator) refs = without(refs, cfg.scorer.annotator_index);
      eval = evaluate_against_references(summary, refs);
    } else {
      eval = evaluate_against_references(summary, bundle.reference_masks.at(video.video_id));
    }

    const auto stats = selected_length_stats(seg, summary);
    TrialOutcome& out = outcomes[task];
    out.avg_f1 = eval.avg_f1;
    out.max_f1 = eval.max_f1;
    out.share_of_short = stats.share_of_short;
    out.selected_shorter = stats.selected_median && stats.unselected_median &&
                           *stats.selected_median < *stats.unselected_median;
  });

  auto report = assemble(bundle, cfg, outcomes, true);
  report.method = to_string(cfg.scorer.kind);
  if (cfg.scorer.kind == ScorerKind::kHumanAnnotator) {
    report.method += "-" + std::to_string(cfg.scorer.annotator_index);
  }
  report.mode = to_string(mode);
  return report;
}

ExperimentReport run_human_loo(const DatasetBundle& bundle, const ExperimentConfig& cfg) {
  validate_config(cfg);
  const EvalMode mode = resolve_mode(bundle, cfg.mode);
  require_references(bundle, mode);
  for (const auto& v : bundle.videos) {
    const std::size_t count = mode == EvalMode::kTvsum ? bundle.annotations.at(v.video_id).annotator_count()
                                                       : bundle.reference_masks.at(v.video_id).size();
    if (count < 2) throw DataError("leave-one-out needs at least two annotators for '" + v.video_id + "'");
  }

  const std::size_t n_videos = bundle.videos.size();
  std::vector<TrialOutcome> outcomes(cfg.trials * n_videos);
  // Only random segmenters make trials differ; otherwise evaluate once and
  // replicate (SumMe masks never depend on the segmentation).
  const bool varies = mode == EvalMode::kTvsum && segmenter_is_random(cfg.segmenter);
  const std::size_t distinct_trials = varies ? cfg.trials : 1;
  const auto fixed = mode == EvalMode::kTvsum ? fixed_segmentations(bundle, cfg.segmenter, cfg.jobs)
                                              : std::vector<std::optional<Segmentation>>(n_videos);

  parallel_for(distinct_trials * n_videos, cfg.jobs, [&](std::size_t task) {
    const std::size_t t = task / n_videos;
    const std::size_t v = task % n_videos;
    const auto& video = bundle.videos[v];
    LeaveOneOutResult loo;
    if (mode == EvalMode::kTvsum) {
      RandomEngine rng(derive_seed(cfg.master_seed, t, video.video_id));
      const Segmentation seg = trial_segmentation(video, cfg.segmenter, fixed[v], rng);
      const auto refs = tvsum_reference_summaries(bundle.annotations.at(video.video_id), seg,
                                                  Budget::of_fraction(cfg.budget_fraction));
      loo = leave_one_out_f1(refs);
    } else {
      loo = leave_one_out_f1(bundle.reference_masks.at(video.video_id));
    }
    outcomes[task].avg_f1 = loo.mean_avg_f1;
    outcomes[task].max_f1 = loo.mean_max_f1;
  });
  for (std::size_t i = distinct_trials * n_videos; i < outcomes.size(); ++i) outcomes[i] = outcomes[i % n_videos];

  auto report = assemble(bundle, cfg, outcomes, false);
  report.method = "human-loo";
  report.mode = to_string(mode);
  return report;
}

std::vector<ExperimentReport> run_budget_sweep(const DatasetBundle& bundle, const ExperimentConfig& cfg,
                                               std::span<const double> fractions, const Predictions* predictions) {
  std::vector<ExperimentReport> out;
  for (double f : fractions) {
    auto c = cfg;
    c.budget_fraction = f;
    out.push_back(run_randomization_test(bundle, c, predictions));
  }
  return out;
}

RankEvalReport run_rank_eval(const DatasetBundle& bundle, RankMode mode, const Predictions* predictions,
                             std::size_t trials, std::uint64_t master_seed, std::size_t jobs,
                             const std::string& method_label) {
  if (bundle.videos.empty()) throw DataError("dataset has no videos");
  for (const auto& v : bundle.videos) {
    auto it = bundle.annotations.find(v.video_id);
    if (it == bundle.annotations.end()) throw DataError("rank evaluation needs annotations for '" + v.video_id + "'");
    if (mode == RankMode::kLeaveOneOut && it->second.annotator_count() < 2) {
      throw DataError("leave-one-out rank evaluation needs at least two annotators for '" + v.video_id + "'");
    }
    if (mode == RankMode::kPredictions && (!predictions || !predictions->count(v.video_id))) {
      throw DataError("no prediction scores for video '" + v.video_id + "'");
    }
  }
  if (mode == RankMode::kRandom && trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::size_t n_trials = mode == RankMode::kRandom ? trials : 1;
  const std::size_t n_videos = bundle.videos.size();

  std::vector<RankCorrelation> cells(n_trials * n_videos);
  parallel_for(cells.size(), jobs, [&](std::size_t task) {
    const std::size_t t = task / n_videos;
    const auto& video = bundle.videos[task % n_videos];
    const auto& ann = bundle.annotations.at(video.video_id);
    RankCorrelation& cell = cells[task];
    switch (mode) {
      case RankMode::kPredictions: cell = rank_eval_vs_annotators(predictions->at(video.video_id), ann); break;
      case RankMode::kRandom: {
        RandomEngine rng(derive_seed(master_seed, t, video.video_id));
        cell = rank_eval_vs_annotators(random_frame_scores(video, rng), ann);
        break;
      }
      case RankMode::kLeaveOneOut:
        for (std::size_t k = 0; k < ann.annotator_count(); ++k) {
          const auto r = rank_eval_vs_annotators(ann.annotators[k], ann, k);
          cell.tau += r.tau;
          cell.rho += r.rho;
          cell.degenerate_pairs += r.degenerate_pairs;
        }
        cell.tau /= static_cast<double>(ann.annotator_count());
        cell.rho /= static_cast<double>(ann.annotator_count());
        break;
    }
  });

  RankEvalReport report;
  switch (mode) {
    case RankMode::kPredictions: report.method = "predictions"; break;
    case RankMode::kRandom: report.method = "random"; break;
    case RankMode::kLeaveOneOut: report.method = "human-loo"; break;
  }
  if (!method_label.empty()) report.method = method_label;
  report.trials = n_trials;
  report.master_seed = master_seed;
  report.trial_tau.assign(n_trials, 0.0);
  report.trial_rho.assign(n_trials, 0.0);
  for (std::size_t v = 0; v < n_videos; ++v) {
    RankEvalRow row{bundle.videos[v].video_id, {}};
    for (std::size_t t = 0; t < n_trials; ++t) {
      const auto& c = cells[t * n_videos + v];
      row.correlation.tau += c.tau;
      row.correlation.rho += c.rho;
      row.correlation.degenerate_pairs += c.degenerate_pairs;
      report.trial_tau[t] += c.tau / static_cast<double>(n_videos);
      report.trial_rho[t] += c.rho / static_cast<double>(n_videos);
    }
    row.correlation.tau /= static_cast<double>(n_trials);
    row.correlation.rho /= static_cast<double>(n_trials);
    report.tau += row.correlation.tau;
    report.rho += row.correlation.rho;
    report.degenerate_pairs += row.correlation.degenerate_pairs;
    report.per_video.push_back(std::move(row));
  }
  report.tau /= static_cast<double>(n_videos);
  report.rho /= static_cast<double>(n_videos);
  if (mode != RankMode::kRandom) {
    report.trial_tau.clear();
    report.trial_rho.clear();
  }
  return report;
}

// Serialization ----------------------------------------------------------------

namespace {

ordered_json segmenter_json(const SegmenterSpec& spec) {
  ordered_json j;
  j["method"] = segmenter_name(spec);
  std::visit(overloaded{
                 [&](const UniformSpec& s) { j["len_frames"] = s.len_frames; },
                 [&](const OnePeakSpec& s) { j["lambda"] = s.lambda; },
                 [&](const TwoPeakSpec& s) {
                   j["lambda_short"] = s.lambda_short;
                   j["lambda_long"] = s.lambda_long;
                   j["p_short"] = s.p_short;
                 },
                 [&](const KtsSpec& s) {
                   j["penalty_c"] = s.penalty_c;
                   j["max_segments"] = s.max_segments;
                   j["min_seg_len"] = s.min_seg_len;
                 },
                 [&](const RandomizedKtsSpec& s) {
                   j["penalty_c"] = s.base.penalty_c;
                   j["max_segments"] = s.base.max_segments;
                   j["min_seg_len"] = s.base.min_seg_len;
                 },
             },
             spec);
  return j;
}

// Worker count is deliberately absent: reports must not depend on it.
ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["segmenter"] = segmenter_json(cfg.segmenter);
  ordered_json scorer;
  scorer["kind"] = to_string(cfg.scorer.kind);
  if (cfg.scorer.kind == ScorerKind::kFromFile) scorer["path"] = cfg.scorer.path;
  if (cfg.scorer.kind == ScorerKind::kHumanAnnotator) scorer["annotator_index"] = cfg.scorer.annotator_index;
  j["scorer"] = scorer;
  j["pooling"] = to_string(cfg.pooling);
  j["budget_fraction"] = cfg.budget_fraction;
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["aggregation"] = to_string(cfg.aggregation);
  j["mode"] = to_string(cfg.mode);
  j["ci_method"] = to_string(cfg.ci_method);
  if (cfg.ci_method == CiMethod::kBootstrap) j["bootstrap_resamples"] = cfg.bootstrap_resamples;
  return j;
}

ordered_json interval_json(const Interval& i) {
  ordered_json j;
  j["mean"] = i.mean;
  j["ci95_half_width"] = i.half_width;
  return j;
}

std::string fmt_number(double v) {
  std::ostringstream os;
  os << ordered_json(v).dump();
  return os.str();
}

}  // namespace

std::string report_to_json(std::span<const ExperimentReport> reports) {
  ordered_json doc;
  doc["tool"] = "vsumeval";
  doc["version"] = kVersion;
  doc["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json jr;
    jr["method"] = r.method;
    jr["segmenter"] = r.segmenter;
    jr["mode"] = r.mode;
    jr["seed"] = r.config.master_seed;
    jr["config"] = config_json(r.config);
    const bool show_avg = r.config.aggregation != Aggregation::kMax;
    const bool show_max = r.config.aggregation != Aggregation::kAvg;
    if (show_avg) jr["avg_f1"] = interval_json(r.avg_f1);
    if (show_max) jr["max_f1"] = interval_json(r.max_f1);
    if (show_avg) jr["trial_avg_f1"] = r.trial_avg_f1;
    if (show_max) jr["trial_max_f1"] = r.trial_max_f1;
    if (r.bias) {
      ordered_json b;
      b["pairs"] = r.bias->pairs;
      b["median_selected_shorter"] = r.bias->selected_shorter;
      b["median_selected_shorter_fraction"] = r.bias->selected_shorter_fraction;
      b["mean_share_of_short"] = r.bias->mean_share_of_short;
      jr["segment_length_bias"] = b;
    }
    jr["videos"] = ordered_json::array();
    for (const auto& v : r.videos) {
      ordered_json jv;
      jv["video_id"] = v.video_id;
      jv["n_frames"] = v.n_frames;
      jv["budget_frames"] = v.budget_frames;
      if (show_avg) jv["mean_avg_f1"] = v.mean_avg_f1;
      if (show_max) jv["mean_max_f1"] = v.mean_max_f1;
      if (show_avg) jv["avg_f1"] = v.avg_f1;
      if (show_max) jv["max_f1"] = v.max_f1;
      if (!v.share_of_short.empty()) {
        jv["share_of_short"] = v.share_of_short;
        jv["median_selected_shorter"] = v.selected_shorter;
      }
      jr["videos"].push_back(std::move(jv));
    }
    doc["reports"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::string report_to_csv(std::span<const ExperimentReport> reports) {
  std::ostringstream os;
  os << "method,segmenter,pooling,budget,avg_f1,avg_f1_ci95,max_f1,max_f1_ci95\n";
  for (const auto& r : reports) {
    const bool show_avg = r.config.aggregation != Aggregation::kMax;
    const bool show_max = r.config.aggregation != Aggregation::kAvg;
    os << r.method << ',' << r.segmenter << ',' << to_string(r.config.pooling) << ','
       << fmt_number(r.config.budget_fraction) << ',';
    if (show_avg) os << fmt_number(r.avg_f1.mean) << ',' << fmt_number(r.avg_f1.half_width);
    else os << ',';
    os << ',';
    if (show_max) os << fmt_number(r.max_f1.mean) << ',' << fmt_number(r.max_f1.half_width);
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string rank_report_to_json(std::span<const RankEvalReport> reports) {
  ordered_json doc;
  doc["tool"] = "vsumeval";
  doc["version"] = kVersion;
  doc["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json jr;
    jr["method"] = r.method;
    jr["trials"] = r.trials;
    jr["seed"] = r.master_seed;
    jr["tau"] = r.tau;
    jr["rho"] = r.rho;
    jr["degenerate_pairs"] = r.degenerate_pairs;
    if (!r.trial_tau.empty()) {
      jr["trial_tau"] = r.trial_tau;
      jr["trial_rho"] = r.trial_rho;
    }
    jr["videos"] = ordered_json::array();
    for (const auto& row : r.per_video) {
      ordered_json jv;
      jv["video_id"] = row.video_id;
      jv["tau"] = row.correlation.tau;
      jv["rho"] = row.correlation.rho;
      jv["degenerate_pairs"] = row.correlation.degenerate_pairs;
      jr["videos"].push_back(std::move(jv));
    }
    doc["reports"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::string rank_report_to_csv(std::span<const RankEvalReport> reports) {
  std::ostringstream os;
  os << "method,tau,rho\n";
  for (const auto& r : reports) os << r.method << ',' << fmt_number(r.tau) << ',' << fmt_number(r.rho) << '\n';
  return os.str();
}

}  // namespace vsumeval
