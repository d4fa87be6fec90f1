// vsumeval: command-line front end for the summary-evaluation toolkit.
//
// Exit codes: 0 success, 2 usage or data error, 1 internal failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsumeval/curves.hpp"
#include "vsumeval/harness.hpp"
#include "vsumeval/ingest.hpp"
#include "vsumeval/segmentation.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace vsumeval;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitData = 2;
constexpr const char* kDataRootEnv = "VSUMEVAL_DATA_ROOT";

struct DatasetArgs {
  std::string dataset;
  std::string meta;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("--dataset", args.dataset,
                  std::string("Dataset: neutral JSON, or TVSum-style .tsv (relative paths fall back to $") +
                      kDataRootEnv + ")")
      ->required();
  cmd->add_option("--meta", args.meta, "videos.json sidecar for a .tsv dataset (default: next to the TSV)");
}

fs::path resolve_input(const std::string& raw) {
  fs::path p(raw);
  if (p.is_relative() && !fs::exists(p)) {
    if (const char* root = std::getenv(kDataRootEnv); root && *root) {
      const fs::path candidate = fs::path(root) / p;
      if (fs::exists(candidate)) return candidate;
    }
  }
  return p;
}

DatasetBundle load_dataset(const DatasetArgs& args) {
  const fs::path path = resolve_input(args.dataset);
  if (!fs::exists(path)) throw DataError("dataset not found: " + path.string());
  if (path.extension() == ".tsv") {
    return args.meta.empty() ? load_tvsum_tsv(path) : load_tvsum_tsv(path, resolve_input(args.meta));
  }
  return load_json_dataset(path);
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void echo(const ordered_json& config) { std::cout << config.dump() << std::endl; }

struct SegmenterArgs {
  std::string method = "two-peak";
  std::size_t len_frames = 60;
  double lambda = 60.0;
  double lambda_short = 30.0;
  double lambda_long = 90.0;
  double p_short = 0.5;
  double kts_penalty = 1.0;
  std::size_t kts_max_segments = 50;
  std::size_t kts_min_seg_len = 1;

  ordered_json echo() const {
    ordered_json j;
    j["method"] = method;
    if (method == "uniform") {
      j["len_frames"] = len_frames;
    } else if (method == "one-peak") {
      j["lambda"] = lambda;
    } else if (method == "two-peak") {
      j["lambda_short"] = lambda_short;
      j["lambda_long"] = lambda_long;
      j["p_short"] = p_short;
    } else {
      j["penalty_c"] = kts_penalty;
      j["max_segments"] = kts_max_segments;
      j["min_seg_len"] = kts_min_seg_len;
    }
    return j;
  }

  SegmenterSpec spec() const {
    KtsSpec kts{kts_penalty, kts_max_segments, kts_min_seg_len};
    SegmenterSpec s;
    if (method == "uniform") s = UniformSpec{len_frames};
    else if (method == "one-peak") s = OnePeakSpec{lambda};
    else if (method == "two-peak") s = TwoPeakSpec{lambda_short, lambda_long, p_short};
    else if (method == "kts") s = kts;
    else if (method == "randomized-kts") s = RandomizedKtsSpec{kts};
    else throw std::invalid_argument("unknown segmentation method '" + method + "'");
    validate_segmenter(s);
    return s;
  }
};

void add_segmenter_options(CLI::App* cmd, SegmenterArgs& a, const std::string& method_flag) {
  cmd->add_option(method_flag, a.method, "Segmentation method")
      ->check(CLI::IsMember({"uniform", "one-peak", "two-peak", "kts", "randomized-kts"}))
      ->capture_default_str();
  cmd->add_option("--len-frames", a.len_frames, "Uniform segment length in frames")->capture_default_str();
  cmd->add_option("--lambda", a.lambda, "One-peak Poisson rate")->capture_default_str();
  cmd->add_option("--lambda-short", a.lambda_short, "Two-peak short Poisson rate")->capture_default_str();
  cmd->add_option("--lambda-long", a.lambda_long, "Two-peak long Poisson rate")->capture_default_str();
  cmd->add_option("--p-short", a.p_short, "Two-peak probability of the short component")->capture_default_str();
  cmd->add_option("--kts-penalty", a.kts_penalty, "KTS penalty constant")->capture_default_str();
  cmd->add_option("--kts-max-segments", a.kts_max_segments, "KTS maximum segment count")->capture_default_str();
  cmd->add_option("--kts-min-seg-len", a.kts_min_seg_len, "KTS minimum segment length")->capture_default_str();
}

// segment ---------------------------------------------------------------------

struct SegmentCmd {
  DatasetArgs data;
  SegmenterArgs seg;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t jobs = 1;
};

int run_segment(const SegmentCmd& c) {
  const auto spec = c.seg.spec();
  const auto bundle = load_dataset(c.data);
  if (segmenter_needs_features(spec)) {
    std::string missing;
    for (const auto& v : bundle.videos) {
      if (!bundle.features.count(v.video_id)) missing += (missing.empty() ? "" : ", ") + v.video_id;
    }
    if (!missing.empty()) throw DataError("method " + c.seg.method + " needs per-frame features; missing for: " + missing);
  }

  ordered_json config;
  config["command"] = "segment";
  config["dataset"] = c.data.dataset;
  config["segmenter"] = c.seg.echo();
  config["seed"] = c.seed;
  echo(config);

  std::vector<Segmentation> segs(bundle.videos.size());
  parallel_for(bundle.videos.size(), c.jobs, [&](std::size_t i) {
    const auto& v = bundle.videos[i];
    // Trial 0 of the harness uses the same seed, so `segment` shows exactly
    // what `randtest` evaluates first.
    RandomEngine rng(derive_seed(c.seed, 0, v.video_id));
    if (const auto* u = std::get_if<UniformSpec>(&spec)) {
      segs[i] = segment_uniform(v, u->len_frames);
    } else if (const auto* o = std::get_if<OnePeakSpec>(&spec)) {
      segs[i] = segment_one_peak(v, o->lambda, rng);
    } else if (const auto* t = std::get_if<TwoPeakSpec>(&spec)) {
      segs[i] = segment_two_peak(v, t->lambda_short, t->lambda_long, t->p_short, rng);
    } else if (const auto* k = std::get_if<KtsSpec>(&spec)) {
      segs[i] = segment_kts(v, bundle.features.at(v.video_id), *k);
    } else if (const auto* r = std::get_if<RandomizedKtsSpec>(&spec)) {
      segs[i] = randomize_kts(segment_kts(v, bundle.features.at(v.video_id), r->base), rng);
    }
  });

  ordered_json doc;
  doc["tool"] = "vsumeval";
  doc["version"] = kVersion;
  doc["config"] = config;
  doc["segmentations"] = ordered_json::object();
  for (const auto& s : segs) doc["segmentations"][s.video_id] = s.boundaries;
  write_text(c.out, doc.dump() + "\n");
  return kExitOk;
}

// randtest --------------------------------------------------------------------

struct RandtestCmd {
  DatasetArgs data;
  SegmenterArgs seg;
  std::string scorer = "random";
  std::string pred;
  std::size_t annotator = 0;
  std::string pooling = "mean";
  std::vector<double> budgets{0.15};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string aggregation = "both";
  std::string mode = "auto";
  std::string ci = "normal";
  bool human_loo = false;
  std::string out;
  std::string csv;
  std::size_t jobs = 1;
};

int run_randtest(const RandtestCmd& c) {
  ExperimentConfig cfg;
  cfg.segmenter = c.seg.spec();
  if (c.scorer == "random") cfg.scorer.kind = ScorerKind::kRandom;
  else if (c.scorer == "file") cfg.scorer = ScorerSpec{ScorerKind::kFromFile, resolve_input(c.pred).string(), 0};
  else cfg.scorer = ScorerSpec{ScorerKind::kHumanAnnotator, "", c.annotator};
  if (cfg.scorer.kind == ScorerKind::kFromFile && c.pred.empty()) throw DataError("--scorer file needs --pred");
  cfg.pooling = pooling_from_string(c.pooling);
  cfg.trials = c.trials;
  cfg.master_seed = c.seed;
  cfg.aggregation = aggregation_from_string(c.aggregation);
  cfg.mode = eval_mode_from_string(c.mode);
  cfg.ci_method = ci_method_from_string(c.ci);
  cfg.jobs = c.jobs;
  cfg.budget_fraction = c.budgets.front();
  validate_config(cfg);
  for (double b : c.budgets) {
    if (!(b > 0.0 && b <= 1.0)) throw std::invalid_argument("budget fractions must be in (0, 1]");
  }

  const auto bundle = load_dataset(c.data);
  ordered_json echo_doc;
  echo_doc["command"] = "randtest";
  echo_doc["dataset"] = c.data.dataset;
  echo_doc["segmenter"] = c.seg.echo();
  echo_doc["scorer"] = c.scorer;
  echo_doc["pooling"] = c.pooling;
  echo_doc["budgets"] = c.budgets;
  echo_doc["trials"] = c.trials;
  echo_doc["seed"] = c.seed;
  echo(echo_doc);

  std::optional<Predictions> preds;
  if (cfg.scorer.kind == ScorerKind::kFromFile) preds = load_prediction_scores(cfg.scorer.path, bundle);
  auto reports = run_budget_sweep(bundle, cfg, c.budgets, preds ? &*preds : nullptr);
  if (c.human_loo) {
    for (double b : c.budgets) {
      auto h = cfg;
      h.budget_fraction = b;
      reports.push_back(run_human_loo(bundle, h));
    }
  }

  fs::path json_path(c.out);
  fs::path csv_path = c.csv.empty() ? fs::path(json_path).replace_extension(".csv") : fs::path(c.csv);
  write_text(json_path, report_to_json(reports));
  write_text(csv_path, report_to_csv(reports));
  std::cout << report_to_csv(reports);
  return kExitOk;
}

// rankeval --------------------------------------------------------------------

struct RankevalCmd {
  DatasetArgs data;
  std::vector<std::string> pred;
  bool random = false;
  bool loo = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::string json_out;
  std::size_t jobs = 1;
};

int run_rankeval(const RankevalCmd& c) {
  if (c.pred.empty() && !c.random && !c.loo) throw std::invalid_argument("rankeval needs --pred, --random or --loo");
  const auto bundle = load_dataset(c.data);
  ordered_json echo_doc;
  echo_doc["command"] = "rankeval";
  echo_doc["dataset"] = c.data.dataset;
  echo_doc["pred"] = c.pred;
  echo_doc["random"] = c.random;
  echo_doc["loo"] = c.loo;
  echo_doc["trials"] = c.trials;
  echo_doc["seed"] = c.seed;
  echo(echo_doc);

  std::vector<RankEvalReport> reports;
  for (const auto& p : c.pred) {
    const auto path = resolve_input(p);
    const auto preds = load_prediction_scores(path, bundle);
    reports.push_back(run_rank_eval(bundle, RankMode::kPredictions, &preds, 1, c.seed, c.jobs, path.stem().string()));
  }
  if (c.random) reports.push_back(run_rank_eval(bundle, RankMode::kRandom, nullptr, c.trials, c.seed, c.jobs));
  if (c.loo) reports.push_back(run_rank_eval(bundle, RankMode::kLeaveOneOut, nullptr, 1, c.seed, c.jobs));

  const fs::path csv_path(c.out);
  const fs::path json_path = c.json_out.empty() ? fs::path(csv_path).replace_extension(".json") : fs::path(c.json_out);
  write_text(csv_path, rank_report_to_csv(reports));
  write_text(json_path, rank_report_to_json(reports));
  std::cout << rank_report_to_csv(reports);
  return kExitOk;
}

// curve -----------------------------------------------------------------------

struct CurveCmd {
  DatasetArgs data;
  std::vector<std::string> pred;
  std::string video;
  std::string out;
  std::string format = "csv";
  bool no_annotators = false;
};

int run_curve(const CurveCmd& c) {
  const auto format = curve_format_from_string(c.format);
  const auto bundle = load_dataset(c.data);
  std::vector<std::pair<std::string, Predictions>> preds;
  for (const auto& p : c.pred) {
    const auto path = resolve_input(p);
    preds.emplace_back(path.stem().string(), load_prediction_scores(path, bundle));
  }
  std::vector<std::string> ids;
  if (!c.video.empty()) {
    bundle.video(c.video);
    ids.push_back(c.video);
  } else {
    for (const auto& v : bundle.videos) ids.push_back(v.video_id);
  }

  ordered_json echo_doc;
  echo_doc["command"] = "curve";
  echo_doc["dataset"] = c.data.dataset;
  echo_doc["pred"] = c.pred;
  echo_doc["videos"] = ids;
  echo_doc["format"] = c.format;
  echo(echo_doc);

  const std::string ext = format == CurveFormat::kCsv ? ".csv" : ".svg";
  for (const auto& id : ids) {
    auto it = bundle.annotations.find(id);
    if (it == bundle.annotations.end()) throw DataError("video '" + id + "' has no annotations");
    const auto& ann = it->second;
    const auto ref_mean = mean_reference_scores(ann);
    std::vector<CorrelationCurve> curves;
    for (const auto& [label, p] : preds) curves.push_back(accumulate_curve(p.at(id), ref_mean, label));
    if (!c.no_annotators && ann.annotator_count() >= 2) {
      for (auto& a : annotator_curves(ann)) curves.push_back(std::move(a));
    }
    auto baseline = random_baseline(ref_mean.size());
    baseline.video_id = id;
    const fs::path path = c.video.empty() ? fs::path(c.out) / (id + ext) : fs::path(c.out);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    emit_curves(curves, curve_bounds(ref_mean), baseline, path, format);
  }
  return kExitOk;
}

// synth -----------------------------------------------------------------------

struct SynthCmd {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

int run_synth(const SynthCmd& c) {
  std::ifstream in(resolve_input(c.config), std::ios::binary);
  if (!in) throw DataError("cannot open synth config " + c.config);
  std::stringstream ss;
  ss << in.rdbuf();
  auto cfg = parse_synth_config(ss.str());
  if (c.seed) cfg.seed = *c.seed;
  ordered_json echo_doc;
  echo_doc["command"] = "synth";
  echo_doc["config"] = ordered_json::parse(dump_synth_config(cfg));
  echo(echo_doc);
  write_text(c.out, dump_json_dataset(synth_dataset(cfg)));
  return kExitOk;
}

// validate --------------------------------------------------------------------

struct ValidateCmd {
  DatasetArgs data;
  std::vector<std::string> pred;
};

int run_validate(const ValidateCmd& c) {
  // Loaders validate fully and throw DataError with every violation listed.
  const auto bundle = load_dataset(c.data);
  for (const auto& p : c.pred) load_prediction_scores(resolve_input(p), bundle);
  std::size_t annotated = bundle.annotations.size();
  std::size_t masked = bundle.reference_masks.size();
  std::size_t featured = bundle.features.size();
  ordered_json summary;
  summary["command"] = "validate";
  summary["dataset"] = c.data.dataset;
  summary["valid"] = true;
  summary["videos"] = bundle.videos.size();
  summary["annotated_videos"] = annotated;
  summary["videos_with_reference_masks"] = masked;
  summary["videos_with_features"] = featured;
  summary["prediction_files"] = c.pred.size();
  echo(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vsumeval: reference-based video summary evaluation and randomization tests"};
  app.set_version_flag("--version", std::string("vsumeval ") + kVersion);
  app.require_subcommand(1);

  SegmentCmd seg_cmd;
  auto* seg = app.add_subcommand("segment", "Segment every video and write boundaries as JSON");
  add_dataset_options(seg, seg_cmd.data);
  add_segmenter_options(seg, seg_cmd.seg, "--method");
  seg->add_option("--seed", seg_cmd.seed, "Master seed")->capture_default_str();
  seg->add_option("--out", seg_cmd.out, "Output JSON path")->required();
  seg->add_option("--jobs", seg_cmd.jobs, "Worker threads")->capture_default_str();

  RandtestCmd rt_cmd;
  auto* rt = app.add_subcommand("randtest", "Randomization test: F1 of random/file/annotator summaries");
  add_dataset_options(rt, rt_cmd.data);
  add_segmenter_options(rt, rt_cmd.seg, "--segmenter");
  rt->add_option("--scorer", rt_cmd.scorer, "Importance scorer")
      ->check(CLI::IsMember({"random", "file", "human"}))
      ->capture_default_str();
  rt->add_option("--pred", rt_cmd.pred, "Prediction scores JSON (for --scorer file)");
  rt->add_option("--annotator", rt_cmd.annotator, "Annotator index (for --scorer human)")->capture_default_str();
  rt->add_option("--pooling", rt_cmd.pooling, "Segment pooling")
      ->check(CLI::IsMember({"mean", "sum"}))
      ->capture_default_str();
  rt->add_option("--budget", rt_cmd.budgets, "Budget fraction(s); several values run a sweep")
      ->expected(1, -1)
      ->capture_default_str();
  rt->add_option("--trials", rt_cmd.trials, "Trials")->capture_default_str();
  rt->add_option("--seed", rt_cmd.seed, "Master seed")->capture_default_str();
  rt->add_option("--aggregation", rt_cmd.aggregation, "Reported F1 aggregation")
      ->check(CLI::IsMember({"avg", "max", "both"}))
      ->capture_default_str();
  rt->add_option("--mode", rt_cmd.mode, "Reference protocol")
      ->check(CLI::IsMember({"auto", "tvsum", "summe"}))
      ->capture_default_str();
  rt->add_option("--ci", rt_cmd.ci, "Confidence interval method")
      ->check(CLI::IsMember({"normal", "bootstrap"}))
      ->capture_default_str();
  rt->add_flag("--human-loo", rt_cmd.human_loo, "Also report the human leave-one-out baseline");
  rt->add_option("--out", rt_cmd.out, "Report JSON path")->required();
  rt->add_option("--csv", rt_cmd.csv, "Table CSV path (default: --out with .csv extension)");
  rt->add_option("--jobs", rt_cmd.jobs, "Worker threads")->capture_default_str();

  RankevalCmd re_cmd;
  auto* re = app.add_subcommand("rankeval", "Kendall tau-b / Spearman rho against annotator scores");
  add_dataset_options(re, re_cmd.data);
  re->add_option("--pred", re_cmd.pred, "Prediction scores JSON (repeatable; one table row each)");
  re->add_flag("--random", re_cmd.random, "Uniform random scores averaged over --trials");
  re->add_flag("--loo", re_cmd.loo, "Human leave-one-out");
  re->add_option("--trials", re_cmd.trials, "Random-score trials")->capture_default_str();
  re->add_option("--seed", re_cmd.seed, "Master seed")->capture_default_str();
  re->add_option("--out", re_cmd.out, "Table CSV path")->required();
  re->add_option("--json", re_cmd.json_out, "Report JSON path (default: --out with .json extension)");
  re->add_option("--jobs", re_cmd.jobs, "Worker threads")->capture_default_str();

  CurveCmd cv_cmd;
  auto* cv = app.add_subcommand("curve", "Accumulated-score correlation curves");
  add_dataset_options(cv, cv_cmd.data);
  cv->add_option("--pred", cv_cmd.pred, "Prediction scores JSON (repeatable)");
  cv->add_option("--video", cv_cmd.video, "Single video id (--out is then a file path)");
  cv->add_option("--out", cv_cmd.out, "Output file (with --video) or directory")->required();
  cv->add_option("--format", cv_cmd.format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  cv->add_flag("--no-annotators", cv_cmd.no_annotators, "Omit leave-one-out annotator curves");

  SynthCmd sy_cmd;
  auto* sy = app.add_subcommand("synth", "Generate a synthetic annotated dataset");
  sy->add_option("--config", sy_cmd.config, "Synthetic dataset config JSON")->required();
  sy->add_option("--out", sy_cmd.out, "Output dataset JSON path")->required();
  sy->add_option("--seed", sy_cmd.seed, "Override the config seed");

  ValidateCmd va_cmd;
  auto* va = app.add_subcommand("validate", "Check a dataset (and optional prediction files)");
  add_dataset_options(va, va_cmd.data);
  va->add_option("--pred", va_cmd.pred, "Prediction scores JSON to check (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitData;
  }

  try {
    if (*seg) return run_segment(seg_cmd);
    if (*rt) return run_randtest(rt_cmd);
    if (*re) return run_rankeval(re_cmd);
    if (*cv) return run_curve(cv_cmd);
    if (*sy) return run_synth(sy_cmd);
    if (*va) return run_validate(va_cmd);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
