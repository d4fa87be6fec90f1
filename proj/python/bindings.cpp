#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "vsumeval/curves.hpp"
#include "vsumeval/harness.hpp"

namespace py = pybind11;
using namespace vsumeval;

namespace {

using Boundaries = std::vector<std::size_t>;

VideoRecord video_of(std::size_t n_frames) { return {"v", n_frames, 30.0}; }

Segmentation seg_of(const Boundaries& b) {
  Segmentation s{"v", b};
  if (b.empty()) throw DataError("empty boundary list");
  const auto problems = validate_segmentation(s, video_of(b.back()));
  if (!problems.empty()) throw DataError("invalid segmentation: " + problems.front());
  return s;
}

FeatureMatrix features_of(const std::vector<std::vector<double>>& rows) {
  FeatureMatrix f;
  f.rows = rows.size();
  f.dim = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != f.dim) throw DataError("feature rows have different widths");
    f.data.insert(f.data.end(), r.begin(), r.end());
  }
  return f;
}

KtsSpec kts_spec(double penalty_c, std::size_t max_segments, std::size_t min_seg_len) {
  return KtsSpec{penalty_c, max_segments, min_seg_len};
}

SegmenterSpec segmenter_spec(const std::string& method, const py::kwargs& kw) {
  auto get = [&](const char* key, auto fallback) {
    return kw.contains(key) ? kw[key].cast<decltype(fallback)>() : fallback;
  };
  const KtsSpec kts{get("penalty_c", 1.0), get("max_segments", std::size_t{50}), get("min_seg_len", std::size_t{1})};
  SegmenterSpec s;
  if (method == "uniform") s = UniformSpec{get("len_frames", std::size_t{60})};
  else if (method == "one-peak") s = OnePeakSpec{get("lam", 60.0)};
  else if (method == "two-peak") s = TwoPeakSpec{get("lambda_short", 30.0), get("lambda_long", 90.0), get("p_short", 0.5)};
  else if (method == "kts") s = kts;
  else if (method == "randomized-kts") s = RandomizedKtsSpec{kts};
  else throw std::invalid_argument("unknown segmentation method '" + method + "'");
  validate_segmenter(s);
  return s;
}

SegmentScores segment_scores(const Boundaries& b, const std::vector<double>& values) {
  SegmentScores s{"v", seg_of(b), values, Pooling::kMean};
  return s;
}

Predictions predictions_of(const DatasetBundle& bundle, const std::optional<std::map<std::string, std::vector<double>>>& p) {
  Predictions out;
  if (!p) return out;
  for (const auto& [id, values] : *p) {
    const auto& v = bundle.video(id);
    if (values.size() != v.n_frames) throw DataError("prediction length mismatch for '" + id + "'");
    out.emplace(id, FrameScores{id, values});
  }
  for (const auto& v : bundle.videos)
    if (!out.count(v.video_id)) throw DataError("predictions missing for video '" + v.video_id + "'");
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Video-summarization evaluation core";
  m.attr("__version__") = kVersion;
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  // Segmentation.
  m.def("segment_uniform", [](std::size_t n, std::size_t len) { return segment_uniform(video_of(n), len).boundaries; },
        py::arg("n_frames"), py::arg("len_frames") = 60);
  m.def(
      "segment_one_peak",
      [](std::size_t n, double lam, std::uint64_t seed) {
        RandomEngine rng(seed);
        return segment_one_peak(video_of(n), lam, rng).boundaries;
      },
      py::arg("n_frames"), py::arg("lam") = 60.0, py::arg("seed") = 0);
  m.def(
      "segment_two_peak",
      [](std::size_t n, double ls, double ll, double p, std::uint64_t seed) {
        RandomEngine rng(seed);
        return segment_two_peak(video_of(n), ls, ll, p, rng).boundaries;
      },
      py::arg("n_frames"), py::arg("lambda_short") = 30.0, py::arg("lambda_long") = 90.0, py::arg("p_short") = 0.5,
      py::arg("seed") = 0);
  m.def(
      "segment_kts",
      [](const std::vector<std::vector<double>>& rows, double c, std::size_t max_m, std::size_t min_len) {
        const auto f = features_of(rows);
        return segment_kts(video_of(f.rows), f, kts_spec(c, max_m, min_len)).boundaries;
      },
      py::arg("features"), py::arg("penalty_c") = 1.0, py::arg("max_segments") = 50, py::arg("min_seg_len") = 1);
  m.def(
      "randomize_kts",
      [](const Boundaries& b, std::uint64_t seed) {
        RandomEngine rng(seed);
        return randomize_kts(seg_of(b), rng).boundaries;
      },
      py::arg("boundaries"), py::arg("seed") = 0);

  // Selection.
  m.def(
      "pool_scores",
      [](const std::vector<double>& scores, const Boundaries& b, const std::string& pooling) {
        return pool_scores(FrameScores{"v", scores}, seg_of(b), pooling_from_string(pooling)).values;
      },
      py::arg("scores"), py::arg("boundaries"), py::arg("pooling") = "mean");
  m.def(
      "knapsack_select",
      [](const Boundaries& b, const std::vector<double>& values, std::size_t budget) {
        return knapsack_select_indices(segment_scores(b, values), budget);
      },
      py::arg("boundaries"), py::arg("values"), py::arg("budget_frames"));
  m.def(
      "brute_force_select",
      [](const Boundaries& b, const std::vector<double>& values, std::size_t budget) {
        return brute_force_select_indices(segment_scores(b, values), budget);
      },
      py::arg("boundaries"), py::arg("values"), py::arg("budget_frames"));
  m.def(
      "mask_from_segments",
      [](const Boundaries& b, const std::vector<std::size_t>& selected) { return mask_from_segments(seg_of(b), selected).mask; },
      py::arg("boundaries"), py::arg("selected"));

  // Metrics.
  m.def(
      "f1_score",
      [](const std::vector<std::uint8_t>& gen, const std::vector<std::uint8_t>& ref) {
        const auto r = f1_score(SummaryMask{"v", gen}, SummaryMask{"v", ref});
        return py::make_tuple(r.precision, r.recall, r.f1);
      },
      py::arg("generated"), py::arg("reference"), "Returns (precision, recall, f1).");
  m.def("kendall_tau_b", [](const std::vector<double>& x, const std::vector<double>& y) { return kendall_tau_b(x, y); },
        py::arg("x"), py::arg("y"));
  m.def("spearman_rho", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman_rho(x, y); },
        py::arg("x"), py::arg("y"));
  m.def("confidence_interval",
        [](const std::vector<double>& s) {
          const auto i = confidence_interval(s);
          return py::make_tuple(i.mean, i.half_width);
        },
        py::arg("samples"), "Returns (mean, 95% half width).");

  // Curves.
  m.def(
      "accumulate_curve",
      [](const std::vector<double>& pred, const std::vector<double>& ref) {
        return accumulate_curve(FrameScores{"v", pred}, FrameScores{"v", ref}, "curve").points;
      },
      py::arg("pred"), py::arg("ref_mean"));
  m.def(
      "curve_bounds",
      [](const std::vector<double>& ref) {
        const auto b = curve_bounds(FrameScores{"v", ref});
        return py::make_tuple(b.upper.points, b.lower.points);
      },
      py::arg("ref_mean"), "Returns (upper, lower).");
  m.def("random_baseline", [](std::size_t n) { return random_baseline(n).points; }, py::arg("n"));

  // Datasets.
  py::class_<DatasetBundle>(m, "DatasetBundle")
      .def_property_readonly("video_ids",
                             [](const DatasetBundle& b) {
                               std::vector<std::string> ids;
                               for (const auto& v : b.videos) ids.push_back(v.video_id);
                               return ids;
                             })
      .def("n_frames", [](const DatasetBundle& b, const std::string& id) { return b.video(id).n_frames; })
      .def("fps", [](const DatasetBundle& b, const std::string& id) { return b.video(id).fps; })
      .def("annotations",
           [](const DatasetBundle& b, const std::string& id) {
             std::vector<std::vector<double>> out;
             auto it = b.annotations.find(id);
             if (it != b.annotations.end())
               for (const auto& a : it->second.annotators) out.push_back(a.values);
             return out;
           })
      .def("has_features", [](const DatasetBundle& b, const std::string& id) { return b.features.count(id) > 0; })
      .def("to_json", &dump_json_dataset)
      .def("__len__", [](const DatasetBundle& b) { return b.videos.size(); });

  m.def("load_json_dataset", &load_json_dataset, py::arg("path"));
  m.def("parse_json_dataset", &parse_json_dataset, py::arg("text"));
  m.def(
      "load_tvsum_tsv",
      [](const std::filesystem::path& tsv, const std::optional<std::filesystem::path>& meta) {
        return meta ? load_tvsum_tsv(tsv, *meta) : load_tvsum_tsv(tsv);
      },
      py::arg("tsv_path"), py::arg("videos_json") = py::none());
  m.def(
      "synth_dataset", [](const std::string& config_json) { return synth_dataset(parse_synth_config(config_json)); },
      py::arg("config_json") = "{}", "Synthetic dataset from a JSON config (unspecified fields take defaults).");

  // Experiments. Reports come back as JSON text.
  m.def(
      "run_randomization_test",
      [](const DatasetBundle& bundle, const std::string& segmenter, const std::vector<double>& budgets,
         std::size_t trials, std::uint64_t seed, const std::string& pooling, const std::string& mode,
         const std::optional<std::map<std::string, std::vector<double>>>& predictions, bool human_loo,
         std::size_t jobs, const py::kwargs& kw) {
        ExperimentConfig cfg;
        cfg.segmenter = segmenter_spec(segmenter, kw);
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.pooling = pooling_from_string(pooling);
        cfg.mode = eval_mode_from_string(mode);
        cfg.jobs = jobs;
        const auto preds = predictions_of(bundle, predictions);
        if (predictions) cfg.scorer.kind = ScorerKind::kFromFile;
        py::gil_scoped_release release;
        auto reports = run_budget_sweep(bundle, cfg, budgets, predictions ? &preds : nullptr);
        if (human_loo) {
          for (double f : budgets) {
            cfg.budget_fraction = f;
            reports.push_back(run_human_loo(bundle, cfg));
          }
        }
        return report_to_json(reports);
      },
      py::arg("bundle"), py::arg("segmenter") = "two-peak", py::arg("budgets") = std::vector<double>{0.15},
      py::arg("trials") = 100, py::arg("seed") = 0, py::arg("pooling") = "mean", py::arg("mode") = "auto",
      py::arg("predictions") = py::none(), py::arg("human_loo") = false, py::arg("jobs") = 1);
  m.def(
      "run_rank_eval",
      [](const DatasetBundle& bundle, const std::string& mode,
         const std::optional<std::map<std::string, std::vector<double>>>& predictions, std::size_t trials,
         std::uint64_t seed, std::size_t jobs) {
        RankMode rm;
        if (mode == "random") rm = RankMode::kRandom;
        else if (mode == "loo") rm = RankMode::kLeaveOneOut;
        else if (mode == "predictions") rm = RankMode::kPredictions;
        else throw std::invalid_argument("mode must be random, loo or predictions");
        if (rm == RankMode::kPredictions && !predictions) throw std::invalid_argument("predictions mode needs predictions");
        const auto preds = predictions_of(bundle, predictions);
        py::gil_scoped_release release;
        const std::vector<RankEvalReport> reports{run_rank_eval(bundle, rm, &preds, trials, seed, jobs)};
        return rank_report_to_json(reports);
      },
      py::arg("bundle"), py::arg("mode") = "loo", py::arg("predictions") = py::none(), py::arg("trials") = 100,
      py::arg("seed") = 0, py::arg("jobs") = 1);
}
