#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "vsumeval/curves.hpp"
#include "vsumeval/ingest.hpp"
#include "vsumeval/random.hpp"

using namespace vsumeval;

namespace {

FrameScores fs(std::vector<double> v) { return {"v", std::move(v)}; }

void check_close(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-12) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("mean reference scores") {
  AnnotationSet one{"v", {fs({1, 2, 3})}};
  CHECK(mean_reference_scores(one).values == std::vector<double>{1, 2, 3});
  AnnotationSet flat{"v", {fs({1, 1, 1}), fs({5, 5, 5})}};
  CHECK(mean_reference_scores(flat).values == std::vector<double>{3, 3, 3});
  AnnotationSet mirror{"v", {fs({1, 5}), fs({5, 1})}};
  CHECK(mean_reference_scores(mirror).values == std::vector<double>{3, 3});
}

TEST_CASE("accumulate curve") {
  const auto c = accumulate_curve(fs({0.3, 0.1, 0.9, 0.5}), fs({2, 2, 2, 2}), "m");
  check_close(c.points, {0.25, 0.5, 0.75, 1.0});
  CHECK(c.points.back() == 1.0);

  const auto ref = fs({0.1, 0.7, 0.4, 0.2, 0.9});
  const auto b = curve_bounds(ref);
  check_close(accumulate_curve(ref, ref, "up").points, b.upper.points);
  auto neg = ref;
  for (auto& x : neg.values) x = -x;
  check_close(accumulate_curve(neg, ref, "low").points, b.lower.points);
  CHECK_THROWS(accumulate_curve(fs({1, 2}), fs({0, 0}), "zero"));
  CHECK_THROWS(accumulate_curve(fs({1, 2, 3}), fs({1, 1}), "len"));
}

TEST_CASE("curve bounds") {
  const auto flat = curve_bounds(fs({1, 1, 1, 1}));
  check_close(flat.upper.points, {0.25, 0.5, 0.75, 1.0});
  check_close(flat.lower.points, flat.upper.points);
  const auto hot = curve_bounds(fs({0, 0, 1, 0}));
  CHECK(hot.upper.points == std::vector<double>{1, 1, 1, 1});
  CHECK(hot.lower.points == std::vector<double>{0, 0, 0, 1});
  RandomEngine rng(1);
  std::vector<double> r(50);
  for (auto& x : r) x = uniform01(rng);
  const auto b = curve_bounds(fs(r));
  for (std::size_t i = 0; i < 50; ++i) CHECK(b.upper.points[i] >= b.lower.points[i]);
}

TEST_CASE("random baseline") {
  check_close(random_baseline(4).points, {0.25, 0.5, 0.75, 1.0});
  CHECK(random_baseline(1).points == std::vector<double>{1.0});

  RandomEngine rng(12);
  std::vector<double> ref(40);
  for (auto& x : ref) x = uniform01(rng) * 5;
  std::vector<double> mean(40, 0.0);
  const int reps = 10000;
  for (int t = 0; t < reps; ++t) {
    std::vector<double> pred(40);
    for (auto& x : pred) x = uniform01(rng);
    const auto c = accumulate_curve(fs(pred), fs(ref), "r");
    for (std::size_t i = 0; i < 40; ++i) mean[i] += c.points[i] / reps;
  }
  const auto base = random_baseline(40);
  for (std::size_t i = 0; i < 40; ++i) CHECK(std::abs(mean[i] - base.points[i]) < 0.01);
}

TEST_CASE("annotator curves") {
  AnnotationSet same{"v", {fs({1, 4, 2, 5}), fs({1, 4, 2, 5}), fs({1, 4, 2, 5})}};
  const auto up = curve_bounds(mean_reference_scores(same)).upper;
  for (const auto& c : annotator_curves(same)) check_close(c.points, up.points);

  AnnotationSet anti{"v", {fs({1, 2, 3, 4, 5}), fs({5, 4, 3, 2, 1})}};
  const auto curves = annotator_curves(anti);
  REQUIRE(curves.size() == 2);
  check_close(curves[0].points, curve_bounds(anti.annotators[1]).lower.points);
  check_close(curves[1].points, curve_bounds(anti.annotators[0]).lower.points);
  CHECK(curves[0].label == "annotator_0");

  SynthConfig cfg;
  cfg.n_videos = 1;
  cfg.outlier_fraction = 0.2;
  cfg.seed = 3;
  const auto out = synth_dataset_with_truth(cfg);
  const auto& ann = out.bundle.annotations.begin()->second;
  const auto all = annotator_curves(ann);
  const auto base = random_baseline(ann.n_frames());
  for (auto o : out.outlier_annotators) {
    bool below = false;
    for (std::size_t i = 0; i < base.points.size(); ++i) below |= all[o].points[i] < base.points[i];
    CHECK(below);
  }
  for (const auto& c : all) CHECK(validate_curve(c).empty());
}

TEST_CASE("curve invariants on random inputs") {
  RandomEngine rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + uniform_below(rng, 100);
    std::vector<double> pred(n), ref(n);
    for (auto& x : pred) x = static_cast<double>(uniform_below(rng, 4));
    for (auto& x : ref) x = uniform01(rng);
    ref[0] += 0.1;
    const auto c = accumulate_curve(fs(pred), fs(ref), "c");
    CHECK(validate_curve(c).empty());
    const auto b = curve_bounds(fs(ref));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(c.points[i] <= b.upper.points[i] + 1e-12);
      CHECK(c.points[i] >= b.lower.points[i] - 1e-12);
    }
  }
  CorrelationCurve bad{"v", "x", {0.5, 0.4, 1.0}};
  CHECK_FALSE(validate_curve(bad).empty());
}

TEST_CASE("render and emit") {
  const auto ref = fs({1, 2, 3});
  std::vector<CorrelationCurve> curves{accumulate_curve(fs({3, 1, 2}), ref, "method")};
  const auto b = curve_bounds(ref);
  const auto base = random_baseline(3);
  const auto csv = render_curves(curves, b, base, CurveFormat::kCsv);
  CHECK(csv.rfind("i,method,upper,lower,baseline\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv == render_curves(curves, b, base, CurveFormat::kCsv));

  const auto svg = render_curves(curves, b, base, CurveFormat::kSvg);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_of(svg, "class=\"curve\"") == 1);

  const auto dir = std::filesystem::temp_directory_path() / "vsumeval_curves_test";
  std::filesystem::create_directories(dir);
  emit_curves(curves, b, base, dir / "a.svg", CurveFormat::kSvg);
  emit_curves(curves, b, base, dir / "b.svg", CurveFormat::kSvg);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
  CHECK(slurp(dir / "a.svg") == svg);
  std::filesystem::remove_all(dir);

  std::vector<CorrelationCurve> mismatched{random_baseline(5)};
  CHECK_THROWS(render_curves(mismatched, b, base, CurveFormat::kCsv));
  CHECK(curve_format_from_string("svg") == CurveFormat::kSvg);
  CHECK_THROWS(curve_format_from_string("png"));
}
