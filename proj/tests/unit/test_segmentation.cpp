#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "doctest.h"
#include "vsumeval/ingest.hpp"
#include "vsumeval/random.hpp"
#include "vsumeval/segmentation.hpp"

using namespace vsumeval;

namespace {

VideoRecord vid(std::size_t n) { return {"v", n, 30.0}; }

// Plain within-segment sum of squared deviations from the segment mean.
double direct_scatter(const FeatureMatrix& f, std::size_t a, std::size_t b) {
  double total = 0.0;
  for (std::size_t d = 0; d < f.dim; ++d) {
    double mean = 0.0;
    for (std::size_t i = a; i < b; ++i) mean += f.row(i)[d];
    mean /= static_cast<double>(b - a);
    for (std::size_t i = a; i < b; ++i) total += (f.row(i)[d] - mean) * (f.row(i)[d] - mean);
  }
  return total;
}

FeatureMatrix blocks(const std::vector<std::size_t>& lengths, std::size_t dim, RandomEngine& rng) {
  std::size_t n = 0;
  for (auto l : lengths) n += l;
  FeatureMatrix f{n, dim, std::vector<double>(n * dim)};
  std::size_t pos = 0;
  for (auto l : lengths) {
    std::vector<double> c(dim);
    for (auto& x : c) x = 3.0 * standard_normal(rng);
    for (std::size_t i = pos; i < pos + l; ++i)
      for (std::size_t d = 0; d < dim; ++d) f.data[i * dim + d] = c[d];
    pos += l;
  }
  return f;
}

std::vector<std::size_t> mean_lengths(const Segmentation& s) {
  auto l = s.lengths();
  l.pop_back();  // tail is truncated
  return l;
}

}  // namespace

TEST_CASE("uniform segmenter") {
  CHECK(segment_uniform(vid(180), 60).boundaries == std::vector<std::size_t>{0, 60, 120, 180});
  CHECK(segment_uniform(vid(150), 60).boundaries == std::vector<std::size_t>{0, 60, 120, 150});
  CHECK(segment_uniform(vid(30), 60).boundaries == std::vector<std::size_t>{0, 30});
}

TEST_CASE("one-peak segmenter") {
  RandomEngine a(42), b(42);
  CHECK(segment_one_peak(vid(5000), 60, a) == segment_one_peak(vid(5000), 60, b));
  RandomEngine c(1);
  CHECK(segment_one_peak(vid(10), 60, c).boundaries == std::vector<std::size_t>{0, 10});

  RandomEngine rng(7);
  double sum = 0.0;
  std::size_t count = 0;
  while (count < 100000) {
    const auto seg = segment_one_peak(vid(600000), 60, rng);
    CHECK(validate_segmentation(seg, vid(600000)).empty());
    for (auto l : mean_lengths(seg)) {
      sum += static_cast<double>(l);
      ++count;
    }
  }
  CHECK(std::abs(sum / static_cast<double>(count) - 60.0) < 0.5);
}

TEST_CASE("two-peak segmenter") {
  RandomEngine rng(8);
  std::map<std::size_t, std::size_t> hist;
  double sum = 0.0;
  std::size_t count = 0;
  while (count < 100000) {
    const auto seg = segment_two_peak(vid(600000), 30, 90, 0.5, rng);
    for (auto l : mean_lengths(seg)) {
      sum += static_cast<double>(l);
      ++hist[l];
      ++count;
    }
  }
  CHECK(std::abs(sum / static_cast<double>(count) - 60.0) < 0.5);

  // Modes of a 5-frame moving average; pinned from this histogram.
  auto smooth = [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t k = x - 2; k <= x + 2; ++k) s += hist.count(k) ? static_cast<double>(hist[k]) : 0.0;
    return s;
  };
  std::size_t lo_mode = 3, hi_mode = 60;
  for (std::size_t x = 3; x < 60; ++x)
    if (smooth(x) > smooth(lo_mode)) lo_mode = x;
  for (std::size_t x = 60; x < 150; ++x)
    if (smooth(x) > smooth(hi_mode)) hi_mode = x;
  CHECK(std::abs(static_cast<double>(lo_mode) - 30.0) <= 2.0);
  CHECK(std::abs(static_cast<double>(hi_mode) - 90.0) <= 3.0);
  CHECK(smooth(60) < 0.5 * smooth(hi_mode));

  // p_short = 1 collapses to one-peak with the short rate.
  RandomEngine a(3);
  double s1 = 0.0;
  std::size_t n1 = 0;
  while (n1 < 100000) {
    for (auto l : mean_lengths(segment_two_peak(vid(300000), 30, 90, 1.0, a))) {
      CHECK(l < 80);
      s1 += static_cast<double>(l);
      ++n1;
    }
  }
  CHECK(std::abs(s1 / static_cast<double>(n1) - 30.0) < 0.3);
}

TEST_CASE("segmenter specs") {
  CHECK(segmenter_name(TwoPeakSpec{}) == "two-peak");
  CHECK(segmenter_name(RandomizedKtsSpec{}) == "randomized-kts");
  CHECK(segmenter_is_random(OnePeakSpec{}));
  CHECK_FALSE(segmenter_is_random(KtsSpec{}));
  CHECK(segmenter_needs_features(RandomizedKtsSpec{}));
  CHECK_THROWS_AS(validate_segmenter(UniformSpec{0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_segmenter(TwoPeakSpec{30, 90, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(validate_segmenter(OnePeakSpec{-1.0}), std::invalid_argument);
}

TEST_CASE("kts scatter matches direct computation") {
  RandomEngine rng(2);
  FeatureMatrix f{30, 3, std::vector<double>(90)};
  for (auto& x : f.data) x = standard_normal(rng);
  for (std::size_t a = 0; a < 30; a += 7)
    for (std::size_t b = a + 1; b <= 30; b += 5) CHECK(kts_segment_scatter(f, a, b) == doctest::Approx(direct_scatter(f, a, b)));
}

TEST_CASE("kts on block features") {
  RandomEngine rng(4);
  const auto f = blocks({40, 25, 35}, 4, rng);
  const auto seg = segment_kts(vid(100), f, KtsSpec{});
  CHECK(seg.boundaries == std::vector<std::size_t>{0, 40, 65, 100});

  FeatureMatrix flat{50, 2, std::vector<double>(100, 1.5)};
  for (double c : {0.01, 1.0, 10.0}) CHECK(segment_kts(vid(50), flat, KtsSpec{c, 20, 1}).segment_count() == 1);

  FeatureMatrix empty;
  CHECK_THROWS_AS(segment_kts(vid(0), empty, KtsSpec{}), DataError);
  FeatureMatrix nan{3, 1, {0.0, std::numeric_limits<double>::quiet_NaN(), 1.0}};
  CHECK_THROWS_AS(segment_kts(vid(3), nan, KtsSpec{}), DataError);
  CHECK_THROWS_AS(segment_kts(vid(99), f, KtsSpec{}), DataError);
}

TEST_CASE("kts respects min_seg_len and max_segments") {
  RandomEngine rng(6);
  const auto f = blocks({3, 30, 3, 30}, 2, rng);
  const auto seg = segment_kts(vid(66), f, KtsSpec{1.0, 50, 5});
  for (auto l : seg.lengths()) CHECK(l >= 5);
  CHECK(segment_kts(vid(66), f, KtsSpec{1.0, 2, 1}).segment_count() <= 2);
}

TEST_CASE("kts dp is optimal against exhaustive search") {
  RandomEngine rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 4 + uniform_below(rng, 21);
    FeatureMatrix f{n, 2, std::vector<double>(n * 2)};
    for (auto& x : f.data) x = standard_normal(rng);
    const auto cands = kts_candidates(f, KtsSpec{1.0, 3, 1});
    REQUIRE(cands.size() == 3);
    double best1 = direct_scatter(f, 0, n), best2 = 1e300, best3 = 1e300;
    for (std::size_t i = 1; i < n; ++i) {
      best2 = std::min(best2, direct_scatter(f, 0, i) + direct_scatter(f, i, n));
      for (std::size_t j = i + 1; j < n; ++j)
        best3 = std::min(best3, direct_scatter(f, 0, i) + direct_scatter(f, i, j) + direct_scatter(f, j, n));
    }
    CHECK(cands[0].scatter == doctest::Approx(best1));
    CHECK(cands[1].scatter == doctest::Approx(best2));
    CHECK(cands[2].scatter == doctest::Approx(best3));
    for (const auto& c : cands) {
      double s = 0.0;
      for (std::size_t k = 0; k + 1 < c.boundaries.size(); ++k) s += direct_scatter(f, c.boundaries[k], c.boundaries[k + 1]);
      CHECK(s == doctest::Approx(c.scatter));
    }
  }
}

TEST_CASE("kts recovers synthetic event boundaries") {
  SynthConfig cfg;
  cfg.n_videos = 3;
  cfg.n_frames_min = 300;
  cfg.n_frames_max = 600;
  cfg.seed = 21;
  const auto out = synth_dataset_with_truth(cfg);
  for (const auto& v : out.bundle.videos) {
    const auto seg = segment_kts(v, out.bundle.features.at(v.video_id), KtsSpec{1.0, 20, 1});
    const auto& truth = out.event_boundaries.at(v.video_id);
    REQUIRE(seg.boundaries.size() == truth.size());
    for (std::size_t k = 0; k < truth.size(); ++k)
      CHECK(std::abs(static_cast<long>(seg.boundaries[k]) - static_cast<long>(truth[k])) <= 1);
  }
}

TEST_CASE("randomized kts preserves the length multiset") {
  RandomEngine rng(10);
  Segmentation s{"v", {0, 30, 90, 180}};
  auto r = randomize_kts(s, rng);
  auto a = s.lengths(), b = r.lengths();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(randomize_kts(Segmentation{"v", {0, 77}}, rng).boundaries == std::vector<std::size_t>{0, 77});
  Segmentation eq{"v", {0, 10, 20, 30, 40}};
  CHECK(randomize_kts(eq, rng) == eq);
}
