#include <algorithm>
#include <vector>

#include "doctest.h"
#include "vsumeval/random.hpp"
#include "vsumeval/segmentation.hpp"
#include "vsumeval/selection.hpp"

using namespace vsumeval;

namespace {

SegmentScores make(const std::vector<std::size_t>& lengths, const std::vector<double>& values) {
  SegmentScores s;
  s.video_id = "v";
  s.seg.video_id = "v";
  s.seg.boundaries = {0};
  for (auto l : lengths) s.seg.boundaries.push_back(s.seg.boundaries.back() + l);
  s.values = values;
  return s;
}

double value_of(const SegmentScores& s, const std::vector<std::size_t>& idx) {
  double v = 0.0;
  for (auto i : idx) v += s.values[i];
  return v;
}

}  // namespace

TEST_CASE("pooling") {
  FrameScores f{"v", {1, 1, 4, 4}};
  Segmentation seg{"v", {0, 2, 4}};
  CHECK(pool_scores(f, seg, Pooling::kMean).values == std::vector<double>{1, 4});
  CHECK(pool_scores(f, seg, Pooling::kSum).values == std::vector<double>{2, 8});
  FrameScores c{"v", std::vector<double>(10, 0.3)};
  for (double x : pool_scores(c, Segmentation{"v", {0, 3, 7, 10}}, Pooling::kMean).values) CHECK(x == doctest::Approx(0.3));
  CHECK_THROWS(pool_scores(FrameScores{"v", {1, 2, 3}}, seg, Pooling::kMean));
  CHECK(pooling_from_string("sum") == Pooling::kSum);
  CHECK_THROWS_AS(pooling_from_string("max"), std::invalid_argument);
}

TEST_CASE("budget resolution") {
  CHECK(Budget::of_fraction(0.15).resolve(100) == 15);
  CHECK(Budget::of_fraction(0.15).resolve(1000) == 150);
  CHECK(Budget::of_fraction(1.0).resolve(77) == 77);
  CHECK(Budget::of_frames(500).resolve(100) == 100);
}

TEST_CASE("knapsack examples") {
  auto s = make({3, 2, 2}, {0.9, 0.6, 0.5});
  CHECK(knapsack_select_indices(s, 4) == std::vector<std::size_t>{1, 2});
  CHECK(knapsack_select(s, 4).mask == std::vector<std::uint8_t>{0, 0, 0, 1, 1, 1, 1});
  CHECK(knapsack_select_indices(s, 7) == std::vector<std::size_t>{0, 1, 2});
  CHECK(knapsack_select_indices(s, 100) == std::vector<std::size_t>{0, 1, 2});
  CHECK(knapsack_select(s, 0).popcount() == 0);

  auto big = make({10}, {1.0});
  CHECK(brute_force_select(big, 5).popcount() == 0);
  CHECK(knapsack_select(big, 5).popcount() == 0);

  auto tie = make({4, 4}, {0.5, 0.5});
  CHECK(knapsack_select_indices(tie, 5) == std::vector<std::size_t>{0});
  CHECK(brute_force_select_indices(tie, 5) == std::vector<std::size_t>{0});

  auto neg = make({2, 2}, {-1.0, 0.0});
  CHECK(knapsack_select_indices(neg, 4).empty());
}

TEST_CASE("brute force guard") {
  std::vector<std::size_t> l(26, 1);
  std::vector<double> v(26, 1.0);
  CHECK_THROWS_AS(brute_force_select(make(l, v), 10), std::invalid_argument);
}

TEST_CASE("knapsack matches brute force and is optimal") {
  RandomEngine rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t k = 1 + uniform_below(rng, 12);
    std::vector<std::size_t> lengths(k);
    std::vector<double> values(k);
    for (auto& l : lengths) l = 1 + uniform_below(rng, 40);
    // Coarse values make ties frequent.
    for (auto& v : values) v = rep % 2 ? uniform01(rng) : static_cast<double>(uniform_below(rng, 4));
    auto s = make(lengths, values);
    const std::size_t budget = uniform_below(rng, s.seg.n_frames() + 1);
    const auto dp = knapsack_select_indices(s, budget);
    const auto bf = brute_force_select_indices(s, budget);
    REQUIRE(dp == bf);
    std::size_t used = 0;
    for (auto i : dp) used += lengths[i];
    CHECK(used <= budget);
  }
}

TEST_CASE("knapsack value is monotone in budget") {
  RandomEngine rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::size_t> lengths(10);
    std::vector<double> values(10);
    for (auto& l : lengths) l = 1 + uniform_below(rng, 20);
    for (auto& v : values) v = uniform01(rng);
    auto s = make(lengths, values);
    double prev = -1.0;
    for (std::size_t b = 0; b <= s.seg.n_frames(); b += 3) {
      const double v = value_of(s, knapsack_select_indices(s, b));
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("selected length stats") {
  Segmentation seg{"v", {0, 10, 20, 50, 90}};
  std::vector<std::size_t> all{0, 1, 2, 3};
  auto st = selected_length_stats(seg, mask_from_segments(seg, all));
  CHECK(st.unselected_lengths.empty());
  CHECK(st.selected_median.value() == doctest::Approx(20.0));
  CHECK_FALSE(st.unselected_median.has_value());

  std::vector<std::size_t> shortest{0, 1};
  auto sh = selected_length_stats(seg, mask_from_segments(seg, shortest));
  CHECK(sh.share_of_short == doctest::Approx(1.0));
  CHECK(sh.global_median == doctest::Approx(20.0));
  CHECK(*sh.selected_median < *sh.unselected_median);

  SummaryMask split{"v", std::vector<std::uint8_t>(90, 0)};
  split.mask[5] = 1;
  CHECK_THROWS_AS(selected_length_stats(seg, split), DataError);

  auto none = selected_length_stats(seg, SummaryMask{"v", std::vector<std::uint8_t>(90, 0)});
  CHECK(none.share_of_short == 0.0);
}

TEST_CASE("median") {
  std::vector<double> odd{3, 1, 2};
  std::vector<double> even{4, 1, 3, 2};
  CHECK(median(odd) == 2.0);
  CHECK(median(even) == 2.5);
}
