#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vsumeval/datamodel.hpp"

using namespace vsumeval;

namespace {

bool mentions(const std::vector<std::string>& errs, const std::string& needle) {
  return std::any_of(errs.begin(), errs.end(), [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

VideoRecord vid(std::size_t n, double fps = 30.0) { return {"v", n, fps}; }

}  // namespace

TEST_CASE("segmentation validity") {
  CHECK(validate_segmentation({"v", {0, 30, 60}}, vid(60)).empty());
  CHECK(mentions(validate_segmentation({"v", {0, 30, 50}}, vid(60)), "does not cover tail"));
  CHECK(mentions(validate_segmentation({"v", {0, 30, 30, 60}}, vid(60)), "empty segment"));
  CHECK(mentions(validate_segmentation({"v", {5, 30, 60}}, vid(60)), "does not start at frame 0"));
  CHECK(mentions(validate_segmentation({"v", {0, 70}}, vid(60)), "extends past"));
  CHECK_FALSE(validate_segmentation({"v", {}}, vid(60)).empty());
}

TEST_CASE("video record validity") {
  CHECK(validate_video(vid(10)).empty());
  CHECK_FALSE(validate_video(vid(0)).empty());
  CHECK_FALSE(validate_video(vid(10, 0.0)).empty());
  CHECK_FALSE(validate_video({"", 10, 30.0}).empty());
}

TEST_CASE("frame scores and masks") {
  CHECK(validate_frame_scores({"v", {0.1, 0.2, 0.3}}, vid(3)).empty());
  CHECK_FALSE(validate_frame_scores({"v", {0.1, 0.2}}, vid(3)).empty());
  CHECK_FALSE(validate_frame_scores({"v", {0.1, std::nan(""), 0.3}}, vid(3)).empty());
  CHECK(validate_mask({"v", {0, 1, 1}}, vid(3)).empty());
  CHECK_FALSE(validate_mask({"v", {0, 2, 1}}, vid(3)).empty());
  CHECK_FALSE(validate_mask({"v", {0, 1}}, vid(3)).empty());
  SummaryMask m{"v", {1, 0, 1, 1}};
  CHECK(m.popcount() == 3);
}

TEST_CASE("annotation validity") {
  AnnotationSet ok{"v", {{"v", {1, 2, 3}}, {"v", {3, 2, 1}}}};
  CHECK(validate_annotations(ok, vid(3)).empty());
  AnnotationSet ragged{"v", {{"v", {1, 2, 3}}, {"v", {3, 2}}}};
  CHECK_FALSE(validate_annotations(ragged, vid(3)).empty());
  AnnotationSet none{"v", {}};
  CHECK_FALSE(validate_annotations(none, vid(3)).empty());
}

TEST_CASE("shot expansion") {
  std::vector<double> a{1, 5};
  auto e = expand_shot_scores(a, 2.0, vid(120));
  REQUIRE(e.size() == 120);
  CHECK(std::count(e.values.begin(), e.values.begin() + 60, 1.0) == 60);
  CHECK(std::count(e.values.begin() + 60, e.values.end(), 5.0) == 60);

  std::vector<double> b{3};
  auto t = expand_shot_scores(b, 2.0, vid(45));
  CHECK(t.values == std::vector<double>(45, 3.0));

  std::vector<double> c{1, 2};
  auto x = expand_shot_scores(c, 2.0, vid(101, 25.0));
  REQUIRE(x.size() == 101);
  CHECK(std::count(x.values.begin(), x.values.end(), 1.0) == 50);
  CHECK(std::count(x.values.begin(), x.values.end(), 2.0) == 51);

  std::vector<double> many(10, 1.0);
  CHECK_THROWS_AS(expand_shot_scores(many, 2.0, vid(120)), DataError);
  std::vector<double> few{1.0};
  CHECK_THROWS_AS(expand_shot_scores(few, 2.0, vid(200)), DataError);
}

TEST_CASE("mask from segments") {
  Segmentation seg{"v", {0, 3, 6}};
  std::vector<std::size_t> one{1};
  CHECK(mask_from_segments(seg, one).mask == std::vector<std::uint8_t>{0, 0, 0, 1, 1, 1});
  CHECK(mask_from_segments(seg, {}).mask == std::vector<std::uint8_t>(6, 0));
  std::vector<std::size_t> both{0, 1};
  CHECK(mask_from_segments(seg, both).mask == std::vector<std::uint8_t>(6, 1));
  std::vector<std::size_t> bad{2};
  CHECK_THROWS_AS(mask_from_segments(seg, bad), std::out_of_range);
}

TEST_CASE("mask popcount equals selected lengths") {
  Segmentation seg{"v", {0, 4, 5, 11, 20}};
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::vector<std::size_t> sel;
    std::size_t expect = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (bits & (1u << k)) {
        sel.push_back(k);
        expect += seg.length(k);
      }
    CHECK(mask_from_segments(seg, sel).popcount() == expect);
  }
}
