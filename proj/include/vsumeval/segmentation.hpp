#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "vsumeval/datamodel.hpp"
#include "vsumeval/random.hpp"

namespace vsumeval {

struct UniformSpec {
  std::size_t len_frames = 60;
};

struct OnePeakSpec {
  double lambda = 60.0;
};

struct TwoPeakSpec {
  double lambda_short = 30.0;
  double lambda_long = 90.0;
  double p_short = 0.5;
};

struct KtsSpec {
  double penalty_c = 1.0;
  std::size_t max_segments = 50;
  std::size_t min_seg_len = 1;
};

/// KTS followed by a per-trial shuffle of the segment order.
struct RandomizedKtsSpec {
  KtsSpec base;
};

using SegmenterSpec = std::variant<UniformSpec, OnePeakSpec, TwoPeakSpec, KtsSpec, RandomizedKtsSpec>;

/// Canonical method name: uniform, one-peak, two-peak, kts, randomized-kts.
std::string segmenter_name(const SegmenterSpec& spec);

/// Throws std::invalid_argument on out-of-range parameters.
void validate_segmenter(const SegmenterSpec& spec);

/// True when the segmenter draws fresh boundaries on every trial.
bool segmenter_is_random(const SegmenterSpec& spec);
bool segmenter_needs_features(const SegmenterSpec& spec);

Segmentation segment_uniform(const VideoRecord& video, std::size_t len_frames = 60);
Segmentation segment_one_peak(const VideoRecord& video, double lambda, RandomEngine& rng);
Segmentation segment_two_peak(const VideoRecord& video, double lambda_short, double lambda_long,
                              double p_short, RandomEngine& rng);

/// Result of the change-point dynamic program for a fixed segment count.
struct KtsCandidate {
  std::size_t segments = 0;
  double scatter = 0.0;    // minimal total within-segment scatter
  double objective = 0.0;  // scatter + penalty
  std::vector<std::size_t> boundaries;
};

/// Minimal within-segment scatter for every segment count 1..max_segments
/// (counts that cannot satisfy min_seg_len are omitted). Linear kernel.
std::vector<KtsCandidate> kts_candidates(const FeatureMatrix& features, const KtsSpec& spec);

/// Scatter of frames [a, b): sum ||x_i||^2 - ||sum x_i||^2 / (b - a).
double kts_segment_scatter(const FeatureMatrix& features, std::size_t a, std::size_t b);

/// Penalty added for m segments of an n-frame video: c * m * (log(n/m) + 1).
double kts_penalty(double penalty_c, std::size_t m, std::size_t n);

Segmentation segment_kts(const VideoRecord& video, const FeatureMatrix& features, const KtsSpec& spec);

/// Shuffles segment order; the multiset of lengths is preserved.
Segmentation randomize_kts(const Segmentation& seg, RandomEngine& rng);

}  // namespace vsumeval
