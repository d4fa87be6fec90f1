#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsumeval/datamodel.hpp"

namespace vsumeval {

enum class Pooling { kMean, kSum };

std::string to_string(Pooling pooling);
Pooling pooling_from_string(const std::string& name);

struct SegmentScores {
  std::string video_id;
  Segmentation seg;
  std::vector<double> values;
  Pooling pooling = Pooling::kMean;
};

/// Summary budget as a fraction of the video or an absolute frame count.
struct Budget {
  std::optional<double> fraction;
  std::optional<std::size_t> frames;

  static Budget of_fraction(double f) { return Budget{f, std::nullopt}; }
  static Budget of_frames(std::size_t n) { return Budget{std::nullopt, n}; }

  /// floor(fraction * n_frames), or the absolute count clamped to n_frames.
  std::size_t resolve(std::size_t n_frames) const;
};

SegmentScores pool_scores(const FrameScores& frame_scores, const Segmentation& seg, Pooling pooling);

/// Exact 0/1 knapsack over segments: maximise the summed segment values with
/// total length <= budget_frames. Segments with value <= 0 are never chosen.
/// Among optimal subsets the lexicographically smallest index set wins.
SummaryMask knapsack_select(const SegmentScores& scores, std::size_t budget_frames);

/// Selected segment indices (ascending) for the same problem.
std::vector<std::size_t> knapsack_select_indices(const SegmentScores& scores, std::size_t budget_frames);

/// Exhaustive reference solver with identical objective and tie-breaking.
/// Limited to 25 segments.
SummaryMask brute_force_select(const SegmentScores& scores, std::size_t budget_frames);
std::vector<std::size_t> brute_force_select_indices(const SegmentScores& scores, std::size_t budget_frames);

inline constexpr std::size_t kBruteForceMaxSegments = 25;

struct SegmentLengthStats {
  std::vector<std::size_t> selected_lengths;
  std::vector<std::size_t> unselected_lengths;
  std::optional<double> selected_median;
  std::optional<double> unselected_median;
  double global_median = 0.0;
  /// Fraction of selected frames lying in segments strictly shorter than the
  /// global median segment length (0 when nothing is selected).
  double share_of_short = 0.0;
};

/// Throws DataError when the mask splits a segment.
SegmentLengthStats selected_length_stats(const Segmentation& seg, const SummaryMask& mask);

double median(std::span<const double> values);

}  // namespace vsumeval
