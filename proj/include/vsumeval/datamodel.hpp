#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsumeval {

/// Raised for invalid input data (bad files, inconsistent metadata, contract
/// violations by the caller). The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VideoRecord {
  std::string video_id;
  std::size_t n_frames = 0;
  double fps = 0.0;

  friend bool operator==(const VideoRecord&, const VideoRecord&) = default;
};

/// Per-frame importance values (predicted, random or human).
struct FrameScores {
  std::string video_id;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const FrameScores&, const FrameScores&) = default;
};

/// Ordered partition of [0, n_frames). Segment k spans
/// [boundaries[k], boundaries[k+1]).
struct Segmentation {
  std::string video_id;
  std::vector<std::size_t> boundaries;

  std::size_t segment_count() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
  std::size_t begin(std::size_t k) const { return boundaries[k]; }
  std::size_t end(std::size_t k) const { return boundaries[k + 1]; }
  std::size_t length(std::size_t k) const { return boundaries[k + 1] - boundaries[k]; }
  std::size_t n_frames() const { return boundaries.empty() ? 0 : boundaries.back(); }
  std::vector<std::size_t> lengths() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;
};

/// Binary per-frame selection labels (1 = frame is in the summary).
struct SummaryMask {
  std::string video_id;
  std::vector<std::uint8_t> mask;

  std::size_t size() const { return mask.size(); }
  std::size_t popcount() const;
  friend bool operator==(const SummaryMask&, const SummaryMask&) = default;
};

struct AnnotationSet {
  std::string video_id;
  std::vector<FrameScores> annotators;

  std::size_t annotator_count() const { return annotators.size(); }
  std::size_t n_frames() const { return annotators.empty() ? 0 : annotators.front().size(); }
  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

/// Row-major frames x dim feature matrix.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<double> data;

  std::span<const double> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
  bool empty() const { return rows == 0 || dim == 0; }
  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;
};

// Validation helpers. Each returns a list of human-readable violations; an
// empty list means the object is valid.
std::vector<std::string> validate_video(const VideoRecord& video);
std::vector<std::string> validate_segmentation(const Segmentation& seg, const VideoRecord& video);
std::vector<std::string> validate_frame_scores(const FrameScores& scores, const VideoRecord& video);
std::vector<std::string> validate_mask(const SummaryMask& mask, const VideoRecord& video);
std::vector<std::string> validate_annotations(const AnnotationSet& ann, const VideoRecord& video);

/// Repeats each shot score for round(shot_len_sec * fps) frames; the final
/// shot is truncated or extended so the result has exactly n_frames values.
/// Throws DataError when the shot count disagrees with n_frames by more than
/// one full shot.
FrameScores expand_shot_scores(std::span<const double> shot_scores, double shot_len_sec,
                               const VideoRecord& video);

/// Mask that is 1 exactly on the frames of the selected segments.
SummaryMask mask_from_segments(const Segmentation& seg, std::span<const std::size_t> selected);

}  // namespace vsumeval
