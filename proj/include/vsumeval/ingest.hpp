#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsumeval/datamodel.hpp"

namespace vsumeval {

struct DatasetBundle {
  std::vector<VideoRecord> videos;
  std::map<std::string, AnnotationSet> annotations;
  std::map<std::string, std::vector<SummaryMask>> reference_masks;
  std::map<std::string, FeatureMatrix> features;
  /// Declared upper bound on reference length as a fraction of the video
  /// (0.15 for SumMe-style data). Unset means no constraint is checked.
  std::optional<double> reference_length_limit;

  const VideoRecord& video(const std::string& id) const;
  const VideoRecord* find_video(const std::string& id) const;

  friend bool operator==(const DatasetBundle&, const DatasetBundle&) = default;
};

/// All bundle invariants; empty when valid.
std::vector<std::string> validate_bundle(const DatasetBundle& bundle);

/// Shot duration used by TVSum annotations.
inline constexpr double kTvsumShotSeconds = 2.0;

/// Reads `video_id<TAB>category<TAB>s,s,...` rows (integer scores 1..5, one
/// per 2-second shot) plus a `videos.json` sidecar with frame counts and
/// rates. Rows whose score count equals n_frames are taken as frame-level
/// already (the layout of the public release).
DatasetBundle load_tvsum_tsv(const std::filesystem::path& tsv_path, const std::filesystem::path& videos_json_path);

/// Same, with the sidecar looked up as `videos.json` next to the TSV.
DatasetBundle load_tvsum_tsv(const std::filesystem::path& tsv_path);

DatasetBundle load_json_dataset(const std::filesystem::path& path);
DatasetBundle parse_json_dataset(const std::string& text);

std::string dump_json_dataset(const DatasetBundle& bundle);
void write_json_dataset(const DatasetBundle& bundle, const std::filesystem::path& path);

/// `{video_id: [frame scores]}`; every id must exist in the bundle with the
/// right length, and every bundle video must be covered.
std::map<std::string, FrameScores> load_prediction_scores(const std::filesystem::path& path,
                                                          const DatasetBundle& bundle);
std::map<std::string, FrameScores> parse_prediction_scores(const std::string& text, const DatasetBundle& bundle);
void write_prediction_scores(const std::map<std::string, FrameScores>& scores, const std::filesystem::path& path);

struct SynthConfig {
  std::size_t n_videos = 5;
  std::size_t n_frames_min = 1500;
  std::size_t n_frames_max = 3000;
  double fps = 30.0;
  std::size_t n_annotators = 10;
  std::size_t n_events = 4;
  double base_noise = 0.5;
  double outlier_fraction = 0.0;
  std::size_t feature_dim = 8;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on an invalid configuration.
void validate_synth_config(const SynthConfig& cfg);
SynthConfig parse_synth_config(const std::string& json_text);
std::string dump_synth_config(const SynthConfig& cfg);

struct SynthOutput {
  DatasetBundle bundle;
  /// Frame indices where the latent content changes (feature change points),
  /// per video, including 0 and n_frames.
  std::map<std::string, std::vector<std::size_t>> event_boundaries;
  /// Indices of the outlier annotators (shared across videos).
  std::vector<std::size_t> outlier_annotators;
};

/// Synthetic TVSum-style dataset: each video has `n_events` Gaussian bumps of
/// importance on a low baseline. Annotators score 2-second shots on a 1..5
/// scale with Gaussian noise; outliers score the mirrored profile (6 - s).
/// Features are piecewise constant with changes at event boundaries.
SynthOutput synth_dataset_with_truth(const SynthConfig& cfg);
DatasetBundle synth_dataset(const SynthConfig& cfg);

}  // namespace vsumeval
