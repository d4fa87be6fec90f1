#include "vsumeval/datamodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace vsumeval {

std::vector<std::size_t> Segmentation::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(segment_count());
  for (std::size_t k = 0; k < segment_count(); ++k) out.push_back(length(k));
  return out;
}

std::size_t SummaryMask::popcount() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

std::vector<std::string> validate_video(const VideoRecord& video) {
  std::vector<std::string> out;
  if (video.video_id.empty()) out.emplace_back("empty video_id");
  if (video.n_frames < 1) out.emplace_back("n_frames must be >= 1");
  if (!(video.fps > 0.0) || !std::isfinite(video.fps)) out.emplace_back("fps must be positive and finite");
  return out;
}

std::vector<std::string> validate_segmentation(const Segmentation& seg, const VideoRecord& video) {
  std::vector<std::string> out;
  const auto& b = seg.boundaries;
  if (b.size() < 2) {
    out.emplace_back("needs at least one segment");
    return out;
  }
  if (b.front() != 0) out.emplace_back("does not start at frame 0");
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    if (b[k + 1] == b[k]) {
      std::ostringstream os;
      os << "empty segment " << k << " at frame " << b[k];
      out.push_back(os.str());
    } else if (b[k + 1] < b[k]) {
      std::ostringstream os;
      os << "boundaries decrease at index " << k + 1;
      out.push_back(os.str());
    }
  }
  if (b.back() < video.n_frames) {
    std::ostringstream os;
    os << "does not cover tail: ends at " << b.back() << " of " << video.n_frames;
    out.push_back(os.str());
  } else if (b.back() > video.n_frames) {
    std::ostringstream os;
    os << "extends past the last frame: ends at " << b.back() << " of " << video.n_frames;
    out.push_back(os.str());
  }
  return out;
}

std::vector<std::string> validate_frame_scores(const FrameScores& scores, const VideoRecord& video) {
  std::vector<std::string> out;
  if (scores.size() != video.n_frames) {
    std::ostringstream os;
    os << "length " << scores.size() << " != n_frames " << video.n_frames;
    out.push_back(os.str());
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores.values[i])) {
      std::ostringstream os;
      os << "non-finite value at frame " << i;
      out.push_back(os.str());
      break;
    }
  }
  return out;
}

std::vector<std::string> validate_mask(const SummaryMask& mask, const VideoRecord& video) {
  std::vector<std::string> out;
  if (mask.size() != video.n_frames) {
    std::ostringstream os;
    os << "mask length " << mask.size() << " != n_frames " << video.n_frames;
    out.push_back(os.str());
  }
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask.mask[i] > 1) {
      std::ostringstream os;
      os << "mask value at frame " << i << " is not 0/1";
      out.push_back(os.str());
      break;
    }
  }
  return out;
}

std::vector<std::string> validate_annotations(const AnnotationSet& ann, const VideoRecord& video) {
  std::vector<std::string> out;
  if (ann.annotators.empty()) out.emplace_back("annotation set has no annotators");
  for (std::size_t a = 0; a < ann.annotators.size(); ++a) {
    for (auto& v : validate_frame_scores(ann.annotators[a], video)) {
      out.push_back("annotator " + std::to_string(a) + ": " + v);
    }
  }
  return out;
}

FrameScores expand_shot_scores(std::span<const double> shot_scores, double shot_len_sec,
                               const VideoRecord& video) {
  if (shot_scores.empty()) throw DataError("expand_shot_scores: no shot scores");
  if (!(shot_len_sec > 0.0)) throw DataError("expand_shot_scores: shot length must be positive");
  const auto shot_frames =
      static_cast<std::size_t>(std::max(1.0, std::round(shot_len_sec * video.fps)));
  const std::size_t tiled = shot_scores.size() * shot_frames;
  const std::size_t slack = tiled > video.n_frames ? tiled - video.n_frames : video.n_frames - tiled;
  if (slack > shot_frames) {
    std::ostringstream os;
    os << "expand_shot_scores: " << shot_scores.size() << " shots of " << shot_frames
       << " frames do not match n_frames " << video.n_frames << " for video " << video.video_id;
    throw DataError(os.str());
  }
  FrameScores out{video.video_id, {}};
  out.values.reserve(video.n_frames);
  for (std::size_t i = 0; i < video.n_frames; ++i) {
    out.values.push_back(shot_scores[std::min(i / shot_frames, shot_scores.size() - 1)]);
  }
  return out;
}

SummaryMask mask_from_segments(const Segmentation& seg, std::span<const std::size_t> selected) {
  SummaryMask out{seg.video_id, std::vector<std::uint8_t>(seg.n_frames(), 0)};
  for (auto k : selected) {
    if (k >= seg.segment_count()) {
      throw std::out_of_range("mask_from_segments: segment index " + std::to_string(k) +
                              " out of range (" + std::to_string(seg.segment_count()) + " segments)");
    }
    std::fill(out.mask.begin() + static_cast<std::ptrdiff_t>(seg.begin(k)),
              out.mask.begin() + static_cast<std::ptrdiff_t>(seg.end(k)), std::uint8_t{1});
  }
  return out;
}

}  // namespace vsumeval
