#include "vsumeval/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vsumeval {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Accumulate lengths from `draw` until the video is covered; the last segment
// is truncated to fit.
template <typename Draw>
Segmentation accumulate_lengths(const VideoRecord& video, Draw&& draw) {
  Segmentation seg{video.video_id, {0}};
  std::size_t pos = 0;
  while (pos < video.n_frames) {
    const std::size_t len = std::max<std::size_t>(1, draw());
    pos = std::min(video.n_frames, pos + len);
    seg.boundaries.push_back(pos);
  }
  return seg;
}

}  // namespace

std::string segmenter_name(const SegmenterSpec& spec) {
  return std::visit(overloaded{
                        [](const UniformSpec&) { return std::string("uniform"); },
                        [](const OnePeakSpec&) { return std::string("one-peak"); },
                        [](const TwoPeakSpec&) { return std::string("two-peak"); },
                        [](const KtsSpec&) { return std::string("kts"); },
                        [](const RandomizedKtsSpec&) { return std::string("randomized-kts"); },
                    },
                    spec);
}

namespace {

void validate_kts(const KtsSpec& s) {
  if (!(s.penalty_c >= 0.0) || !std::isfinite(s.penalty_c)) {
    throw std::invalid_argument("kts: penalty_c must be finite and >= 0");
  }
  if (s.max_segments < 1) throw std::invalid_argument("kts: max_segments must be >= 1");
  if (s.min_seg_len < 1) throw std::invalid_argument("kts: min_seg_len must be >= 1");
}

}  // namespace

void validate_segmenter(const SegmenterSpec& spec) {
  std::visit(overloaded{
                 [](const UniformSpec& s) {
                   if (s.len_frames < 1) throw std::invalid_argument("uniform: len_frames must be >= 1");
                 },
                 [](const OnePeakSpec& s) {
                   if (!(s.lambda > 0.0)) throw std::invalid_argument("one-peak: lambda must be > 0");
                 },
                 [](const TwoPeakSpec& s) {
                   if (!(s.lambda_short > 0.0) || !(s.lambda_long > 0.0)) {
                     throw std::invalid_argument("two-peak: lambdas must be > 0");
                   }
                   if (!(s.p_short >= 0.0 && s.p_short <= 1.0)) {
                     throw std::invalid_argument("two-peak: p_short must be in [0, 1]");
                   }
                 },
                 [](const KtsSpec& s) { validate_kts(s); },
                 [](const RandomizedKtsSpec& s) { validate_kts(s.base); },
             },
             spec);
}

bool segmenter_is_random(const SegmenterSpec& spec) {
  return std::holds_alternative<OnePeakSpec>(spec) || std::holds_alternative<TwoPeakSpec>(spec) ||
         std::holds_alternative<RandomizedKtsSpec>(spec);
}

bool segmenter_needs_features(const SegmenterSpec& spec) {
  return std::holds_alternative<KtsSpec>(spec) || std::holds_alternative<RandomizedKtsSpec>(spec);
}

Segmentation segment_uniform(const VideoRecord& video, std::size_t len_frames) {
  if (len_frames < 1) throw std::invalid_argument("segment_uniform: len_frames must be >= 1");
  return accumulate_lengths(video, [&] { return len_frames; });
}

Segmentation segment_one_peak(const VideoRecord& video, double lambda, RandomEngine& rng) {
  validate_segmenter(OnePeakSpec{lambda});
  return accumulate_lengths(video, [&] { return static_cast<std::size_t>(poisson(rng, lambda)); });
}

Segmentation segment_two_peak(const VideoRecord& video, double lambda_short, double lambda_long,
                              double p_short, RandomEngine& rng) {
  validate_segmenter(TwoPeakSpec{lambda_short, lambda_long, p_short});
  return accumulate_lengths(video, [&] {
    const double lambda = uniform01(rng) < p_short ? lambda_short : lambda_long;
    return static_cast<std::size_t>(poisson(rng, lambda));
  });
}

// KTS with a linear kernel. Scatter only needs per-frame prefix sums of the
// (globally centred) features and of their squared norms.
namespace {

class ScatterTable {
 public:
  explicit ScatterTable(const FeatureMatrix& f) : dim_(f.dim), sums_((f.rows + 1) * f.dim, 0.0), sq_(f.rows + 1, 0.0) {
    std::vector<double> mean(f.dim, 0.0);
    for (std::size_t i = 0; i < f.rows; ++i) {
      auto r = f.row(i);
      for (std::size_t d = 0; d < dim_; ++d) mean[d] += r[d];
    }
    for (auto& m : mean) m /= static_cast<double>(f.rows);
    for (std::size_t i = 0; i < f.rows; ++i) {
      auto r = f.row(i);
      double norm = 0.0;
      for (std::size_t d = 0; d < dim_; ++d) {
        const double x = r[d] - mean[d];
        sums_[(i + 1) * dim_ + d] = sums_[i * dim_ + d] + x;
        norm += x * x;
      }
      sq_[i + 1] = sq_[i] + norm;
    }
  }

  double operator()(std::size_t a, std::size_t b) const {
    double cross = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      const double s = sums_[b * dim_ + d] - sums_[a * dim_ + d];
      cross += s * s;
    }
    return std::max(0.0, (sq_[b] - sq_[a]) - cross / static_cast<double>(b - a));
  }

 private:
  std::size_t dim_;
  std::vector<double> sums_;
  std::vector<double> sq_;
};

void check_features(const FeatureMatrix& features) {
  if (features.empty()) throw DataError("kts: empty feature matrix");
  if (features.data.size() != features.rows * features.dim) {
    throw DataError("kts: feature matrix storage does not match its shape");
  }
  for (double v : features.data) {
    if (!std::isfinite(v)) throw DataError("kts: non-finite feature value");
  }
}

}  // namespace

double kts_segment_scatter(const FeatureMatrix& features, std::size_t a, std::size_t b) {
  check_features(features);
  if (!(a < b && b <= features.rows)) throw std::out_of_range("kts_segment_scatter: bad range");
  return ScatterTable(features)(a, b);
}

double kts_penalty(double penalty_c, std::size_t m, std::size_t n) {
  const double md = static_cast<double>(m);
  return penalty_c * md * (std::log(static_cast<double>(n) / md) + 1.0);
}

std::vector<KtsCandidate> kts_candidates(const FeatureMatrix& features, const KtsSpec& spec) {
  check_features(features);
  validate_kts(spec);
  const std::size_t n = features.rows;
  const std::size_t min_len = spec.min_seg_len;
  const std::size_t max_m = std::min(spec.max_segments, n / min_len);
  if (max_m == 0) throw DataError("kts: video shorter than min_seg_len");

  const ScatterTable scatter(features);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // cost[m][j]: best scatter covering [0, j) with m + 1 segments.
  std::vector<std::vector<double>> cost(max_m, std::vector<double>(n + 1, kInf));
  std::vector<std::vector<std::size_t>> split(max_m, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t j = min_len; j <= n; ++j) cost[0][j] = scatter(0, j);
  for (std::size_t m = 1; m < max_m; ++m) {
    const std::size_t first_end = (m + 1) * min_len;
    for (std::size_t j = first_end; j <= n; ++j) {
      double best = kInf;
      std::size_t arg = 0;
      for (std::size_t i = m * min_len; i + min_len <= j; ++i) {
        if (cost[m - 1][i] == kInf) continue;
        const double c = cost[m - 1][i] + scatter(i, j);
        if (c < best) {
          best = c;
          arg = i;
        }
      }
      cost[m][j] = best;
      split[m][j] = arg;
    }
  }

  std::vector<KtsCandidate> out;
  for (std::size_t m = 0; m < max_m; ++m) {
    if (cost[m][n] == kInf) continue;
    KtsCandidate cand;
    cand.segments = m + 1;
    cand.scatter = cost[m][n];
    cand.objective = cand.scatter + kts_penalty(spec.penalty_c, m + 1, n);
    cand.boundaries.assign(m + 2, 0);
    cand.boundaries[m + 1] = n;
    std::size_t j = n;
    for (std::size_t k = m; k > 0; --k) {
      j = split[k][j];
      cand.boundaries[k] = j;
    }
    out.push_back(std::move(cand));
  }
  return out;
}

Segmentation segment_kts(const VideoRecord& video, const FeatureMatrix& features, const KtsSpec& spec) {
  if (features.rows != video.n_frames) {
    throw DataError("kts: feature rows (" + std::to_string(features.rows) + ") != n_frames (" +
                    std::to_string(video.n_frames) + ") for video " + video.video_id);
  }
  const auto candidates = kts_candidates(features, spec);
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& a, const auto& b) { return a.objective < b.objective; });
  return Segmentation{video.video_id, best->boundaries};
}

Segmentation randomize_kts(const Segmentation& seg, RandomEngine& rng) {
  auto lengths = seg.lengths();
  shuffle(lengths.begin(), lengths.end(), rng);
  Segmentation out{seg.video_id, {0}};
  out.boundaries.reserve(lengths.size() + 1);
  std::size_t pos = 0;
  for (auto len : lengths) {
    pos += len;
    out.boundaries.push_back(pos);
  }
  return out;
}

}  // namespace vsumeval
