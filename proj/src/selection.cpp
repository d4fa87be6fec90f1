#include "vsumeval/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vsumeval {

std::string to_string(Pooling pooling) { return pooling == Pooling::kMean ? "mean" : "sum"; }

Pooling pooling_from_string(const std::string& name) {
  if (name == "mean") return Pooling::kMean;
  if (name == "sum") return Pooling::kSum;
  throw std::invalid_argument("unknown pooling '" + name + "' (expected mean or sum)");
}

std::size_t Budget::resolve(std::size_t n_frames) const {
  if (frames) return std::min(*frames, n_frames);
  if (!fraction) throw std::invalid_argument("Budget: neither fraction nor frames set");
  const double f = *fraction;
  if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("Budget: fraction must be in (0, 1]");
  // The epsilon absorbs representation error such as 0.15 * 20 = 3.0000000000000004
  // or 0.29 * 100 = 28.999999999999996.
  const auto b = static_cast<std::size_t>(std::floor(f * static_cast<double>(n_frames) + 1e-9));
  return std::min(b, n_frames);
}

SegmentScores pool_scores(const FrameScores& frame_scores, const Segmentation& seg, Pooling pooling) {
  if (frame_scores.size() != seg.n_frames()) {
    throw DataError("pool_scores: " + std::to_string(frame_scores.size()) + " frame scores for a " +
                    std::to_string(seg.n_frames()) + "-frame segmentation");
  }
  SegmentScores out{seg.video_id, seg, {}, pooling};
  out.values.reserve(seg.segment_count());
  for (std::size_t k = 0; k < seg.segment_count(); ++k) {
    double sum = 0.0;
    for (std::size_t i = seg.begin(k); i < seg.end(k); ++i) sum += frame_scores.values[i];
    out.values.push_back(pooling == Pooling::kMean ? sum / static_cast<double>(seg.length(k)) : sum);
  }
  return out;
}

namespace {

double tie_tolerance(double a, double b) { return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

void check_scores(const SegmentScores& scores) {
  if (scores.values.size() != scores.seg.segment_count()) {
    throw DataError("segment scores: value count does not match segment count");
  }
  for (double v : scores.values) {
    if (!std::isfinite(v)) throw DataError("segment scores: non-finite value");
  }
}

// Tie-break between equally valued index sets: the first differing index
// decides (smaller wins); when one set extends the other, the longer wins.
bool preferred(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia != a.end() && ib != b.end()) return *ia < *ib;
  return ia != a.end();
}

SummaryMask to_mask(const SegmentScores& scores, const std::vector<std::size_t>& picked) {
  auto mask = mask_from_segments(scores.seg, picked);
  mask.video_id = scores.video_id;
  return mask;
}

}  // namespace

std::vector<std::size_t> knapsack_select_indices(const SegmentScores& scores, std::size_t budget_frames) {
  check_scores(scores);
  const std::size_t n_seg = scores.seg.segment_count();
  const std::size_t capacity = std::min(budget_frames, scores.seg.n_frames());
  const std::size_t width = capacity + 1;

  // best[k * width + c]: optimal value using segments k.. with capacity c.
  std::vector<double> best((n_seg + 1) * width, 0.0);
  for (std::size_t k = n_seg; k-- > 0;) {
    const double v = scores.values[k];
    const std::size_t len = scores.seg.length(k);
    const double* next = &best[(k + 1) * width];
    double* cur = &best[k * width];
    for (std::size_t c = 0; c <= capacity; ++c) {
      double value = next[c];
      if (v > 0.0 && len <= c) value = std::max(value, v + next[c - len]);
      cur[c] = value;
    }
  }

  // Walk forward, taking a segment whenever doing so still attains the optimum;
  // this yields the lexicographically smallest optimal index set.
  std::vector<std::size_t> picked;
  std::size_t c = capacity;
  for (std::size_t k = 0; k < n_seg; ++k) {
    const double v = scores.values[k];
    const std::size_t len = scores.seg.length(k);
    if (!(v > 0.0) || len > c) continue;
    const double with = v + best[(k + 1) * width + c - len];
    const double without = best[(k + 1) * width + c];
    if (with >= without - tie_tolerance(with, without)) {
      picked.push_back(k);
      c -= len;
    }
  }
  return picked;
}

SummaryMask knapsack_select(const SegmentScores& scores, std::size_t budget_frames) {
  return to_mask(scores, knapsack_select_indices(scores, budget_frames));
}

std::vector<std::size_t> brute_force_select_indices(const SegmentScores& scores, std::size_t budget_frames) {
  check_scores(scores);
  const std::size_t n_seg = scores.seg.segment_count();
  if (n_seg > kBruteForceMaxSegments) {
    throw std::invalid_argument("brute_force_select: " + std::to_string(n_seg) + " segments exceeds the limit of " +
                                std::to_string(kBruteForceMaxSegments));
  }
  std::vector<std::size_t> best_set;
  double best_value = 0.0;
  std::vector<std::size_t> current;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n_seg); ++bits) {
    current.clear();
    std::size_t length = 0;
    double value = 0.0;
    bool admissible = true;
    for (std::size_t k = 0; k < n_seg && admissible; ++k) {
      if (!(bits >> k & 1U)) continue;
      if (!(scores.values[k] > 0.0)) admissible = false;
      length += scores.seg.length(k);
      value += scores.values[k];
      current.push_back(k);
    }
    if (!admissible || length > budget_frames) continue;
    const double tol = tie_tolerance(value, best_value);
    if (value > best_value + tol || (value >= best_value - tol && preferred(current, best_set))) {
      best_set = current;
      best_value = value;
    }
  }
  return best_set;
}

SummaryMask brute_force_select(const SegmentScores& scores, std::size_t budget_frames) {
  return to_mask(scores, brute_force_select_indices(scores, budget_frames));
}

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

namespace {

std::optional<double> median_of(const std::vector<std::size_t>& lengths) {
  if (lengths.empty()) return std::nullopt;
  std::vector<double> v(lengths.begin(), lengths.end());
  return median(v);
}

}  // namespace

SegmentLengthStats selected_length_stats(const Segmentation& seg, const SummaryMask& mask) {
  if (mask.size() != seg.n_frames()) throw DataError("selected_length_stats: mask length mismatch");
  SegmentLengthStats stats;
  for (std::size_t k = 0; k < seg.segment_count(); ++k) {
    const auto first = mask.mask.begin() + static_cast<std::ptrdiff_t>(seg.begin(k));
    const auto last = mask.mask.begin() + static_cast<std::ptrdiff_t>(seg.end(k));
    const auto ones = static_cast<std::size_t>(std::count(first, last, std::uint8_t{1}));
    if (ones == seg.length(k)) {
      stats.selected_lengths.push_back(seg.length(k));
    } else if (ones == 0) {
      stats.unselected_lengths.push_back(seg.length(k));
    } else {
      throw DataError("selected_length_stats: mask splits segment " + std::to_string(k));
    }
  }
  stats.selected_median = median_of(stats.selected_lengths);
  stats.unselected_median = median_of(stats.unselected_lengths);
  stats.global_median = *median_of(seg.lengths());

  std::size_t selected_frames = 0;
  std::size_t short_frames = 0;
  for (auto len : stats.selected_lengths) {
    selected_frames += len;
    if (static_cast<double>(len) < stats.global_median) short_frames += len;
  }
  stats.share_of_short =
      selected_frames == 0 ? 0.0 : static_cast<double>(short_frames) / static_cast<double>(selected_frames);
  return stats;
}

}  // namespace vsumeval
