#include "vsumeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vsumeval {

F1Result f1_score(const SummaryMask& generated, const SummaryMask& reference) {
  if (generated.size() != reference.size()) {
    throw DataError("f1_score: mask lengths differ (" + std::to_string(generated.size()) + " vs " +
                    std::to_string(reference.size()) + ")");
  }
  std::size_t overlap = 0;
  std::size_t gen = 0;
  std::size_t ref = 0;
  for (std::size_t i = 0; i < generated.size(); ++i) {
    const bool g = generated.mask[i] != 0;
    const bool r = reference.mask[i] != 0;
    gen += g;
    ref += r;
    overlap += g && r;
  }
  F1Result out;
  out.precision = gen == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(gen);
  out.recall = ref == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(ref);
  const double denom = out.precision + out.recall;
  out.f1 = denom == 0.0 ? 0.0 : 2.0 * out.precision * out.recall / denom;
  return out;
}

VideoEvaluation evaluate_against_references(const SummaryMask& generated,
                                            std::span<const SummaryMask> references) {
  if (references.empty()) throw DataError("evaluate_against_references: no reference summaries");
  VideoEvaluation out;
  out.per_reference.reserve(references.size());
  double sum = 0.0;
  for (const auto& ref : references) {
    out.per_reference.push_back(f1_score(generated, ref));
    sum += out.per_reference.back().f1;
    out.max_f1 = std::max(out.max_f1, out.per_reference.back().f1);
  }
  out.avg_f1 = sum / static_cast<double>(references.size());
  return out;
}

std::vector<SummaryMask> tvsum_reference_summaries(const AnnotationSet& ann, const Segmentation& seg,
                                                   const Budget& budget) {
  const std::size_t budget_frames = budget.resolve(seg.n_frames());
  std::vector<SummaryMask> out;
  out.reserve(ann.annotators.size());
  for (const auto& scores : ann.annotators) {
    out.push_back(knapsack_select(pool_scores(scores, seg, Pooling::kMean), budget_frames));
    out.back().video_id = ann.video_id;
  }
  return out;
}

LeaveOneOutResult leave_one_out_f1(std::span<const SummaryMask> summaries) {
  if (summaries.size() < 2) throw DataError("leave_one_out_f1: needs at least two summaries");
  LeaveOneOutResult out;
  std::vector<SummaryMask> others;
  for (std::size_t k = 0; k < summaries.size(); ++k) {
    others.clear();
    for (std::size_t j = 0; j < summaries.size(); ++j) {
      if (j != k) others.push_back(summaries[j]);
    }
    out.per_candidate.push_back(evaluate_against_references(summaries[k], others));
    out.mean_avg_f1 += out.per_candidate.back().avg_f1;
    out.mean_max_f1 += out.per_candidate.back().max_f1;
  }
  out.mean_avg_f1 /= static_cast<double>(summaries.size());
  out.mean_max_f1 /= static_cast<double>(summaries.size());
  return out;
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y, const char* who) {
  if (x.size() != y.size()) {
    throw DataError(std::string(who) + ": length mismatch (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw DataError(std::string(who) + ": needs at least two values");
}

std::int64_t tie_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sorts `v` in place and returns the number of strict inversions.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

bool is_constant(std::span<const double> values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "kendall_tau_b");
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  std::int64_t tied_x = 0;
  std::int64_t tied_xy = 0;
  std::int64_t run_x = 1;
  std::int64_t run_xy = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const bool same_x = x[order[i]] == x[order[i - 1]];
    const bool same_xy = same_x && y[order[i]] == y[order[i - 1]];
    if (same_x) {
      ++run_x;
    } else {
      tied_x += tie_pairs(run_x);
      run_x = 1;
    }
    if (same_xy) {
      ++run_xy;
    } else {
      tied_xy += tie_pairs(run_xy);
      run_xy = 1;
    }
  }
  tied_x += tie_pairs(run_x);
  tied_xy += tie_pairs(run_xy);

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  std::vector<double> buf(n);
  const std::int64_t discordant = merge_count(ys, buf, 0, n);

  std::int64_t tied_y = 0;
  std::int64_t run_y = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (ys[i] == ys[i - 1]) {
      ++run_y;
    } else {
      tied_y += tie_pairs(run_y);
      run_y = 1;
    }
  }
  tied_y += tie_pairs(run_y);

  const auto total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t numer = total - tied_x - tied_y + tied_xy - 2 * discordant;
  const std::int64_t dx = total - tied_x;
  const std::int64_t dy = total - tied_y;
  if (dx == 0 || dy == 0) return 0.0;
  return static_cast<double>(numer) / std::sqrt(static_cast<double>(dx) * static_cast<double>(dy));
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 (0-based) share the rank mean of i+1..j.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "spearman_rho");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  // Average ranks always have mean (n + 1) / 2.
  const double mean = 0.5 * (n + 1.0);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

RankCorrelation rank_eval_vs_annotators(const FrameScores& pred, const AnnotationSet& ann, std::size_t skip) {
  RankCorrelation out;
  std::size_t used = 0;
  const bool pred_constant = is_constant(pred.values);
  for (std::size_t a = 0; a < ann.annotators.size(); ++a) {
    if (a == skip) continue;
    const auto& ref = ann.annotators[a].values;
    if (ref.size() != pred.size()) {
      throw DataError("rank_eval: prediction for " + pred.video_id + " has " + std::to_string(pred.size()) +
                      " frames, annotator " + std::to_string(a) + " has " + std::to_string(ref.size()));
    }
    if (pred_constant || is_constant(ref)) ++out.degenerate_pairs;
    out.tau += kendall_tau_b(pred.values, ref);
    out.rho += spearman_rho(pred.values, ref);
    ++used;
  }
  if (used == 0) throw DataError("rank_eval: no annotators to compare against");
  out.tau /= static_cast<double>(used);
  out.rho /= static_cast<double>(used);
  return out;
}

RankCorrelation rank_eval_vs_annotators(const FrameScores& pred, const AnnotationSet& ann) {
  return rank_eval_vs_annotators(pred, ann, ann.annotators.size());
}

}  // namespace vsumeval
