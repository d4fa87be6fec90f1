#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vsumeval/datamodel.hpp"
#include "vsumeval/selection.hpp"

namespace vsumeval {

struct F1Result {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct VideoEvaluation {
  std::vector<F1Result> per_reference;
  double avg_f1 = 0.0;
  double max_f1 = 0.0;
};

struct RankCorrelation {
  double tau = 0.0;
  double rho = 0.0;
  /// Number of (prediction, annotator) pairs where one side was constant and
  /// the correlation was reported as 0.
  std::size_t degenerate_pairs = 0;
};

/// Frame-level precision/recall/F1. An empty candidate has precision 0, an
/// empty reference has recall 0, and F1 is 0 when both are 0.
F1Result f1_score(const SummaryMask& generated, const SummaryMask& reference);

VideoEvaluation evaluate_against_references(const SummaryMask& generated,
                                            std::span<const SummaryMask> references);

/// One reference summary per annotator: mean-pool the annotator's scores over
/// `seg` and run knapsack selection at `budget`.
std::vector<SummaryMask> tvsum_reference_summaries(const AnnotationSet& ann, const Segmentation& seg,
                                                   const Budget& budget);

struct LeaveOneOutResult {
  std::vector<VideoEvaluation> per_candidate;
  double mean_avg_f1 = 0.0;
  double mean_max_f1 = 0.0;
};

/// Each summary evaluated against all of the others.
LeaveOneOutResult leave_one_out_f1(std::span<const SummaryMask> summaries);

/// Kendall tau-b in O(n log n) (Knight's merge-sort algorithm). Returns 0 when
/// either input is constant.
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of tie-averaged ranks. Returns 0 when either input is
/// constant.
double spearman_rho(std::span<const double> x, std::span<const double> y);

/// 1-based ranks; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// True when every value is equal (rank correlations are undefined).
bool is_constant(std::span<const double> values);

/// Mean over annotators of tau-b and rho between `pred` and each annotator.
RankCorrelation rank_eval_vs_annotators(const FrameScores& pred, const AnnotationSet& ann);

/// Same computation with the annotator at `skip` left out (leave-one-out).
RankCorrelation rank_eval_vs_annotators(const FrameScores& pred, const AnnotationSet& ann, std::size_t skip);

}  // namespace vsumeval
