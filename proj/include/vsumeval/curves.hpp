#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vsumeval/datamodel.hpp"

namespace vsumeval {

/// Normalised prefix mass a_1..a_n of reference scores taken in the order
/// induced by a predicted ranking. Non-decreasing, ends at 1.
struct CorrelationCurve {
  std::string video_id;
  std::string label;
  std::vector<double> points;
};

struct CurveBounds {
  CorrelationCurve upper;
  CorrelationCurve lower;
};

/// Per-frame mean over annotators.
FrameScores mean_reference_scores(const AnnotationSet& ann);

/// Sorts frames by `pred` descending (ties by ascending frame index) and
/// accumulates `ref_mean` in that order, normalised by its total.
CorrelationCurve accumulate_curve(const FrameScores& pred, const FrameScores& ref_mean, const std::string& label);

/// Upper: reference sorted descending (perfect concordance); lower: ascending.
CurveBounds curve_bounds(const FrameScores& ref_mean);

/// Expected curve for a random ranking: a_i = i / n.
CorrelationCurve random_baseline(std::size_t n);

/// Leave-one-out curve per annotator: annotator k ranked against the mean of
/// the remaining annotators.
std::vector<CorrelationCurve> annotator_curves(const AnnotationSet& ann);

/// Checks monotonicity, range and a_n = 1 (tolerance 1e-9); returns violations.
std::vector<std::string> validate_curve(const CorrelationCurve& curve);

enum class CurveFormat { kCsv, kSvg };

CurveFormat curve_format_from_string(const std::string& name);

/// Maximum number of points drawn per polyline in SVG output.
inline constexpr std::size_t kSvgMaxPoints = 2000;

/// CSV: header `i,<labels...>,upper,lower,baseline`, one row per rank
/// position. SVG: 800x500 chart with the bound region shaded. Output bytes are
/// a pure function of the inputs.
std::string render_curves(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                          const CorrelationCurve& baseline, CurveFormat format);

void emit_curves(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                 const CorrelationCurve& baseline, const std::filesystem::path& path, CurveFormat format);

}  // namespace vsumeval
