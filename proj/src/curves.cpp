#include "vsumeval/curves.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vsumeval {

FrameScores mean_reference_scores(const AnnotationSet& ann) {
  if (ann.annotators.empty()) throw DataError("mean_reference_scores: no annotators for " + ann.video_id);
  const std::size_t n = ann.n_frames();
  FrameScores out{ann.video_id, std::vector<double>(n, 0.0)};
  for (const auto& a : ann.annotators) {
    if (a.size() != n) throw DataError("mean_reference_scores: annotators disagree on length");
    for (std::size_t i = 0; i < n; ++i) out.values[i] += a.values[i];
  }
  const double count = static_cast<double>(ann.annotators.size());
  for (auto& v : out.values) v /= count;
  return out;
}

namespace {

double checked_total(const FrameScores& ref) {
  double total = 0.0;
  for (double v : ref.values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DataError("correlation curve: reference scores must be finite and non-negative");
    }
    total += v;
  }
  if (!(total > 0.0)) throw DataError("correlation curve: reference scores sum to zero for " + ref.video_id);
  return total;
}

CorrelationCurve accumulate_in_order(const FrameScores& ref, std::span<const std::size_t> order, std::string label) {
  checked_total(ref);
  CorrelationCurve curve{ref.video_id, std::move(label), {}};
  curve.points.reserve(order.size());
  double prefix = 0.0;
  for (auto idx : order) {
    prefix += ref.values[idx];
    curve.points.push_back(prefix);
  }
  // Normalising by the final prefix (same summation order) makes a_n exactly 1.
  const double total = prefix;
  for (auto& p : curve.points) p /= total;
  return curve;
}

std::vector<std::size_t> descending_order(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

CorrelationCurve accumulate_curve(const FrameScores& pred, const FrameScores& ref_mean, const std::string& label) {
  if (pred.size() != ref_mean.size()) {
    throw DataError("accumulate_curve: prediction has " + std::to_string(pred.size()) + " frames, reference has " +
                    std::to_string(ref_mean.size()));
  }
  for (double v : pred.values) {
    if (!std::isfinite(v)) throw DataError("accumulate_curve: non-finite prediction score");
  }
  return accumulate_in_order(ref_mean, descending_order(pred.values), label);
}

CurveBounds curve_bounds(const FrameScores& ref_mean) {
  auto order = descending_order(ref_mean.values);
  CurveBounds out;
  out.upper = accumulate_in_order(ref_mean, order, "upper");
  std::vector<std::size_t> ascending(order.size());
  std::iota(ascending.begin(), ascending.end(), std::size_t{0});
  std::stable_sort(ascending.begin(), ascending.end(),
                   [&](std::size_t a, std::size_t b) { return ref_mean.values[a] < ref_mean.values[b]; });
  out.lower = accumulate_in_order(ref_mean, ascending, "lower");
  return out;
}

CorrelationCurve random_baseline(std::size_t n) {
  if (n < 1) throw std::invalid_argument("random_baseline: n must be >= 1");
  CorrelationCurve curve{"", "baseline", std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) curve.points[i] = static_cast<double>(i + 1) / static_cast<double>(n);
  return curve;
}

std::vector<CorrelationCurve> annotator_curves(const AnnotationSet& ann) {
  const std::size_t count = ann.annotators.size();
  if (count < 2) throw DataError("annotator_curves: needs at least two annotators for " + ann.video_id);
  const std::size_t n = ann.n_frames();
  FrameScores sum{ann.video_id, std::vector<double>(n, 0.0)};
  for (const auto& a : ann.annotators) {
    if (a.size() != n) throw DataError("annotator_curves: annotators disagree on length");
    for (std::size_t i = 0; i < n; ++i) sum.values[i] += a.values[i];
  }
  std::vector<CorrelationCurve> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    FrameScores rest{ann.video_id, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      rest.values[i] = (sum.values[i] - ann.annotators[k].values[i]) / static_cast<double>(count - 1);
    }
    out.push_back(accumulate_curve(ann.annotators[k], rest, "annotator_" + std::to_string(k)));
  }
  return out;
}

std::vector<std::string> validate_curve(const CorrelationCurve& curve) {
  std::vector<std::string> out;
  if (curve.points.empty()) {
    out.emplace_back("curve has no points");
    return out;
  }
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const double p = curve.points[i];
    if (!(p >= -1e-12 && p <= 1.0 + 1e-9)) {
      out.push_back("point " + std::to_string(i) + " outside [0, 1]");
      break;
    }
    if (i > 0 && p < curve.points[i - 1]) {
      out.push_back("curve decreases at point " + std::to_string(i));
      break;
    }
  }
  if (std::abs(curve.points.back() - 1.0) > 1e-9) out.emplace_back("final point is not 1");
  return out;
}

CurveFormat curve_format_from_string(const std::string& name) {
  if (name == "csv") return CurveFormat::kCsv;
  if (name == "svg") return CurveFormat::kSvg;
  throw std::invalid_argument("unknown curve format '" + name + "' (expected csv or svg)");
}

namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string fixed2(double v) {
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return {buf.data(), res.ptr};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 10> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Plot {
  static constexpr double kWidth = 800, kHeight = 500;
  static constexpr double kLeft = 60, kRight = 180, kTop = 20, kBottom = 50;
  std::size_t n;

  double x(std::size_t i) const {
    const double span = n > 1 ? static_cast<double>(n - 1) : 1.0;
    return kLeft + (kWidth - kLeft - kRight) * static_cast<double>(i) / span;
  }
  double y(double a) const { return kTop + (kHeight - kTop - kBottom) * (1.0 - a); }
};

std::vector<std::size_t> sample_indices(std::size_t n) {
  const std::size_t stride = (n + kSvgMaxPoints - 1) / kSvgMaxPoints;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

std::string polyline_points(const Plot& plot, const std::vector<double>& pts, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ' ';
    out += fixed2(plot.x(idx[k])) + ',' + fixed2(plot.y(pts[idx[k]]));
  }
  return out;
}

std::string render_svg(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                       const CorrelationCurve& baseline) {
  const std::size_t n = baseline.points.size();
  const Plot plot{n};
  const auto idx = sample_indices(n);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\" "
        "viewBox=\"0 0 800 500\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";

  // Shaded region between the lower and upper bounds.
  os << "<polygon class=\"bounds\" fill=\"#add8e6\" fill-opacity=\"0.5\" stroke=\"none\" points=\""
     << polyline_points(plot, bounds.upper.points, idx);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    os << ' ' << fixed2(plot.x(*it)) << ',' << fixed2(plot.y(bounds.lower.points[*it]));
  }
  os << "\"/>\n";

  // Axes and ticks.
  os << "<g stroke=\"#000000\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fixed2(Plot::kLeft) << "\" y1=\"" << fixed2(plot.y(0)) << "\" x2=\""
     << fixed2(Plot::kWidth - Plot::kRight) << "\" y2=\"" << fixed2(plot.y(0)) << "\"/>\n"
     << "<line x1=\"" << fixed2(Plot::kLeft) << "\" y1=\"" << fixed2(plot.y(0)) << "\" x2=\""
     << fixed2(Plot::kLeft) << "\" y2=\"" << fixed2(plot.y(1)) << "\"/>\n"
     << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double a = t / 4.0;
    os << "<text x=\"" << fixed2(Plot::kLeft - 8) << "\" y=\"" << fixed2(plot.y(a) + 4)
       << "\" text-anchor=\"end\">" << fixed2(a) << "</text>\n";
  }
  os << "<text x=\"" << fixed2(plot.x(0)) << "\" y=\"" << fixed2(plot.y(0) + 16) << "\" text-anchor=\"middle\">1</text>\n"
     << "<text x=\"" << fixed2(plot.x(n - 1)) << "\" y=\"" << fixed2(plot.y(0) + 16) << "\" text-anchor=\"middle\">" << n
     << "</text>\n"
     << "<text x=\"" << fixed2((Plot::kLeft + Plot::kWidth - Plot::kRight) / 2) << "\" y=\"" << fixed2(Plot::kHeight - 10)
     << "\" text-anchor=\"middle\">frames sorted by predicted score</text>\n"
     << "</g>\n";

  os << "<polyline class=\"baseline\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" "
        "points=\""
     << polyline_points(plot, baseline.points, idx) << "\"/>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    os << "<polyline class=\"curve\" fill=\"none\" stroke=\"" << kPalette[c % kPalette.size()]
       << "\" stroke-width=\"1.5\" points=\"" << polyline_points(plot, curves[c].points, idx) << "\"/>\n";
  }

  // Legend.
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  double ly = Plot::kTop + 10;
  const double lx = Plot::kWidth - Plot::kRight + 15;
  os << "<rect x=\"" << fixed2(lx) << "\" y=\"" << fixed2(ly - 8) << "\" width=\"20\" height=\"10\" fill=\"#add8e6\"/>"
     << "<text x=\"" << fixed2(lx + 26) << "\" y=\"" << fixed2(ly + 1) << "\">bounds</text>\n";
  ly += 16;
  os << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly - 3) << "\" x2=\"" << fixed2(lx + 20) << "\" y2=\""
     << fixed2(ly - 3) << "\" stroke=\"#000000\" stroke-dasharray=\"6,4\"/>"
     << "<text x=\"" << fixed2(lx + 26) << "\" y=\"" << fixed2(ly + 1) << "\">" << xml_escape(baseline.label)
     << "</text>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    ly += 16;
    os << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly - 3) << "\" x2=\"" << fixed2(lx + 20) << "\" y2=\""
       << fixed2(ly - 3) << "\" stroke=\"" << kPalette[c % kPalette.size()] << "\"/>"
       << "<text x=\"" << fixed2(lx + 26) << "\" y=\"" << fixed2(ly + 1) << "\">" << xml_escape(curves[c].label)
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_csv(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                       const CorrelationCurve& baseline) {
  std::ostringstream os;
  os << 'i';
  for (const auto& c : curves) os << ',' << csv_field(c.label);
  os << ",upper,lower,baseline\n";
  for (std::size_t i = 0; i < baseline.points.size(); ++i) {
    os << i + 1;
    for (const auto& c : curves) os << ',' << shortest(c.points[i]);
    os << ',' << shortest(bounds.upper.points[i]) << ',' << shortest(bounds.lower.points[i]) << ','
       << shortest(baseline.points[i]) << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_curves(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                          const CorrelationCurve& baseline, CurveFormat format) {
  const std::size_t n = baseline.points.size();
  if (n == 0) throw DataError("render_curves: empty baseline");
  auto check = [n](const CorrelationCurve& c) {
    if (c.points.size() != n) throw DataError("render_curves: curve '" + c.label + "' has a different length");
  };
  for (const auto& c : curves) check(c);
  check(bounds.upper);
  check(bounds.lower);
  return format == CurveFormat::kCsv ? render_csv(curves, bounds, baseline) : render_svg(curves, bounds, baseline);
}

void emit_curves(std::span<const CorrelationCurve> curves, const CurveBounds& bounds,
                 const CorrelationCurve& baseline, const std::filesystem::path& path, CurveFormat format) {
  const auto text = render_curves(curves, bounds, baseline, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace vsumeval
