#include "vsumeval/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vsumeval/random.hpp"

namespace vsumeval {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const VideoRecord* DatasetBundle::find_video(const std::string& id) const {
  auto it = std::find_if(videos.begin(), videos.end(), [&](const VideoRecord& v) { return v.video_id == id; });
  return it == videos.end() ? nullptr : &*it;
}

const VideoRecord& DatasetBundle::video(const std::string& id) const {
  if (const auto* v = find_video(id)) return *v;
  throw DataError("unknown video_id '" + id + "'");
}

std::vector<std::string> validate_bundle(const DatasetBundle& bundle) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : bundle.videos) {
    for (auto& e : validate_video(v)) out.push_back("video '" + v.video_id + "': " + e);
    if (!seen.insert(v.video_id).second) out.push_back("duplicate video_id '" + v.video_id + "'");
  }
  for (const auto& [id, ann] : bundle.annotations) {
    const auto* v = bundle.find_video(id);
    if (!v) {
      out.push_back("annotations for unknown video '" + id + "'");
      continue;
    }
    if (ann.video_id != id) out.push_back("annotation set keyed '" + id + "' names video '" + ann.video_id + "'");
    for (auto& e : validate_annotations(ann, *v)) out.push_back("annotations '" + id + "': " + e);
  }
  for (const auto& [id, masks] : bundle.reference_masks) {
    const auto* v = bundle.find_video(id);
    if (!v) {
      out.push_back("reference masks for unknown video '" + id + "'");
      continue;
    }
    for (std::size_t r = 0; r < masks.size(); ++r) {
      for (auto& e : validate_mask(masks[r], *v)) {
        out.push_back("reference " + std::to_string(r) + " of '" + id + "': " + e);
      }
      if (bundle.reference_length_limit) {
        const double limit = *bundle.reference_length_limit * static_cast<double>(v->n_frames);
        if (static_cast<double>(masks[r].popcount()) > limit + 1e-9) {
          out.push_back("reference " + std::to_string(r) + " of '" + id + "' exceeds the declared length limit");
        }
      }
    }
  }
  for (const auto& [id, f] : bundle.features) {
    const auto* v = bundle.find_video(id);
    if (!v) {
      out.push_back("features for unknown video '" + id + "'");
      continue;
    }
    if (f.rows != v->n_frames) out.push_back("features of '" + id + "' have " + std::to_string(f.rows) + " rows");
    if (f.dim == 0) out.push_back("features of '" + id + "' have zero width");
    if (f.data.size() != f.rows * f.dim) out.push_back("features of '" + id + "' have inconsistent storage");
    if (std::any_of(f.data.begin(), f.data.end(), [](double x) { return !std::isfinite(x); })) {
      out.push_back("features of '" + id + "' contain non-finite values");
    }
  }
  if (bundle.reference_length_limit &&
      !(*bundle.reference_length_limit > 0.0 && *bundle.reference_length_limit <= 1.0)) {
    out.emplace_back("reference_length_limit must be in (0, 1]");
  }
  return out;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void throw_if_invalid(const DatasetBundle& bundle, const std::string& source) {
  const auto problems = validate_bundle(bundle);
  if (problems.empty()) return;
  std::string msg = source + ": invalid dataset:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw DataError(msg);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(source + ": " + e.what());
  }
}

// JSON-pointer-style path building for error messages.
std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t idx) { return path + "/" + std::to_string(idx); }

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw DataError("schema violation at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(child(path, key), "missing field");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "non-finite number");
  return v;
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<double> as_number_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], child(path, i)));
  return out;
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  return j;
}

const VideoRecord& known_video(const DatasetBundle& b, const std::string& id, const std::string& path) {
  const auto* v = b.find_video(id);
  if (!v) schema_error(path, "unknown video_id '" + id + "'");
  return *v;
}

std::vector<VideoRecord> parse_videos(const json& arr, const std::string& path) {
  std::vector<VideoRecord> out;
  as_array(arr, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = child(path, i);
    const auto& obj = as_object(arr[i], p);
    const auto& id = require(obj, "video_id", p);
    if (!id.is_string() || id.get<std::string>().empty()) schema_error(child(p, "video_id"), "expected a non-empty string");
    VideoRecord v;
    v.video_id = id.get<std::string>();
    v.n_frames = as_count(require(obj, "n_frames", p), child(p, "n_frames"));
    if (v.n_frames < 1) schema_error(child(p, "n_frames"), "must be >= 1");
    v.fps = as_number(require(obj, "fps", p), child(p, "fps"));
    if (!(v.fps > 0.0)) schema_error(child(p, "fps"), "must be > 0");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

DatasetBundle parse_json_dataset(const std::string& text) {
  const json doc = parse_json(text, "dataset");
  as_object(doc, "");
  DatasetBundle b;
  b.videos = parse_videos(require(doc, "videos", ""), "/videos");
  {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < b.videos.size(); ++i) {
      if (!ids.insert(b.videos[i].video_id).second) {
        schema_error("/videos/" + std::to_string(i) + "/video_id", "duplicate video_id");
      }
    }
  }

  if (auto it = doc.find("annotations"); it != doc.end()) {
    const auto& obj = as_object(*it, "/annotations");
    for (const auto& [id, arr] : obj.items()) {
      const auto p = child("/annotations", id);
      const auto& video = known_video(b, id, p);
      as_array(arr, p);
      if (arr.empty()) schema_error(p, "needs at least one annotator");
      AnnotationSet ann{id, {}};
      for (std::size_t a = 0; a < arr.size(); ++a) {
        auto values = as_number_array(arr[a], child(p, a));
        if (values.size() != video.n_frames) {
          schema_error(child(p, a), "length " + std::to_string(values.size()) + " != n_frames " +
                                        std::to_string(video.n_frames));
        }
        ann.annotators.push_back(FrameScores{id, std::move(values)});
      }
      b.annotations.emplace(id, std::move(ann));
    }
  }

  if (auto it = doc.find("reference_masks"); it != doc.end()) {
    const auto& obj = as_object(*it, "/reference_masks");
    for (const auto& [id, arr] : obj.items()) {
      const auto p = child("/reference_masks", id);
      const auto& video = known_video(b, id, p);
      as_array(arr, p);
      std::vector<SummaryMask> masks;
      for (std::size_t r = 0; r < arr.size(); ++r) {
        const auto rp = child(p, r);
        as_array(arr[r], rp);
        if (arr[r].size() != video.n_frames) {
          schema_error(rp, "mask length " + std::to_string(arr[r].size()) + " != n_frames " +
                               std::to_string(video.n_frames));
        }
        SummaryMask m{id, {}};
        m.mask.reserve(arr[r].size());
        for (std::size_t i = 0; i < arr[r].size(); ++i) {
          const auto& x = arr[r][i];
          if (!x.is_number_integer() || (x.get<std::int64_t>() != 0 && x.get<std::int64_t>() != 1)) {
            schema_error(child(rp, i), "expected 0 or 1");
          }
          m.mask.push_back(static_cast<std::uint8_t>(x.get<int>()));
        }
        masks.push_back(std::move(m));
      }
      b.reference_masks.emplace(id, std::move(masks));
    }
  }

  if (auto it = doc.find("features"); it != doc.end()) {
    const auto& obj = as_object(*it, "/features");
    for (const auto& [id, arr] : obj.items()) {
      const auto p = child("/features", id);
      const auto& video = known_video(b, id, p);
      as_array(arr, p);
      if (arr.size() != video.n_frames) {
        schema_error(p, std::to_string(arr.size()) + " rows != n_frames " + std::to_string(video.n_frames));
      }
      FeatureMatrix f;
      f.rows = arr.size();
      for (std::size_t r = 0; r < arr.size(); ++r) {
        auto row = as_number_array(arr[r], child(p, r));
        if (r == 0) {
          if (row.empty()) schema_error(child(p, r), "feature rows must be non-empty");
          f.dim = row.size();
          f.data.reserve(f.rows * f.dim);
        } else if (row.size() != f.dim) {
          schema_error(child(p, r), "row width " + std::to_string(row.size()) + " != " + std::to_string(f.dim));
        }
        f.data.insert(f.data.end(), row.begin(), row.end());
      }
      b.features.emplace(id, std::move(f));
    }
  }

  if (auto it = doc.find("reference_length_limit"); it != doc.end() && !it->is_null()) {
    b.reference_length_limit = as_number(*it, "/reference_length_limit");
  }

  throw_if_invalid(b, "dataset");
  return b;
}

DatasetBundle load_json_dataset(const std::filesystem::path& path) {
  try {
    return parse_json_dataset(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string dump_json_dataset(const DatasetBundle& bundle) {
  ordered_json doc;
  doc["videos"] = ordered_json::array();
  for (const auto& v : bundle.videos) {
    ordered_json jv;
    jv["video_id"] = v.video_id;
    jv["n_frames"] = v.n_frames;
    jv["fps"] = v.fps;
    doc["videos"].push_back(std::move(jv));
  }
  doc["annotations"] = ordered_json::object();
  for (const auto& [id, ann] : bundle.annotations) {
    auto& arr = doc["annotations"][id] = ordered_json::array();
    for (const auto& a : ann.annotators) arr.push_back(a.values);
  }
  if (!bundle.reference_masks.empty()) {
    doc["reference_masks"] = ordered_json::object();
    for (const auto& [id, masks] : bundle.reference_masks) {
      auto& arr = doc["reference_masks"][id] = ordered_json::array();
      for (const auto& m : masks) {
        ordered_json bits = ordered_json::array();
        for (auto x : m.mask) bits.push_back(static_cast<int>(x));
        arr.push_back(std::move(bits));
      }
    }
  }
  if (!bundle.features.empty()) {
    doc["features"] = ordered_json::object();
    for (const auto& [id, f] : bundle.features) {
      auto& arr = doc["features"][id] = ordered_json::array();
      for (std::size_t r = 0; r < f.rows; ++r) {
        auto row = f.row(r);
        arr.push_back(std::vector<double>(row.begin(), row.end()));
      }
    }
  }
  if (bundle.reference_length_limit) doc["reference_length_limit"] = *bundle.reference_length_limit;
  return doc.dump() + "\n";
}

void write_json_dataset(const DatasetBundle& bundle, const std::filesystem::path& path) {
  write_file(path, dump_json_dataset(bundle));
}

DatasetBundle load_tvsum_tsv(const std::filesystem::path& tsv_path, const std::filesystem::path& videos_json_path) {
  DatasetBundle b;
  {
    const json meta = parse_json(read_file(videos_json_path), videos_json_path.string());
    try {
      b.videos = parse_videos(meta, "");
    } catch (const DataError& e) {
      throw DataError(videos_json_path.string() + ": " + e.what());
    }
  }

  std::ifstream in(tsv_path, std::ios::binary);
  if (!in) throw DataError("cannot open " + tsv_path.string());
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw DataError(tsv_path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) fail("expected 3 tab-separated fields");
    if (line.find('\t', tab2 + 1) != std::string::npos) fail("expected 3 tab-separated fields, found more");
    const std::string id = line.substr(0, tab1);
    if (id.empty()) fail("empty video_id");
    const auto* video = b.find_video(id);
    if (!video) fail("no metadata for video_id '" + id + "'");

    std::vector<double> scores;
    std::stringstream fields(line.substr(tab2 + 1));
    std::string tok;
    while (std::getline(fields, tok, ',')) {
      const auto first = tok.find_first_not_of(' ');
      const auto last = tok.find_last_not_of(' ');
      if (first == std::string::npos) fail("empty score");
      tok = tok.substr(first, last - first + 1);
      int value = 0;
      std::size_t used = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail("score '" + tok + "' is not an integer");
      }
      if (used != tok.size()) fail("score '" + tok + "' is not an integer");
      if (value < 1 || value > 5) fail("score " + tok + " outside 1..5");
      scores.push_back(value);
    }
    if (scores.empty()) fail("no scores");

    FrameScores frames;
    try {
      frames = scores.size() == video->n_frames ? FrameScores{id, std::move(scores)}
                                                : expand_shot_scores(scores, kTvsumShotSeconds, *video);
    } catch (const DataError& e) {
      fail(e.what());
    }
    auto& ann = b.annotations[id];
    ann.video_id = id;
    ann.annotators.push_back(std::move(frames));
  }
  throw_if_invalid(b, tsv_path.string());
  return b;
}

DatasetBundle load_tvsum_tsv(const std::filesystem::path& tsv_path) {
  return load_tvsum_tsv(tsv_path, tsv_path.parent_path() / "videos.json");
}

std::map<std::string, FrameScores> parse_prediction_scores(const std::string& text, const DatasetBundle& bundle) {
  const json doc = parse_json(text, "predictions");
  as_object(doc, "");
  std::map<std::string, FrameScores> out;
  for (const auto& [id, arr] : doc.items()) {
    const auto p = child("", id);
    const auto* video = bundle.find_video(id);
    if (!video) schema_error(p, "unknown video_id '" + id + "'");
    auto values = as_number_array(arr, p);
    if (values.size() != video->n_frames) {
      schema_error(p, "length " + std::to_string(values.size()) + " != n_frames " + std::to_string(video->n_frames));
    }
    out.emplace(id, FrameScores{id, std::move(values)});
  }
  std::string missing;
  for (const auto& v : bundle.videos) {
    if (!out.count(v.video_id)) missing += (missing.empty() ? "" : ", ") + v.video_id;
  }
  if (!missing.empty()) throw DataError("predictions missing for videos: " + missing);
  return out;
}

std::map<std::string, FrameScores> load_prediction_scores(const std::filesystem::path& path,
                                                          const DatasetBundle& bundle) {
  try {
    return parse_prediction_scores(read_file(path), bundle);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_prediction_scores(const std::map<std::string, FrameScores>& scores, const std::filesystem::path& path) {
  ordered_json doc = ordered_json::object();
  for (const auto& [id, s] : scores) doc[id] = s.values;
  write_file(path, doc.dump() + "\n");
}

// Synthetic data -------------------------------------------------------------

void validate_synth_config(const SynthConfig& cfg) {
  auto bad = [](const std::string& what) { throw std::invalid_argument("synth config: " + what); };
  if (cfg.n_videos < 1) bad("n_videos must be >= 1");
  if (cfg.n_annotators < 1) bad("n_annotators must be >= 1");
  if (cfg.n_events < 1) bad("n_events must be >= 1");
  if (cfg.feature_dim < 1) bad("feature_dim must be >= 1");
  if (!(cfg.fps > 0.0)) bad("fps must be > 0");
  if (!(cfg.base_noise >= 0.0) || !std::isfinite(cfg.base_noise)) bad("base_noise must be >= 0");
  if (!(cfg.outlier_fraction >= 0.0 && cfg.outlier_fraction <= 1.0)) bad("outlier_fraction must be in [0, 1]");
  if (cfg.n_frames_max < cfg.n_frames_min) bad("n_frames_max < n_frames_min");
  // Each of the 2 * n_events + 1 content pieces needs a few frames.
  if (cfg.n_frames_min < 4 * (2 * cfg.n_events + 1)) {
    bad("n_frames_min must be at least " + std::to_string(4 * (2 * cfg.n_events + 1)) + " for " +
        std::to_string(cfg.n_events) + " events");
  }
}

SynthConfig parse_synth_config(const std::string& json_text) {
  const json doc = parse_json(json_text, "synth config");
  as_object(doc, "");
  SynthConfig cfg;
  static const std::set<std::string> kKnown = {"n_videos",   "n_frames_min", "n_frames_max",     "fps",
                                               "n_annotators", "n_events",   "base_noise", "outlier_fraction",
                                               "feature_dim", "seed"};
  for (const auto& [key, _] : doc.items()) {
    if (!kKnown.count(key)) schema_error("/" + key, "unknown field");
  }
  auto count = [&](const char* key, std::size_t& field) {
    if (auto it = doc.find(key); it != doc.end()) field = as_count(*it, std::string("/") + key);
  };
  auto real = [&](const char* key, double& field) {
    if (auto it = doc.find(key); it != doc.end()) field = as_number(*it, std::string("/") + key);
  };
  count("n_videos", cfg.n_videos);
  count("n_frames_min", cfg.n_frames_min);
  count("n_frames_max", cfg.n_frames_max);
  real("fps", cfg.fps);
  count("n_annotators", cfg.n_annotators);
  count("n_events", cfg.n_events);
  real("base_noise", cfg.base_noise);
  real("outlier_fraction", cfg.outlier_fraction);
  count("feature_dim", cfg.feature_dim);
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
      schema_error("/seed", "expected an unsigned integer");
    }
    cfg.seed = it->get<std::uint64_t>();
  }
  try {
    validate_synth_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  return cfg;
}

std::string dump_synth_config(const SynthConfig& cfg) {
  ordered_json j;
  j["n_videos"] = cfg.n_videos;
  j["n_frames_min"] = cfg.n_frames_min;
  j["n_frames_max"] = cfg.n_frames_max;
  j["fps"] = cfg.fps;
  j["n_annotators"] = cfg.n_annotators;
  j["n_events"] = cfg.n_events;
  j["base_noise"] = cfg.base_noise;
  j["outlier_fraction"] = cfg.outlier_fraction;
  j["feature_dim"] = cfg.feature_dim;
  j["seed"] = cfg.seed;
  return j.dump();
}

namespace {

std::string synth_video_id(std::size_t index) {
  std::ostringstream os;
  os << "synth_" << std::setw(3) << std::setfill('0') << index;
  return os.str();
}

double quantize_score(double x) { return std::clamp(std::round(x), 1.0, 5.0); }

}  // namespace

SynthOutput synth_dataset_with_truth(const SynthConfig& cfg) {
  validate_synth_config(cfg);
  SynthOutput out;
  const auto n_outliers =
      static_cast<std::size_t>(std::llround(cfg.outlier_fraction * static_cast<double>(cfg.n_annotators)));
  for (std::size_t a = cfg.n_annotators - n_outliers; a < cfg.n_annotators; ++a) out.outlier_annotators.push_back(a);

  const std::size_t pieces = 2 * cfg.n_events + 1;
  for (std::size_t v = 0; v < cfg.n_videos; ++v) {
    const std::string id = synth_video_id(v);
    RandomEngine rng(derive_seed(cfg.seed, "synth", id));
    const std::size_t n = cfg.n_frames_min + uniform_below(rng, cfg.n_frames_max - cfg.n_frames_min + 1);
    VideoRecord video{id, n, cfg.fps};

    // Alternating background / event pieces with random relative widths.
    std::vector<double> weights(pieces);
    for (auto& w : weights) w = 0.5 + uniform01(rng);
    const double total_w = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<std::size_t> bounds{0};
    for (std::size_t p = 0; p + 1 < pieces; ++p) {
      const auto len = static_cast<std::size_t>(std::floor(static_cast<double>(n) * weights[p] / total_w));
      bounds.push_back(bounds.back() + len);
    }
    bounds.push_back(n);

    // Latent importance in [1, 5]: low baseline plus one bump per event piece.
    const auto shot_frames = static_cast<std::size_t>(std::max(1.0, std::round(kTvsumShotSeconds * cfg.fps)));
    const std::size_t shots = (n + shot_frames - 1) / shot_frames;
    std::vector<double> latent(shots);
    for (std::size_t s = 0; s < shots; ++s) {
      const double t = (static_cast<double>(s) + 0.5) * static_cast<double>(shot_frames);
      double profile = 0.1;
      for (std::size_t p = 1; p < pieces; p += 2) {
        const double centre = 0.5 * static_cast<double>(bounds[p] + bounds[p + 1]);
        const double width = std::max(1.0, 0.25 * static_cast<double>(bounds[p + 1] - bounds[p]));
        const double z = (t - centre) / width;
        profile += 0.9 * std::exp(-0.5 * z * z);
      }
      latent[s] = 1.0 + 4.0 * std::min(profile, 1.0);
    }

    AnnotationSet ann{id, {}};
    for (std::size_t a = 0; a < cfg.n_annotators; ++a) {
      const bool outlier = a >= cfg.n_annotators - n_outliers;
      std::vector<double> shot_scores(shots);
      for (std::size_t s = 0; s < shots; ++s) {
        const double base = outlier ? 6.0 - latent[s] : latent[s];
        const double noise = cfg.base_noise > 0.0 ? cfg.base_noise * standard_normal(rng) : 0.0;
        shot_scores[s] = quantize_score(base + noise);
      }
      ann.annotators.push_back(expand_shot_scores(shot_scores, kTvsumShotSeconds, video));
    }

    FeatureMatrix features{n, cfg.feature_dim, std::vector<double>(n * cfg.feature_dim)};
    for (std::size_t p = 0; p < pieces; ++p) {
      std::vector<double> centre(cfg.feature_dim);
      for (auto& c : centre) c = standard_normal(rng);
      for (std::size_t i = bounds[p]; i < bounds[p + 1]; ++i) {
        std::copy(centre.begin(), centre.end(), features.data.begin() + static_cast<std::ptrdiff_t>(i * cfg.feature_dim));
      }
    }

    out.bundle.videos.push_back(video);
    out.bundle.annotations.emplace(id, std::move(ann));
    out.bundle.features.emplace(id, std::move(features));
    out.event_boundaries.emplace(id, std::move(bounds));
  }
  return out;
}

DatasetBundle synth_dataset(const SynthConfig& cfg) { return synth_dataset_with_truth(cfg).bundle; }

}  // namespace vsumeval
