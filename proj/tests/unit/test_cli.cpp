#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "vsumeval_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// Runs the CLI inside the work directory; returns the exit status.
int run(const std::string& args, std::string* out = nullptr, std::string* err = nullptr) {
  const auto o = workdir() / "stdout.txt", e = workdir() / "stderr.txt";
  const std::string cmd = "cd '" + workdir().string() + "' && '" VSUMEVAL_CLI "' " + args + " >'" + o.string() + "' 2>'" +
                          e.string() + "'";
  const int status = std::system(cmd.c_str());
  if (out) *out = slurp(o);
  if (err) *err = slurp(e);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void make_synth(const std::string& name, const std::string& config) {
  put(workdir() / (name + ".cfg.json"), config);
  REQUIRE(run("synth --config " + name + ".cfg.json --out " + name + ".json") == 0);
}

}  // namespace

TEST_CASE("version and help") {
  std::string out;
  CHECK(run("--version", &out) == 0);
  CHECK(out.find("vsumeval 0.1.0") != std::string::npos);
  for (const char* sub : {"segment", "randtest", "rankeval", "curve", "synth", "validate"}) {
    CHECK(run(std::string(sub) + " --help", &out) == 0);
    CHECK(out.find("--") != std::string::npos);
  }
  CHECK(run("randtest --help", &out) == 0);
  CHECK(out.find("--trials") != std::string::npos);
  CHECK(out.find("100") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("segment --bogus") == 2);
  CHECK(run("nosuchcommand") == 2);
  CHECK(run("randtest --dataset missing.json --out r.json") == 2);
  CHECK(run("segment --dataset missing.json --method zigzag --out s.json") == 2);
}

TEST_CASE("synth is deterministic and echoes its config") {
  make_synth("s7", R"({"n_videos":3,"seed":7,"n_frames_min":400,"n_frames_max":500})");
  std::string out;
  REQUIRE(run("synth --config s7.cfg.json --out s7b.json", &out) == 0);
  CHECK(nlohmann::json::parse(out)["config"]["seed"] == 7);
  CHECK(slurp(workdir() / "s7.json") == slurp(workdir() / "s7b.json"));
  CHECK(nlohmann::json::parse(slurp(workdir() / "s7.json"))["videos"].size() == 3);
  CHECK(run("validate --dataset s7.json") == 0);
  put(workdir() / "bad.cfg.json", R"({"n_videos":0})");
  CHECK(run("synth --config bad.cfg.json --out x.json") == 2);
}

TEST_CASE("segment") {
  make_synth("seg", R"({"n_videos":2,"seed":1,"n_frames_min":400,"n_frames_max":500})");
  REQUIRE(run("segment --dataset seg.json --method two-peak --seed 7 --out a.json") == 0);
  REQUIRE(run("segment --dataset seg.json --method two-peak --seed 7 --out b.json") == 0);
  CHECK(slurp(workdir() / "a.json") == slurp(workdir() / "b.json"));

  REQUIRE(run("segment --dataset seg.json --method uniform --out u.json") == 0);
  const auto u = nlohmann::json::parse(slurp(workdir() / "u.json"));
  CHECK(u["config"]["seed"] == 0);
  for (const auto& [id, b] : u["segmentations"].items()) {
    for (std::size_t k = 0; k + 2 < b.size(); ++k) CHECK(b[k + 1].get<int>() - b[k].get<int>() == 60);
  }

  nlohmann::json nofeat;
  nofeat["videos"] = {{{"video_id", "v"}, {"n_frames", 100}, {"fps", 30}}};
  nofeat["annotations"]["v"] = {std::vector<int>(100, 1)};
  put(workdir() / "nofeat.json", nofeat.dump());
  std::string err;
  CHECK(run("segment --dataset nofeat.json --method kts --out k.json", nullptr, &err) == 2);
  CHECK(err.find("features") != std::string::npos);
}

TEST_CASE("randtest") {
  make_synth("rt", R"({"n_videos":2,"seed":2,"n_frames_min":400,"n_frames_max":500})");
  std::string out;
  REQUIRE(run("randtest --dataset rt.json --trials 1 --segmenter uniform --out r1.json", &out) == 0);
  CHECK(out.find("random,uniform,mean,0.15,") != std::string::npos);
  const auto row = slurp(workdir() / "r1.csv");
  std::vector<std::string> cols;
  std::stringstream line(row.substr(row.find('\n') + 1));
  for (std::string c; std::getline(line, c, ',');) cols.push_back(c);
  REQUIRE(cols.size() == 8);
  CHECK(std::stod(cols[5]) == 0.0);
  CHECK(std::stod(cols[7]) == 0.0);

  REQUIRE(run("randtest --dataset rt.json --trials 5 --budget 0.15 0.25 0.35 --out sweep.json") == 0);
  const auto j = nlohmann::json::parse(slurp(workdir() / "sweep.json"));
  CHECK(j["reports"].size() == 3);
  CHECK(j["reports"][0]["config"]["trials"] == 5);
  CHECK(j["reports"][2]["config"]["budget_fraction"] == 0.35);

  REQUIRE(run("randtest --dataset rt.json --trials 8 --jobs 1 --out j1.json") == 0);
  REQUIRE(run("randtest --dataset rt.json --trials 8 --jobs 4 --out j4.json") == 0);
  CHECK(slurp(workdir() / "j1.json") == slurp(workdir() / "j4.json"));
  CHECK(slurp(workdir() / "j1.csv") == slurp(workdir() / "j4.csv"));

  CHECK(run("randtest --dataset rt.json --trials 0 --out z.json") == 2);
  CHECK(run("randtest --dataset rt.json --scorer file --out z.json") == 2);
}

TEST_CASE("rankeval") {
  make_synth("one", R"({"n_videos":2,"seed":3,"n_annotators":1,"n_frames_min":400,"n_frames_max":500})");
  const auto d = nlohmann::json::parse(slurp(workdir() / "one.json"));
  nlohmann::json pred = nlohmann::json::object();
  for (const auto& [id, ann] : d["annotations"].items()) pred[id] = ann[0];
  put(workdir() / "copy.json", pred.dump());
  REQUIRE(run("rankeval --dataset one.json --pred copy.json --out re.csv") == 0);
  const auto csv = slurp(workdir() / "re.csv");
  CHECK(csv == "method,tau,rho\ncopy,1.0,1.0\n");

  make_synth("clean", R"({"n_videos":2,"seed":3,"base_noise":0,"n_frames_min":400,"n_frames_max":500})");
  REQUIRE(run("rankeval --dataset clean.json --loo --out loo.csv") == 0);
  CHECK(slurp(workdir() / "loo.csv") == "method,tau,rho\nhuman-loo,1.0,1.0\n");
  CHECK(run("rankeval --dataset clean.json --out none.csv") == 2);
}

TEST_CASE("curve") {
  make_synth("cv", R"({"n_videos":2,"seed":4,"outlier_fraction":0.2,"n_frames_min":400,"n_frames_max":500})");
  REQUIRE(run("curve --dataset cv.json --format svg --out svg1") == 0);
  REQUIRE(run("curve --dataset cv.json --format svg --out svg2") == 0);
  CHECK(slurp(workdir() / "svg1" / "synth_000.svg") == slurp(workdir() / "svg2" / "synth_000.svg"));
  CHECK(fs::exists(workdir() / "svg1" / "synth_001.svg"));
  REQUIRE(run("curve --dataset cv.json --video synth_000 --format csv --out c.csv") == 0);
  CHECK(slurp(workdir() / "c.csv").rfind("i,annotator_0,", 0) == 0);
  CHECK(run("curve --dataset cv.json --video nope --out c.csv") == 2);
}
