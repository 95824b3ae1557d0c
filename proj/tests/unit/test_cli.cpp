#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aquanim/render/frames_json.hpp"
#include "aquanim/scene/canonical_json.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace aquanim;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("aquanim-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path path;
};

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "aquanim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kScene = R"({"version":1,
  "containers":[{"id":"bar","x":0,"width":1,"baseline_y":0},{"id":"solo","x":2,"width":1,"baseline_y":0}],
  "segments":[{"id":"A","color_key":"a","area":1,"container_id":"bar","stack_index":0},
              {"id":"B","color_key":"b","area":2,"container_id":"bar","stack_index":1},
              {"id":"S","color_key":"a","area":4,"container_id":"solo","stack_index":0}]})";

}  // namespace

TEST_CASE("rebin writes svg frames and a stream that check accepts") {
  TempDir tmp;
  aquanim::testing::Gen g(40);
  std::string csv = "sample\n";
  for (double v : g.samples(500, true)) csv += format_number(v) + "\n";
  write(tmp.path / "data.csv", csv);
  const auto out = tmp.path / "out";
  REQUIRE(run({"rebin", "--input", (tmp.path / "data.csv").string(), "--from-bins", "8",
               "--to-bins", "4", "--frames", "12", "--ease", "linear", "--out", out.string()}) == 0);
  CHECK(fs::exists(out / "frame_0000.svg"));
  CHECK(fs::exists(out / "frame_0011.svg"));
  CHECK_FALSE(fs::exists(out / "frame_0012.svg"));
  const auto frames = parse_frames_json(read(out / "frames.json"));
  CHECK(frames.size() == 12);
  CHECK(run({"check", "--frames", (out / "frames.json").string()}) == 0);

  // Corrupt one rect height.
  auto doc = nlohmann::json::parse(read(out / "frames.json"));
  auto& rect = doc["frames"][5]["rects"][3];
  rect["height"] = rect["height"].get<double>() + 0.05;
  write(tmp.path / "bad.json", canonical_dump(doc));
  CHECK(run({"check", "--frames", (tmp.path / "bad.json").string()}) == 2);
  CHECK(run({"check", "--frames", (tmp.path / "bad.json").string(), "--tol", "0.5"}) == 0);
}

TEST_CASE("usage and input errors exit 1") {
  TempDir tmp;
  write(tmp.path / "data.csv", "1\n2\n3\n");
  const auto csv = (tmp.path / "data.csv").string();
  const auto out = (tmp.path / "o").string();
  CHECK(run({"rebin", "--input", csv, "--from-bins", "0", "--to-bins", "3", "--out", out}) == 1);
  CHECK(run({"rebin", "--input", csv, "--from-bins", "2", "--out", out}) == 1);
  CHECK(run({"rebin", "--input", csv, "--from-bins", "2", "--to-bins", "3", "--frames", "1",
             "--out", out}) == 1);
  CHECK(run({"rebin", "--input", csv, "--from-bins", "2", "--to-bins", "3", "--ease", "bounce",
             "--out", out}) == 1);
  CHECK(run({"rebin", "--input", (tmp.path / "missing.csv").string(), "--from-bins", "2",
             "--to-bins", "3", "--out", out}) == 1);
  CHECK(run({}) == 1);
  CHECK(run({"frobnicate"}) == 1);
  CHECK(run({"--help"}) == 0);
  write(tmp.path / "junk.json", "{not json");
  CHECK(run({"check", "--frames", (tmp.path / "junk.json").string()}) == 1);
  write(tmp.path / "one.json", R"({"version":1,"frames":[{"t":0,"rects":[],"guides":[]}]})");
  CHECK(run({"check", "--frames", (tmp.path / "one.json").string()}) == 1);
}

TEST_CASE("align and reshape subcommands") {
  TempDir tmp;
  write(tmp.path / "scene.json", kScene);
  const auto scene = (tmp.path / "scene.json").string();

  const auto align_out = tmp.path / "align";
  REQUIRE(run({"align", "--scene", scene, "--select", "B", "--frames", "5", "--out",
               align_out.string()}) == 0);
  const auto frames = parse_frames_json(read(align_out / "frames.json"));
  CHECK(frames.size() == 5);
  CHECK(read(align_out / "frame_0002.svg").find("#d81bd8") != std::string::npos);
  CHECK(run({"check", "--frames", (align_out / "frames.json").string()}) == 0);
  CHECK(run({"align", "--scene", scene, "--select", "A,B", "--out", align_out.string()}) == 1);
  CHECK(run({"align", "--scene", scene, "--select", "nope", "--out", align_out.string()}) == 1);

  const auto reshape_out = tmp.path / "reshape";
  REQUIRE(run({"reshape", "--scene", scene, "--container", "solo", "--width", "2.5", "--anchor",
               "bottom-center", "--out", reshape_out.string()}) == 0);
  CHECK(parse_frames_json(read(reshape_out / "frames.json")).at(30).guides.size() == 2);
  CHECK(read(reshape_out / "frame_0030.svg").find("guide-start") != std::string::npos);
  CHECK(run({"check", "--frames", (reshape_out / "frames.json").string()}) == 0);
  CHECK(run({"reshape", "--scene", scene, "--container", "bar", "--width", "2", "--out",
             reshape_out.string()}) == 1);
}
