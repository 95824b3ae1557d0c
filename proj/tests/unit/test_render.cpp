#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "aquanim/core/errors.hpp"
#include "aquanim/plan/planners.hpp"
#include "aquanim/render/frames_json.hpp"
#include "aquanim/render/pipeline.hpp"
#include "aquanim/render/svg.hpp"
#include "support.hpp"

using namespace aquanim;
using aquanim::testing::Gen;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::vector<Frame> random_stream(Gen& g) {
  std::vector<Frame> frames(g.index(1, 6));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    auto& f = frames[i];
    f.t = i / double(frames.size());
    for (std::size_t k = g.index(0, 10); k > 0; --k) {
      f.rects.push_back({g.uniform(-1e3, 1e3), g.normal(), g.uniform(0, 3), g.uniform(0, 1e-3),
                         "k" + std::to_string(k % 3), g.coin() ? "" : "seg\"" + std::to_string(k)});
    }
    for (std::size_t k = g.index(0, 3); k > 0; --k) {
      f.guides.push_back({"c" + std::to_string(k), g.normal() * 1e10,
                          g.coin() ? GuideRole::Start : GuideRole::End});
    }
  }
  return frames;
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_coord") {
  CHECK(format_coord(1.0) == "1");
  CHECK(format_coord(2.5) == "2.5");
  CHECK(format_coord(1.23456) == "1.235");
  CHECK(format_coord(-0.0001) == "0");
  CHECK(format_coord(-12.3) == "-12.3");
}

TEST_CASE("empty frame renders background and axes only") {
  const auto svg = render_svg(Frame{}, RenderConfig{});
  CHECK(svg.starts_with("<?xml"));
  CHECK(count(svg, "<rect") == 1);  // background
  CHECK(count(svg, "class=\"axis\"") == 2);
  CHECK(svg.ends_with("</svg>\n"));
}

TEST_CASE("unit square fills a marginless viewport") {
  Frame f;
  f.rects.push_back({0, 0, 1, 1, "k", "sq"});
  RenderConfig cfg;
  cfg.viewport = {100, 100, 0};
  const auto svg = render_svg(f, cfg);
  CHECK(svg.find(R"(data-segment="sq" x="0" y="0" width="100" height="100" fill="#0072b2")") !=
        std::string::npos);
}

TEST_CASE("y axis is flipped and the scale is uniform") {
  Frame f;
  f.rects.push_back({0, 0, 2, 1, "k", "low"});
  f.rects.push_back({0, 1, 1, 1, "k", "high"});
  RenderConfig cfg;
  cfg.viewport = {220, 120, 10};
  const auto svg = render_svg(f, cfg);
  // bbox 2 x 2, plot 200 x 100 -> scale 50, anchored bottom-left.
  CHECK(svg.find(R"(data-segment="low" x="10" y="60" width="100" height="50")") !=
        std::string::npos);
  CHECK(svg.find(R"(data-segment="high" x="10" y="10" width="50" height="50")") !=
        std::string::npos);
}

TEST_CASE("colors follow first-seen keys, highlights use the accent") {
  Frame f;
  f.rects.push_back({0, 0, 1, 1, "second", "a"});
  f.rects.push_back({1, 0, 1, 1, "first", "b"});
  f.rects.push_back({2, 0, 1, 0, "", ""});
  RenderConfig cfg;
  cfg.highlight = {"b"};
  const auto layout = make_layout(std::span<const Frame>(&f, 1), cfg);
  CHECK(layout.colors.at("second") == "#0072b2");
  CHECK(layout.colors.at("first") == "#e69f00");
  const auto svg = render_svg(f, cfg, layout);
  CHECK(svg.find(std::string("fill=\"") + kAccentColor + "\"") != std::string::npos);
  CHECK(count(svg, "class=\"outline\"") == 1);
}

TEST_CASE("render config and coordinate errors") {
  Frame f;
  f.rects.push_back({2e12, 0, 1, 1, "k", "far"});
  CHECK_THROWS_AS(render_svg(f, RenderConfig{}), RenderError);
  RenderConfig cfg;
  cfg.palette.clear();
  CHECK_THROWS_AS(render_svg(Frame{}, cfg), RenderError);
  cfg = RenderConfig{};
  cfg.viewport = {100, 100, 50};
  CHECK_THROWS_AS(render_svg(Frame{}, cfg), RenderError);
}

TEST_CASE("golden reshape frame") {
  const Scene s({{"left", 0.0, 1.0, 0.0}, {"right", 2.0, 1.0, 0.0}},
                {{"l", "mass", 4.0, "left", 0}, {"r", "mass", 2.0, "right", 0}});
  const auto stream = render_plan(plan_reshape(s, "left", 1.8), 5);
  const std::string path = std::string(AQUANIM_GOLDEN_DIR) + "/reshape_frame_2.svg";
  if (std::getenv("AQUANIM_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << stream.svgs[2];
  }
  CHECK(stream.svgs[2] == read(path));
  // Same input, same bytes.
  CHECK(render_plan(plan_reshape(s, "left", 1.8), 5).svgs == stream.svgs);
}

TEST_CASE("frames.json layout") {
  Frame f;
  f.t = 0.5;
  f.rects.push_back({0, 0, 1, 0.1, "k", "s"});
  f.guides.push_back({"c", 2.0, GuideRole::End});
  CHECK(export_frames_json(std::vector<Frame>{f}) ==
        R"({"frames":[{"guides":[{"container_id":"c","role":"end","y":2}],"rects":[{"color_key":"k","height":0.10000000000000001,"segment_id":"s","width":1,"x":0,"y":0}],"t":0.5}],"version":1})");
  CHECK_THROWS_AS(export_frames_json(std::vector<Frame>{}), DomainError);
}

TEST_CASE("property: frames.json round-trips losslessly") {
  Gen g(20);
  for (int trial = 0; trial < 50; ++trial) {
    const auto frames = random_stream(g);
    const auto text = export_frames_json(frames);
    const auto back = parse_frames_json(text);
    CHECK(back == frames);
    CHECK(export_frames_json(back) == text);
  }
}

TEST_CASE("frames.json parse errors") {
  CHECK_THROWS_AS(parse_frames_json("{"), SyntaxError);
  CHECK_THROWS_AS(parse_frames_json(R"({"version":2,"frames":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_frames_json(R"({"version":1,"frames":[{"t":0,"rects":[],"guides":[],"x":1}]})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_frames_json(
          R"({"version":1,"frames":[{"t":0,"rects":[{"x":0,"y":0,"width":-1,"height":1,"color_key":"","segment_id":""}],"guides":[]}]})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_frames_json(
          R"({"version":1,"frames":[{"t":0,"rects":[],"guides":[{"container_id":"c","y":0,"role":"middle"}]}]})"),
      SchemaError);
}

TEST_CASE("rendering does not drop liquid: frames.json area equals the plan total") {
  Gen g(21);
  const auto data = g.samples(800, true);
  const auto plan = plan_rebin(data, 11, 6);
  const auto stream = render_plan(plan, 30);
  const auto back = parse_frames_json(stream.frames_json);
  CHECK(back.size() == 30);
  for (const auto& f : back) CHECK(std::abs(f.total_area() - 1.0) <= 1e-9);
  // One rect element per frame rect plus the background.
  CHECK(count(stream.svgs[7], "<rect") == back[7].rects.size() + 1);
  // Every rect of the stream shares one drawing transform.
  std::regex bg(R"(width="800" height="500")");
  CHECK(std::regex_search(stream.svgs[0], bg));
}
