#include "cli.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "aquanim/core/errors.hpp"
#include "aquanim/plan/planners.hpp"
#include "aquanim/plan/verify.hpp"
#include "aquanim/render/frames_json.hpp"
#include "aquanim/render/pipeline.hpp"
#include "aquanim/scene/csv.hpp"
#include "aquanim/scene/scene_spec.hpp"
#include "aquanim/service/service.hpp"
#include "aquanim/version.hpp"

namespace aquanim {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scene load_scene(const std::string& path) {
  auto doc = parse_scene_spec(read_file(path));
  if (auto* request = std::get_if<TransitionRequest>(&doc)) return std::move(request->scene);
  return std::get<Scene>(std::move(doc));
}

const std::map<std::string, Easing> kEasings{{"linear", Easing::Linear},
                                             {"smoothstep", Easing::Smoothstep}};
const std::map<std::string, Anchor> kAnchors{{"bottom-left", Anchor::BottomLeft},
                                             {"bottom-right", Anchor::BottomRight},
                                             {"bottom-center", Anchor::BottomCenter}};

service::Server* g_server = nullptr;

extern "C" void stop_server(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Area-preserving animated transitions between rectangle charts", "aquanim"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::size_t frames = kDefaultFrames;
  std::string ease_name = "smoothstep";
  std::string out_dir;

  auto* rebin = app.add_subcommand("rebin", "Animate a change in the number of histogram bins");
  std::string input;
  std::size_t from_bins = 0, to_bins = 0;
  rebin->add_option("--input", input, "CSV file, one value per line")->required();
  rebin->add_option("--from-bins", from_bins, "Bin count of the source histogram")->required();
  rebin->add_option("--to-bins", to_bins, "Bin count of the target histogram")->required();

  auto* align = app.add_subcommand("align", "Move selected segments to the baseline");
  std::string scene_path;
  std::vector<std::string> selection;
  align->add_option("--scene", scene_path, "Scene-spec document")->required();
  align->add_option("--select", selection, "Segment ids")->delimiter(',')->required();

  auto* reshape = app.add_subcommand("reshape", "Change a container width keeping its area");
  std::string container_id;
  double width = 0.0;
  Anchor anchor = Anchor::BottomLeft;
  reshape->add_option("--scene", scene_path, "Scene-spec document")->required();
  reshape->add_option("--container", container_id, "Container id")->required();
  reshape->add_option("--width", width, "New container width")->required();
  reshape->add_option("--anchor", anchor, "Fixed corner")
      ->transform(CLI::CheckedTransformer(kAnchors, CLI::ignore_case));

  for (auto* sub : {rebin, align, reshape}) {
    sub->add_option("--frames", frames, "Number of frames")->check(CLI::Range(2, 100000));
    sub->add_option("--ease", ease_name, "linear or smoothstep")
        ->transform(CLI::IsMember(kEasings, CLI::ignore_case));
    sub->add_option("--out", out_dir, "Output directory")->required();
  }

  auto* check = app.add_subcommand("check", "Verify area conservation of a frames.json stream");
  std::string frames_path;
  double tol = kPlanTolerance;
  check->add_option("--frames", frames_path, "frames.json file")->required();
  check->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  service::ServiceConfig service_config;
  std::string static_dir;
  serve->add_option("--port", service_config.port, "TCP port")->required()->check(
      CLI::Range(0, 65535));
  serve->add_option("--host", service_config.host, "Listen address");
  serve->add_option("--static-dir", static_dir, "Directory of UI assets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Easing easing = kEasings.at(ease_name);
    if (rebin->parsed()) {
      const auto data = parse_csv_values(read_file(input));
      const auto plan = plan_rebin(data, from_bins, to_bins, RebinOptions{easing, std::nullopt});
      write_stream(render_plan(plan, frames), out_dir);
    } else if (align->parsed()) {
      const auto plan = plan_align(load_scene(scene_path), selection, easing);
      write_stream(render_plan(plan, frames), out_dir);
    } else if (reshape->parsed()) {
      const auto plan = plan_reshape(load_scene(scene_path), container_id, width, anchor, easing);
      write_stream(render_plan(plan, frames), out_dir);
    } else if (check->parsed()) {
      const auto stream = parse_frames_json(read_file(frames_path));
      const auto report = check_frames(stream, tol);
      std::cout << format_report(report);
      return report.passed ? kExitOk : kExitInvariant;
    } else if (serve->parsed()) {
      if (!static_dir.empty()) service_config.static_dir = static_dir;
      service::Server server(service_config);
      const int port = server.bind();
      std::cerr << "aquanim " << kVersion << " listening on " << service_config.host << ":"
                << port << "\n";
      g_server = &server;
      std::signal(SIGINT, stop_server);
      std::signal(SIGTERM, stop_server);
      server.run();
      g_server = nullptr;
    }
  } catch (const Error& e) {
    std::cerr << "aquanim: " << e.kind() << ": " << e.what() << "\n";
    return dynamic_cast<const ConservationError*>(&e) != nullptr ? kExitInvariant : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "aquanim: error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace aquanim
