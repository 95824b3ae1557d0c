#include "aquanim/render/pipeline.hpp"

#include <cstdio>
#include <fstream>

#include "aquanim/core/errors.hpp"
#include "aquanim/plan/planners.hpp"
#include "aquanim/render/frames_json.hpp"

namespace aquanim {

RenderedStream render_plan(const TransitionPlan& plan, std::size_t n_frames,
                           RenderConfig cfg, bool with_svg) {
  RenderedStream out;
  out.frames = sample_frames(plan, n_frames);
  out.frames_json = export_frames_json(out.frames);
  if (with_svg) {
    cfg.highlight.insert(plan.highlight().begin(), plan.highlight().end());
    const auto layout = make_layout(out.frames, cfg);
    out.svgs.reserve(out.frames.size());
    for (const auto& f : out.frames) out.svgs.push_back(render_svg(f, cfg, layout));
  }
  return out;
}

std::string rebin_frames_json(std::span<const double> data, std::size_t from_bins,
                              std::size_t to_bins, std::size_t n_frames, Easing easing) {
  const auto plan = plan_rebin(data, from_bins, to_bins, RebinOptions{easing, std::nullopt});
  return export_frames_json(sample_frames(plan, n_frames));
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + path.string() + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

void write_stream(const RenderedStream& stream, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < stream.svgs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
    write_file(dir / name, stream.svgs[i]);
  }
  write_file(dir / "frames.json", stream.frames_json);
}

}  // namespace aquanim
