#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aquanim/plan/plan.hpp"
#include "aquanim/render/svg.hpp"

namespace aquanim {

inline constexpr std::size_t kDefaultFrames = 60;

// A sampled plan with its serialized forms.
struct RenderedStream {
  std::vector<Frame> frames;
  std::string frames_json;
  std::vector<std::string> svgs;
};

// Samples the plan and exports frames.json. SVGs are rendered only when
// `with_svg` is set; plan highlights are added to the config's highlight set.
RenderedStream render_plan(const TransitionPlan& plan, std::size_t n_frames,
                           RenderConfig cfg = {}, bool with_svg = true);

// frames.json bytes of a re-bin transition. The CLI and the HTTP service
// both go through this function.
std::string rebin_frames_json(std::span<const double> data, std::size_t from_bins,
                              std::size_t to_bins, std::size_t n_frames, Easing easing);

// Writes frame_0000.svg... and frames.json into `dir`, creating it.
void write_stream(const RenderedStream& stream, const std::filesystem::path& dir);

}  // namespace aquanim
