#include "aquanim/render/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "aquanim/core/errors.hpp"

namespace aquanim {
namespace {

constexpr double kMaxCoord = 1e12;

void check_coord(double v, const char* what) {
  if (!std::isfinite(v) || std::abs(v) > kMaxCoord) {
    throw RenderError(std::string(what) + " is out of the renderable range");
  }
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> default_palette() {
  return {"#0072b2", "#e69f00", "#009e73", "#56b4e9",
          "#f0e442", "#d55e00", "#cc79a7", "#000000"};
}

void RenderConfig::validate() const {
  if (viewport.width_px <= 0 || viewport.height_px <= 0 || viewport.margin_px < 0 ||
      2 * viewport.margin_px >= std::min(viewport.width_px, viewport.height_px)) {
    throw RenderError("viewport dimensions must leave a positive plot area");
  }
  if (palette.empty()) throw RenderError("palette must not be empty");
}

std::string format_coord(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

StreamLayout make_layout(std::span<const Frame> frames, const RenderConfig& cfg) {
  cfg.validate();
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  StreamLayout layout;
  std::size_t next_color = 0;
  for (const auto& f : frames) {
    for (const auto& r : f.rects) {
      check_coord(r.x, "rect x");
      check_coord(r.y, "rect y");
      check_coord(r.width, "rect width");
      check_coord(r.height, "rect height");
      check_coord(r.x + r.width, "rect right edge");
      check_coord(r.y + r.height, "rect top edge");
      lo_x = std::min(lo_x, r.x);
      hi_x = std::max(hi_x, r.x + r.width);
      lo_y = std::min(lo_y, r.y);
      hi_y = std::max(hi_y, r.y + r.height);
      if (!r.color_key.empty() && !layout.colors.contains(r.color_key)) {
        layout.colors[r.color_key] = cfg.palette[next_color++ % cfg.palette.size()];
      }
    }
    for (const auto& g : f.guides) {
      check_coord(g.y, "guide y");
      lo_y = std::min(lo_y, g.y);
      hi_y = std::max(hi_y, g.y);
    }
  }

  const auto& vp = cfg.viewport;
  const double plot_w = vp.width_px - 2.0 * vp.margin_px;
  const double plot_h = vp.height_px - 2.0 * vp.margin_px;
  ViewTransform& view = layout.view;
  view.origin_x = vp.margin_px;
  view.origin_y = vp.height_px - vp.margin_px;
  if (!std::isfinite(lo_x)) {
    // Nothing but guides, or nothing at all: model origin at bottom-left.
    view.min_x = 0.0;
    view.min_y = std::isfinite(lo_y) ? lo_y : 0.0;
    return layout;
  }
  view.min_x = lo_x;
  view.min_y = lo_y;
  const double span_x = hi_x - lo_x;
  const double span_y = hi_y - lo_y;
  if (span_x > 0.0 && span_y > 0.0) {
    view.scale = std::min(plot_w / span_x, plot_h / span_y);
  } else if (span_x > 0.0) {
    view.scale = plot_w / span_x;
  } else if (span_y > 0.0) {
    view.scale = plot_h / span_y;
  }
  return layout;
}

std::string render_svg(const Frame& frame, const RenderConfig& cfg) {
  return render_svg(frame, cfg, make_layout(std::span<const Frame>(&frame, 1), cfg));
}

std::string render_svg(const Frame& frame, const RenderConfig& cfg,
                       const StreamLayout& layout) {
  cfg.validate();
  const auto& vp = cfg.viewport;
  const auto& view = layout.view;
  const auto W = std::to_string(vp.width_px);
  const auto H = std::to_string(vp.height_px);
  const double left = vp.margin_px;
  const double right = vp.width_px - vp.margin_px;
  const double top = vp.margin_px;
  const double bottom = vp.height_px - vp.margin_px;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + W +
         "\" height=\"" + H + "\" viewBox=\"0 0 " + W + " " + H + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + W + "\" height=\"" + H +
         "\" fill=\"" + cfg.background + "\"/>\n";

  const double axis_y = std::clamp(view.y(0.0), top, bottom);
  out += "<line class=\"axis\" x1=\"" + format_coord(left) + "\" y1=\"" +
         format_coord(axis_y) + "\" x2=\"" + format_coord(right) + "\" y2=\"" +
         format_coord(axis_y) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out += "<line class=\"axis\" x1=\"" + format_coord(left) + "\" y1=\"" + format_coord(top) +
         "\" x2=\"" + format_coord(left) + "\" y2=\"" + format_coord(bottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  out += "<g class=\"liquid\">\n";
  for (const auto& r : frame.rects) {
    for (double v : {r.x, r.y, r.width, r.height, r.x + r.width, r.y + r.height}) {
      check_coord(v, "rect coordinate");
    }
    const double x0 = view.x(r.x);
    const double y0 = view.y(r.y + r.height);
    const double w = r.width * view.scale;
    const double h = r.height * view.scale;
    std::string fill = "none";
    if (cfg.highlight.contains(r.segment_id)) {
      fill = cfg.accent;
    } else if (auto it = layout.colors.find(r.color_key); it != layout.colors.end()) {
      fill = it->second;
    } else if (!r.color_key.empty()) {
      fill = cfg.palette.front();
    }
    out += "<rect";
    if (!r.segment_id.empty()) out += " data-segment=\"" + escape(r.segment_id) + "\"";
    out += " x=\"" + format_coord(x0) + "\" y=\"" + format_coord(y0) + "\" width=\"" +
           format_coord(w) + "\" height=\"" + format_coord(h) + "\" fill=\"" + fill + "\"/>\n";
    if (r.height == 0.0) {
      // Drained or empty container: hairline where the liquid would sit.
      out += "<line class=\"outline\" x1=\"" + format_coord(x0) + "\" y1=\"" +
             format_coord(y0) + "\" x2=\"" + format_coord(x0 + w) + "\" y2=\"" +
             format_coord(y0) + "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    }
  }
  out += "</g>\n";

  for (const auto& g : frame.guides) {
    check_coord(g.y, "guide y");
    const auto y = format_coord(view.y(g.y));
    out += "<line class=\"guide guide-" + std::string(to_string(g.role)) +
           "\" data-container=\"" + escape(g.container_id) + "\" x1=\"" +
           format_coord(left) + "\" y1=\"" + y + "\" x2=\"" + format_coord(right) +
           "\" y2=\"" + y +
           "\" stroke=\"#555555\" stroke-width=\"0.75\" stroke-dasharray=\"4 3\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace aquanim
