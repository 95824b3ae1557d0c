#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aquanim/core/conservation.hpp"
#include "aquanim/core/easing.hpp"
#include "aquanim/core/errors.hpp"
#include "aquanim/core/kinematics.hpp"
#include "aquanim/plan/planners.hpp"
#include "aquanim/plan/verify.hpp"
#include "aquanim/render/frames_json.hpp"
#include "aquanim/render/pipeline.hpp"
#include "aquanim/render/svg.hpp"
#include "aquanim/scene/histogram.hpp"
#include "aquanim/scene/scene_spec.hpp"
#include "aquanim/version.hpp"

namespace py = pybind11;
using namespace aquanim;

namespace {

Scene parse_scene(const std::string& text) {
  auto doc = parse_scene_spec(text);
  if (auto* scene = std::get_if<Scene>(&doc)) return std::move(*scene);
  return std::get<TransitionRequest>(doc).scene;
}

template <class E>
void register_error(py::module_& m, const char* name, py::handle base) {
  py::register_exception<E>(m, name, base);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Area-preserving animated transitions between rectangle charts";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "AquanimError", PyExc_ValueError);
  register_error<DomainError>(m, "DomainError", base);
  register_error<ShapeError>(m, "ShapeError", base);
  register_error<ConservationError>(m, "ConservationError", base);
  register_error<IngestionError>(m, "IngestionError", base);
  register_error<SyntaxError>(m, "SpecSyntaxError", base);
  register_error<SchemaError>(m, "SchemaError", base);
  register_error<InvariantError>(m, "InvariantError", base);
  register_error<ParameterError>(m, "ParameterError", base);
  register_error<UnsupportedError>(m, "UnsupportedError", base);
  register_error<RenderError>(m, "RenderError", base);

  py::enum_<Easing>(m, "Easing")
      .value("LINEAR", Easing::Linear)
      .value("SMOOTHSTEP", Easing::Smoothstep);
  py::enum_<Anchor>(m, "Anchor")
      .value("BOTTOM_LEFT", Anchor::BottomLeft)
      .value("BOTTOM_RIGHT", Anchor::BottomRight)
      .value("BOTTOM_CENTER", Anchor::BottomCenter);
  py::enum_<Normalization>(m, "Normalization")
      .value("DENSITY", Normalization::Density)
      .value("COUNT", Normalization::Count);

  m.def("ease", &ease, py::arg("easing"), py::arg("t"));

  py::class_<LevelState>(m, "LevelState")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("widths"),
           py::arg("levels"))
      .def_property_readonly("widths", &LevelState::widths)
      .def_property_readonly("levels", &LevelState::levels)
      .def("total_area", &LevelState::total_area)
      .def(py::self == py::self);
  m.def("interpolate_levels", &interpolate_levels, py::arg("start"), py::arg("end"),
        py::arg("u"));

  py::class_<ReshapeSpec>(m, "ReshapeSpec")
      .def(py::init<double, double, double, double, Anchor>(), py::arg("w0"), py::arg("h0"),
           py::arg("w1"), py::arg("h1"), py::arg("anchor") = Anchor::BottomLeft)
      .def_static("from_area", &ReshapeSpec::from_area, py::arg("area"), py::arg("w0"),
                  py::arg("w1"), py::arg("anchor") = Anchor::BottomLeft)
      .def("area", &ReshapeSpec::area);
  m.def(
      "reshape_at",
      [](const ReshapeSpec& spec, double u) {
        const auto e = reshape_at(spec, u);
        return py::make_tuple(e.width, e.height);
      },
      py::arg("spec"), py::arg("u"), "(width, height) at eased progress u");
  m.def("naive_vertex_lerp_area", &naive_vertex_lerp_area, py::arg("spec"), py::arg("u"));

  py::class_<StackState>(m, "StackState")
      .def(py::init<double, std::vector<double>, std::vector<std::string>>(), py::arg("width"),
           py::arg("heights"), py::arg("ids"))
      .def("bottoms", &StackState::bottoms)
      .def("total_height", &StackState::total_height);
  m.def("shift_bottoms", &shift_bottoms, py::arg("start"), py::arg("end"), py::arg("u"));

  py::class_<InvariantReport>(m, "InvariantReport")
      .def_readonly("passed", &InvariantReport::passed)
      .def_readonly("tolerance", &InvariantReport::tolerance)
      .def_readonly("max_total_deviation", &InvariantReport::max_total_deviation)
      .def_readonly("max_step_deviation", &InvariantReport::max_step_deviation)
      .def_readonly("max_segment_deviation", &InvariantReport::max_segment_deviation)
      .def_readonly("worst_frame", &InvariantReport::worst_frame)
      .def_readonly("frames_checked", &InvariantReport::frames_checked)
      .def("__str__", &format_report);
  m.def(
      "check_conservation",
      [](const std::vector<double>& widths, const std::vector<std::vector<double>>& series,
         double tol) { return check_conservation(widths, series, tol); },
      py::arg("widths"), py::arg("series"), py::arg("tol") = kPlanTolerance);

  py::class_<Histogram>(m, "Histogram")
      .def_readonly("edges", &Histogram::edges)
      .def_readonly("counts", &Histogram::counts)
      .def_readonly("normalization", &Histogram::normalization)
      .def("bin_area", &Histogram::bin_area);
  m.def(
      "bin",
      [](const std::vector<double>& data, std::size_t k,
         std::optional<std::pair<double, double>> range, Normalization norm) {
        std::optional<BinRange> r;
        if (range) r = BinRange{range->first, range->second};
        return bin(data, k, r, norm);
      },
      py::arg("data"), py::arg("k"), py::arg("range") = py::none(),
      py::arg("normalization") = Normalization::Density);

  py::class_<Container>(m, "Container")
      .def_readonly("id", &Container::id)
      .def_readonly("x", &Container::x)
      .def_readonly("width", &Container::width)
      .def_readonly("baseline_y", &Container::baseline_y);
  py::class_<LiquidSegment>(m, "LiquidSegment")
      .def_readonly("id", &LiquidSegment::id)
      .def_readonly("color_key", &LiquidSegment::color_key)
      .def_readonly("area", &LiquidSegment::area)
      .def_readonly("container_id", &LiquidSegment::container_id)
      .def_readonly("stack_index", &LiquidSegment::stack_index);
  py::class_<Scene>(m, "Scene")
      .def_property_readonly("containers", &Scene::containers)
      .def_property_readonly("segments", &Scene::segments)
      .def("total_area", &Scene::total_area)
      .def(py::self == py::self);
  m.def("parse_scene", &parse_scene, py::arg("text"),
        "Parse a scene-spec document; a transition request yields its scene.");
  m.def("serialize_scene", &serialize_scene, py::arg("scene"));

  py::class_<FrameRect>(m, "FrameRect")
      .def_readonly("x", &FrameRect::x)
      .def_readonly("y", &FrameRect::y)
      .def_readonly("width", &FrameRect::width)
      .def_readonly("height", &FrameRect::height)
      .def_readonly("color_key", &FrameRect::color_key)
      .def_readonly("segment_id", &FrameRect::segment_id);
  py::class_<Guide>(m, "Guide")
      .def_readonly("container_id", &Guide::container_id)
      .def_readonly("y", &Guide::y)
      .def_property_readonly("role", [](const Guide& g) { return std::string(to_string(g.role)); });
  py::class_<Frame>(m, "Frame")
      .def_readonly("t", &Frame::t)
      .def_readonly("rects", &Frame::rects)
      .def_readonly("guides", &Frame::guides)
      .def("total_area", &Frame::total_area)
      .def(py::self == py::self);

  py::class_<TransitionPlan>(m, "TransitionPlan")
      .def_property_readonly("source", &TransitionPlan::source)
      .def_property_readonly("target", &TransitionPlan::target)
      .def_property_readonly("conserving", &TransitionPlan::conserving)
      .def_property_readonly("highlight", &TransitionPlan::highlight)
      .def_property_readonly("track_count",
                             [](const TransitionPlan& p) { return p.tracks().size(); });

  m.def(
      "plan_rebin",
      [](const std::vector<double>& data, std::size_t m_bins, std::size_t n_bins, Easing easing) {
        return plan_rebin(data, m_bins, n_bins, RebinOptions{easing, std::nullopt});
      },
      py::arg("data"), py::arg("from_bins"), py::arg("to_bins"),
      py::arg("easing") = Easing::Smoothstep);
  m.def("plan_align", &plan_align, py::arg("scene"), py::arg("selected"),
        py::arg("easing") = Easing::Smoothstep);
  m.def("plan_reshape", &plan_reshape, py::arg("scene"), py::arg("container_id"),
        py::arg("width"), py::arg("anchor") = Anchor::BottomLeft,
        py::arg("easing") = Easing::Smoothstep);
  m.def("plan_fill", &plan_fill, py::arg("scene"), py::arg("container_id"), py::arg("level"),
        py::arg("easing") = Easing::Smoothstep);
  m.def("evaluate_frame", &evaluate_frame, py::arg("plan"), py::arg("t"));
  m.def("sample_frames", &sample_frames, py::arg("plan"), py::arg("n_frames") = kDefaultFrames);
  m.def("verify_plan", &verify_plan, py::arg("plan"), py::arg("n_frames") = kDefaultFrames,
        py::arg("tol") = kPlanTolerance);
  m.def(
      "check_frames",
      [](const std::vector<Frame>& frames, double tol) { return check_frames(frames, tol); },
      py::arg("frames"), py::arg("tol") = kPlanTolerance);

  m.def(
      "export_frames_json",
      [](const std::vector<Frame>& frames) { return export_frames_json(frames); },
      py::arg("frames"));
  m.def("parse_frames_json", &parse_frames_json, py::arg("text"));
  m.def(
      "render_svgs",
      [](const TransitionPlan& plan, std::size_t n_frames) {
        return render_plan(plan, n_frames, RenderConfig{}, true).svgs;
      },
      py::arg("plan"), py::arg("n_frames") = kDefaultFrames,
      "One SVG document per frame, sharing a single view transform.");
  m.def(
      "render_svg", [](const Frame& frame) { return render_svg(frame, RenderConfig{}); },
      py::arg("frame"), "Render a single frame fitted to its own bounds.");
}
