#include <variant>
#include <vector>

#include "aquanim/core/errors.hpp"
#include "aquanim/plan/planners.hpp"
#include "aquanim/render/pipeline.hpp"
#include "aquanim/scene/canonical_json.hpp"
#include "aquanim/scene/csv.hpp"
#include "aquanim/scene/json_schema.hpp"
#include "aquanim/scene/scene_spec.hpp"
#include "aquanim/service/service.hpp"
#include "aquanim/version.hpp"

namespace aquanim::service {

using nlohmann::json;

std::string_view to_string(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::BadRequest:
      return "BadRequest";
    case ApiErrorCode::UnprocessableScene:
      return "UnprocessableScene";
    case ApiErrorCode::ConservationViolation:
      return "ConservationViolation";
    case ApiErrorCode::Internal:
      return "Internal";
  }
  return "Internal";
}

int http_status(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::BadRequest:
      return 400;
    case ApiErrorCode::UnprocessableScene:
    case ApiErrorCode::ConservationViolation:
      return 422;
    case ApiErrorCode::Internal:
      return 500;
  }
  return 500;
}

json ApiError::to_json() const {
  json out = {{"code", std::string(service::to_string(code))}, {"message", message}};
  if (detail) out["detail"] = *detail;
  return out;
}

ApiResponse error_response(const ApiError& error) {
  return {http_status(error.code), canonical_dump(error.to_json())};
}

namespace {

ApiError bad_request(std::string message, std::optional<std::string> detail = std::nullopt) {
  return {ApiErrorCode::BadRequest, std::move(message), std::move(detail)};
}

json parse_body(std::string_view body, const Limits& limits) {
  if (body.size() > limits.max_payload_bytes) throw bad_request("payload exceeds size limit");
  try {
    return json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    throw bad_request(std::string("malformed JSON: ") + e.what());
  }
}

std::size_t positive_count(const json& body, std::string_view key, std::size_t minimum,
                           std::size_t maximum) {
  const std::string path(key);
  const auto v = schema::integer(schema::field(body, "", key), path);
  if (v < static_cast<std::int64_t>(minimum) || static_cast<std::uint64_t>(v) > maximum) {
    throw SchemaError(path, "must be between " + std::to_string(minimum) + " and " +
                                std::to_string(maximum));
  }
  return static_cast<std::size_t>(v);
}

std::size_t frame_count(const json& body, const Limits& limits) {
  if (!body.contains("frames")) return kDefaultFrames;
  return positive_count(body, "frames", 2, limits.max_frames);
}

Easing easing_of(const json& body) {
  const json* v = schema::optional_field(body, "ease");
  if (v == nullptr) return Easing::Smoothstep;
  const auto name = schema::string(*v, "ease");
  const auto easing = parse_easing(name);
  if (!easing) throw SchemaError("ease", "expected 'linear' or 'smoothstep'");
  return *easing;
}

template <class Fn>
ApiResponse guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ApiError& e) {
    return error_response(e);
  } catch (const SchemaError& e) {
    return error_response(bad_request(e.what(), e.path()));
  } catch (const SyntaxError& e) {
    return error_response(bad_request(e.what()));
  } catch (const IngestionError& e) {
    return error_response(bad_request(e.what()));
  } catch (const ConservationError& e) {
    return error_response({ApiErrorCode::ConservationViolation, e.what(), std::nullopt});
  } catch (const Error& e) {
    return error_response({ApiErrorCode::UnprocessableScene, e.what(), std::nullopt});
  } catch (const std::exception& e) {
    return error_response({ApiErrorCode::Internal, e.what(), std::nullopt});
  }
}

}  // namespace

ApiResponse handle_rebin(std::string_view body_text, const Limits& limits) {
  return guarded([&] {
    const json body = parse_body(body_text, limits);
    schema::require_object(body, "");
    schema::reject_unknown(body, "", {"data", "csv", "from_bins", "to_bins", "frames", "ease"});
    const json* data_field = schema::optional_field(body, "data");
    const json* csv_field = schema::optional_field(body, "csv");
    if ((data_field == nullptr) == (csv_field == nullptr)) {
      throw bad_request("exactly one of 'data' or 'csv' is required");
    }
    std::vector<double> data;
    if (data_field != nullptr) {
      const auto& arr = schema::require_array(*data_field, "data");
      if (arr.size() > limits.max_points) throw bad_request("too many data points", "data");
      data.reserve(arr.size());
      for (std::size_t i = 0; i < arr.size(); ++i) {
        data.push_back(schema::number(arr[i], schema::index("data", i)));
      }
    } else {
      data = parse_csv_values(schema::string(*csv_field, "csv"));
      if (data.size() > limits.max_points) throw bad_request("too many data points", "csv");
    }
    if (data.empty()) throw bad_request("data must not be empty", data_field ? "data" : "csv");
    const auto from = positive_count(body, "from_bins", 1, limits.max_points);
    const auto to = positive_count(body, "to_bins", 1, limits.max_points);
    return ApiResponse{200,
                       rebin_frames_json(data, from, to, frame_count(body, limits), easing_of(body))};
  });
}

ApiResponse handle_align(std::string_view body_text, const Limits& limits) {
  return guarded([&] {
    const json body = parse_body(body_text, limits);
    schema::require_object(body, "");
    schema::reject_unknown(body, "", {"scene", "select", "frames", "ease"});
    const Scene scene = scene_from_json(schema::field(body, "", "scene"), "scene");
    const auto& arr = schema::require_array(schema::field(body, "", "select"), "select");
    std::vector<std::string> selected;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      selected.push_back(schema::string(arr[i], schema::index("select", i)));
    }
    const auto plan = plan_align(scene, selected, easing_of(body));
    return ApiResponse{200, render_plan(plan, frame_count(body, limits), {}, false).frames_json};
  });
}

ApiResponse handle_health() {
  return {200, canonical_dump({{"status", "ok"}, {"version", std::string(kVersion)}})};
}

}  // namespace aquanim::service
