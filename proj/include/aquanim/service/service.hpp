#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace aquanim::service {

enum class ApiErrorCode { BadRequest, UnprocessableScene, ConservationViolation, Internal };

std::string_view to_string(ApiErrorCode code);
// 400, 422, 422, 500.
int http_status(ApiErrorCode code);

struct ApiError {
  ApiErrorCode code = ApiErrorCode::Internal;
  std::string message;
  std::optional<std::string> detail;  // field path

  nlohmann::json to_json() const;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct Limits {
  std::size_t max_payload_bytes = 10u * 1024u * 1024u;
  std::size_t max_points = 1'000'000;
  std::size_t max_frames = 10'000;
};

// Request handlers. They are pure functions of the body, so identical
// requests produce identical responses.
ApiResponse handle_rebin(std::string_view body, const Limits& limits = {});
ApiResponse handle_align(std::string_view body, const Limits& limits = {});
ApiResponse handle_health();

ApiResponse error_response(const ApiError& error);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
  Limits limits;
  // 0 keeps the library default.
  std::size_t threads = 0;
};

// HTTP front end over the handlers.
class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds the socket and returns the bound port. Throws aquanim::Error on
  // failure.
  int bind();
  // Serves until stop() is called. bind() must have succeeded.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aquanim::service
