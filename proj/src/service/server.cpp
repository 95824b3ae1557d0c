#include <httplib.h>

#include "aquanim/core/errors.hpp"
#include "aquanim/service/service.hpp"

namespace aquanim::service {

struct Server::Impl {
  ServiceConfig config;
  httplib::Server http;
  bool bound = false;
};

namespace {

void send(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

Server::Server(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  auto& http = impl_->http;
  const Limits limits = impl_->config.limits;

  // One byte of slack so oversized bodies reach the handler and get a
  // structured 400 instead of a bare 413.
  http.set_payload_max_length(limits.max_payload_bytes + 1);
  if (impl_->config.threads > 0) {
    const auto n = impl_->config.threads;
    http.new_task_queue = [n] { return new httplib::ThreadPool(n); };
  }

  http.Post("/api/rebin", [limits](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_rebin(req.body, limits));
  });
  http.Post("/api/align", [limits](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_align(req.body, limits));
  });
  http.Get("/api/health",
           [](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });

  if (const auto& dir = impl_->config.static_dir;
      dir && std::filesystem::is_directory(*dir)) {
    http.set_mount_point("/", dir->string());
  }

  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const ApiErrorCode code = res.status >= 500 ? ApiErrorCode::Internal : ApiErrorCode::BadRequest;
    const std::string message = res.status == 404 ? "not found" : httplib::status_message(res.status);
    res.set_content(error_response({code, message, std::nullopt}).body, "application/json");
  });
  http.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        send(res, error_response({ApiErrorCode::Internal, "internal error", std::nullopt}));
      });
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& cfg = impl_->config;
  int port = cfg.port;
  if (port == 0) {
    port = impl_->http.bind_to_any_port(cfg.host);
    if (port < 0) throw Error("cannot bind to " + cfg.host);
  } else if (!impl_->http.bind_to_port(cfg.host, port)) {
    throw Error("cannot bind to " + cfg.host + ":" + std::to_string(port));
  }
  impl_->bound = true;
  return port;
}

void Server::run() {
  if (!impl_->bound) throw Error("server is not bound");
  impl_->http.listen_after_bind();
}

void Server::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace aquanim::service
