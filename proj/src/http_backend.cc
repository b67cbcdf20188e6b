#include "kg2i/http_backend.h"

#include <chrono>

#include "httplib.h"
#include "kg2i/errors.h"
#include "spdlog/spdlog.h"

namespace kg2i {

HttpBackend::HttpBackend(BackendEndpointSet endpoints)
    : endpoints_(std::move(endpoints)),
      slots_(static_cast<std::ptrdiff_t>(endpoints_.max_in_flight)) {
  endpoints_.Validate();
}

namespace {

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<> &s) : s_(s) { s_.acquire(); }
  ~SlotGuard() { s_.release(); }

 private:
  std::counting_semaphore<> &s_;
};

}  // namespace

json HttpBackend::Dispatch(Endpoint endpoint, const json &request) {
  SlotGuard slot(slots_);
  const std::string path = EndpointPath(endpoint);
  const std::string body = request.dump();
  auto seconds = std::chrono::duration_cast<std::chrono::microseconds>(endpoints_.timeout);

  std::string last_error;
  for (size_t attempt = 0; attempt < endpoints_.retry_budget; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(25 * attempt));
    }
    httplib::Client client(endpoints_.base_url);
    client.set_connection_timeout(seconds);
    client.set_read_timeout(seconds);
    client.set_write_timeout(seconds);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status >= 400) {
      json err = json::parse(res->body, nullptr, false);
      std::string field;
      std::string message = "HTTP " + std::to_string(res->status);
      if (err.is_object()) {
        if (err.contains("field") && err["field"].is_string()) field = err["field"];
        if (err.contains("error") && err["error"].is_string()) {
          message += ": " + err["error"].get<std::string>();
        }
      }
      throw ProtocolError(message, field);
    }
    json response = json::parse(res->body, nullptr, false);
    if (response.is_discarded()) {
      throw ProtocolError("response body is not JSON", "");
    }
    return response;
  }
  throw TransportError(path + " failed after " +
                       std::to_string(endpoints_.retry_budget) +
                       " attempts: " + last_error);
}

BackendServer::BackendServer(Backend &backend)
    : backend_(backend), server_(std::make_unique<httplib::Server>()) {
  Install();
}

BackendServer::~BackendServer() { Stop(); }

void BackendServer::Install() {
  for (Endpoint endpoint : kAllEndpoints) {
    server_->Post(EndpointPath(endpoint), [this, endpoint](
                                              const httplib::Request &req,
                                              httplib::Response &res) {
      ++requests_;
      if (fail_next_ > 0) {
        --fail_next_;
        res.status = 503;
        res.set_content(json{{"error", "injected failure"}, {"field", ""}}.dump(),
                        "application/json");
        return;
      }
      json request = json::parse(req.body, nullptr, false);
      try {
        if (request.is_discarded()) throw ProtocolError("body is not JSON", "");
        json response = backend_.Call(endpoint, request);
        res.set_content(response.dump(), "application/json");
      } catch (const ProtocolError &e) {
        res.status = 400;
        res.set_content(json{{"error", e.what()}, {"field", e.field()}}.dump(),
                        "application/json");
      } catch (const Error &e) {
        res.status = 503;
        res.set_content(json{{"error", e.what()}, {"field", ""}}.dump(),
                        "application/json");
      }
    });
  }
  server_->Get("/v1/health", [](const httplib::Request &, httplib::Response &res) {
    json endpoints = json::array();
    for (Endpoint e : kAllEndpoints) endpoints.push_back(EndpointName(e));
    res.set_content(json{{"ok", true}, {"endpoints", endpoints}}.dump(),
                    "application/json");
  });
}

int BackendServer::Start(int port) {
  port_ = port == 0 ? server_->bind_to_any_port("127.0.0.1")
                    : (server_->bind_to_port("127.0.0.1", port) ? port : -1);
  if (port_ < 0) throw TransportError("cannot bind 127.0.0.1:" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void BackendServer::Serve(int port) {
  if (!server_->bind_to_port("127.0.0.1", port)) {
    throw TransportError("cannot bind 127.0.0.1:" + std::to_string(port));
  }
  port_ = port;
  spdlog::info("serving backend protocol on {}", url());
  server_->listen_after_bind();
}

void BackendServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string BackendServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

}  // namespace kg2i
