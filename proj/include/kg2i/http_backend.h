#ifndef KG2I_HTTP_BACKEND_H_
#define KG2I_HTTP_BACKEND_H_

#include <atomic>
#include <memory>
#include <semaphore>
#include <string>
#include <thread>

#include "kg2i/backend.h"

namespace httplib {
class Server;
}

namespace kg2i {

// Protocol client over HTTP. Transport failures and 5xx responses are retried
// until the retry budget is spent (then TransportError); 4xx responses raise
// ProtocolError with the server's field. At most max_in_flight requests are
// outstanding at once.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(BackendEndpointSet endpoints);

  const BackendEndpointSet &endpoints() const { return endpoints_; }

 protected:
  json Dispatch(Endpoint endpoint, const json &request) override;

 private:
  BackendEndpointSet endpoints_;
  std::counting_semaphore<> slots_;
};

// Serves a Backend over the protocol's HTTP interface on 127.0.0.1. Used by
// tests and by the serve-mock subcommand.
class BackendServer {
 public:
  explicit BackendServer(Backend &backend);
  ~BackendServer();

  BackendServer(const BackendServer &) = delete;
  BackendServer &operator=(const BackendServer &) = delete;

  // Binds (port 0 picks a free port) and starts serving in the background.
  // Returns the bound port.
  int Start(int port = 0);
  void Stop();
  // Blocks in the calling thread until Stop() is called from elsewhere.
  void Serve(int port);

  std::string url() const;

  // The next n requests fail with 503 before reaching the backend.
  void FailNext(int n) { fail_next_ = n; }
  int requests() const { return requests_; }

 private:
  void Install();

  Backend &backend_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> fail_next_{0};
  std::atomic<int> requests_{0};
};

}  // namespace kg2i

#endif  // KG2I_HTTP_BACKEND_H_
