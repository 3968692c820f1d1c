#ifndef GAR_SERVICE_HTTP_HPP
#define GAR_SERVICE_HTTP_HPP

#include <memory>
#include <string>

#include "gar/service/service.hpp"

namespace httplib {
class Server;
}

namespace gar::service {

/// Routes:
///   GET    /health
///   POST   /artifacts/{kind}?name=       GET /artifacts/{id}   GET /artifacts/{id}/raw
///   DELETE /artifacts/{id}
///   POST   /mine                         POST /generalize
///   GET    /runs/{id}                    GET /runs/{id}/downloads
///   GET    /results/{id}/rules?...       GET /results/{id}/export?...
///   GET    /results/{id}/rules/{key}/expanded | sources | measures
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();

    /// Port 0 picks a free port. Returns the bound port, or -1 on failure.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    bool run();
    void stop();
    /// Blocks until run() is accepting connections.
    void wait_until_ready() const;

private:
    Service& service_;
    std::unique_ptr<httplib::Server> server_;
    bool bound_ = false;
    bool ran_ = false;
};

} // namespace gar::service

#endif
