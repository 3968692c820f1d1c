#include "gar/service/http.hpp"

#include <httplib.h>

#include <thread>

namespace gar::service {

namespace {

void send_json(httplib::Response& res, const Json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(2) + "\n", "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message) {
    send_json(res, Json{{"error", std::string(code)}, {"message", message}}, status);
}

template <typename F>
httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
        try {
            f(req, res);
        } catch (const Error& e) {
            send_error(res, http_status(e.code()), to_string(e.code()), e.what());
        } catch (const nlohmann::json::exception& e) {
            send_error(res, 400, "bad-request", e.what());
        } catch (const std::exception& e) {
            send_error(res, 500, "internal", e.what());
        }
    };
}

Json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    auto j = Json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::InvalidArgument, "request body must be a JSON object");
    return j;
}

std::multimap<std::string, std::string> params_of(const httplib::Request& req) {
    return {req.params.begin(), req.params.end()};
}

} // namespace

HttpServer::HttpServer(Service& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
    auto& s = *server_;
    // httplib's default also sets SO_REUSEPORT, which would let a second
    // server share an occupied port instead of failing to bind.
    s.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    });
    s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

    s.Get("/health", [](const httplib::Request&, httplib::Response& res) { send_json(res, Json{{"status", "ok"}}); });

    s.Post(R"(/artifacts/([a-z-]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto kind = formats::parse_kind(req.matches[1].str());
        if (!kind) throw Error(ErrorCode::NotFound, "unknown artifact kind '" + req.matches[1].str() + "'");
        std::vector<std::string> warnings;
        const auto meta = service_.create_artifact(*kind, req.get_param_value("name"), req.body, &warnings);
        Json j = to_json(meta);
        j["warnings"] = warnings;
        send_json(res, j, 201);
    }));

    s.Get(R"(/artifacts/([0-9a-f]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        send_json(res, to_json(service_.download(req.matches[1].str()).meta));
    }));

    s.Get(R"(/artifacts/([0-9a-f]+)/raw)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto d = service_.download(req.matches[1].str());
        const bool structured = formats::looks_structured(d.body);
        res.set_header("X-Artifact-Kind", std::string(formats::to_string(d.meta.kind)));
        res.set_content(std::move(d.body), structured ? "application/json" : "text/plain; charset=utf-8");
    }));

    s.Delete(R"(/artifacts/([0-9a-f]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        service_.remove(req.matches[1].str());
        res.status = 204;
    }));

    s.Post("/mine", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req);
        MiningParams p;
        p.min_support = body.value("min_support", p.min_support);
        p.min_confidence = body.value("min_confidence", p.min_confidence);
        p.max_items = body.value("max_items", p.max_items);
        send_json(res, to_json(service_.run_mine(body.at("dataset_id").get<std::string>(), p)), 201);
    }));

    s.Post("/generalize", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req);
        GeneralizeRequest r;
        r.ruleset_id = body.at("ruleset_id").get<std::string>();
        r.taxonomyset_id = body.at("taxonomyset_id").get<std::string>();
        if (body.contains("dataset_id") && !body["dataset_id"].is_null())
            r.dataset_id = body["dataset_id"].get<std::string>();
        const auto side_token = body.value("side", std::string("lhs"));
        auto side = parse_side(side_token);
        if (!side) throw Error(ErrorCode::InvalidArgument, "side must be 'lhs' or 'rhs', got '" + side_token + "'");
        r.side = *side;
        if (body.contains("max_level") && !body["max_level"].is_null())
            r.options.max_level = body["max_level"].get<std::size_t>();
        r.options.merge_only = body.value("merge_only", false);
        const auto run = service_.run_generalization(r, body.value("async", false));
        send_json(res, to_json(run), run.status == RunStatus::Pending ? 202 : 200);
    }));

    s.Get(R"(/runs/([0-9a-f]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        send_json(res, to_json(service_.get_run(req.matches[1].str())));
    }));

    s.Get(R"(/runs/([0-9a-f]+)/downloads)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        send_json(res, to_json(service_.downloads(req.matches[1].str())));
    }));

    s.Get(R"(/results/([0-9a-f]+)/rules)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto q = parse_query(params_of(req));
        Json rules = Json::array();
        for (const auto& v : service_.query_generalized(req.matches[1].str(), q))
            rules.push_back(to_json(v, q.selected_measures));
        Json j;
        j["result_id"] = req.matches[1].str();
        j["count"] = rules.size();
        j["rules"] = std::move(rules);
        send_json(res, j);
    }));

    s.Get(R"(/results/([0-9a-f]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto q = parse_query(params_of(req));
        std::vector<Measure> columns = q.selected_measures;
        if (columns.empty()) columns.assign(all_measures.begin(), all_measures.end());
        res.set_content(export_view(service_.query_generalized(req.matches[1].str(), q), columns),
                        "text/tab-separated-values; charset=utf-8");
    }));

    s.Get(R"(/results/([0-9a-f]+)/rules/([0-9a-f]+)/(expanded|sources|measures))",
          guarded([this](const httplib::Request& req, httplib::Response& res) {
              const auto result_id = req.matches[1].str();
              const auto view = service_.rule_view(result_id, req.matches[2].str());
              const auto what = req.matches[3].str();
              Json j;
              j["rule"] = to_json(view, {});
              if (what == "expanded") {
                  Json list = Json::array();
                  for (const auto& k : drilldown_expanded(view, service_.result(result_id)->taxonomies))
                      list.push_back(to_json(k));
                  j["expansions"] = std::move(list);
              } else if (what == "sources") {
                  Json list = Json::array();
                  for (const auto& r : drilldown_sources(view)) list.push_back(to_json(r));
                  j["sources"] = std::move(list);
              } else {
                  const auto d = drilldown_measures(view);
                  j["measures"] = to_json(d.measures, {});
                  j["flags"] = {{"below_min_support", d.flags.below_min_support},
                                {"below_min_confidence", d.flags.below_min_confidence}};
                  j["violated"] = d.violated;
              }
              send_json(res, j);
          }));
}

HttpServer::~HttpServer() {
    // httplib only closes the listening socket from inside its accept loop.
    if (bound_ && !ran_) {
        std::thread drain([this] { server_->listen_after_bind(); });
        server_->wait_until_ready();
        server_->stop();
        drain.join();
    } else {
        stop();
    }
}

int HttpServer::bind(const std::string& host, int port) {
    const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    bound_ = bound > 0;
    return bound;
}

bool HttpServer::run() {
    ran_ = true;
    return server_->listen_after_bind();
}

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

} // namespace gar::service
