#pragma once

#include "httplib.h"

#include <string>

#include "ugeo/service.hpp"

namespace ugeo {

struct HttpOptions {
  std::string cors_origin;  // empty: no CORS headers
  std::string ui_dir;       // empty: no /ui mount
};

// Routes the JSON API onto `server`. Handlers only translate between HTTP
// and GameService; all game logic stays in the service.
inline void mount_api(httplib::Server& server, GameService& service, const HttpOptions& opts) {
  auto send = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/api/games", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.create(req.body));
  });
  server.Get(R"(/api/games/([A-Za-z0-9]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get(req.matches[1]));
  });
  server.Post(R"(/api/games/([A-Za-z0-9]+)/moves)",
              [&service, send](const httplib::Request& req, httplib::Response& res) {
                send(res, service.move(req.matches[1], req.body));
              });
  server.Get(R"(/api/games/([A-Za-z0-9]+)/hint)", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.hint(req.matches[1]));
  });
  server.Get("/api/health", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.health());
  });

  if (!opts.cors_origin.empty()) {
    const std::string origin = opts.cors_origin;
    server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
  if (!opts.ui_dir.empty()) server.set_mount_point("/ui", opts.ui_dir);
}

}  // namespace ugeo
