// Copyright 2026 The lexgap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "lexgap/annotation.h"
#include "lexgap/errors.h"

namespace lexgap::annot {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char *kJsonType = "application/json; charset=utf-8";

Json ToJson(const mwe::MweCandidate &candidate) {
  return Json::parse(mwe::DumpCandidate(candidate));
}

Json ToJson(const mwe::AnnotationDecision &decision) {
  return Json::parse(mwe::DumpDecision(decision));
}

Json ToJson(const concord::ConcordanceLine &line) {
  return Json{{"doc", line.doc},         {"sentence", line.sentence},
              {"position", line.position}, {"left", line.left},
              {"match", line.match},     {"right", line.right}};
}

Json ToJson(const CandidateView &view) {
  Json out;
  out["candidate"] = ToJson(view.candidate);
  out["kwic"] = Json::array();
  for (const auto &line : view.kwic) out["kwic"].push_back(ToJson(line));
  out["decisions"] = Json::array();
  for (const auto &decision : view.decisions) {
    out["decisions"].push_back(ToJson(decision));
  }
  return out;
}

void Reply(httplib::Response &res, int status, const Json &body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void Fail(httplib::Response &res, int status, const std::string &message) {
  Reply(res, status, Json{{"ok", false}, {"error", message}});
}

std::string Param(const httplib::Request &req, const char *name) {
  return req.has_param(name) ? req.get_param_value(name) : std::string();
}

bool IsTrue(const std::string &value) {
  return value == "1" || value == "true" || value == "yes";
}

}  // namespace

struct AnnotationServer::Impl {
  AnnotationService &service;
  httplib::Server server;
  int port = 0;
  bool bound = false;

  explicit Impl(AnnotationService &s) : service(s) {}
};

AnnotationServer::AnnotationServer(AnnotationService &service,
                                   std::filesystem::path static_dir)
    : impl_(std::make_unique<Impl>(service)) {
  httplib::Server &server = impl_->server;
  AnnotationService &svc = service;

  server.set_exception_handler(
      [](const httplib::Request &, httplib::Response &res,
         std::exception_ptr error) {
        try {
          std::rethrow_exception(error);
        } catch (const ValidationError &e) {
          Fail(res, 400, e.what());
        } catch (const Json::exception &e) {
          Fail(res, 400, std::string("invalid JSON: ") + e.what());
        } catch (const std::exception &e) {
          Fail(res, 500, e.what());
        }
      });

  server.Get("/api/candidates",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               std::optional<mwe::Status> status;
               std::string status_name = Param(req, "status");
               if (!status_name.empty()) {
                 status = mwe::ParseStatus(status_name);
                 if (!status) {
                   return Fail(res, 400, "unknown status '" + status_name + "'");
                 }
               }
               std::string page_text = Param(req, "page");
               size_t page = page_text.empty() ? 1 : std::stoul(page_text);
               std::string annotator = Param(req, "annotator");
               Page result = svc.List(status, page);
               Json items = Json::array();
               for (const auto &candidate : result.items) {
                 Json item = ToJson(candidate);
                 if (!annotator.empty()) {
                   auto mine = svc.DecisionOf(candidate.id, annotator);
                   item["my_decision"] = mine ? ToJson(*mine) : Json(nullptr);
                 }
                 items.push_back(std::move(item));
               }
               Reply(res, 200,
                     Json{{"page", result.page},
                          {"page_size", result.page_size},
                          {"total", result.total},
                          {"items", std::move(items)}});
             });

  server.Get(R"(/api/candidates/([0-9A-Za-z_-]+))",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               std::optional<CandidateView> view = svc.Get(req.matches[1]);
               if (!view) return Fail(res, 404, "unknown candidate");
               Reply(res, 200, ToJson(*view));
             });

  server.Get("/api/next",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               std::optional<CandidateView> view = svc.Next(
                   Param(req, "annotator"), IsTrue(Param(req, "revisit")));
               if (!view) return Reply(res, 200, Json{{"done", true}});
               Json body = ToJson(*view);
               body["done"] = false;
               Reply(res, 200, body);
             });

  server.Post("/api/decisions",
              [&svc](const httplib::Request &req, httplib::Response &res) {
                Json body = Json::parse(req.body);
                if (!body.is_object()) {
                  return Fail(res, 400, "expected a JSON object");
                }
                mwe::AnnotationDecision decision;
                decision.candidate_id = body.at("candidate").get<std::string>();
                decision.annotator = body.at("annotator").get<std::string>();
                decision.keep = body.at("keep").get<bool>();
                if (body.contains("compositional") &&
                    !body["compositional"].is_null()) {
                  decision.compositional = body["compositional"].get<bool>();
                }
                if (body.contains("note") && !body["note"].is_null()) {
                  decision.note = body["note"].get<std::string>();
                }
                mwe::AnnotationDecision stored = svc.Record(decision);
                Reply(res, 200,
                      Json{{"ok", true}, {"timestamp", stored.timestamp}});
              });

  server.Get("/api/adjudication",
             [&svc](const httplib::Request &, httplib::Response &res) {
               Json items = Json::array();
               for (const auto &view : svc.AdjudicationQueue()) {
                 items.push_back(ToJson(view));
               }
               Reply(res, 200, items);
             });

  server.Get("/api/progress",
             [&svc](const httplib::Request &, httplib::Response &res) {
               Json annotators = Json::object();
               for (const auto &[name, counts] : svc.ProgressByAnnotator()) {
                 annotators[name] = Json{{"decided", counts.decided},
                                         {"pending", counts.pending},
                                         {"disputed", counts.disputed}};
               }
               Reply(res, 200, Json{{"annotators", std::move(annotators)}});
             });

  server.Post("/api/export",
              [&svc](const httplib::Request &, httplib::Response &res) {
                ExportResult result = svc.Export();
                Reply(res, 200,
                      Json{{"ok", true},
                           {"path", result.path.string()},
                           {"candidates", result.candidates},
                           {"records", result.records}});
              });

  if (!static_dir.empty()) {
    if (!server.set_mount_point("/", static_dir.string())) {
      throw IoError("static directory not found: " + static_dir.string());
    }
  }
}

AnnotationServer::~AnnotationServer() { Stop(); }

int AnnotationServer::Bind(const std::string &host, int port) {
  Impl &impl = *impl_;
  if (port == 0) {
    impl.port = impl.server.bind_to_any_port(host);
  } else if (impl.server.bind_to_port(host, port)) {
    impl.port = port;
  } else {
    impl.port = -1;
  }
  if (impl.port <= 0) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  impl.bound = true;
  return impl.port;
}

void AnnotationServer::Listen() {
  if (!impl_->bound) throw IoError("server is not bound");
  impl_->server.listen_after_bind();
}

void AnnotationServer::WaitUntilReady() { impl_->server.wait_until_ready(); }

void AnnotationServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace lexgap::annot
