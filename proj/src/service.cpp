// Copyright 2026 The trajadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trajadapt/service.hpp"

#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "httplib.h"

namespace trajadapt {

Json session_view(const Session& s) {
  Json v;
  v["id"] = s.id();
  v["state"] = to_string(s.state());
  v["instruction"] = s.instruction();
  v["iterations"] = s.iterations().size();
  const auto plan = s.latest_plan();
  v["plan"] = plan ? Json(*plan) : Json(nullptr);
  v["scene"] = to_json(s.scene());
  v["original"] = to_json(s.original());
  const auto adapted = s.latest_adapted();
  v["adapted"] = adapted ? to_json(*adapted) : Json(nullptr);
  const auto err = s.latest_error();
  v["error"] = err ? to_json(*err) : Json(nullptr);
  v["feedback_history"] = s.feedback_history();
  return v;
}

namespace {

class BadRequest : public std::runtime_error {
 public:
  BadRequest(std::string field, const std::string& msg)
      : std::runtime_error(msg), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& msg,
                 const std::string& field = {}) {
  Json body = {{"error", msg}};
  if (!field.empty()) body["field"] = field;
  reply(res, status, body);
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    Json doc = Json::parse(req.body);
    if (!doc.is_object()) throw BadRequest("", "body must be a JSON object");
    return doc;
  } catch (const Json::parse_error& e) {
    throw BadRequest("", std::string("body is not valid JSON: ") + e.what());
  }
}

std::string optional_string(const Json& body, const char* name) {
  if (!body.contains(name) || body.at(name).is_null()) return {};
  if (!body.at(name).is_string()) {
    throw BadRequest(name, std::string("'") + name + "' must be a string");
  }
  return body.at(name).get<std::string>();
}

}  // namespace

struct Service::Impl {
  struct Entry {
    std::mutex op;    // serializes operations on the session
    std::mutex view;  // guards `snapshot`; never held across model calls
    Session session;
    Json snapshot;

    explicit Entry(Session s) : session(std::move(s)) {
      snapshot = session_view(session);
    }
  };

  ServiceConfig cfg;
  std::shared_ptr<const LlmClient> client;
  httplib::Server server;
  std::thread server_thread;

  std::mutex store_mu;
  std::map<std::string, std::shared_ptr<Entry>> sessions;
  std::uint64_t next_id = 1;

  std::mutex tasks_mu;
  std::condition_variable tasks_cv;
  int running = 0;
  std::vector<std::thread> tasks;

  std::mutex eval_mu;

  explicit Impl(ServiceConfig c) : cfg(std::move(c)) {
    client = make_client(cfg.llm);
    routes();
  }

  std::shared_ptr<Entry> find(const std::string& id) {
    std::lock_guard lock(store_mu);
    const auto it = sessions.find(id);
    return it == sessions.end() ? nullptr : it->second;
  }

  void publish(Entry& e) {
    Json view = session_view(e.session);
    {
      std::lock_guard lock(e.view);
      e.snapshot = std::move(view);
    }
    if (cfg.export_dir) {
      try {
        std::filesystem::create_directories(*cfg.export_dir);
        write_text_file(*cfg.export_dir / (e.session.id() + ".json"),
                        e.session.to_json().dump(2));
      } catch (const std::exception&) {
        // Export is best effort; the in-memory session stays authoritative.
      }
    }
  }

  Json snapshot(Entry& e) {
    std::lock_guard lock(e.view);
    return e.snapshot;
  }

  void generate_async(std::shared_ptr<Entry> e) {
    std::lock_guard lock(tasks_mu);
    ++running;
    tasks.emplace_back([this, e = std::move(e)]() {
      {
        std::lock_guard op(e->op);
        if (e->session.state() == SessionState::kAwaitingLlm) {
          e->session.generate();
        }
        publish(*e);
      }
      std::lock_guard done(tasks_mu);
      --running;
      tasks_cv.notify_all();
    });
  }

  Session make_session(const Json& body, std::string id) {
    SessionConfig scfg = cfg.session;
    const std::string sample_id = optional_string(body, "sample_id");
    if (!sample_id.empty()) {
      const Sample* sample = nullptr;
      for (const auto& s : cfg.corpus) {
        if (s.id == sample_id) sample = &s;
      }
      if (sample == nullptr) {
        throw BadRequest("sample_id", "unknown sample_id '" + sample_id + "'");
      }
      scfg.fixture_id = sample->fixture_key();
      std::string instruction = optional_string(body, "instruction");
      if (instruction.empty()) instruction = sample->instruction;
      return Session(std::move(id), std::move(instruction), sample->scene,
                     generate_trajectory(sample->traj_spec), client, scfg);
    }
    const std::string instruction = optional_string(body, "instruction");
    if (instruction.empty()) {
      throw BadRequest("instruction", "'instruction' is required");
    }
    if (!body.contains("trajectory")) {
      throw BadRequest("trajectory", "'trajectory' or 'sample_id' is required");
    }
    Scene scene;
    if (body.contains("scene")) {
      try {
        scene = scene_from_json(body.at("scene"));
      } catch (const std::exception& e) {
        throw BadRequest("scene", e.what());
      }
    }
    std::optional<Trajectory> traj;
    try {
      traj = trajectory_from_json(body.at("trajectory"));
    } catch (const std::exception& e) {
      throw BadRequest("trajectory", e.what());
    }
    scfg.fixture_id = optional_string(body, "fixture_id");
    return Session(std::move(id), instruction, std::move(scene),
                   std::move(*traj), client, scfg);
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&,
                                    httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res,
           std::exception_ptr ep) {
          try {
            std::rethrow_exception(ep);
          } catch (const BadRequest& e) {
            reply_error(res, 400, e.what(), e.field());
          } catch (const std::exception& e) {
            reply_error(res, 500, e.what());
          } catch (...) {
            reply_error(res, 500, "internal error");
          }
        });

    server.Get("/api/health", [](const httplib::Request&,
                                 httplib::Response& res) {
      reply(res, 200, {{"status", "ok"}});
    });

    server.Post("/api/sessions", [this](const httplib::Request& req,
                                        httplib::Response& res) {
      const Json body = parse_body(req);
      std::string id;
      {
        std::lock_guard lock(store_mu);
        id = "s" + std::to_string(next_id++);
      }
      auto entry = std::make_shared<Entry>(make_session(body, id));
      {
        std::lock_guard lock(store_mu);
        sessions.emplace(id, entry);
      }
      const Json view = snapshot(*entry);
      generate_async(entry);
      reply(res, 201, view);
    });

    server.Get(R"(/api/sessions/([^/]+))", [this](const httplib::Request& req,
                                                  httplib::Response& res) {
      const auto e = find(req.matches[1]);
      if (!e) return reply_error(res, 404, "unknown session");
      reply(res, 200, snapshot(*e));
    });

    server.Get(R"(/api/sessions/([^/]+)/export)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 const auto e = find(req.matches[1]);
                 if (!e) return reply_error(res, 404, "unknown session");
                 std::lock_guard op(e->op);
                 reply(res, 200, e->session.to_json());
               });

    server.Post(R"(/api/sessions/([^/]+)/verdict)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  const auto e = find(req.matches[1]);
                  if (!e) return reply_error(res, 404, "unknown session");
                  const Json body = parse_body(req);
                  if (!body.contains("approve") ||
                      !body.at("approve").is_boolean()) {
                    throw BadRequest("approve", "'approve' must be a boolean");
                  }
                  const bool approve = body.at("approve").get<bool>();
                  const std::string feedback = optional_string(body, "feedback");
                  if (!approve && feedback.empty()) {
                    throw BadRequest("feedback",
                                     "'feedback' is required when not approving");
                  }
                  // A generation in flight means the state is not proposed;
                  // answer from the snapshot instead of waiting for it.
                  if (snapshot(*e).at("state") != "proposed") {
                    return reply_error(res, 409, "session is not awaiting a verdict");
                  }
                  {
                    std::lock_guard op(e->op);
                    try {
                      e->session.record_verdict(
                          approve ? Verdict::approve() : Verdict::feedback(feedback));
                    } catch (const InvalidStateError& err) {
                      return reply_error(res, 409, err.what());
                    }
                    publish(*e);
                  }
                  const Json view = snapshot(*e);
                  if (!approve) generate_async(e);
                  reply(res, 200, view);
                });

    server.Get("/api/corpus", [this](const httplib::Request&,
                                     httplib::Response& res) {
      Json out = Json::array();
      for (const auto& s : cfg.corpus) {
        out.push_back({{"id", s.id},
                       {"instruction", s.instruction},
                       {"category", to_string(s.category)},
                       {"checks", s.checks.size()}});
      }
      reply(res, 200, out);
    });

    server.Post("/api/eval", [this](const httplib::Request& req,
                                    httplib::Response& res) {
      const Json body = parse_body(req);
      LlmConfig llm = cfg.llm;
      const std::string mode = optional_string(body, "llm");
      if (!mode.empty()) {
        const auto t = parse_transport(mode);
        if (!t) throw BadRequest("llm", "'llm' must be mock or live");
        llm.transport = *t;
      }
      std::lock_guard lock(eval_mu);
      const auto c = llm.transport == cfg.llm.transport ? client : make_client(llm);
      EvalOptions opts;
      opts.session = cfg.session;
      reply(res, 200, to_json(run_eval(cfg.corpus, c, opts)));
    });
  }

  void join_tasks() {
    std::vector<std::thread> done;
    {
      std::unique_lock lock(tasks_mu);
      tasks_cv.wait(lock, [this] { return running == 0; });
      done.swap(tasks);
    }
    for (auto& t : done) t.join();
  }
};

Service::Service(ServiceConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

Service::~Service() {
  stop();
  impl_->join_tasks();
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return impl_->server.listen_after_bind(); }

void Service::start() {
  impl_->server_thread =
      std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void Service::stop() {
  impl_->server.stop();
  if (impl_->server_thread.joinable()) impl_->server_thread.join();
}

void Service::wait_idle() { impl_->join_tasks(); }

}  // namespace trajadapt
