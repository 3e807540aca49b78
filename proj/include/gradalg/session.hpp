#pragma once

// Interactive mutation sessions behind a small JSON-over-HTTP API.
//
//   POST /session                 {model or seed document} -> {id, state}
//   GET  /session/{id}            -> state
//   POST /session/{id}/mutate     {"k": int, 1-based} -> state
//   POST /session/{id}/undo       -> state
//   GET  /session/{id}/variables  -> discovered variables with degrees
//
// Unknown sessions answer 404; invalid input answers 422.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "gradalg/error.hpp"
#include "gradalg/explorer.hpp"
#include "gradalg/laurent.hpp"
#include "gradalg/models.hpp"
#include "gradalg/seed_io.hpp"

namespace gradalg {

/// Resolves a session request body to a graded seed and a display name.
/// Accepts {"model": "markov" | "a2" | "a3"}, {"model": "dynkin", "type",
/// "rank", "orientation"}, {"model": "grassmannian", "k", "n"},
/// {"seed": document} or a bare seed document.
inline std::pair<std::string, GradedSeed> resolve_model(const nlohmann::json& req) {
  if (!req.is_object()) fail(ErrorKind::ParseError, "request body must be a JSON object");
  if (req.contains("seed")) return {"custom", seed_from_json(req.at("seed"))};
  if (!req.contains("model")) return {"custom", seed_from_json(req)};
  if (!req.at("model").is_string()) fail(ErrorKind::ParseError, "model must be a string");
  const std::string name = req.at("model").get<std::string>();
  auto count = [&](const char* key) { return detail::json_count(req, key); };
  if (name == "markov") return {name, markov_seed()};
  if (name == "a2") return {name, a2_model()};
  if (name == "a3") return {name, a3_model()};
  if (name == "grassmannian") {
    std::size_t k = count("k"), n = count("n");
    return {"grassmannian k=" + std::to_string(k) + " n=" + std::to_string(n), grassmannian_seed(k, n)};
  }
  if (name == "dynkin") {
    if (!req.contains("type") || !req.at("type").is_string() || req.at("type").get<std::string>().size() != 1)
      fail(ErrorKind::ParseError, "dynkin needs a one-letter type");
    const char type = req.at("type").get<std::string>()[0];
    const std::size_t rank = count("rank");
    Orientation o = Orientation::Linear;
    if (req.contains("orientation")) {
      const std::string s = req.at("orientation").is_string() ? req.at("orientation").get<std::string>() : "";
      if (s == "reversed") o = Orientation::Reversed;
      else if (s == "alternating") o = Orientation::Alternating;
      else if (s != "linear") fail(ErrorKind::BadParameters, "orientation must be linear, reversed or alternating");
    }
    return {std::string(1, type) + std::to_string(rank), standard_gradings(dynkin_seed(type, rank, o))};
  }
  fail(ErrorKind::BadParameters, "unknown model " + name);
}

struct HttpResponse {
  int status = 200;
  std::string body;
};

class SessionStore {
 public:
  explicit SessionStore(std::uint64_t seed = std::random_device{}()) : rng_(seed) {}

  /// Dispatches one request; the HTTP layer and the tests both go through here.
  HttpResponse handle(const std::string& method, const std::string& path, const std::string& body) {
    static const std::regex session_re(R"(^/session/([A-Za-z0-9]+)(/(mutate|undo|variables))?/?$)");
    try {
      if (path == "/session" || path == "/session/") {
        if (method != "POST") return error(405, "MethodNotAllowed", "use POST to create a session");
        return create(parse_body(body));
      }
      std::smatch m;
      if (!std::regex_match(path, m, session_re)) return error(404, "NotFound", "no such route");
      auto session = find(m[1].str());
      if (!session) return error(404, "UnknownSession", "no session " + m[1].str());
      const std::string action = m[3].str();
      std::lock_guard lock(session->mutex);
      if (action.empty() && method == "GET") return ok(state_json(*session));
      if (action == "variables" && method == "GET") return ok(variables_json(*session));
      if (action == "mutate" && method == "POST") return mutate(*session, parse_body(body));
      if (action == "undo" && method == "POST") return undo(*session);
      return error(405, "MethodNotAllowed", "method not allowed on " + path);
    } catch (const Error& e) {
      return error(422, std::string(to_string(e.kind())), e.what());
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
  }

 private:
  struct Session {
    std::string id;
    std::string model;
    ClusterState current;
    std::vector<Grading> initial_gradings;
    std::vector<std::pair<std::size_t, ClusterState>> history;  ///< (k, state before mutating at k)
    std::vector<LaurentPoly> discovered;
    std::set<std::string> seen;
    std::mutex mutex;
  };

  static nlohmann::json parse_body(const std::string& body) {
    try {
      return body.empty() ? nlohmann::json::object() : nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception&) {
      fail(ErrorKind::ParseError, "request body is not valid JSON");
    }
  }

  static HttpResponse ok(const nlohmann::ordered_json& j) { return {200, j.dump()}; }
  static HttpResponse error(int status, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    return {status, j.dump()};
  }

  std::shared_ptr<Session> find(const std::string& id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  static void record(Session& s) {
    for (const auto& p : s.current.cluster) {
      std::string key = p.serialize();
      if (s.seen.insert(key).second) s.discovered.push_back(p);
    }
  }

  static std::string digest(const ClusterState& c) {
    std::string text = serialize_seed(c.graded_seed);
    for (const auto& p : c.cluster) text += "|" + p.serialize();
    std::ostringstream os;
    os << std::hex << std::hash<std::string>{}(text);
    return os.str();
  }

  static nlohmann::ordered_json degree_json(const FgAbelianGroup::Element& e) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& x : e) out.push_back(nlohmann::ordered_json::parse(x.get_str()));
    return out;
  }

  static nlohmann::ordered_json state_json(const Session& s) {
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["model"] = s.model;
    j["seed"] = nlohmann::ordered_json::parse(serialize_seed(s.current.graded_seed));
    j["cluster"] = nlohmann::ordered_json::array();
    for (const auto& p : s.current.cluster) j["cluster"].push_back(p.serialize());
    j["degrees"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.current.cluster.size(); ++i) {
      nlohmann::ordered_json per = nlohmann::ordered_json::array();
      for (const auto& g : s.current.graded_seed.gradings) per.push_back(degree_json(g.values[i]));
      j["degrees"].push_back(per);
    }
    j["history"] = s.history.size();
    j["moves"] = nlohmann::ordered_json::array();
    for (const auto& h : s.history) j["moves"].push_back(h.first + 1);
    j["digest"] = digest(s.current);
    return j;
  }

  static nlohmann::ordered_json variables_json(const Session& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& p : s.discovered) {
      nlohmann::ordered_json v;
      v["poly"] = p.serialize();
      v["degrees"] = nlohmann::ordered_json::array();
      for (const auto& g : s.initial_gradings) {
        DegreeResult d = degree_of(p, g);
        v["degrees"].push_back(is_homogeneous(d) ? degree_json(std::get<FgAbelianGroup::Element>(d))
                                                 : nlohmann::ordered_json(nullptr));
      }
      out.push_back(v);
    }
    return out;
  }

  HttpResponse create(const nlohmann::json& req) {
    auto [name, gs] = resolve_model(req);
    auto s = std::make_shared<Session>();
    s->model = name;
    s->initial_gradings = gs.gradings;
    s->current = initial_state(std::move(gs));
    record(*s);
    {
      std::lock_guard lock(mutex_);
      do {
        std::ostringstream os;
        os << std::hex << rng_();
        s->id = os.str();
      } while (sessions_.count(s->id));
      sessions_[s->id] = s;
    }
    nlohmann::ordered_json j;
    j["id"] = s->id;
    j["state"] = state_json(*s);
    return {201, j.dump()};
  }

  static HttpResponse mutate(Session& s, const nlohmann::json& req) {
    if (!req.is_object() || !req.contains("k") || !req.at("k").is_number_integer())
      return error(422, "IndexOutOfRange", "body must be {\"k\": integer}");
    const long k = req.at("k").get<long>();
    const auto r = static_cast<long>(s.current.graded_seed.seed.r);
    if (k < 1 || k > r)
      return error(422, "IndexOutOfRange", "k must lie in 1.." + std::to_string(r));
    ClusterState next = mutate_cluster(s.current, static_cast<std::size_t>(k - 1));
    s.history.emplace_back(static_cast<std::size_t>(k - 1), std::move(s.current));
    s.current = std::move(next);
    record(s);
    return ok(state_json(s));
  }

  static HttpResponse undo(Session& s) {
    if (s.history.empty()) return error(422, "EmptyHistory", "nothing to undo");
    s.current = std::move(s.history.back().second);
    s.history.pop_back();
    return ok(state_json(s));
  }

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
};

/// Wires the store into an httplib server.
inline void register_routes(httplib::Server& server, SessionStore& store) {
  auto forward = [&store](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = store.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/session.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get(R"(/session.*)", forward);
  server.Post(R"(/session.*)", forward);
}

}  // namespace gradalg
