#include "pizza/server.hpp"

#include <httplib.h>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <random>

namespace pizza {

struct GameService::Session {
    std::mutex mutex;
    std::string id;
    GameState state;
    Player human;
    std::string opponent;
    StrategyPtr engine;
    StrategyState engine_state = 0;
    std::int64_t created = 0; // unix seconds

    Session(GameState s, Player h) : state(std::move(s)), human(h) {}
};

namespace {

ServiceResponse error_response(int status, const std::string& message)
{
    return {status, Json{{"error", message}}};
}

Player parse_role(const Json& body)
{
    if (!body.contains("human_role"))
        return Player::Alice;
    const auto& v = body["human_role"];
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        for (auto& c : s)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s == "alice")
            return Player::Alice;
        if (s == "bob")
            return Player::Bob;
    }
    throw Error(ErrorKind::InvalidArgument, "human_role must be \"alice\" or \"bob\"");
}

Json session_json(const std::string& id, Player human, const std::string& opponent, std::int64_t created,
                  const GameState& state)
{
    return Json{
        {"id", id},
        {"human_role", to_string(human)},
        {"opponent", opponent},
        {"created", created},
        {"state", state_json(state)},
    };
}

} // namespace

GameService::GameService(std::size_t capacity, std::size_t max_pieces)
    : capacity_(capacity == 0 ? 1 : capacity), max_pieces_(max_pieces)
{
}

GameService::~GameService() = default;

Pizza GameService::parse_sizes(const Json& body) const
{
    if (!body.is_object() || !body.contains("sizes") || !body["sizes"].is_array())
        throw Error(ErrorKind::InvalidArgument, "body needs a \"sizes\" array");
    const auto& arr = body["sizes"];
    if (arr.empty())
        throw Error(ErrorKind::InvalidArgument, "empty pizza");
    if (arr.size() > max_pieces_)
        throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(max_pieces_) + " pieces");
    std::vector<Size> sizes;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw Error(ErrorKind::InvalidArgument, "sizes must be integers");
        const auto s = v.get<std::int64_t>();
        if (s < 0)
            throw Error(ErrorKind::InvalidArgument, "negative size " + std::to_string(s));
        sizes.push_back(s);
    }
    return Pizza(std::move(sizes));
}

GameService::SessionPtr GameService::find(const std::string& id)
{
    std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end())
        return nullptr;
    recency_.splice(recency_.begin(), recency_, it->second.second);
    return it->second.first;
}

std::string GameService::insert(SessionPtr session)
{
    std::lock_guard lock(mutex_);
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::string id;
    do {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng() ^ ++counter_));
        id = buf;
    } while (sessions_.count(id) != 0);
    session->id = id;
    recency_.push_front(id);
    sessions_.emplace(id, std::make_pair(std::move(session), recency_.begin()));
    while (sessions_.size() > capacity_) {
        sessions_.erase(recency_.back());
        recency_.pop_back();
    }
    return id;
}

std::size_t GameService::session_count() const
{
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

ServiceResponse GameService::create_game(const Json& body)
{
    Pizza pizza({0});
    Player human = Player::Alice;
    try {
        pizza = parse_sizes(body);
        human = parse_role(body);
    } catch (const Error& e) {
        return error_response(400, e.what());
    }
    const Player engine_role = other(human);
    std::string opponent = body.value("opponent", std::string("optimal"));

    StrategyPtr engine;
    try {
        engine = opponent == "optimal" ? optimal_strategy(pizza, engine_role) : strategy_from_id(pizza, opponent);
    } catch (const Error& e) {
        return error_response(400, "opponent '" + opponent + "': " + e.what());
    }
    if (engine->role() != engine_role)
        return error_response(400, "opponent '" + opponent + "' plays " + to_string(engine->role()) + ", not "
                                       + to_string(engine_role));

    auto session = std::make_shared<Session>(GameState(pizza), human);
    session->opponent = opponent;
    session->engine = engine;
    session->engine_state = engine->initial_state();
    session->created =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();

    Json engine_reply = nullptr;
    if (engine_role == Player::Alice) {
        const Move open{engine->opening(), Side::Opening};
        session->state = apply_move(session->state, open);
        engine_reply = move_json(open);
    }
    const std::string id = insert(session);
    std::lock_guard lock(session->mutex);
    Json out = session_json(id, human, opponent, session->created, session->state);
    out["engine_reply"] = engine_reply;
    return {201, out};
}

ServiceResponse GameService::play_move(const std::string& id, const Json& body)
{
    const SessionPtr s = find(id);
    if (!s)
        return error_response(404, "unknown game " + id);
    if (!body.is_object() || !body.contains("piece") || !body["piece"].is_number_integer())
        return error_response(400, "body needs an integer \"piece\"");
    const auto raw = body["piece"].get<std::int64_t>();

    std::lock_guard lock(s->mutex);
    if (s->state.finished())
        return error_response(409, "game is finished");
    if (s->state.turn() != s->human)
        return error_response(409, "not your turn");
    if (raw < 0 || static_cast<std::size_t>(raw) >= s->state.pizza().n())
        return error_response(409, "piece " + std::to_string(raw) + " out of range");
    const auto move = move_for_piece(s->state, static_cast<Piece>(raw));
    if (!move) {
        const bool eaten = s->state.eaten().contains(static_cast<Piece>(raw), s->state.pizza().n());
        return error_response(409, std::string("illegal move: piece ")
                                       + (eaten ? "already eaten" : "not adjacent to the eaten arc"));
    }

    s->state = apply_move(s->state, *move);
    Json engine_reply = nullptr;
    if (!s->state.finished()) {
        try {
            const Reply r = s->engine->respond(s->engine_state, s->state.eaten(), *move);
            s->state = apply_move(s->state, r.move);
            s->engine_state = r.next;
            engine_reply = move_json(r.move);
        } catch (const Error& e) {
            return error_response(500, std::string("engine failed: ") + e.what());
        }
    }
    return {200, Json{{"id", id}, {"state", state_json(s->state)}, {"human_move", move_json(*move)},
                      {"engine_reply", engine_reply}}};
}

ServiceResponse GameService::get_game(const std::string& id)
{
    const SessionPtr s = find(id);
    if (!s)
        return error_response(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    return {200, session_json(id, s->human, s->opponent, s->created, s->state)};
}

ServiceResponse GameService::hints(const std::string& id)
{
    const SessionPtr s = find(id);
    if (!s)
        return error_response(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    return {200, Json{{"id", id}, {"turn", to_string(s->state.turn())}, {"hints", hints_json(best_move_hints(s->state))}}};
}

ServiceResponse GameService::analyze(const Json& body)
{
    Pizza pizza({0});
    try {
        pizza = parse_sizes(body);
    } catch (const Error& e) {
        return error_response(400, e.what());
    }
    Json out = analysis_json(pizza);
    const EvaluationResult opt = optimal_value(pizza);
    out["optimal"] = opt.alice;
    out["optimal_line"] = moves_json(opt.line);
    out["ratio"] = pizza.total() > 0 ? ratio_json(opt.alice, pizza.total()) : Json(nullptr);
    out["strategies"] = strategy_values_json(pizza);
    return {200, out};
}

Json GameService::openapi()
{
    const Json error_schema{{"type", "object"}, {"properties", {{"error", {{"type", "string"}}}}}};
    const Json sizes_schema{{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 0}}}, {"minItems", 1}};
    const auto json_body = [](const Json& schema) {
        return Json{{"required", true}, {"content", {{"application/json", {{"schema", schema}}}}}};
    };
    const auto ok = [](const std::string& what) {
        return Json{{"description", what}, {"content", {{"application/json", {{"schema", {{"type", "object"}}}}}}}};
    };
    const Json err{{"description", "error"}, {"content", {{"application/json", {{"schema", error_schema}}}}}};
    const Json id_param = Json::array({{{"name", "id"}, {"in", "path"}, {"required", true}, {"schema", {{"type", "string"}}}}});

    Json paths;
    paths["/games"]["post"] = {
        {"summary", "Create a game session"},
        {"requestBody",
         json_body({{"type", "object"},
                    {"required", {"sizes"}},
                    {"properties",
                     {{"sizes", sizes_schema},
                      {"human_role", {{"type", "string"}, {"enum", {"alice", "bob"}}}},
                      {"opponent", {{"type", "string"}, {"default", "optimal"}}}}}})},
        {"responses", {{"201", ok("session with state and engine opening")}, {"400", err}}},
    };
    paths["/games/{id}"]["get"] = {
        {"summary", "Session state, scores and history"},
        {"parameters", id_param},
        {"responses", {{"200", ok("session")}, {"404", err}}},
    };
    paths["/games/{id}/moves"]["post"] = {
        {"summary", "Play the human move and receive the engine reply"},
        {"parameters", id_param},
        {"requestBody",
         json_body({{"type", "object"}, {"required", {"piece"}}, {"properties", {{"piece", {{"type", "integer"}}}}}})},
        {"responses", {{"200", ok("new state")}, {"400", err}, {"404", err}, {"409", err}}},
    };
    paths["/games/{id}/hints"]["get"] = {
        {"summary", "Optimal totals for every legal move"},
        {"parameters", id_param},
        {"responses", {{"200", ok("hints")}, {"404", err}}},
    };
    paths["/analyze"]["post"] = {
        {"summary", "Hardness, tripartition, optimal value and strategy values"},
        {"requestBody", json_body({{"type", "object"}, {"required", {"sizes"}}, {"properties", {{"sizes", sizes_schema}}}})},
        {"responses", {{"200", ok("analysis")}, {"400", err}}},
    };
    paths["/spec"]["get"] = {{"summary", "This document"}, {"responses", {{"200", ok("OpenAPI document")}}}};
    return Json{
        {"openapi", "3.0.3"},
        {"info", {{"title", "Pizza game API"}, {"version", "1.0.0"}}},
        {"paths", paths},
    };
}

// ---------------------------------------------------------------------------

struct HttpServer::Impl {
    GameService& service;
    httplib::Server server;

    explicit Impl(GameService& s) : service(s) { routes(); }

    static void reply(httplib::Response& res, const ServiceResponse& r)
    {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    }

    static std::optional<Json> body_json(const httplib::Request& req, httplib::Response& res)
    {
        try {
            return Json::parse(req.body);
        } catch (const Json::exception& e) {
            reply(res, error_response(400, std::string("invalid JSON: ") + e.what()));
            return std::nullopt;
        }
    }

    void routes()
    {
        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                    {"Access-Control-Allow-Headers", "Content-Type"}});
        server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
        server.Post("/games", [this](const httplib::Request& req, httplib::Response& res) {
            if (auto body = body_json(req, res))
                reply(res, service.create_game(*body));
        });
        server.Post(R"(/games/([^/]+)/moves)", [this](const httplib::Request& req, httplib::Response& res) {
            if (auto body = body_json(req, res))
                reply(res, service.play_move(req.matches[1], *body));
        });
        server.Get(R"(/games/([^/]+)/hints)", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.hints(req.matches[1]));
        });
        server.Get(R"(/games/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.get_game(req.matches[1]));
        });
        server.Post("/analyze", [this](const httplib::Request& req, httplib::Response& res) {
            if (auto body = body_json(req, res))
                reply(res, service.analyze(*body));
        });
        server.Get("/spec", [](const httplib::Request&, httplib::Response& res) {
            reply(res, ServiceResponse{200, GameService::openapi()});
        });
        server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                reply(res, error_response(500, e.what()));
            }
        });
    }
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port)
{
    if (port == 0)
        return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen()
{
    return impl_->server.listen_after_bind();
}

void HttpServer::stop()
{
    impl_->server.stop();
}

} // namespace pizza
