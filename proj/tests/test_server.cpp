#include "fixtures.hpp"
#include "pizza/server.hpp"

#include <doctest.h>
#include <httplib.h>

#include <algorithm>
#include <thread>

using namespace pizza;

namespace {

/// Rebuilds a state from its JSON history through the core engine.
GameState replay_json(const Json& state)
{
    GameState s(Pizza(state["sizes"].get<std::vector<Size>>()));
    for (const Json& h : state["history"]) {
        const auto move = move_for_piece(s, h["piece"].get<Piece>());
        REQUIRE(move);
        s = apply_move(s, *move);
    }
    return s;
}

} // namespace

TEST_CASE("creating games")
{
    GameService service;
    auto r = service.create_game(Json{{"sizes", {1, 0, 1, 0}}, {"human_role", "alice"}, {"opponent", "optimal"}});
    CHECK(r.status == 201);
    CHECK(r.body["state"]["legal_moves"].size() == 4);
    CHECK(r.body["engine_reply"].is_null());
    CHECK(r.body["state"]["turn"] == "alice");

    r = service.create_game(Json{{"sizes", {1, 0, 1}}, {"human_role", "bob"}, {"opponent", "best-of-four"}});
    CHECK(r.status == 201);
    CHECK(r.body["state"]["history"].size() == 1);
    CHECK(r.body["state"]["turn"] == "bob");
    CHECK(!r.body["engine_reply"].is_null());

    CHECK(service.create_game(Json{{"sizes", {1, -1, 1}}}).status == 400);
    CHECK(service.create_game(Json{{"sizes", Json::array()}}).status == 400);
    CHECK(service.create_game(Json{{"sizes", "1,0,1"}}).status == 400);
    CHECK(service.create_game(Json{{"sizes", {1, 0, 1}}, {"opponent", "nope"}}).status == 400);
    CHECK(service.create_game(Json{{"sizes", {1, 0, 1}}, {"human_role", "carol"}}).status == 400);
    CHECK(service.create_game(Json{{"sizes", {1, 0, 1}}, {"human_role", "alice"}, {"opponent", "best-of-four"}}).status
          == 400);
    CHECK(service.create_game(Json{{"sizes", std::vector<int>(600, 1)}}).status == 400);
    CHECK(service.session_count() == 2);
}

TEST_CASE("moves")
{
    GameService service;
    const auto created = service.create_game(Json{{"sizes", {3, 1, 4, 1, 5}}});
    const std::string id = created.body["id"];

    CHECK(service.play_move("missing", Json{{"piece", 0}}).status == 404);
    CHECK(service.play_move(id, Json::object()).status == 400);
    CHECK(service.play_move(id, Json{{"piece", "two"}}).status == 400);
    CHECK(service.play_move(id, Json{{"piece", 9}}).status == 409);

    auto r = service.play_move(id, Json{{"piece", 4}});
    REQUIRE(r.status == 200);
    CHECK(r.body["state"]["history"].size() == 2);
    CHECK(!r.body["engine_reply"].is_null());
    CHECK(replay_json(r.body["state"]).scores().alice == r.body["state"]["scores"]["alice"].get<Size>());

    const auto again = service.play_move(id, Json{{"piece", 4}});
    CHECK(again.status == 409);
    CHECK(again.body["error"] == "illegal move: piece already eaten");
    const auto owners = r.body["state"]["owners"];
    const Json legal = r.body["state"]["legal_moves"];
    for (int q = 0; q < 5; ++q) {
        const bool is_legal = std::any_of(legal.begin(), legal.end(), [&](const Json& m) { return m["piece"] == q; });
        if (owners[q].is_null() && !is_legal) {
            const auto far = service.play_move(id, Json{{"piece", q}});
            CHECK(far.status == 409);
            CHECK(far.body["error"] == "illegal move: piece not adjacent to the eaten arc");
        }
    }

    std::size_t log = 2;
    while (!r.body["state"]["finished"].get<bool>()) {
        const auto piece = r.body["state"]["legal_moves"][0]["piece"].get<int>();
        r = service.play_move(id, Json{{"piece", piece}});
        REQUIRE(r.status == 200);
        const auto len = r.body["state"]["history"].size();
        CHECK(len > log);
        log = len;
        // Replaying the history reproduces the reported state exactly.
        CHECK(state_json(replay_json(r.body["state"])).dump() == r.body["state"].dump());
    }
    CHECK(service.play_move(id, Json{{"piece", 0}}).status == 409);
    const auto got = service.get_game(id);
    CHECK(got.status == 200);
    CHECK(got.body["state"] == r.body["state"]);
    CHECK(service.get_game("nope").status == 404);
}

TEST_CASE("a game the engine finishes on creation")
{
    GameService service;
    const auto one = service.create_game(Json{{"sizes", {7}}, {"human_role", "bob"}, {"opponent", "optimal"}});
    REQUIRE(one.status == 201);
    CHECK(one.body["state"]["finished"] == true);
    CHECK(service.play_move(one.body["id"].get<std::string>(), Json{{"piece", 0}}).status == 409);
}

TEST_CASE("hints match the solver")
{
    GameService service;
    const auto created = service.create_game(Json{{"sizes", {1, 0, 1, 0}}});
    const std::string id = created.body["id"];
    const auto h = service.hints(id);
    REQUIRE(h.status == 200);
    CHECK(h.body["hints"] == hints_json(best_move_hints(GameState(Pizza({1, 0, 1, 0})))));
    for (const Json& hint : h.body["hints"]) {
        if (hint["piece"].get<int>() % 2 == 0)
            CHECK(hint["final_total"] == 2);
        else
            CHECK(hint["final_total"].get<int>() <= 2);
    }
    CHECK(service.hints("nope").status == 404);
}

TEST_CASE("analysis")
{
    GameService service;
    auto r = service.analyze(Json{{"sizes", {1, 0, 1, 0}}});
    REQUIRE(r.status == 200);
    CHECK(r.body["hardness"] == "easy");
    CHECK(r.body["optimal"] == 2);

    r = service.analyze(Json{{"sizes", fixture_pizza("nine_witnesses.txt").sizes()}});
    REQUIRE(r.status == 200);
    CHECK(r.body["optimal"] == 4);
    CHECK(r.body["ratio"] == Json{{"num", 4}, {"den", 9}});
    CHECK(r.body["strategies"]["best-of-four"] == 4);

    r = service.analyze(Json{{"sizes", fixture_pizza("tightness.txt").sizes()}});
    REQUIRE(r.status == 200);
    CHECK(r.body["hardness"] == "hard");
    const Json& s = r.body["tripartition"]["sizes"];
    std::vector<Size> six;
    for (const char* k : {"b_major", "b_minor", "m_major", "m_minor", "w_major", "w_minor"})
        six.push_back(s[k].get<Size>());
    CHECK(six == std::vector<Size>{4, 0, 4, 0, 4, 2});

    r = service.analyze(Json{{"sizes", {0, 0}}});
    CHECK(r.status == 200);
    CHECK(r.body["ratio"].is_null());
    CHECK(service.analyze(Json{{"sizes", {1, -1}}}).status == 400);
    CHECK(service.analyze(Json::array()).status == 400);
}

TEST_CASE("session cap evicts the least recent")
{
    GameService service(2);
    const std::string a = service.create_game(Json{{"sizes", {1, 2}}}).body["id"];
    const std::string b = service.create_game(Json{{"sizes", {1, 2}}}).body["id"];
    CHECK(service.get_game(a).status == 200); // a becomes the most recent
    const std::string c = service.create_game(Json{{"sizes", {1, 2}}}).body["id"];
    CHECK(service.session_count() == 2);
    CHECK(service.get_game(a).status == 200);
    CHECK(service.get_game(b).status == 404);
    CHECK(service.get_game(c).status == 200);
    CHECK(a != c);
}

TEST_CASE("engine strategies keep their phase across requests")
{
    GameService service;
    const Pizza t = fixture_pizza("tightness.txt");
    for (const char* opponent : {"mfb:W", "best-of-four", "on-part:W:fb:0"}) {
        CAPTURE(opponent);
        const auto created = service.create_game(Json{{"sizes", t.sizes()}, {"human_role", "bob"}, {"opponent", opponent}});
        REQUIRE(created.status == 201);
        const std::string id = created.body["id"];
        Json state = created.body["state"];
        while (!state["finished"].get<bool>()) {
            const auto r = service.play_move(id, Json{{"piece", state["legal_moves"].back()["piece"]}});
            REQUIRE(r.status == 200);
            state = r.body["state"];
        }
        const auto strategy = strategy_from_id(t, opponent);
        CHECK(state["scores"]["alice"].get<Size>() >= evaluate_vs_adversary(t, *strategy).alice);
    }
}

TEST_CASE("HTTP server")
{
    GameService service;
    HttpServer server(service);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread loop([&] { server.listen(); });

    httplib::Client client("127.0.0.1", port);
    client.set_connection_timeout(5);

    auto spec = client.Get("/spec");
    REQUIRE(spec);
    CHECK(spec->status == 200);
    CHECK(Json::parse(spec->body)["openapi"] == "3.0.3");
    CHECK(spec->get_header_value("Access-Control-Allow-Origin") == "*");

    auto pre = client.Options("/games");
    REQUIRE(pre);
    CHECK(pre->status == 204);

    auto bad = client.Post("/games", "{not json", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    // A full game against the optimal engine; the human always takes the best hint.
    const Pizza pizza = fixture_pizza("tightness.txt");
    auto created = client.Post("/games", Json{{"sizes", pizza.sizes()}, {"opponent", "optimal"}}.dump(), "application/json");
    REQUIRE(created);
    REQUIRE(created->status == 201);
    Json body = Json::parse(created->body);
    const std::string id = body["id"];
    while (!body["state"]["finished"].get<bool>()) {
        auto hints = client.Get("/games/" + id + "/hints");
        REQUIRE(hints);
        const Json h = Json::parse(hints->body)["hints"];
        CHECK(h == hints_json(best_move_hints(replay_json(body["state"]))));
        Json best = h[0];
        for (const Json& x : h) {
            if (x["final_total"].get<Size>() > best["final_total"].get<Size>())
                best = x;
        }
        auto moved = client.Post("/games/" + id + "/moves", Json{{"piece", best["piece"]}}.dump(), "application/json");
        REQUIRE(moved);
        REQUIRE(moved->status == 200);
        body = Json::parse(moved->body);
    }
    // Optimal against optimal reproduces the solver's value and its line.
    const auto solved = optimal_value(pizza);
    CHECK(body["state"]["scores"]["alice"] == solved.alice);
    CHECK(replay(pizza, solved.line).scores().alice == solved.alice);

    auto fetched = client.Get("/games/" + id);
    REQUIRE(fetched);
    CHECK(Json::parse(fetched->body)["state"] == body["state"]);
    auto missing = client.Get("/games/unknown");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto analysis = client.Post("/analyze", Json{{"sizes", {1, 0, 1, 0}}}.dump(), "application/json");
    REQUIRE(analysis);
    CHECK(Json::parse(analysis->body)["optimal"] == 2);

    server.stop();
    loop.join();
}
