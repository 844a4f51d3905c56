#include "pizza/cli.hpp"

#include "pizza/report.hpp"
#include "pizza/server.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pizza {

Pizza load_pizza(const std::string& source)
{
    constexpr std::string_view prefix = "inline:";
    if (source.rfind(prefix, 0) == 0)
        return parse_pizza(std::string_view(source).substr(prefix.size()));
    std::ifstream in(source);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot read pizza file '" + source + "' (use inline:1,0,1 for literals)");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pizza(buf.str());
}

namespace {

std::string kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse:
        return "parse";
    case ErrorKind::InvalidArgument:
        return "invalid_argument";
    case ErrorKind::IllegalMove:
        return "illegal_move";
    case ErrorKind::Precondition:
        return "precondition";
    case ErrorKind::Infeasible:
        return "infeasible";
    case ErrorKind::NotFound:
        return "not_found";
    }
    return "error";
}

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse:
        return exit_parse;
    case ErrorKind::Infeasible:
        return exit_infeasible;
    default:
        return exit_failure;
    }
}

std::string move_text(const Move& m)
{
    switch (m.side) {
    case Side::Left:
        return "L" + std::to_string(m.piece);
    case Side::Right:
        return "R" + std::to_string(m.piece);
    case Side::Opening:
        break;
    }
    return std::to_string(m.piece);
}

std::string line_text(const std::vector<Move>& line)
{
    std::string out;
    for (const Move& m : line)
        out += (out.empty() ? "" : " ") + move_text(m);
    return out;
}

std::string ratio_or_dash(Size v, Size total)
{
    return total > 0 ? ratio_string(v, total) : "-";
}

/// "3-11", "2,4,6" or "5".
std::vector<std::size_t> parse_counts(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoul(item));
            } else {
                const auto lo = std::stoul(item.substr(0, dash));
                const auto hi = std::stoul(item.substr(dash + 1));
                for (auto n = lo; n <= hi; ++n)
                    out.push_back(n);
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad piece count list '" + text + "'");
        }
    }
    if (out.empty())
        throw Error(ErrorKind::Parse, "empty piece count list");
    for (const auto n : out) {
        if (n == 0)
            throw Error(ErrorKind::Parse, "piece counts must be positive");
    }
    return out;
}

std::vector<Size> parse_alphabet(const std::string& text)
{
    const Pizza p = parse_pizza(text);
    return {p.sizes().begin(), p.sizes().end()};
}

std::pair<Size, Size> parse_ratio(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const Size num = std::stoll(text.substr(0, slash));
            const Size den = std::stoll(text.substr(slash + 1));
            if (num >= 0 && den > 0)
                return {num, den};
        }
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::Parse, "ratio must look like p/q, got '" + text + "'");
}

struct Options {
    bool json = false;
    std::string pizza;
    // strategy
    std::string strategy_id;
    // verify
    std::string claim;
    std::string counts = "1-11";
    std::string alphabet = "0,1,2";
    bool no_canonical = false;
    std::size_t random_n = 0;
    Size max_size = 9;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::string list_file;
    std::string out_file;
    unsigned threads = 0;
    std::size_t max_witnesses = 16;
    // search
    std::size_t n = 0;
    std::optional<Size> total;
    std::string max_ratio = "4/9";
    std::string checkpoint;
    bool force = false;
    std::size_t max_matches = 0;
    std::size_t minimality = 0;
    // play
    std::string as = "alice";
    std::string opponent = "optimal";
    bool hints = false;
    // serve
    int port = 8080;
    std::string bind = "127.0.0.1";
    std::size_t capacity = 1024;
};

int cmd_solve(const Options& o, std::ostream& out)
{
    const Pizza pizza = load_pizza(o.pizza);
    const auto r = optimal_value(pizza);
    if (o.json) {
        Json j{{"sizes", pizza.sizes()}, {"value", r.alice}, {"total", pizza.total()}, {"line", moves_json(r.line)}};
        j["ratio"] = pizza.total() > 0 ? ratio_json(r.alice, pizza.total()) : Json(nullptr);
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "value " << r.alice << " of total " << pizza.total() << '\n'
        << "ratio " << ratio_or_dash(r.alice, pizza.total()) << '\n'
        << "line " << line_text(r.line) << '\n';
    return exit_ok;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const Pizza pizza = load_pizza(o.pizza);
    const Json j = analysis_json(pizza);
    if (o.json) {
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    const Size fb = j["best_fb"]["value"].get<Size>();
    out << "pieces " << pizza.n() << ", total " << pizza.total() << '\n'
        << "hardness " << j["hardness"].get<std::string>() << '\n'
        << "best fB " << fb << " of " << pizza.total() << " (" << ratio_or_dash(fb, pizza.total()) << "), opening "
        << j["best_fb"]["opening"].get<std::size_t>() << '\n';
    if (j.contains("worst_cuts"))
        out << "worst cuts " << j["worst_cuts"].dump() << ", best cuts " << j["best_cuts"].dump() << '\n';
    if (j.contains("tripartition")) {
        const Json& t = j["tripartition"];
        out << "Cworst " << t["cuts"]["worst"] << ", Cbest " << t["cuts"]["best"] << ", Cmid " << t["cuts"]["mid"]
            << '\n';
        for (const char* x : {"B", "M", "W"})
            out << "part " << x << ": pieces " << t["parts"][x]["pieces"].dump() << ", majors "
                << t["parts"][x]["majors"].dump() << '\n';
        const Json& s = t["sizes"];
        out << "sizes b_major " << s["b_major"] << " b_minor " << s["b_minor"] << " m_major " << s["m_major"]
            << " m_minor " << s["m_minor"] << " w_major " << s["w_major"] << " w_minor " << s["w_minor"] << '\n';
    }
    return exit_ok;
}

int cmd_strategy(const Options& o, std::ostream& out)
{
    const Pizza pizza = load_pizza(o.pizza);
    const StrategyPtr s = o.strategy_id == "optimal" ? optimal_strategy(pizza, Player::Alice)
                                                     : strategy_from_id(pizza, o.strategy_id);
    const EvaluationResult r =
        s->role() == Player::Alice ? evaluate_vs_adversary(pizza, *s) : evaluate_bob(pizza, *s);
    if (o.json) {
        out << evaluation_json(pizza, s->id(), s->role(), r).dump(2) << '\n';
        return exit_ok;
    }
    const Size mine = s->role() == Player::Alice ? r.alice : r.bob;
    out << "strategy " << s->id() << " (" << to_string(s->role()) << ")\n"
        << "guaranteed " << mine << " of total " << pizza.total() << " (" << ratio_or_dash(mine, pizza.total())
        << ")\n"
        << "worst-case line " << line_text(r.line) << '\n';
    return exit_ok;
}

PizzaFamily family_from(const Options& o)
{
    if (!o.list_file.empty()) {
        std::ifstream in(o.list_file);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot read family file '" + o.list_file + "'");
        std::vector<Pizza> pizzas;
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
                continue;
            pizzas.push_back(parse_pizza(line));
        }
        return PizzaFamily::list(std::move(pizzas));
    }
    if (o.random_n > 0)
        return PizzaFamily::random(o.random_n, o.max_size, o.seed, o.count);
    return PizzaFamily::exhaustive(parse_counts(o.counts), parse_alphabet(o.alphabet), !o.no_canonical);
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    f << content;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    VerifyOptions vo;
    vo.threads = o.threads;
    vo.max_witnesses = o.max_witnesses;
    const auto report = verify_family(family_from(o), o.claim, vo);
    const Json j = report_json(report);
    if (!o.out_file.empty())
        write_file(o.out_file, j.dump(2) + "\n");
    out << (o.json ? j.dump(2) + "\n" : report_table(report));
    return report.ok() ? exit_ok : exit_violation;
}

int cmd_search(const Options& o, std::ostream& out)
{
    const auto alphabet = parse_alphabet(o.alphabet);
    const auto [num, den] = parse_ratio(o.max_ratio);
    SearchOptions so;
    so.total = o.total;
    so.threads = o.threads;
    so.force = o.force;
    so.max_matches = o.max_matches;
    if (!o.checkpoint.empty())
        so.checkpoint = o.checkpoint;
    const auto predicate = optimal_ratio_at_most(num, den);

    Json j;
    if (o.minimality > 0) {
        const auto r = minimality_scan(o.minimality, alphabet, predicate, so);
        Json matches = Json::array();
        for (const auto& p : r.matches)
            matches.push_back(p.sizes());
        j = Json{{"alphabet", alphabet},  {"max_ratio", ratio_json(num, den)}, {"scanned", r.scanned},
                 {"first_n", r.first_n}, {"matches", matches}};
    } else {
        if (o.n == 0)
            throw Error(ErrorKind::Parse, "search needs --n or --minimality");
        j = search_json(o.n, alphabet, find_extremal(o.n, alphabet, predicate, so));
        j["max_ratio"] = ratio_json(num, den);
        j["total"] = o.total ? Json(*o.total) : Json(nullptr);
    }
    if (!o.out_file.empty())
        write_file(o.out_file, j.dump(2) + "\n");
    if (o.json) {
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    if (j.contains("first_n"))
        out << "scanned n up to " << o.minimality << ", first match at n = " << j["first_n"] << '\n';
    else
        out << "visited " << j["visited"] << " pizzas, " << j["matches"].size() << " matches\n";
    for (const auto& m : j["matches"]) {
        const Pizza p(m.get<std::vector<Size>>());
        out << serialize_pizza(p) << "  optimal " << optimal_value(p).alice << " of " << p.total() << '\n';
    }
    return exit_ok;
}

void print_board(const GameState& state, std::ostream& out)
{
    const auto owners = state.owners();
    out << "board";
    for (Piece p = 0; p < state.pizza().n(); ++p) {
        out << ' ' << p << ':' << state.pizza()[p];
        if (owners[p])
            out << (*owners[p] == Player::Alice ? "(A)" : "(B)");
    }
    out << "\nscores alice " << state.scores().alice << " bob " << state.scores().bob << '\n';
}

int cmd_play(const Options& o, std::istream& in, std::ostream& out)
{
    const Pizza pizza = load_pizza(o.pizza);
    Player human;
    if (o.as == "alice")
        human = Player::Alice;
    else if (o.as == "bob")
        human = Player::Bob;
    else
        throw Error(ErrorKind::Parse, "--as must be alice or bob");
    const Player engine_role = other(human);
    const StrategyPtr engine =
        o.opponent == "optimal" ? optimal_strategy(pizza, engine_role) : strategy_from_id(pizza, o.opponent);
    if (engine->role() != engine_role)
        throw Error(ErrorKind::InvalidArgument, "opponent " + engine->id() + " does not play " + to_string(engine_role));

    GameState state(pizza);
    StrategyState engine_state = engine->initial_state();
    out << "you play " << to_string(human) << " against " << engine->id() << '\n';
    if (engine_role == Player::Alice) {
        const Move open{engine->opening(), Side::Opening};
        state = apply_move(state, open);
        out << "engine eats piece " << open.piece << '\n';
    }
    while (!state.finished()) {
        print_board(state, out);
        if (o.hints) {
            out << "hints";
            for (const auto& h : best_move_hints(state))
                out << " piece " << h.move.piece << " -> " << h.final_total;
            out << '\n';
        }
        out << "your move> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            out << '\n';
            throw Error(ErrorKind::InvalidArgument, "input ended before the game finished");
        }
        Piece piece = 0;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(line, &used);
            if (v < 0 || line.find_first_not_of(" \t\r", used) != std::string::npos)
                throw std::invalid_argument("bad");
            piece = static_cast<Piece>(v);
        } catch (const std::logic_error&) {
            out << "enter a piece index\n";
            continue;
        }
        const auto move = piece < pizza.n() ? move_for_piece(state, piece) : std::nullopt;
        if (!move) {
            out << "illegal move: piece " << piece << " is not available\n";
            continue;
        }
        state = apply_move(state, *move);
        if (state.finished())
            break;
        const Reply r = engine->respond(engine_state, state.eaten(), *move);
        state = apply_move(state, r.move);
        engine_state = r.next;
        out << "engine eats piece " << r.move.piece << '\n';
    }
    print_board(state, out);
    out << "final alice " << state.scores().alice << " bob " << state.scores().bob << '\n';
    return exit_ok;
}

int cmd_serve(const Options& o, std::ostream& out)
{
    GameService service(o.capacity);
    HttpServer server(service);
    const int port = server.bind(o.bind, o.port);
    if (port < 0)
        throw Error(ErrorKind::InvalidArgument, "cannot bind " + o.bind + ":" + std::to_string(o.port));
    out << "listening on http://" << o.bind << ':' << port << std::endl;
    return server.listen() ? exit_ok : exit_failure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pizza-sharing game: solver, strategies, verification and play"};
    app.require_subcommand(1);
    Options o;

    const auto add_pizza = [&](CLI::App* cmd) {
        cmd->add_option("pizza", o.pizza, "pizza file or inline:1,0,1")->required();
        cmd->add_flag("--json", o.json, "JSON output");
    };

    auto* solve = app.add_subcommand("solve", "optimal value and line");
    add_pizza(solve);
    auto* analyze = app.add_subcommand("analyze", "hardness, best answers and tripartition");
    add_pizza(analyze);
    auto* strategy = app.add_subcommand("strategy", "exact guaranteed value of a strategy");
    add_pizza(strategy);
    strategy->add_option("id", o.strategy_id, "strategy id")->required();

    auto* verify = app.add_subcommand("verify", "check a claim over a pizza family");
    verify->add_option("--claim", o.claim, "claim id")->required();
    verify->add_option("--n", o.counts, "piece counts, e.g. 3-11 or 2,4,6");
    verify->add_option("--alphabet", o.alphabet, "sizes for exhaustive families");
    verify->add_flag("--no-canonical", o.no_canonical, "enumerate every rotation and reflection");
    verify->add_option("--random-n", o.random_n, "random family with this many pieces");
    verify->add_option("--max-size", o.max_size, "largest random size");
    verify->add_option("--seed", o.seed, "random family seed");
    verify->add_option("--count", o.count, "random family size");
    verify->add_option("--file", o.list_file, "one pizza per line");
    verify->add_option("--out", o.out_file, "write the JSON report here");
    verify->add_option("--threads", o.threads, "worker threads");
    verify->add_option("--max-witnesses", o.max_witnesses, "tight instances to keep");
    verify->add_flag("--json", o.json, "JSON output");

    auto* search = app.add_subcommand("search", "find pizzas where optimal play eats at most a ratio");
    search->add_option("--n", o.n, "piece count");
    search->add_option("--alphabet", o.alphabet, "allowed sizes");
    search->add_option("--total", o.total, "only pizzas of this total");
    search->add_option("--max-ratio", o.max_ratio, "optimal/total bound, p/q");
    search->add_option("--checkpoint", o.checkpoint, "resumable NDJSON progress file");
    search->add_flag("--force", o.force, "run above the search-space limit");
    search->add_option("--max-matches", o.max_matches, "stop after this many matches");
    search->add_option("--minimality", o.minimality, "scan n = 1..N for the first match");
    search->add_option("--threads", o.threads, "worker threads");
    search->add_option("--out", o.out_file, "write the JSON result here");
    search->add_flag("--json", o.json, "JSON output");

    auto* play = app.add_subcommand("play", "play in the terminal");
    play->add_option("pizza", o.pizza, "pizza file or inline:1,0,1")->required();
    play->add_option("--as", o.as, "alice or bob");
    play->add_option("--opponent", o.opponent, "optimal or a strategy id");
    play->add_flag("--hints", o.hints, "show optimal totals per move");

    auto* serve = app.add_subcommand("serve", "run the HTTP API");
    serve->add_option("--port", o.port, "port, 0 for any");
    serve->add_option("--bind", o.bind, "address");
    serve->add_option("--capacity", o.capacity, "session cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parse;
    }

    try {
        if (*solve)
            return cmd_solve(o, out);
        if (*analyze)
            return cmd_analyze(o, out);
        if (*strategy)
            return cmd_strategy(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*search)
            return cmd_search(o, out);
        if (*play)
            return cmd_play(o, in, out);
        if (*serve)
            return cmd_serve(o, out);
    } catch (const Error& e) {
        err << Json{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << '\n';
        return exit_failure;
    }
    return exit_failure;
}

} // namespace pizza
