#pragma once

// Game sessions over JSON. GameService holds the logic; HttpServer exposes it.

#include "pizza/report.hpp"

#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace pizza {

struct ServiceResponse {
    int status = 200;
    Json body;
};

class GameService {
public:
    explicit GameService(std::size_t capacity = 1024, std::size_t max_pieces = 512);
    ~GameService();

    ServiceResponse create_game(const Json& body);
    ServiceResponse play_move(const std::string& id, const Json& body);
    ServiceResponse get_game(const std::string& id);
    ServiceResponse hints(const std::string& id);
    ServiceResponse analyze(const Json& body);

    static Json openapi();

    std::size_t session_count() const;
    std::size_t capacity() const noexcept { return capacity_; }

private:
    struct Session;
    using SessionPtr = std::shared_ptr<Session>;

    SessionPtr find(const std::string& id);
    std::string insert(SessionPtr session);
    Pizza parse_sizes(const Json& body) const;

    std::size_t capacity_;
    std::size_t max_pieces_;
    mutable std::mutex mutex_;
    std::list<std::string> recency_; // most recent first
    std::unordered_map<std::string, std::pair<SessionPtr, std::list<std::string>::iterator>> sessions_;
    std::uint64_t counter_ = 0;
};

/// HTTP adapter with permissive CORS.
class HttpServer {
public:
    explicit HttpServer(GameService& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds to host:port (port 0 picks a free port); returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks serving requests until stop(); false if the loop failed.
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace pizza
