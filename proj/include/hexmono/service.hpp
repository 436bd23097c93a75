#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hexmono/engine.hpp"
#include "hexmono/io.hpp"

namespace httplib {
class Server;
}

namespace hexmono {

struct HttpReply {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    long version = 0;
};

// One sandbox session: the loaded patch plus the placements made on top of it.
// Replaying the undo stack on the loaded base reproduces the current patch.
class Session {
public:
    explicit Session(Patch initial = Patch{}, Meta meta = {});

    HttpReply handle(const std::string& method, const std::string& path,
                     const std::multimap<std::string, std::string>& query, const std::string& body);

    long version() const;
    Patch snapshot() const;

private:
    HttpReply get_patch() const;
    HttpReply get_legal(const std::multimap<std::string, std::string>& query) const;
    HttpReply post_place(const std::string& body);
    HttpReply post_undo();
    HttpReply get_render(const std::multimap<std::string, std::string>& query) const;
    HttpReply get_constructions() const;
    HttpReply post_load(const std::string& body);
    HttpReply error(int status, const std::string& code, const std::string& reason) const;

    mutable std::mutex mu_;
    Patch base_;
    Patch patch_;
    Meta meta_;
    std::vector<Placement> stack_;
    long version_ = 1;
};

// routes every endpoint of the session through an httplib server; the caller listens
std::unique_ptr<httplib::Server> make_server(Session& s);

}  // namespace hexmono
