#include <map>
#include <random>
#include <thread>

#include "doctest.h"
#include "hexmono/constructions.hpp"
#include "hexmono/io.hpp"
#include "hexmono/report.hpp"
#include "hexmono/service.hpp"
#include "httplib.h"
#include "json.hpp"

using namespace hexmono;
using nlohmann::json;

namespace {

using Query = std::multimap<std::string, std::string>;

json body(const HttpReply& r) { return json::parse(r.body); }

std::string place_body(int q, int r, int o) { return json{{"q", q}, {"r", r}, {"o", o}}.dump(); }

}  // namespace

TEST_SUITE("service") {

TEST_CASE("patch and versions") {
    Session s;
    auto r = s.handle("GET", "/patch", {}, "");
    CHECK(r.status == 200);
    CHECK(r.version == 1);
    CHECK(body(r)["version"] == 1);
    CHECK(body(r)["tiles"].empty());
    CHECK(s.handle("POST", "/place", {}, place_body(0, 0, 2)).status == 200);
    CHECK(s.version() == 2);
    auto p = body(s.handle("GET", "/patch", {}, ""));
    CHECK(p["tiles"] == json::array({json::array({0, 0, 2})}));
    CHECK(read_patch(p["patch"].get<std::string>()).patch == s.snapshot());
}

TEST_CASE("legal matches the engine") {
    Session s(build_Pn(2));
    auto r = s.handle("GET", "/legal", {{"q", "1"}, {"r", "0"}}, "");
    REQUIRE(r.status == 200);
    auto j = body(r);
    CHECK(j["legal"].get<std::vector<int>>() == legal_orientations(build_Pn(2), {1, 0}));
    for (int o = 0; o < 6; ++o) {
        auto want = to_json(can_place(build_Pn(2), {{1, 0}, o}));
        want["o"] = o;
        CHECK(j["orientations"][o] == want);
    }
    CHECK(s.handle("GET", "/legal", {{"q", "1"}}, "").status == 400);
    CHECK(body(s.handle("GET", "/legal", {{"q", "1"}, {"r", "x"}}, ""))["error"] == "BAD_PARAM");
}

TEST_CASE("scripted interactions agree with direct engine calls") {
    Session s;
    Patch mirror;
    std::mt19937 rng(17);
    long last = s.version();
    for (int step = 0; step < 50; ++step) {
        HexCoord c{static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3};
        int o = static_cast<int>(rng() % 6);
        auto legal = body(s.handle("GET", "/legal", {{"q", std::to_string(c.q)}, {"r", std::to_string(c.r)}}, ""));
        CHECK(legal["legal"].get<std::vector<int>>() == legal_orientations(mirror, c));
        auto rep = can_place(mirror, {c, o});
        auto r = s.handle("POST", "/place", {}, place_body(c.q, c.r, o));
        auto j = body(r);
        CHECK(j["report"] == to_json(rep));
        if (rep.verdict == Verdict::Legal) {
            CHECK(r.status == 200);
            mirror = place(mirror, {c, o});
            CHECK(r.version == last + 1);
        } else {
            CHECK(r.status == 409);
            CHECK(r.version == last);
        }
        last = r.version;
        CHECK(s.snapshot() == mirror);
    }
}

TEST_CASE("malformed placements") {
    Session s;
    CHECK(body(s.handle("POST", "/place", {}, "{"))["error"] == "BAD_JSON");
    CHECK(body(s.handle("POST", "/place", {}, "[1,2,3]"))["error"] == "BAD_JSON");
    CHECK(body(s.handle("POST", "/place", {}, R"({"q":0,"r":0})"))["error"] == "MISSING_FIELD");
    CHECK(body(s.handle("POST", "/place", {}, R"({"q":0,"r":0,"o":"1"})"))["error"] == "BAD_FIELD");
    CHECK(body(s.handle("POST", "/place", {}, R"({"q":0,"r":0,"o":6})"))["error"] == "BAD_FIELD");
    CHECK(body(s.handle("POST", "/place", {}, R"({"q":1e12,"r":0,"o":1})"))["error"] == "BAD_FIELD");
    CHECK(s.handle("POST", "/place", {}, "{").status == 400);
    CHECK(s.version() == 1);
}

TEST_CASE("illegal placement is 409 with the report") {
    Session s(build_Pn(1));
    auto r = s.handle("POST", "/place", {}, place_body(0, 0, 1));
    CHECK(r.status == 409);
    CHECK(body(r)["report"]["verdict"] == "OCCUPIED");
    auto far = s.handle("POST", "/place", {}, place_body(9, 9, 1));
    CHECK(body(far)["report"]["verdict"] == "DISCONNECTED");
}

TEST_CASE("undo") {
    Session s(build_Pn(1));
    CHECK(s.handle("POST", "/undo", {}, "").status == 409);
    auto os = legal_orientations(build_Pn(1), {1, 0});
    REQUIRE(!os.empty());
    CHECK(s.handle("POST", "/place", {}, place_body(1, 0, os[0])).status == 200);
    auto u = s.handle("POST", "/undo", {}, "");
    CHECK(u.status == 200);
    CHECK(body(u)["undone"] == json::array({1, 0, os[0]}));
    CHECK(s.snapshot() == build_Pn(1));
    CHECK(s.version() == 3);
    CHECK(body(s.handle("POST", "/undo", {}, ""))["error"] == "NOTHING_TO_UNDO");
}

TEST_CASE("load") {
    Session s;
    auto r = s.handle("POST", "/load", {}, R"({"construction":"spiral","params":{"n":2}})");
    CHECK(r.status == 200);
    CHECK(s.snapshot() == build_Pn(2));
    CHECK(body(s.handle("GET", "/patch", {}, ""))["meta"]["construction"] == "spiral");
    CHECK(s.handle("POST", "/undo", {}, "").status == 409);
    CHECK(s.handle("POST", "/load", {}, write_patch(build_Pn(1))).status == 200);
    CHECK(s.snapshot() == build_Pn(1));
    CHECK(s.handle("POST", "/load", {}, json{{"patch", write_patch(build_Pn(0))}}.dump()).status == 200);
    CHECK(s.snapshot().size() == 1);
    long v = s.version();
    CHECK(body(s.handle("POST", "/load", {}, R"({"construction":"nope"})"))["error"] == "BAD_CONSTRUCTION");
    CHECK(body(s.handle("POST", "/load", {}, "hexmono v1\n0 0 9\n"))["error"] == "BAD_PATCH");
    CHECK(body(s.handle("POST", "/load", {}, R"({"other":1})"))["error"] == "MISSING_FIELD");
    CHECK(body(s.handle("POST", "/load", {}, R"({"construction":"spiral","params":{"n":"2"}})"))["error"] ==
          "BAD_FIELD");
    CHECK(s.version() == v);
}

TEST_CASE("render and catalogue") {
    Session s(build_Pn(2));
    auto r = s.handle("GET", "/render.svg", {{"layers", "TILES,SPIRAL_ANCHORS"}}, "");
    CHECK(r.status == 200);
    CHECK(r.content_type == "image/svg+xml");
    CHECK(r.body.rfind("<svg", 0) == 0);
    CHECK(body(s.handle("GET", "/render.svg", {{"layers", "NOPE"}}, ""))["error"] == "BAD_LAYERS");
    CHECK(s.handle("GET", "/render.svg", {{"scale", "0"}}, "").status == 400);
    auto c = body(s.handle("GET", "/constructions", {}, ""));
    CHECK(c["constructions"].size() == construction_catalogue().size());
}

TEST_CASE("routing errors") {
    Session s;
    CHECK(s.handle("GET", "/nowhere", {}, "").status == 404);
    CHECK(s.handle("DELETE", "/patch", {}, "").status == 405);
    CHECK(s.handle("GET", "/place", {}, "").status == 405);
}

TEST_CASE("live server") {
    Session s;
    auto srv = make_server(s);
    int port = srv->bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread t([&] { srv->listen_after_bind(); });
    srv->wait_until_ready();
    httplib::Client cli("127.0.0.1", port);
    auto a = cli.Get("/patch");
    REQUIRE(a);
    CHECK(a->status == 200);
    CHECK(a->get_header_value("X-Hexmono-Version") == "1");
    CHECK(a->get_header_value("Access-Control-Allow-Origin") == "*");
    auto b = cli.Post("/place", place_body(0, 0, 3), "application/json");
    REQUIRE(b);
    CHECK(b->status == 200);
    CHECK(json::parse(b->body)["version"] == 2);
    auto c = cli.Get("/legal?q=1&r=0");
    REQUIRE(c);
    CHECK(json::parse(c->body)["legal"].get<std::vector<int>>() == legal_orientations(s.snapshot(), {1, 0}));
    auto d = cli.Post("/place", place_body(0, 0, 3), "application/json");
    REQUIRE(d);
    CHECK(d->status == 409);
    auto e = cli.Options("/place");
    REQUIRE(e);
    CHECK(e->status == 204);
    srv->stop();
    t.join();
}

}
