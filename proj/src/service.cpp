#include "hexmono/service.hpp"

#include <cstdlib>

#include "hexmono/constructions.hpp"
#include "hexmono/report.hpp"
#include "hexmono/svg.hpp"
#include "httplib.h"

namespace hexmono {

using nlohmann::json;

namespace {

HttpReply reply(int status, json body, long version) {
    body["version"] = version;
    return {status, "application/json", body.dump(), version};
}

std::optional<std::string> lookup(const std::multimap<std::string, std::string>& q, const std::string& key) {
    auto it = q.find(key);
    if (it == q.end()) return std::nullopt;
    return it->second;
}

bool parse_int(const std::string& s, long lo, long hi, long* out) {
    if (s.empty()) return false;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (*end != '\0' || v < lo || v > hi) return false;
    *out = v;
    return true;
}

constexpr long kCoordLimit = 1L << 28;

json summary(const Patch& p) {
    auto v = compute_verdicts(p);
    return {{"tiles", p.size()},
            {"edge_connected", v.edge_connected},
            {"r1_ok", v.r1_ok},
            {"r1_violations", v.r1_violations},
            {"r2_components", v.r2_components},
            {"r2_edges", v.r2_edges},
            {"r2_tree", v.r2_tree},
            {"constructible", v.constructible}};
}

}  // namespace

Session::Session(Patch initial, Meta meta) : base_(initial), patch_(std::move(initial)), meta_(std::move(meta)) {}

long Session::version() const {
    std::lock_guard lk(mu_);
    return version_;
}

Patch Session::snapshot() const {
    std::lock_guard lk(mu_);
    return patch_;
}

HttpReply Session::error(int status, const std::string& code, const std::string& reason) const {
    return reply(status, {{"error", code}, {"reason", reason}}, version_);
}

HttpReply Session::handle(const std::string& method, const std::string& path,
                          const std::multimap<std::string, std::string>& query, const std::string& body) {
    std::lock_guard lk(mu_);
    struct Route {
        const char* path;
        const char* method;
    };
    static const Route routes[] = {{"/patch", "GET"},         {"/legal", "GET"},        {"/place", "POST"},
                                   {"/undo", "POST"},         {"/render.svg", "GET"},   {"/constructions", "GET"},
                                   {"/load", "POST"}};
    bool known = false;
    for (auto& r : routes) {
        if (path != r.path) continue;
        known = true;
        if (method != r.method) continue;
        if (path == "/patch") return get_patch();
        if (path == "/legal") return get_legal(query);
        if (path == "/place") return post_place(body);
        if (path == "/undo") return post_undo();
        if (path == "/render.svg") return get_render(query);
        if (path == "/constructions") return get_constructions();
        if (path == "/load") return post_load(body);
    }
    if (known) return error(405, "METHOD_NOT_ALLOWED", method + " " + path);
    return error(404, "NOT_FOUND", path);
}

HttpReply Session::get_patch() const {
    json tiles = json::array();
    for (auto& pl : patch_.sorted()) tiles.push_back({pl.cell.q, pl.cell.r, pl.o});
    json meta = json::object();
    for (auto& [k, v] : meta_) meta[k] = v;
    return reply(200,
                 {{"format", "hexmono v1"},
                  {"patch", write_patch(patch_, meta_)},
                  {"tiles", tiles},
                  {"summary", summary(patch_)},
                  {"meta", meta},
                  {"undo_depth", stack_.size()}},
                 version_);
}

HttpReply Session::get_legal(const std::multimap<std::string, std::string>& query) const {
    auto qs = lookup(query, "q"), rs = lookup(query, "r");
    long q = 0, r = 0;
    if (!qs || !rs) return error(400, "MISSING_PARAM", "q and r are required");
    if (!parse_int(*qs, -kCoordLimit, kCoordLimit, &q) || !parse_int(*rs, -kCoordLimit, kCoordLimit, &r))
        return error(400, "BAD_PARAM", "q and r must be integers");
    HexCoord c{static_cast<int>(q), static_cast<int>(r)};
    json per = json::array();
    for (int o = 0; o < 6; ++o) {
        json e = to_json(can_place(patch_, {c, o}));
        e["o"] = o;
        per.push_back(e);
    }
    return reply(200, {{"cell", to_json(c)}, {"legal", legal_orientations(patch_, c)}, {"orientations", per}},
                 version_);
}

HttpReply Session::post_place(const std::string& body) {
    json in = json::parse(body, nullptr, false);
    if (in.is_discarded() || !in.is_object()) return error(400, "BAD_JSON", "body must be a JSON object");
    long v[3];
    const char* keys[3] = {"q", "r", "o"};
    for (int i = 0; i < 3; ++i) {
        if (!in.contains(keys[i])) return error(400, "MISSING_FIELD", std::string("missing ") + keys[i]);
        if (!in[keys[i]].is_number_integer()) return error(400, "BAD_FIELD", std::string(keys[i]) + " must be an integer");
        v[i] = in[keys[i]].get<long>();
    }
    if (v[0] < -kCoordLimit || v[0] > kCoordLimit || v[1] < -kCoordLimit || v[1] > kCoordLimit)
        return error(400, "BAD_FIELD", "coordinate out of range");
    if (v[2] < 0 || v[2] > 5) return error(400, "BAD_FIELD", "o must be in 0..5");
    Placement pl{{static_cast<int>(v[0]), static_cast<int>(v[1])}, static_cast<int>(v[2])};
    auto rep = can_place(patch_, pl);
    if (rep.verdict != Verdict::Legal) return reply(409, {{"report", to_json(rep)}}, version_);
    patch_ = place(patch_, pl);
    stack_.push_back(pl);
    ++version_;
    return reply(200, {{"report", to_json(rep)}, {"tiles", patch_.size()}}, version_);
}

HttpReply Session::post_undo() {
    if (stack_.empty()) return error(409, "NOTHING_TO_UNDO", "no placement since the last load");
    Placement pl = stack_.back();
    stack_.pop_back();
    patch_.erase(pl.cell);
    ++version_;
    return reply(200, {{"undone", {pl.cell.q, pl.cell.r, pl.o}}, {"tiles", patch_.size()}}, version_);
}

HttpReply Session::get_render(const std::multimap<std::string, std::string>& query) const {
    RenderOptions opt;
    try {
        if (auto l = lookup(query, "layers")) opt.layers = parse_layers(*l);
    } catch (const std::invalid_argument& e) {
        return error(400, "BAD_LAYERS", e.what());
    }
    if (auto s = lookup(query, "scale")) {
        long sc = 0;
        if (!parse_int(*s, 1, 512, &sc)) return error(400, "BAD_PARAM", "scale must be an integer in 1..512");
        opt.scale = static_cast<double>(sc);
    }
    return {200, "image/svg+xml", render_svg(patch_, opt), version_};
}

HttpReply Session::get_constructions() const {
    json list = json::array();
    for (auto& [name, params] : construction_catalogue()) list.push_back({{"name", name}, {"params", params}});
    return reply(200, {{"constructions", list}}, version_);
}

HttpReply Session::post_load(const std::string& body) {
    Patch next;
    Meta meta;
    try {
        if (body.rfind("hexmono v1", 0) == 0) {
            auto f = read_patch(body);
            next = std::move(f.patch);
            meta = std::move(f.meta);
        } else {
            json in = json::parse(body, nullptr, false);
            if (in.is_discarded() || !in.is_object()) return error(400, "BAD_JSON", "body must be a JSON object or a hexmono v1 patch");
            if (in.contains("patch")) {
                if (!in["patch"].is_string()) return error(400, "BAD_FIELD", "patch must be a string");
                auto f = read_patch(in["patch"].get<std::string>());
                next = std::move(f.patch);
                meta = std::move(f.meta);
            } else if (in.contains("construction")) {
                if (!in["construction"].is_string()) return error(400, "BAD_FIELD", "construction must be a string");
                std::map<std::string, long> ps;
                if (in.contains("params")) {
                    if (!in["params"].is_object()) return error(400, "BAD_FIELD", "params must be an object");
                    for (auto& [k, v] : in["params"].items()) {
                        if (!v.is_number_integer()) return error(400, "BAD_FIELD", "param " + k + " must be an integer");
                        ps[k] = v.get<long>();
                    }
                }
                auto c = build_by_name(in["construction"].get<std::string>(), ps);
                next = std::move(c.patch);
                meta = construction_meta(c);
            } else {
                return error(400, "MISSING_FIELD", "expected patch or construction");
            }
        }
    } catch (const PatchFormatError& e) {
        return error(400, "BAD_PATCH", e.what());
    } catch (const ConstructionError& e) {
        return error(400, "BAD_CONSTRUCTION", e.what());
    }
    base_ = next;
    patch_ = std::move(next);
    meta_ = std::move(meta);
    stack_.clear();
    ++version_;
    return reply(200, {{"tiles", patch_.size()}, {"summary", summary(patch_)}}, version_);
}

std::unique_ptr<httplib::Server> make_server(Session& s) {
    auto srv = std::make_unique<httplib::Server>();
    auto adapt = [&s](const httplib::Request& req, httplib::Response& res) {
        std::multimap<std::string, std::string> q(req.params.begin(), req.params.end());
        auto r = s.handle(req.method, req.path, q, req.body);
        res.status = r.status;
        res.set_header("X-Hexmono-Version", std::to_string(r.version));
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Expose-Headers", "X-Hexmono-Version");
        res.set_content(r.body, r.content_type);
    };
    srv->Get(R"(/.*)", adapt);
    srv->Post(R"(/.*)", adapt);
    srv->Put(R"(/.*)", adapt);
    srv->Delete(R"(/.*)", adapt);
    srv->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    return srv;
}

}  // namespace hexmono
