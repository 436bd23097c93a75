#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hexmono/calibrate.hpp"
#include "hexmono/constructions.hpp"
#include "hexmono/io.hpp"
#include "hexmono/report.hpp"
#include "hexmono/search.hpp"
#include "hexmono/service.hpp"
#include "hexmono/svg.hpp"
#include "httplib.h"

using namespace hexmono;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

HexCoord parse_cell(const std::string& s) {
    HexCoord c;
    char comma = 0;
    std::istringstream is(s);
    if (!(is >> c.q >> comma >> c.r) || comma != ',') throw UsageError("expected q,r but got " + s);
    return c;
}

std::optional<Window> meta_window(const PatchFile& f) {
    for (auto& [k, v] : f.meta)
        if (k == "window") {
            std::istringstream is(v);
            Window w;
            if (is >> w.centre.q >> w.centre.r >> w.radius) return w;
        }
    return std::nullopt;
}

json verdict_json(const SearchVerdict& v) {
    json c = json::array();
    for (auto& x : v.contradictions) c.push_back({{"cell", to_json(x.cell)}, {"emptied", x.emptied}, {"closed", x.r2_closed}});
    return {{"status", search_status_name(v.status)}, {"radius", v.radius}, {"nodes", v.node_count},
            {"region", v.region_size}, {"witness_steps", v.witness.size()}, {"contradiction_cells", c.size()}};
}

int exit_for(SearchStatus s, bool refuted_is_violation) {
    if (s == SearchStatus::Unknown) return kBudget;
    if (s == SearchStatus::Refuted) return refuted_is_violation ? kViolation : kOk;
    return kOk;
}

bool is_power_form(int len) {
    int x = len + 1;
    return x > 0 && (x & (x - 1)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexagonal monotile engine"};
    app.require_subcommand(1);

    SearchOptions sopt;
    auto add_search_flags = [&](CLI::App* sc) {
        sc->add_option("--budget", sopt.budget, "node budget per query (HEXMONO_BUDGET overrides the default)");
        sc->add_option("--threads", sopt.threads, "worker threads")->check(CLI::Range(1, 256));
        sc->add_flag("--r1-only", sopt.r1_only, "ignore R2 during the search");
    };

    // build
    std::string build_name, out_path, svg_path;
    std::vector<std::string> build_params;
    auto* build = app.add_subcommand("build", "build a construction and save it as hexmono v1");
    build->add_option("construction", build_name)->required();
    build->add_option("params", build_params, "key=value parameters");
    build->add_option("-o,--output", out_path)->required();
    build->add_option("--svg", svg_path, "also render the default layers");

    // analyze
    std::string in_path, window_spec, report_path;
    int period_bound = 8;
    std::size_t max_features = 200;
    auto* analyze = app.add_subcommand("analyze", "JSON analysis report");
    analyze->add_option("file", in_path)->required();
    analyze->add_option("--window", window_spec, "q,r,radius of the analysis window");
    analyze->add_option("--period-bound", period_bound)->check(CLI::Range(1, 64));
    analyze->add_option("--max-features", max_features);
    analyze->add_option("-o,--output", report_path);

    // refute / embed-check / forced-lengths
    int radius = 3;
    std::string cert_path;
    auto* refute = app.add_subcommand("refute", "smallest radius at which the patch cannot extend");
    refute->add_option("file", in_path)->required();
    refute->add_option("--radius", radius, "largest radius to try")->check(CLI::Range(0, 64));
    refute->add_option("--certificate", cert_path);
    add_search_flags(refute);

    auto* embed = app.add_subcommand("embed-check", "does the patch extend across the radius ball");
    embed->add_option("file", in_path)->required();
    embed->add_option("--radius", radius)->check(CLI::Range(0, 64));
    embed->add_option("--certificate", cert_path);
    add_search_flags(embed);

    std::string corner_spec;
    int arc = -1;
    auto* forced = app.add_subcommand("forced-lengths", "triangle lengths that can close at a corner");
    forced->add_option("file", in_path)->required();
    forced->add_option("--radius", radius)->check(CLI::Range(0, 64));
    forced->add_option("--corner", corner_spec, "q,r of the corner tile (default: first tile)");
    forced->add_option("--arc", arc, "world edge where the arc starts (default: every arc)")->check(CLI::Range(-1, 5));
    add_search_flags(forced);

    // render
    std::string layers = "TILES,R1_CURVES,R2_TREES";
    double scale = 24;
    auto* render = app.add_subcommand("render", "SVG rendering");
    render->add_option("file", in_path)->required();
    render->add_option("--layers", layers);
    render->add_option("--scale", scale)->check(CLI::Range(0.1, 1000.0));
    render->add_option("-o,--output", out_path)->required();

    // calibrate / template
    int cal_threads = 1;
    bool same_half = false;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "search the prototile decoration space");
    calibrate_cmd->add_option("--threads", cal_threads)->check(CLI::Range(1, 256));
    calibrate_cmd->add_flag("--same-half-stripe", same_half, "restrict to stripes crossing both ends in one half");
    calibrate_cmd->add_option("-o,--output", out_path, "write the chosen template");

    bool seed_guess = false;
    auto* tmpl_cmd = app.add_subcommand("template", "print a prototile template");
    tmpl_cmd->add_flag("--seed", seed_guess, "the pre-calibration guess instead of the default");

    // serve
    int port = 8080;
    std::string host = "127.0.0.1", load_path;
    bool open_browser = false;
    auto* serve = app.add_subcommand("serve", "HTTP service for the sandbox");
    serve->add_option("--port", port)->check(CLI::Range(1, 65535));
    serve->add_option("--host", host);
    serve->add_option("--load", load_path, "initial patch");
    serve->add_flag("--open", open_browser, "open the sandbox URL in a browser");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*build) {
            std::map<std::string, long> ps;
            for (auto& kv : build_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw UsageError("parameter must be key=value: " + kv);
                char* end = nullptr;
                std::string val = kv.substr(eq + 1);
                long v = std::strtol(val.c_str(), &end, 10);
                if (val.empty() || *end != '\0') throw UsageError("parameter value must be an integer: " + kv);
                ps[kv.substr(0, eq)] = v;
            }
            Construction c = [&] {
                try {
                    return build_by_name(build_name, ps);
                } catch (const ConstructionError& e) {
                    throw UsageError(e.what());
                }
            }();
            for (auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
            save_patch_file(out_path, c.patch, construction_meta(c));
            if (!svg_path.empty()) {
                RenderOptions ro;
                ro.anchors = c.anchors;
                ro.highlight = c.marked;
                write_text(svg_path, render_svg(c.patch, ro));
            }
            auto v = compute_verdicts(c.patch);
            json out{{"construction", build_name}, {"tiles", c.patch.size()}, {"r1_ok", v.r1_ok},
                     {"r2_components", v.r2_components}, {"constructible", v.constructible}, {"output", out_path}};
            std::cout << out.dump(2) << "\n";
            return kOk;
        }
        if (*analyze) {
            auto f = load_patch_file(in_path);
            ReportOptions ro;
            ro.period_bound = period_bound;
            ro.max_features = max_features;
            ro.window = meta_window(f);
            if (!window_spec.empty()) {
                std::istringstream is(window_spec);
                Window w;
                char c1 = 0, c2 = 0;
                if (!(is >> w.centre.q >> c1 >> w.centre.r >> c2 >> w.radius) || c1 != ',' || c2 != ',' || w.radius <= 0)
                    throw UsageError("--window expects q,r,radius");
                ro.window = w;
            }
            auto rep = analysis_report(f.patch, ro);
            rep["stale_verdicts"] = f.stale_verdicts;
            if (report_path.empty()) std::cout << rep.dump(2) << "\n";
            else write_text(report_path, rep.dump(2) + "\n");
            return report_violates(rep) ? kViolation : kOk;
        }
        if (*refute || *embed || *forced) {
            auto f = load_patch_file(in_path);
            if (!f.verdicts.r1_ok) {
                std::cerr << "patch violates R1; searches need an R1-consistent seed\n";
                return kViolation;
            }
            if (f.patch.empty()) throw UsageError("empty patch");
            if (*refute) {
                auto sw = find_refutation_radius(f.patch, radius, sopt);
                json attempts = json::array();
                for (auto& a : sw.attempts) attempts.push_back(verdict_json(a));
                const auto& last = sw.attempts.back();
                std::cout << json{{"minimal_radius", sw.minimal_radius}, {"status", search_status_name(last.status)},
                                  {"attempts", attempts}, {"threads", sopt.threads}, {"r1_only", sopt.r1_only}}
                                 .dump(2)
                          << "\n";
                if (!cert_path.empty()) write_text(cert_path, certificate_text(f.patch, last, "refute"));
                return exit_for(last.status, true);
            }
            if (*embed) {
                auto v = is_legal_within(f.patch, radius, sopt);
                bool ok = v.status != SearchStatus::Extendable || verify_witness(f.patch, dilate(f.patch, radius), v.witness, sopt.r1_only);
                auto out = verdict_json(v);
                out["witness_replays"] = ok;
                std::cout << out.dump(2) << "\n";
                if (!cert_path.empty()) write_text(cert_path, certificate_text(f.patch, v, "embed-check"));
                if (!ok) return kViolation;
                return exit_for(v.status, true);
            }
            HexCoord corner = corner_spec.empty() ? f.patch.cells().front() : parse_cell(corner_spec);
            auto fl = forced_lengths(f.patch, corner, radius, sopt, arc);
            json per = json::object();
            bool bad = false;
            for (auto& [len, v] : fl.per_length) per[std::to_string(len)] = verdict_json(v);
            for (int len : fl.observed) bad = bad || !is_power_form(len);
            std::cout << json{{"corner", to_json(corner)}, {"radius", radius}, {"observed", fl.observed},
                              {"per_length", per}, {"partial", fl.partial}}
                             .dump(2)
                      << "\n";
            if (bad) return kViolation;
            return fl.partial ? kBudget : kOk;
        }
        if (*render) {
            auto f = load_patch_file(in_path);
            RenderOptions ro;
            try {
                ro.layers = parse_layers(layers);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            ro.scale = scale;
            write_text(out_path, render_svg(f.patch, ro));
            return kOk;
        }
        if (*calibrate_cmd) {
            CandidateSpace space;
            space.asymmetric_stripe = !same_half;
            auto cands = enumerate_candidates(space);
            try {
                auto res = calibrate(cands, cal_threads);
                std::cout << serialize_template(res.chosen);
                std::cout << "# candidates " << res.candidates << " passing " << res.passing.size()
                          << " default " << (res.chosen == default_template() ? "matches" : "differs") << "\n";
                if (!out_path.empty()) write_text(out_path, serialize_template(res.chosen));
                return kOk;
            } catch (const NoTemplateError& e) {
                std::cout << e.what() << " (" << cands.size() << " candidates)\n";
                return kViolation;
            }
        }
        if (*tmpl_cmd) {
            std::cout << serialize_template(seed_guess ? seed_template() : default_template());
            return kOk;
        }
        if (*serve) {
            Patch initial;
            Meta meta;
            if (!load_path.empty()) {
                auto f = load_patch_file(load_path);
                initial = f.patch;
                meta = f.meta;
            }
            Session session(initial, meta);
            auto srv = make_server(session);
            std::string url = "http://" + host + ":" + std::to_string(port) + "/patch";
            std::cerr << "serving on " << url << "\n";
            if (open_browser) {
                std::string cmd = "xdg-open '" + url + "' >/dev/null 2>&1 &";
                if (std::system(cmd.c_str()) != 0) std::cerr << "could not open a browser\n";
            }
            if (!srv->listen(host, port)) {
                std::cerr << "cannot listen on " << host << ":" << port << "\n";
                return kUsage;
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const PatchFormatError& e) {
        std::cerr << "bad patch file: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
