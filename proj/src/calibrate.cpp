#include "hexmono/calibrate.hpp"

#include <atomic>
#include <thread>

#include "hexmono/analysis.hpp"
#include "hexmono/constructions.hpp"
#include "hexmono/search.hpp"

namespace hexmono {

namespace {

std::vector<std::array<std::optional<Sign>, 6>> contact_layouts() {
    std::vector<std::array<std::optional<Sign>, 6>> out;
    for (int set = 0; set < 64; ++set) {
        if (__builtin_popcount(set) != 4) continue;
        for (int signs = 0; signs < 16; ++signs) {
            std::array<std::optional<Sign>, 6> c{};
            int bit = 0;
            for (int j = 0; j < 6; ++j)
                if (set >> j & 1) c[j] = (signs >> bit++ & 1) ? Sign::Minus : Sign::Plus;
            out.push_back(c);
        }
    }
    return out;
}

int distance(const PrototileTemplate& a, const PrototileTemplate& b) {
    int d = 0;
    for (int j = 0; j < 6; ++j) d += (a.partner[j] != b.partner[j]) + (a.r1[j] != b.r1[j]) + (a.r2[j] != b.r2[j]);
    return d;
}

}  // namespace

std::vector<PrototileTemplate> enumerate_candidates(const CandidateSpace& space) {
    std::vector<PrototileTemplate> out;
    for (int axis = 0; axis < 3; ++axis)
        for (bool near_end : {false, true})
            for (auto& c : contact_layouts()) {
                auto t = make_template(axis, near_end, c);
                // same-half stripe: both ends take the first end's half
                if (!space.asymmetric_stripe) t.r1[axis + 3] = t.r1[axis];
                out.push_back(t);
            }
    return out;
}

CandidateReport evaluate_candidate(const PrototileTemplate& t) {
    CandidateReport rep;
    Patch p3;
    for (int n = 1; n <= 3; ++n) {
        Patch p = build_Pn(n);
        p.set_template(t);
        rep.constructible[n - 1] = is_directly_constructible(p).constructible;
        if (n == 3) p3 = p;
    }
    if (r1_consistent(p3)) {
        auto g = r2_graph(p3);
        rep.tree = g.components == 1 && g.is_forest;
    }
    Patch one(t);
    one.put({0, 0}, 0);
    SearchOptions opt;
    opt.budget = 100000;
    auto fl = forced_lengths(one, {0, 0}, 4, opt);
    rep.triangles = fl.observed.count(0) && fl.observed.count(1) && fl.observed.count(3);
    return rep;
}

CalibrationResult calibrate(const std::vector<PrototileTemplate>& candidates, int threads) {
    std::vector<char> pass(candidates.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();)
            pass[i] = evaluate_candidate(candidates[i]).passes();
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    CalibrationResult res;
    res.candidates = static_cast<long>(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (pass[i]) res.passing.push_back(candidates[i]);
    if (res.passing.empty()) throw NoTemplateError();
    auto guess = seed_template();
    res.chosen = res.passing.front();
    for (auto& t : res.passing)
        if (distance(t, guess) < distance(res.chosen, guess)) res.chosen = t;
    return res;
}

}  // namespace hexmono
