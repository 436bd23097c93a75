#include "hexmono/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace hexmono {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Extendable: return "EXTENDABLE";
        case SearchStatus::Refuted: return "REFUTED";
        case SearchStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

long default_budget() {
    if (const char* env = std::getenv("HEXMONO_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

std::vector<HexCoord> dilate(const Patch& p, int radius) {
    std::unordered_map<HexCoord, int, HexHash> dist;
    std::deque<HexCoord> queue;
    for (auto c : p.cells()) {
        dist[c] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        HexCoord c = queue.front();
        queue.pop_front();
        int d = dist[c];
        if (d == radius) continue;
        for (int k = 0; k < 6; ++k) {
            HexCoord n = neighbor(c, k);
            if (dist.emplace(n, d + 1).second) queue.push_back(n);
        }
    }
    std::vector<HexCoord> out;
    out.reserve(dist.size());
    for (auto& kv : dist) out.push_back(kv.first);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr int kSplitDepth = 3;

// Shared read-only description of one query.
struct Problem {
    const PrototileTemplate* t = nullptr;
    bool r1_only = false;
    bool open_boundary = true;
    std::vector<HexCoord> cells;        // region cells, fill order first
    std::vector<std::array<int, 6>> nb; // region index or -1
    std::vector<int> seed_o;            // orientation for seed cells, -1 elsewhere
    std::vector<int> mask;              // allowed orientations
    std::vector<int> order;             // non-seed cells in fill order
    int okmask[6][6]{};                 // [o][k] -> orientations allowed across edge k
    int contact[6][6]{};                // [o][k] -> 0 none, 1 plus, 2 minus
};

struct TaskResult {
    bool found = false;
    bool aborted = false;
    long nodes = 0;
    std::vector<int> solution;
    std::map<int, std::pair<long, long>> conflicts;
};

class Solver {
public:
    explicit Solver(const Problem& pb) : pb_(pb) {
        std::size_t n = pb.cells.size();
        val_.assign(n, -1);
        dom_.assign(pb.mask.begin(), pb.mask.end());
        parent_.assign(n, 0);
        size_.assign(n, 1);
        open_.assign(n, 0);
        seeded_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
    }

    // places the seed; false when the seed already empties a region cell or is inconsistent
    bool init() {
        for (std::size_t i = 0; i < pb_.cells.size(); ++i)
            if (pb_.seed_o[i] >= 0) {
                if (!(dom_[i] >> pb_.seed_o[i] & 1)) return false;
                if (!assign(static_cast<int>(i), pb_.seed_o[i])) return false;
            }
        return true;
    }

    bool assign(int i, int o) {
        set(val_[i], o);
        bool ok = true;
        for (int k = 0; k < 6; ++k) {
            int n = pb_.nb[i][k];
            if (n < 0 || val_[n] >= 0) continue;
            int m = dom_[n] & pb_.okmask[o][k];
            if (m != dom_[n]) set(dom_[n], m);
            if (m == 0 && ok) {
                ++res_->conflicts[n].first;
                ok = false;
            }
        }
        if (!ok) return false;
        if (pb_.r1_only) return true;
        set(seeded_[i], pb_.seed_o[i] >= 0 ? 1 : 0);
        for (int k = 0; k < 6; ++k) {
            int n = pb_.nb[i][k];
            int mine = pb_.contact[o][k];
            if (n < 0) {
                // a tree leaving the region may connect up outside it
                if (mine && pb_.open_boundary) bump(find(i), +1);
                continue;
            }
            if (val_[n] < 0) {
                if (mine) bump(find(i), +1);
                continue;
            }
            int theirs = pb_.contact[val_[n]][(k + 3) % 6];
            if (theirs) bump(find(n), -1);
            if (mine && theirs && mine != theirs) unite(i, n);
        }
        for (int k = -1; k < 6; ++k) {
            int n = k < 0 ? i : pb_.nb[i][k];
            if (n < 0 || val_[n] < 0) continue;
            int r = find(n);
            if (open_[r] == 0 && !seeded_[r]) {
                ++res_->conflicts[i].second;
                return false;
            }
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t m) {
        while (trail_.size() > m) {
            *trail_.back().first = trail_.back().second;
            trail_.pop_back();
        }
    }

    // depth-first over pb_.order from position pos
    bool dfs(std::size_t pos, long limit) {
        if (pos == pb_.order.size()) return true;
        int i = pb_.order[pos];
        int d = dom_[i];
        for (int o = 0; o < 6; ++o) {
            if (!(d >> o & 1)) continue;
            if (++res_->nodes > limit) {
                res_->aborted = true;
                return false;
            }
            auto m = mark();
            if (assign(i, o) && dfs(pos + 1, limit)) return true;
            undo(m);
            if (res_->aborted || (best_ && best_->load() < index_)) return false;
        }
        return false;
    }

    // collects consistent prefixes of the first depth cells in fixed order
    void prefixes(std::size_t pos, std::size_t depth, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                  long limit) {
        if (pos == depth || pos == pb_.order.size()) {
            out.push_back(cur);
            return;
        }
        int i = pb_.order[pos];
        int d = dom_[i];
        for (int o = 0; o < 6; ++o) {
            if (!(d >> o & 1)) continue;
            if (++res_->nodes > limit) {
                res_->aborted = true;
                return;
            }
            auto m = mark();
            if (assign(i, o)) {
                cur.push_back(o);
                prefixes(pos + 1, depth, cur, out, limit);
                cur.pop_back();
            }
            undo(m);
            if (res_->aborted) return;
        }
    }

    bool replay_prefix(const std::vector<int>& pre) {
        for (std::size_t p = 0; p < pre.size(); ++p)
            if (!assign(pb_.order[p], pre[p])) return false;
        return true;
    }

    // a task gives up once an earlier task has found a filling
    void attach(TaskResult* r, const std::atomic<std::size_t>* best = nullptr, std::size_t index = 0) {
        res_ = r;
        best_ = best;
        index_ = index;
    }
    const std::vector<int>& values() const { return val_; }

private:
    void set(int& slot, int v) {
        trail_.emplace_back(&slot, slot);
        slot = v;
    }
    int find(int i) const {
        while (parent_[i] != i) i = parent_[i];
        return i;
    }
    void bump(int r, int delta) { set(open_[r], open_[r] + delta); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        set(parent_[b], a);
        set(size_[a], size_[a] + size_[b]);
        set(open_[a], open_[a] + open_[b]);
        set(seeded_[a], seeded_[a] | seeded_[b]);
    }

    const Problem& pb_;
    std::vector<int> val_, dom_, parent_, size_, open_, seeded_;
    std::vector<std::pair<int*, int>> trail_;
    TaskResult* res_ = nullptr;
    const std::atomic<std::size_t>* best_ = nullptr;
    std::size_t index_ = 0;
};

Problem make_problem(const Patch& seed, const std::vector<HexCoord>& region, const SearchOptions& opt,
                     const OrientationMasks& masks) {
    Problem pb;
    pb.t = &seed.tmpl();
    pb.r1_only = opt.r1_only;
    pb.open_boundary = opt.open_boundary;
    const auto& t = *pb.t;
    for (int o = 0; o < 6; ++o)
        for (int k = 0; k < 6; ++k) {
            for (int o2 = 0; o2 < 6; ++o2)
                if (r1_ok_between(t, o, o2, k)) pb.okmask[o][k] |= 1 << o2;
            auto s = r2_contact(t, o, k);
            pb.contact[o][k] = !s ? 0 : (*s == Sign::Plus ? 1 : 2);
        }

    std::unordered_set<HexCoord, HexHash> in(region.begin(), region.end());
    for (auto c : seed.cells())
        if (!in.count(c)) throw std::invalid_argument("region must contain the seed");
    // fill order: distance to the seed through the region, then coordinates
    std::unordered_map<HexCoord, int, HexHash> dist;
    std::deque<HexCoord> queue;
    for (auto c : seed.cells()) {
        dist[c] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        HexCoord c = queue.front();
        queue.pop_front();
        for (int k = 0; k < 6; ++k) {
            HexCoord n = neighbor(c, k);
            if (in.count(n) && dist.emplace(n, dist[c] + 1).second) queue.push_back(n);
        }
    }
    std::vector<std::pair<int, HexCoord>> keyed;
    for (auto c : region) {
        auto it = dist.find(c);
        keyed.emplace_back(it == dist.end() ? 1 << 29 : it->second, c);
    }
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
    std::unordered_map<HexCoord, int, HexHash> index;
    for (auto& [d, c] : keyed) {
        index[c] = static_cast<int>(pb.cells.size());
        pb.cells.push_back(c);
    }
    std::size_t n = pb.cells.size();
    pb.nb.resize(n);
    pb.seed_o.assign(n, -1);
    pb.mask.assign(n, 63);
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 6; ++k) {
            auto it = index.find(neighbor(pb.cells[i], k));
            pb.nb[i][k] = it == index.end() ? -1 : it->second;
        }
        if (auto o = seed.at(pb.cells[i])) pb.seed_o[i] = *o;
        else pb.order.push_back(static_cast<int>(i));
        auto m = masks.find(pb.cells[i]);
        if (m != masks.end()) pb.mask[i] = m->second & 63;
    }
    return pb;
}

std::vector<WitnessStep> growth_order(const Problem& pb, const std::vector<int>& val) {
    // breadth-first over tree contacts (plain adjacency when R1 only), seed first, then anchors
    std::size_t n = pb.cells.size();
    std::vector<char> seen(n, 0);
    std::vector<WitnessStep> out;
    auto links = [&](int i, int k, int j) {
        if (pb.r1_only) return true;
        int a = pb.contact[val[i]][k], b = pb.contact[val[j]][(k + 3) % 6];
        return a && b && a != b;
    };
    auto flood = [&](std::deque<int> queue) {
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int k = 0; k < 6; ++k) {
                int j = pb.nb[i][k];
                if (j < 0 || seen[j] || !links(i, k, j)) continue;
                seen[j] = 1;
                queue.push_back(j);
                out.push_back({{pb.cells[j], val[j]}, false});
            }
        }
    };
    std::deque<int> start;
    for (std::size_t i = 0; i < n; ++i)
        if (pb.seed_o[i] >= 0) {
            seen[i] = 1;
            start.push_back(static_cast<int>(i));
        }
    flood(start);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        bool exits = false;
        for (int k = 0; k < 6; ++k) exits = exits || (pb.nb[i][k] < 0 && pb.contact[val[i]][k]);
        if (!exits) continue;
        seen[i] = 1;
        out.push_back({{pb.cells[i], val[i]}, true});
        flood({static_cast<int>(i)});
    }
    // unreachable only if the search accepted something it should not have
    for (std::size_t i = 0; i < n; ++i)
        if (!seen[i]) out.push_back({{pb.cells[i], val[i]}, true});
    return out;
}

void add_conflicts(std::map<int, std::pair<long, long>>& into, const std::map<int, std::pair<long, long>>& from) {
    for (auto& [k, v] : from) {
        into[k].first += v.first;
        into[k].second += v.second;
    }
}

}  // namespace

SearchVerdict extend_all(const Patch& seed, const std::vector<HexCoord>& region, const SearchOptions& opt,
                         const OrientationMasks& masks) {
    if (auto bad = r1_violations(seed); !bad.empty()) {
        // nothing to search: the seed itself breaks R1
        SearchVerdict v;
        v.status = SearchStatus::Refuted;
        v.region_size = static_cast<long>(region.size());
        for (auto& e : bad) v.contradictions.push_back({e.cell, 1, 0});
        return v;
    }
    Problem pb = make_problem(seed, region, opt, masks);
    SearchVerdict v;
    v.region_size = static_cast<long>(pb.cells.size());
    long budget = std::max<long>(opt.budget, 0);

    std::map<int, std::pair<long, long>> conflicts;
    auto finish = [&](SearchStatus s) {
        v.status = s;
        if (s != SearchStatus::Extendable)
            for (auto& [i, c] : conflicts) v.contradictions.push_back({pb.cells[i], c.first, c.second});
        std::sort(v.contradictions.begin(), v.contradictions.end(),
                  [](const Contradiction& a, const Contradiction& b) { return a.cell < b.cell; });
        return v;
    };

    TaskResult head;
    Solver root(pb);
    root.attach(&head);
    if (!root.init()) {
        conflicts = head.conflicts;
        return finish(SearchStatus::Refuted);
    }
    std::vector<std::vector<int>> tasks;
    std::vector<int> cur;
    root.prefixes(0, kSplitDepth, cur, tasks, budget);
    conflicts = head.conflicts;
    v.node_count = head.nodes;
    if (head.aborted) {
        v.node_count = budget;
        return finish(SearchStatus::Unknown);
    }

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{tasks.size()};
    long remaining = budget - head.nodes;
    auto work = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            if (k > best.load()) continue;
            TaskResult& r = results[k];
            Solver s(pb);
            TaskResult scratch;
            s.attach(&scratch);
            s.init();
            bool ok = s.replay_prefix(tasks[k]);
            s.attach(&r, &best, k);
            if (ok && s.dfs(tasks[k].size(), remaining)) {
                r.found = true;
                r.solution = s.values();
                std::size_t b = best.load();
                while (k < b && !best.compare_exchange_weak(b, k)) {
                }
            }
        }
    };
    int threads = std::max(1, opt.threads);
    if (threads == 1 || tasks.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // merge in task order, as a sequential run would see it
    long used = head.nodes;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        TaskResult& r = results[k];
        if (r.aborted || used + r.nodes > budget) {
            add_conflicts(conflicts, r.conflicts);
            v.node_count = budget;
            return finish(SearchStatus::Unknown);
        }
        used += r.nodes;
        if (r.found) {
            v.node_count = used;
            v.witness = growth_order(pb, r.solution);
            return finish(SearchStatus::Extendable);
        }
        add_conflicts(conflicts, r.conflicts);
    }
    v.node_count = used;
    return finish(SearchStatus::Refuted);
}

SearchVerdict is_legal_within(const Patch& p, int radius, const SearchOptions& opt) {
    auto v = extend_all(p, dilate(p, radius), opt);
    v.radius = radius;
    return v;
}

bool verify_witness(const Patch& seed, const std::vector<HexCoord>& region, const std::vector<WitnessStep>& witness,
                    bool r1_only) {
    std::unordered_set<HexCoord, HexHash> in(region.begin(), region.end());
    Patch cur = seed;
    for (auto& st : witness) {
        if (!in.count(st.pl.cell)) return false;
        auto v = can_place(cur, st.pl).verdict;
        bool ok = v == Verdict::Legal;
        if (r1_only) {
            ok = v == Verdict::Legal || v == Verdict::R2Fail;
        } else if (st.anchored && (v == Verdict::R2Fail || v == Verdict::Disconnected)) {
            for (int k = 0; k < 6; ++k)
                ok = ok || (!in.count(neighbor(st.pl.cell, k)) && r2_contact(seed.tmpl(), st.pl.o, k));
        }
        if (!ok) return false;
        cur.put(st.pl.cell, st.pl.o);
    }
    return cur.size() == in.size();
}

RefutationSweep find_refutation_radius(const Patch& seed, int max_radius, const SearchOptions& opt) {
    RefutationSweep sw;
    for (int r = 0; r <= max_radius; ++r) {
        auto v = is_legal_within(seed, r, opt);
        sw.attempts.push_back(v);
        if (v.status == SearchStatus::Refuted) {
            sw.minimal_radius = r;
            break;
        }
        if (v.status == SearchStatus::Unknown) break;
    }
    return sw;
}

std::vector<int> arc_starts(const PrototileTemplate& t, int o) {
    std::vector<int> out;
    for (int a = 0; a < 6; ++a)
        if (curve_partner(t, o, a) == mod6(a + 1)) out.push_back(a);
    return out;
}

TriangleFrame triangle_frame(HexCoord corner, int a, int length) {
    TriangleFrame f;
    f.length = length;
    HexCoord u = step(a + 1), w = step(a);
    int n = length + 1;
    // corner, then each side, walking with the curve out of edge a+1
    f.cells.push_back(corner);
    f.joins.emplace_back(mod6(a), mod6(a + 1));
    for (int i = 1; i <= n; ++i) {
        f.cells.push_back(corner + i * u);
        f.joins.emplace_back(mod6(a + 4), i == n ? mod6(a + 5) : mod6(a + 1));
    }
    for (int i = 1; i <= n; ++i) {
        f.cells.push_back(corner + (n - i) * u + i * w);
        f.joins.emplace_back(mod6(a + 2), i == n ? mod6(a + 3) : mod6(a + 5));
    }
    for (int i = n - 1; i >= 1; --i) {
        f.cells.push_back(corner + i * w);
        f.joins.emplace_back(mod6(a), mod6(a + 3));
    }
    for (int i = 1; i <= length; ++i)
        for (int j = 1; i + j <= length; ++j) f.interior.push_back(corner + i * u + j * w);
    std::sort(f.interior.begin(), f.interior.end());
    return f;
}

OrientationMasks frame_masks(const PrototileTemplate& t, const TriangleFrame& f) {
    OrientationMasks m;
    for (std::size_t i = 0; i < f.cells.size(); ++i) {
        unsigned char bits = 0;
        for (int o = 0; o < 6; ++o)
            if (curve_partner(t, o, f.joins[i].first) == f.joins[i].second) bits |= 1 << o;
        m[f.cells[i]] = bits;
    }
    return m;
}

ForcedLengths forced_lengths(const Patch& seed, HexCoord corner, int radius, const SearchOptions& opt,
                             int arc_start) {
    auto o = seed.at(corner);
    if (!o) throw std::invalid_argument("corner cell is not in the seed");
    auto region = dilate(seed, radius);
    std::unordered_set<HexCoord, HexHash> in(region.begin(), region.end());
    std::vector<int> arcs = arc_starts(seed.tmpl(), *o);
    if (arc_start >= 0) {
        if (std::find(arcs.begin(), arcs.end(), mod6(arc_start)) == arcs.end())
            throw std::invalid_argument("no arc at that edge");
        arcs = {mod6(arc_start)};
    }
    ForcedLengths out;
    for (int len = 0;; ++len) {
        bool any_fit = false;
        for (int a : arcs) {
            auto f = triangle_frame(corner, a, len);
            bool fits = std::all_of(f.cells.begin(), f.cells.end(), [&](HexCoord c) { return in.count(c) != 0; });
            if (!fits) continue;
            any_fit = true;
            auto v = extend_all(seed, region, opt, frame_masks(seed.tmpl(), f));
            v.radius = radius;
            auto& slot = out.per_length[len];
            // one extendable arc settles the length
            if (slot.status != SearchStatus::Extendable) {
                long nodes = slot.node_count + v.node_count;
                if (!(slot.status == SearchStatus::Unknown && slot.node_count > 0 && v.status == SearchStatus::Refuted))
                    slot = v;
                slot.node_count = nodes;
            }
        }
        if (!any_fit) break;
        auto& s = out.per_length[len];
        if (s.status == SearchStatus::Extendable) out.observed.insert(len);
        if (s.status == SearchStatus::Unknown) out.partial = true;
    }
    return out;
}

std::string certificate_text(const Patch& seed, const SearchVerdict& v, const std::string& what) {
    std::ostringstream os;
    os << "hexmono certificate v1\n";
    os << "query " << what << "\n";
    os << "status " << search_status_name(v.status) << "\n";
    os << "radius " << v.radius << "\n";
    os << "region " << v.region_size << "\n";
    os << "nodes " << v.node_count << "\n";
    os << "seed " << seed.size() << "\n";
    for (auto& pl : seed.sorted()) os << pl.cell.q << " " << pl.cell.r << " " << pl.o << "\n";
    if (v.status == SearchStatus::Extendable) {
        os << "witness " << v.witness.size() << "\n";
        for (auto& st : v.witness)
            os << st.pl.cell.q << " " << st.pl.cell.r << " " << st.pl.o << (st.anchored ? " anchored" : "") << "\n";
    } else {
        os << "contradictions " << v.contradictions.size() << "\n";
        for (auto& c : v.contradictions)
            os << c.cell.q << " " << c.cell.r << " emptied " << c.emptied << " closed " << c.r2_closed << "\n";
    }
    return os.str();
}

}  // namespace hexmono
