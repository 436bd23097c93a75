#include "hexmono/prototile.hpp"

#include <sstream>
#include <stdexcept>

#include "hexmono/hexlattice.hpp"

namespace hexmono {

Crossing flip(Crossing c) { return c == Crossing::NearStart ? Crossing::NearEnd : Crossing::NearStart; }
char crossing_char(Crossing c) { return c == Crossing::NearStart ? 'S' : 'E'; }
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

bool PrototileTemplate::is_stripe(int j) const { return mod6(partner[mod6(j)] - j) == 3; }

int PrototileTemplate::stripe_edge() const {
    for (int j = 0; j < 3; ++j)
        if (is_stripe(j)) return j;
    return -1;
}

int PrototileTemplate::contact_count() const {
    int n = 0;
    for (auto& c : r2) n += c.has_value();
    return n;
}

bool PrototileTemplate::structurally_valid(std::string* why) const {
    auto fail = [&](const char* m) {
        if (why) *why = m;
        return false;
    };
    for (int j = 0; j < 6; ++j)
        if (partner[j] < 0 || partner[j] > 5 || partner[partner[j]] != j || partner[j] == j)
            return fail("pairing is not a perfect matching");
    int a = stripe_edge();
    if (a < 0) return fail("no straight curve");
    for (int j = 0; j < 6; ++j) {
        if (is_stripe(j)) continue;
        int d = mod6(partner[j] - j);
        if (d != 1 && d != 5) return fail("arc pairs must be adjacent edges");
        // corner vertex lies at the end of the lower edge and the start of the upper one
        Crossing want = d == 1 ? Crossing::NearEnd : Crossing::NearStart;
        if (r1[j] != want) return fail("arc crossing not next to its corner");
    }
    if (r1[a] == r1[a + 3]) return fail("straight curve crossings are centrally symmetric");
    if (contact_count() != 4) return fail("need exactly four tree contacts");
    return true;
}

Crossing r1_signature(const PrototileTemplate& t, int o, int k) { return t.r1[mod6(k - o)]; }

bool r1_match(Crossing a, Crossing b) { return a == flip(b); }

std::optional<Sign> r2_contact(const PrototileTemplate& t, int o, int k) { return t.r2[mod6(k - o)]; }

bool r2_connects(std::optional<Sign> a, std::optional<Sign> b) { return a && b && *a != *b; }

int curve_partner(const PrototileTemplate& t, int o, int k) { return mod6(t.partner[mod6(k - o)] + o); }

PrototileTemplate make_template(int axis, bool stripe_starts_near_end,
                                const std::array<std::optional<Sign>, 6>& contacts) {
    PrototileTemplate t;
    axis = mod6(axis) % 3;
    int a = axis, b = axis + 3;
    t.partner[a] = b;
    t.partner[b] = a;
    t.r1[a] = stripe_starts_near_end ? Crossing::NearEnd : Crossing::NearStart;
    t.r1[b] = flip(t.r1[a]);
    // remaining edges pair up at the two vertices away from the stripe
    for (int lo : {a + 1, b + 1}) {
        int j = mod6(lo), k = mod6(lo + 1);
        t.partner[j] = k;
        t.partner[k] = j;
        t.r1[j] = Crossing::NearEnd;
        t.r1[k] = Crossing::NearStart;
    }
    t.r2 = contacts;
    return t;
}

PrototileTemplate seed_template() {
    return make_template(0, true, {Sign::Plus, Sign::Minus, std::nullopt, Sign::Minus, Sign::Minus, std::nullopt});
}

const PrototileTemplate& default_template() {
    static const PrototileTemplate t =
        make_template(1, false, {Sign::Minus, Sign::Minus, std::nullopt, Sign::Minus, Sign::Plus, std::nullopt});
    return t;
}

std::string serialize_template(const PrototileTemplate& t) {
    std::ostringstream os;
    os << "prototile v1\n";
    os << "pairs";
    for (int j = 0; j < 6; ++j)
        if (j < t.partner[j]) os << ' ' << j << '-' << t.partner[j];
    os << "\nr1";
    for (int j = 0; j < 6; ++j) os << ' ' << crossing_char(t.r1[j]);
    os << "\nr2";
    for (int j = 0; j < 6; ++j) os << ' ' << (t.r2[j] ? sign_char(*t.r2[j]) : '.');
    os << '\n';
    return os.str();
}

PrototileTemplate parse_template(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    PrototileTemplate t;
    t.partner.fill(-1);
    bool seen_header = false, seen_pairs = false, seen_r1 = false, seen_r2 = false;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        if (!(ls >> word)) continue;
        if (word == "prototile") {
            ls >> word;
            if (word != "v1") throw std::runtime_error("unsupported template version");
            seen_header = true;
        } else if (word == "pairs") {
            std::string p;
            while (ls >> p) {
                int a = -1, b = -1;
                char dash = 0;
                std::istringstream ps(p);
                if (!(ps >> a >> dash >> b) || dash != '-' || a < 0 || a > 5 || b < 0 || b > 5)
                    throw std::runtime_error("bad pair: " + p);
                t.partner[a] = b;
                t.partner[b] = a;
            }
            seen_pairs = true;
        } else if (word == "r1") {
            for (int j = 0; j < 6; ++j) {
                std::string c;
                if (!(ls >> c) || (c != "S" && c != "E")) throw std::runtime_error("bad r1 row");
                t.r1[j] = c == "S" ? Crossing::NearStart : Crossing::NearEnd;
            }
            seen_r1 = true;
        } else if (word == "r2") {
            for (int j = 0; j < 6; ++j) {
                std::string c;
                if (!(ls >> c)) throw std::runtime_error("bad r2 row");
                if (c == "+") t.r2[j] = Sign::Plus;
                else if (c == "-") t.r2[j] = Sign::Minus;
                else if (c == ".") t.r2[j].reset();
                else throw std::runtime_error("bad r2 entry: " + c);
            }
            seen_r2 = true;
        } else {
            throw std::runtime_error("unknown template line: " + word);
        }
    }
    if (!seen_header || !seen_pairs || !seen_r1 || !seen_r2) throw std::runtime_error("incomplete template");
    std::string why;
    if (!t.structurally_valid(&why)) throw std::runtime_error("invalid template: " + why);
    return t;
}

}  // namespace hexmono
