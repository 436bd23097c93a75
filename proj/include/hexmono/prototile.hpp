#pragma once

#include <array>
#include <optional>
#include <string>

namespace hexmono {

// which half of an edge, measured from its start vertex in the tile's ccw boundary order
enum class Crossing : unsigned char { NearStart, NearEnd };
enum class Sign : unsigned char { Plus, Minus };

Crossing flip(Crossing c);
char crossing_char(Crossing c);
char sign_char(Sign s);

// Template edge j spans vertex angles 60j-30 .. 60j+30 and faces direction j.
struct PrototileTemplate {
    std::array<int, 6> partner{};  // curve pairing, partner[partner[j]] == j
    std::array<Crossing, 6> r1{};
    std::array<std::optional<Sign>, 6> r2{};

    bool is_stripe(int j) const;  // edge j is an end of the straight curve
    int stripe_edge() const;      // lower-numbered stripe edge
    int contact_count() const;
    bool structurally_valid(std::string* why = nullptr) const;

    friend bool operator==(const PrototileTemplate&, const PrototileTemplate&) = default;
};

Crossing r1_signature(const PrototileTemplate& t, int o, int k);
bool r1_match(Crossing a, Crossing b);
std::optional<Sign> r2_contact(const PrototileTemplate& t, int o, int k);
bool r2_connects(std::optional<Sign> a, std::optional<Sign> b);

// world-edge partner of world edge k for a tile in orientation o
int curve_partner(const PrototileTemplate& t, int o, int k);

// builds a template from stripe axis a (stripe {a, a+3}), stripe chirality and contact layout;
// arcs and their offsets follow from the pairing
PrototileTemplate make_template(int axis, bool stripe_starts_near_end,
                                const std::array<std::optional<Sign>, 6>& contacts);

PrototileTemplate seed_template();           // pre-calibration guess
const PrototileTemplate& default_template();  // shipped, calibrated

std::string serialize_template(const PrototileTemplate& t);
PrototileTemplate parse_template(const std::string& text);

}  // namespace hexmono
