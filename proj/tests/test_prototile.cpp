#include "doctest.h"
#include "hexmono/engine.hpp"
#include "oracles.hpp"

using namespace hexmono;

TEST_SUITE("prototile") {

TEST_CASE("default template text") {
    CHECK(serialize_template(default_template()) ==
          "prototile v1\npairs 0-5 1-4 2-3\nr1 S S E S E E\nr2 - - . - + .\n");
    CHECK(default_template().structurally_valid());
    CHECK(default_template().contact_count() == 4);
    CHECK(default_template().stripe_edge() == 1);
    CHECK(default_template().is_stripe(4));
    CHECK(!default_template().is_stripe(0));
}

TEST_CASE("round trip") {
    for (auto t : {default_template(), seed_template()}) CHECK(parse_template(serialize_template(t)) == t);
    auto t = make_template(2, true, {Sign::Plus, std::nullopt, Sign::Minus, Sign::Minus, std::nullopt, Sign::Plus});
    CHECK(t.structurally_valid());
    CHECK(parse_template(serialize_template(t)) == t);
}

TEST_CASE("parse errors") {
    CHECK_THROWS(parse_template("prototile v2\npairs 0-5 1-4 2-3\nr1 S S E S E E\nr2 - - . - + .\n"));
    CHECK_THROWS(parse_template("prototile v1\npairs 0-9 1-4 2-3\nr1 S S E S E E\nr2 - - . - + .\n"));
    CHECK_THROWS(parse_template("prototile v1\npairs 0-5 1-4 2-3\nr1 S S X S E E\nr2 - - . - + .\n"));
    CHECK_THROWS(parse_template("prototile v1\npairs 0-5 1-4 2-3\nr1 S S E S E E\nr2 - - ? - + .\n"));
    CHECK_THROWS(parse_template("prototile v1\npairs 0-5 1-4 2-3\nr1 S S E S E E\n"));
    // arcs must cross next to their corner
    CHECK_THROWS(parse_template("prototile v1\npairs 0-5 1-4 2-3\nr1 E S E S E E\nr2 - - . - + .\n"));
    // three contacts only
    CHECK_THROWS(parse_template("prototile v1\npairs 0-5 1-4 2-3\nr1 S S E S E E\nr2 - - . - . .\n"));
}

TEST_CASE("rules agree with the geometric oracle") {
    for (auto t : {default_template(), seed_template()}) {
        oracle::Tables tb(t);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int k = 0; k < 6; ++k) {
                    CHECK(r1_ok_between(t, a, b, k) == tb.r1[a][b][k]);
                    CHECK(r2_between(t, a, b, k) == tb.r2[a][b][k]);
                }
    }
}

TEST_CASE("rotation equivariance and symmetry") {
    const auto& t = default_template();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int k = 0; k < 6; ++k)
                for (int s = 0; s < 6; ++s) {
                    CHECK(r1_ok_between(t, a, b, k) == r1_ok_between(t, mod6(a + s), mod6(b + s), k + s));
                    CHECK(r2_between(t, a, b, k) == r2_between(t, mod6(a + s), mod6(b + s), k + s));
                    CHECK(r1_ok_between(t, a, b, k) == r1_ok_between(t, b, a, k + 3));
                    CHECK(r2_between(t, a, b, k) == r2_between(t, b, a, k + 3));
                }
}

TEST_CASE("compatible pair counts per edge") {
    // frozen from the geometric oracle: half the pairs match R1, six pairs join trees
    const auto& t = default_template();
    for (int k = 0; k < 6; ++k) {
        int r1 = 0, r2 = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                r1 += r1_ok_between(t, a, b, k);
                r2 += r2_between(t, a, b, k);
                if (r2_between(t, a, b, k)) CHECK(r1_ok_between(t, a, b, k));
            }
        CHECK(r1 == 18);
        CHECK(r2 == 6);
    }
}

TEST_CASE("matching primitives") {
    CHECK(r1_match(Crossing::NearStart, Crossing::NearEnd));
    CHECK(!r1_match(Crossing::NearEnd, Crossing::NearEnd));
    CHECK(r2_connects(Sign::Plus, Sign::Minus));
    CHECK(!r2_connects(Sign::Plus, Sign::Plus));
    CHECK(!r2_connects(Sign::Plus, std::nullopt));
    CHECK(!r2_connects(std::nullopt, std::nullopt));
    CHECK(flip(Crossing::NearStart) == Crossing::NearEnd);
}

TEST_CASE("curve partners follow the orientation") {
    const auto& t = default_template();
    for (int o = 0; o < 6; ++o)
        for (int k = 0; k < 6; ++k) {
            CHECK(curve_partner(t, o, curve_partner(t, o, k)) == k);
            CHECK(curve_partner(t, o, k) == mod6(t.partner[mod6(k - o)] + o));
        }
}

}
