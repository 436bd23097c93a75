#include <algorithm>
#include <set>

#include "doctest.h"
#include "hexmono/calibrate.hpp"
#include "hexmono/constructions.hpp"

using namespace hexmono;

TEST_SUITE("calibrate") {

TEST_CASE("candidate space") {
    auto all = enumerate_candidates();
    CHECK(all.size() == 1440);
    std::set<std::string> distinct;
    for (auto& t : all) distinct.insert(serialize_template(t));
    CHECK(distinct.size() == all.size());
    CHECK(std::count(all.begin(), all.end(), default_template()) == 1);
}

TEST_CASE("default template passes and the seed guess does not") {
    auto rep = evaluate_candidate(default_template());
    CHECK(rep.passes());
    CHECK(!evaluate_candidate(seed_template()).passes());
}

TEST_CASE("full calibration picks the default") {
    auto res = calibrate(enumerate_candidates(), 2);
    CHECK(res.candidates == 1440);
    CHECK(res.passing.size() == 2);
    CHECK(res.chosen == default_template());
    // the other survivor swaps every tree sign
    auto other = res.passing[0] == default_template() ? res.passing[1] : res.passing[0];
    for (int j = 0; j < 6; ++j) {
        CHECK(other.r2[j].has_value() == default_template().r2[j].has_value());
        if (other.r2[j]) CHECK(*other.r2[j] != *default_template().r2[j]);
    }
}

TEST_CASE("singleton and empty spaces") {
    CHECK(calibrate({default_template()}).chosen == default_template());
    CHECK_THROWS_AS(calibrate({seed_template()}), NoTemplateError);
    CHECK_THROWS_AS(calibrate({}), NoTemplateError);
    CandidateSpace same;
    same.asymmetric_stripe = false;
    CHECK_THROWS_AS(calibrate(enumerate_candidates(same)), NoTemplateError);
}

}
