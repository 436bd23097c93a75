#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hexmono/prototile.hpp"

namespace hexmono {

struct CandidateSpace {
    // false restricts to templates whose straight curve crosses both ends in the same half
    bool asymmetric_stripe = true;
};

std::vector<PrototileTemplate> enumerate_candidates(const CandidateSpace& space = {});

struct CandidateReport {
    bool constructible[3] = {false, false, false};  // P_1..P_3
    bool triangles = false;                          // lengths 0, 1, 3 close around a corner
    bool tree = false;                               // R2 graph of P_3 is a tree
    bool passes() const { return constructible[0] && constructible[1] && constructible[2] && triangles && tree; }
};
CandidateReport evaluate_candidate(const PrototileTemplate& t);

class NoTemplateError : public std::runtime_error {
public:
    NoTemplateError() : std::runtime_error("NO_TEMPLATE: no candidate passes") {}
};

struct CalibrationResult {
    PrototileTemplate chosen;
    std::vector<PrototileTemplate> passing;  // enumeration order
    long candidates = 0;
};
// picks the passing candidate closest to the pre-calibration guess, ties by enumeration order;
// throws NoTemplateError when nothing passes
CalibrationResult calibrate(const std::vector<PrototileTemplate>& candidates, int threads = 1);

}  // namespace hexmono
