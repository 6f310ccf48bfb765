#pragma once

#include <optional>

#include "x3ent/cones.hpp"
#include "x3ent/lp.hpp"

namespace x3 {

// A verified non-membership certificate: an entanglement witness W in the
// dual cone with <W, x> < 0, all entries rational, checked exactly.
struct Certificate {
    ConeId cone;          // the primal cone x was tested against
    ConeId witness_cone;  // its dual
    WitnessX witness;
    Rat value;  // <W, x>, strictly negative
    struct Entry {
        std::string criterion;
        bool holds;
        double slack;
    };
    std::vector<Entry> transcript;  // dual-criteria margins of the witness
};

// Exact decision plus, for non-members, a certificate. Throws
// std::domain_error for non-PSD input.
struct CertifyResult {
    Margin margin;  // membership margin of x in the cone
    std::optional<Certificate> certificate;
};
CertifyResult certify(const XState& x, const ConeId& cone);

// Does the conjunction of 'assumed' witness criteria imply 'claimed'
// (every scalar inequality of it) for all nonnegative (r, |u|)?
struct ImpliesResult {
    bool implied = false;
    // On failure: a nonnegative (r_1..4, |u|_1..4) satisfying all assumed
    // criteria but violating the named part of the claim.
    std::array<Rat, 8> counterexample{};
    std::string violated;
};
ImpliesResult implies(const std::vector<WitnessIneq>& assumed, const WitnessIneq& claimed);
// Single scalar part of a criterion (by index into linear_forms(claimed)).
ImpliesResult implies_part(const std::vector<WitnessIneq>& assumed,
                           const WitnessIneq& claimed, int part);

}  // namespace x3
