#pragma once

#include <random>

#include "x3ent/fixtures.hpp"
#include "x3ent/witness.hpp"

namespace x3 {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Deterministic random test data (rational profiles, so every comparison
// stays in plain rational arithmetic).
struct Sampler {
    std::mt19937_64 rng{0x9e3779b97f4a7c15ull};

    Rat rat(int maxnum, int maxden);
    // PSD X-state; deep ones satisfy every cone's criteria
    XState state(bool deep);
    WitnessX witness(bool deep);
    GhzDiagonal ghz_state();
};

// Reference extreme-ray sets reproduced by enumeration, plus edge
// inclusions and insertion-order invariance.
Suite suite_table2();
// separating-functional proofs for every reference ray, and the
// hand-checked state/witness pairs with all sign-flip variants.
Suite suite_extremality();
// the six distributivity identities as ray-set equalities, join/generator
// consistency for every join-shaped cone, and the modular-law strictness.
Suite suite_identities();
// implication fixtures by exact LP, counterexamples re-verified.
Suite suite_redundancy();
// random criteria-passing (state, witness) pairs give nonnegative pairing.
Suite suite_duality(int pairs_per_cone);
// certify() agrees with membership and certificates re-verify.
Suite suite_completeness(int states_per_cone);
// lattice monotonicity, relabeling covariance, criteria-vs-hrep agreement.
Suite suite_consistency(int n_states, int n_ghz);
// frozen classification facts (rho1/rho2 and friends).
Suite suite_fixtures();

}  // namespace x3
