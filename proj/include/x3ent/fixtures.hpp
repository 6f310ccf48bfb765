#pragma once

#include "x3ent/ghzpoly.hpp"

namespace x3 {

// Frozen reference data: the classification examples, the nine reference
// extreme-ray sets, and the hand-checked extremality witnesses. Everything
// here is re-verified by the test suites on every run.

// X((2,1,1,2),(2,1,1,2),(2,0,1,0)): inside A and Bv(C^A), outside
// (A^B)v(A^C) -- the modular-law gap.
XState rho1();
// X((2,1,1,2),(2,1,1,2),(2,1,0,0)): inside A and Cv(B^A), same gap.
XState rho2();

// The nine cones with reference extreme-ray sets, bottom to top.
struct RaySetFixture {
    ConeId cone;
    std::vector<IVec> rays;  // canonical, sorted
};
const std::vector<RaySetFixture>& reference_ray_sets();

// Hand-checked separating witnesses: for the given cone, the witness
// vanishes on the state and is strictly positive on every other reference
// ray of that cone.
struct ExtremeWitnessFixture {
    ConeId cone;
    GhzDiagonal state;
    GhzDiagonal witness;
};
const std::vector<ExtremeWitnessFixture>& extreme_witness_fixtures();

// Criteria implications that prune the witness-side catalogs...
struct ImplicationFixture {
    std::vector<WitnessIneq> assumed;
    WitnessIneq claimed;
    int part;  // -1: every scalar part
    bool expected;
    // for expected == false: a frozen counterexample (r_1..4, |u|_1..4)
    std::array<Rat, 8> counterexample{};
};
const std::vector<ImplicationFixture>& implication_fixtures();

}  // namespace x3
