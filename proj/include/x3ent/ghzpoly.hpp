#pragma once

#include <optional>

#include "x3ent/cones.hpp"
#include "x3ent/lp.hpp"

namespace x3 {

// Exact polyhedral computations in the 8-dimensional GHZ-diagonal slice
// (coordinates a_1..a_4, z_1..z_4 with a = b and real z).

using IVec = std::vector<Int>;  // primitive integer vector
using QVec = std::vector<Rat>;

struct HPolyhedron {
    int dim = 8;
    std::vector<IVec> ineqs;  // h . x >= 0, primitive, deduplicated
};

// Criteria expansion of a primal cone restricted to the slice, PSD base
// included.
HPolyhedron ghz_hrep(const ConeId& cone);

struct DDResult {
    std::vector<IVec> rays;      // canonical, sorted
    std::vector<IVec> lineality; // nonempty iff the cone is not pointed
};

// Incremental double description with combinatorial adjacency. Throws
// std::invalid_argument (with the lineality witness in DDResult form
// unavailable) only on internal errors; non-pointed input is reported via
// the lineality field.
DDResult extreme_rays(const HPolyhedron& h);

IVec canonical_ray(const QVec& v);
GhzDiagonal ray_to_state(const IVec& r);
IVec state_to_ray(const GhzDiagonal& g);

// <W, psi> up to the overall factor 2: sum w_a psi_a + sum w_z psi_z.
Rat slice_dot(const GhzDiagonal& w, const GhzDiagonal& psi);

// Extremality proof for a ray of a cone given the full extreme-ray list:
// either a witness hyperplane vanishing on the ray and strictly positive on
// every other extreme ray, or a conic decomposition into other rays.
struct ExtremeCheck {
    bool extreme = false;
    std::optional<GhzDiagonal> witness;  // extreme: the separating functional
    std::vector<std::pair<Rat, IVec>> decomposition;  // non-extreme
};
ExtremeCheck verify_extreme(const IVec& ray, const std::vector<IVec>& all_rays);

// Conic join: deduplicate generators, drop every generator expressible in
// the others (LP), leaving the extreme rays of the join.
std::vector<IVec> join_rays(std::vector<IVec> gens);

bool ray_sets_equal(std::vector<IVec> a, std::vector<IVec> b);

}  // namespace x3
