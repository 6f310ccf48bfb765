#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "x3ent/fixtures.hpp"

using namespace x3;

namespace {

HPolyhedron orthant(int dim) {
    HPolyhedron h;
    h.dim = dim;
    for (int i = 0; i < dim; ++i) {
        IVec e(dim, 0);
        e[i] = 1;
        h.ineqs.push_back(e);
    }
    return h;
}

}  // namespace

TEST_CASE("H-representations carry the PSD base") {
    HPolyhedron top = ghz_hrep({Shape::Top, Atom::A, false});
    CHECK(top.ineqs.size() == 16);  // 8 PSD + 8 S3 rows
    // 8 PSD rows; the two S1 expansions re-produce a_i >= +-z_i for their own
    // indices, leaving 4 fresh cross rows each
    HPolyhedron atom = ghz_hrep({Shape::Atom, Atom::A, false});
    CHECK(atom.ineqs.size() == 16);
    for (const IVec& q : atom.ineqs) CHECK(q.size() == 8);
    // deduplicated
    auto rows = atom.ineqs;
    std::sort(rows.begin(), rows.end());
    CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
}

TEST_CASE("orthant enumeration") {
    DDResult dd = extreme_rays(orthant(8));
    CHECK(dd.lineality.empty());
    REQUIRE(dd.rays.size() == 8);
    for (const IVec& r : dd.rays)
        CHECK(std::count(r.begin(), r.end(), 0) == 7);

    // redundant rows change nothing
    HPolyhedron h = orthant(8);
    h.ineqs.push_back(IVec(8, 1));
    CHECK(ray_sets_equal(extreme_rays(h).rays, dd.rays));
}

TEST_CASE("non-pointed input reports lineality") {
    HPolyhedron h = orthant(8);
    h.ineqs.resize(4);  // only a_1..a_4 >= 0; z coordinates unconstrained
    DDResult dd = extreme_rays(h);
    CHECK_FALSE(dd.lineality.empty());
}

TEST_CASE("canonical rays") {
    QVec v(8, 0);
    v[0] = Rat(1, 2);
    v[4] = Rat(-1, 2);
    IVec r = canonical_ray(v);
    QVec w(8, 0);
    w[0] = 3;
    w[4] = -3;
    CHECK(r == canonical_ray(w));
    Int g = 0;
    for (const Int& x : r) g = gcd(g, x);
    CHECK(g == 1);

    GhzDiagonal gd = ray_to_state(r);
    CHECK(state_to_ray(gd) == r);
    for (const RaySetFixture& fx : reference_ray_sets())
        for (const IVec& ray : fx.rays) CHECK(state_to_ray(ray_to_state(ray)) == ray);
}

TEST_CASE("slice pairing matches the full trace pairing") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        GhzDiagonal w, psi;
        for (int i = 0; i < 4; ++i) {
            w.a[i] = static_cast<long>(rng() % 5);
            w.z[i] = static_cast<long>(rng() % 7) - 3;
            psi.a[i] = static_cast<long>(rng() % 5);
            psi.z[i] = static_cast<long>(rng() % 7) - 3;
        }
        CHECK(Rat(2) * slice_dot(w, psi) == pair(w.as_witness(), psi.as_xstate()));
    }
}

TEST_CASE("reference sets re-enumerate and are insertion-order independent") {
    const auto& sets = reference_ray_sets();
    REQUIRE(sets.size() == 9);
    std::vector<size_t> counts;
    for (const RaySetFixture& fx : sets) counts.push_back(fx.rays.size());
    CHECK(counts == std::vector<size_t>{20, 28, 36, 84, 12, 20, 52, 20, 28});

    // cheap spot checks here; the verification suites re-run all nine
    for (int which : {0, 4, 8}) {
        HPolyhedron h = ghz_hrep(sets[which].cone);
        CHECK(ray_sets_equal(extreme_rays(h).rays, sets[which].rays));
        std::reverse(h.ineqs.begin(), h.ineqs.end());
        CHECK(ray_sets_equal(extreme_rays(h).rays, sets[which].rays));
    }
}

TEST_CASE("join of generators drops interior points") {
    const auto& atom = reference_ray_sets()[4];  // the 12 rays of A
    REQUIRE(atom.cone == ConeId{Shape::Atom, Atom::A, false});
    std::vector<IVec> gens = atom.rays;
    // throw in sums of pairs; the join must shed them
    QVec sum(8);
    for (int i = 0; i < 8; ++i)
        sum[i] = Rat(atom.rays[0][i]) + Rat(atom.rays[1][i]);
    gens.push_back(canonical_ray(sum));
    CHECK(ray_sets_equal(join_rays(gens), atom.rays));
    CHECK(ray_sets_equal(join_rays(atom.rays), atom.rays));  // idempotent
}

TEST_CASE("extremality verdicts on the atom cone") {
    const auto& atom = reference_ray_sets()[4];
    for (const IVec& r : atom.rays) {
        ExtremeCheck ec = verify_extreme(r, atom.rays);
        CHECK(ec.extreme);
        REQUIRE(ec.witness.has_value());
        CHECK(slice_dot(*ec.witness, ray_to_state(r)) == 0);
        for (const IVec& other : atom.rays)
            if (other != r) CHECK(slice_dot(*ec.witness, ray_to_state(other)) > 0);
    }
    QVec sum(8);
    for (int i = 0; i < 8; ++i)
        sum[i] = Rat(atom.rays[2][i]) + Rat(atom.rays[3][i]);
    ExtremeCheck ec = verify_extreme(canonical_ray(sum), atom.rays);
    CHECK_FALSE(ec.extreme);
    REQUIRE(ec.decomposition.size() >= 2);
    // the decomposition reassembles the point
    QVec back(8, 0);
    for (const auto& [coef, ray] : ec.decomposition)
        for (int i = 0; i < 8; ++i) back[i] += coef * Rat(ray[i]);
    QVec target(8);
    IVec cr = canonical_ray(sum);
    for (int i = 0; i < 8; ++i) target[i] = Rat(cr[i]);
    CHECK(back == target);
}
