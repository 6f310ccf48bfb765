#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "x3ent/fixtures.hpp"

using namespace x3;

namespace {

XState xstate(std::array<Rat, 4> a, std::array<Rat, 4> b, std::array<CRat, 4> z) {
    XState x;
    x.a = a;
    x.b = b;
    x.z = z;
    return x;
}

}  // namespace

TEST_CASE("dense embedding round-trips") {
    XState x = rho1();
    Dense8 d = to_dense(x);
    CHECK(is_selfadjoint(d));
    CHECK(xpart(d) == x);
    // slot layout: a_i on diagonal entries 0..3, b_i mirrored on 4..7,
    // z_i on the upper anti-diagonal
    CHECK(d[0][0] == CRat(Rat(2)));
    CHECK(d[4][4] == CRat(Rat(2)));  // b_4
    CHECK(d[7][7] == CRat(Rat(2)));  // b_1
    CHECK(d[0][7] == CRat(Rat(2)));  // z_1
    CHECK(d[7][0] == CRat(Rat(2)));  // conj(z_1)
    CHECK(d[2][5] == CRat(Rat(1)));  // z_3
}

TEST_CASE("pairing agrees with the dense trace form") {
    XState x = rho1();
    WitnessX w;
    w.s = {Rat(0), Rat(1, 4), Rat(1, 4), Rat(0)};
    w.t = {Rat(0), Rat(1, 4), Rat(1, 4), Rat(0)};
    w.u = {CRat(Rat(-1, 4)), CRat(Rat(0)), CRat(Rat(-1, 4)), CRat(Rat(0))};
    CHECK(pair(w, x) == Rat(-1, 2));
    CHECK(dense_pair(to_dense(w.as_xstate()), to_dense(x)) == Rat(-1, 2));

    XState y = rho2();
    CHECK(pair(x, y) == dense_pair(to_dense(x), to_dense(y)));
    // transpose (not adjoint) pairing: anti-diagonal entries enter as
    // 2 Re(z z'), so equal phases i and i cancel the diagonal part
    XState c1 = xstate({1, 0, 0, 0}, {1, 0, 0, 0}, {CRat(Rat(0), Rat(1)), {}, {}, {}});
    XState c2 = xstate({1, 0, 0, 0}, {1, 0, 0, 0}, {CRat(Rat(0), Rat(1)), {}, {}, {}});
    CHECK(pair(c1, c2) == 0);  // 1 + 1 + 2*Re(i * i)
    XState c3 = xstate({1, 0, 0, 0}, {1, 0, 0, 0}, {CRat(Rat(0), Rat(-1)), {}, {}, {}});
    CHECK(pair(c1, c3) == 4);  // opposite phases reinforce
    CHECK(pair(c1, c2) == dense_pair(to_dense(c1), to_dense(c2)));
    CHECK(pair(c1, c3) == dense_pair(to_dense(c1), to_dense(c3)));
}

TEST_CASE("positive semidefiniteness on the 2x2 blocks") {
    CHECK(is_psd(rho1()));
    CHECK(is_psd(rho2()));
    CHECK(is_psd(XState{}));
    CHECK_FALSE(is_psd(xstate({1, 1, 1, 1}, {1, 1, 1, 1}, {CRat(Rat(2)), {}, {}, {}})));
    CHECK_FALSE(is_psd(xstate({-1, 0, 0, 0}, {0, 0, 0, 0}, {})));
    CHECK_FALSE(is_psd(xstate({0, 0, 0, 0}, {0, -1, 0, 0}, {})));
    // boundary: a_i b_i = |z_i|^2
    CHECK(is_psd(xstate({1, 0, 0, 0}, {4, 0, 0, 0}, {CRat(Rat(2)), {}, {}, {}})));
    CHECK(is_psd(xstate({1, 0, 0, 0}, {1, 0, 0, 0},
                        {CRat(Rat(3, 5), Rat(4, 5)), {}, {}, {}})));
}

TEST_CASE("profiles: exact, rational fast path, approximate") {
    Profile p = profile(rho1());
    for (int i = 0; i < 4; ++i) {
        CHECK(p.c[i].is_rational());
        CHECK(p.m[i].is_rational());
    }
    auto q = rational_profile(p);
    REQUIRE(q.has_value());
    CHECK(q->c == std::array<Rat, 4>{2, 1, 1, 2});
    CHECK(q->m == std::array<Rat, 4>{2, 0, 1, 0});

    // c_1 = sqrt(2) has no rational view
    XState irr = xstate({1, 1, 1, 1}, {2, 1, 1, 1}, {});
    Profile pi = profile(irr);
    CHECK(pi.c[0] == RSum::sqrt(2));
    CHECK_FALSE(rational_profile(pi).has_value());
    ProfileD pd = approx_profile(irr);
    CHECK(pd.c[0] == doctest::Approx(1.41421356237));

    // |z| of a non-unit complex entry
    XState zc = xstate({25, 0, 0, 0}, {1, 0, 0, 0}, {CRat(Rat(3), Rat(4)), {}, {}, {}});
    auto qz = rational_profile(profile(zc));
    REQUIRE(qz.has_value());
    CHECK(qz->c[0] == 5);
    CHECK(qz->m[0] == 5);

    CHECK_THROWS(profile(xstate({-1, 0, 0, 0}, {0, 0, 0, 0}, {})));
}

TEST_CASE("party operations form the full group of 48") {
    auto grp = party_group();
    CHECK(grp.size() == 48);
    CHECK(party_permutations().size() == 6);
    PartyOp id;
    for (const PartyOp& op : grp) {
        PartyOp inv = inverse(op);
        CHECK(compose(op, inv) == id);
        CHECK(compose(inv, op) == id);
        // basis_map of the composition is the composition of basis_maps
        auto bm = basis_map(op), bi = basis_map(inv);
        for (int k = 0; k < 8; ++k) CHECK(bm[bi[k]] == k);
    }
}

TEST_CASE("party action: dense conjugation vs X-entry formulas") {
    XState samples[] = {
        rho1(), rho2(),
        xstate({1, 2, 3, 4}, {5, 6, 7, 8},
               {CRat(Rat(1), Rat(2)), CRat(Rat(-1)), CRat(Rat(0), Rat(3)), CRat(Rat(2, 3))}),
    };
    for (const XState& x : samples)
        for (const PartyOp& op : party_group()) {
            XState fast = party_action(x, op);
            CHECK(fast == xpart(dense_party_action(to_dense(x), op)));
            CHECK(is_psd(fast) == is_psd(x));
        }
    // group action law on states
    XState x = samples[2];
    for (const PartyOp& f : party_permutations())
        for (const PartyOp& g : party_permutations())
            CHECK(party_action(party_action(x, g), f) == party_action(x, compose(f, g)));
}

TEST_CASE("GHZ-diagonal elements embed consistently") {
    GhzDiagonal g;
    g.a = {Rat(1), Rat(2), Rat(0), Rat(1)};
    g.z = {Rat(1), Rat(-2), Rat(0), Rat(0)};
    XState x = g.as_xstate();
    CHECK(x.a == x.b);
    CHECK(x.z[1] == CRat(Rat(-2)));
    CHECK(is_psd(x));
    WitnessX w = g.as_witness();
    CHECK(w.as_xstate() == x);
    auto q = rational_profile(profile(x));
    REQUIRE(q.has_value());
    CHECK(q->c == g.a);
    CHECK(q->m == std::array<Rat, 4>{1, 2, 0, 0});
}
