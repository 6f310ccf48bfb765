#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "x3ent/ineq.hpp"

using namespace x3;

namespace {

ProfileQ prof(std::array<Rat, 4> c, std::array<Rat, 4> m) {
    ProfileQ p;
    p.c = c;
    p.m = m;
    return p;
}

Rat dot8(const LinForm8& f, const ProfileQ& p) {
    Rat v = 0;
    for (int i = 0; i < 4; ++i) v += f[i] * p.c[i] + f[4 + i] * p.m[i];
    return v;
}

}  // namespace

TEST_CASE("pair bookkeeping") {
    for (int p = 0; p < kNumPairs; ++p) {
        auto [i, j] = pair_members(p);
        CHECK(pair_of(i, j) == p);
        CHECK(pair_of(j, i) == p);
        auto [k, l] = pair_members(complement_pair(p));
        CHECK(i + j + k + l == 0 + 1 + 2 + 3);
        CHECK(atom_of_pair(p) == atom_of_pair(complement_pair(p)));
    }
    CHECK(pairs_of_atom(Atom::A) == std::array<int, 2>{2, 3});  // {1,4} | {2,3}
    CHECK(pairs_of_atom(Atom::B) == std::array<int, 2>{1, 4});
    CHECK(pairs_of_atom(Atom::C) == std::array<int, 2>{0, 5});
    CHECK(pair_name(2) == "[1,4]");
    CHECK(pair_name(0) == "[1,2]");

    std::array<int, 4> swap23{0, 2, 1, 3};
    CHECK(map_pair(0, swap23) == 1);  // {1,2} -> {1,3}
    CHECK(map_pair(2, swap23) == 2);  // {1,4} fixed
    std::array<int, 4> id{0, 1, 2, 3};
    for (int p = 0; p < kNumPairs; ++p) CHECK(map_pair(p, id) == p);
}

TEST_CASE("state margins on the rho1 profile") {
    auto mg = state_margins(prof({2, 1, 1, 2}, {2, 0, 1, 0}));
    const int p14 = 2, p23 = 3, p12 = 0, p13 = 1;
    CHECK(mg.of({StateIneq::S1, p14}) == 0);   // min(2,2) - max(2,0)
    CHECK(mg.of({StateIneq::S1, p23}) == 0);   // min(1,1) - max(0,1)
    CHECK(mg.of({StateIneq::S1, p12}) == -1);  // min(2,1) - max(2,0)
    CHECK(mg.of({StateIneq::S4, p13, p23}) == -1);  // min(3,2) - max(3,1)
    CHECK(mg.of({StateIneq::S4, p13, p14}) == 0);
    CHECK(mg.of({StateIneq::S2, p14}) == 0);   // = S4[1,4|2,3]
    CHECK(mg.of({StateIneq::S2, p23}) == mg.of({StateIneq::S2, p14}));
    CHECK(mg.of({StateIneq::S3}) == 2);        // i=1: 1+1+2 - 2
}

TEST_CASE("witness margins on frozen profiles") {
    auto mg = witness_margins(prof({1, 1, 1, 1}, {1, 1, 1, 1}));
    for (int p = 0; p < kNumPairs; ++p) {
        CHECK(mg.of({WitnessIneq::W1, p}) == 0);
        CHECK(mg.of({WitnessIneq::W2, p}) == 2);   // 3 - 1
        CHECK(mg.of({WitnessIneq::W4a, p}) == 2);  // 1+1+2*1 - 2
        CHECK(mg.of({WitnessIneq::W4b, p}) == 2);  // 1+1+4 - (1+1+2)
    }
    CHECK(mg.of({WitnessIneq::W3}) == 0);

    // the frozen counterexample r=(0,1,1,0), u=(1,0,0,1)
    auto cx = witness_margins(prof({0, 1, 1, 0}, {1, 0, 0, 1}));
    CHECK(cx.of({WitnessIneq::W3}) == 0);
    CHECK(cx.of({WitnessIneq::W1, 2}) == -2);      // r1+r4 - u1-u4
    for (int p = 0; p < kNumPairs; ++p) CHECK(cx.of({WitnessIneq::W2, p}) >= 0);
}

TEST_CASE("linear forms expand the witness criteria") {
    CHECK(linear_forms({WitnessIneq::W3}).size() == 1);
    CHECK(linear_forms({WitnessIneq::W3})[0] ==
          LinForm8{1, 1, 1, 1, -1, -1, -1, -1});
    CHECK(linear_forms({WitnessIneq::W1, 0}).size() == 1);
    CHECK(linear_forms({WitnessIneq::W2, 0}).size() == 2);
    CHECK(linear_forms({WitnessIneq::W4a, 0}).size() == 2);  // min() split
    CHECK(linear_forms({WitnessIneq::W4b, 0}).size() == 2);  // max() split

    // min over the forms equals the cached margin, on random profiles
    std::mt19937_64 rng(7);
    std::vector<WitnessIneq> all{{WitnessIneq::W3}};
    for (int p = 0; p < kNumPairs; ++p)
        for (auto k : {WitnessIneq::W1, WitnessIneq::W2, WitnessIneq::W4a, WitnessIneq::W4b})
            all.push_back({k, p});
    for (int t = 0; t < 200; ++t) {
        ProfileQ p;
        for (int i = 0; i < 4; ++i) {
            p.c[i] = Rat(static_cast<long>(rng() % 9), static_cast<long>(1 + rng() % 3));
            p.m[i] = Rat(static_cast<long>(rng() % 9), static_cast<long>(1 + rng() % 3));
            p.c[i].canonicalize();
            p.m[i].canonicalize();
        }
        auto mg = witness_margins(p);
        for (const WitnessIneq& q : all) {
            Rat lo;
            bool first = true;
            for (const LinForm8& f : linear_forms(q)) {
                Rat v = dot8(f, p);
                if (first || v < lo) lo = v;
                first = false;
            }
            CHECK(mg.of(q) == lo);
        }
    }
}

TEST_CASE("GHZ-diagonal expansions match the criteria") {
    CHECK(ghz_psd_forms().size() == 8);
    CHECK(ghz_forms({StateIneq::S1, 2}).size() == 8);
    CHECK(ghz_forms({StateIneq::S3}).size() == 8);
    CHECK(ghz_forms({StateIneq::S2, 2}).size() == 16);
    CHECK(ghz_forms({StateIneq::S4, 1, 3}).size() == 16);

    std::vector<StateIneq> all{{StateIneq::S3}};
    for (int p = 0; p < kNumPairs; ++p) {
        all.push_back({StateIneq::S1, p});
        all.push_back({StateIneq::S2, p});
        for (int q = p + 1; q < kNumPairs; ++q) all.push_back({StateIneq::S4, p, q});
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        // PSD GHZ-diagonal point: |z_i| <= a_i, signs free
        ProfileQ gp;  // (a, z) in profile storage
        ProfileQ pr;  // (c, m) = (a, |z|)
        for (int i = 0; i < 4; ++i) {
            gp.c[i] = Rat(static_cast<long>(rng() % 7));
            gp.m[i] = Rat(static_cast<long>(rng() % 7)) - 3;
            if (abs(gp.m[i]) > gp.c[i]) gp.m[i] = (rng() % 2 ? gp.c[i] : -gp.c[i]);
            pr.c[i] = gp.c[i];
            pr.m[i] = abs(gp.m[i]);
        }
        auto mg = state_margins(pr);
        for (const StateIneq& q : all) {
            Rat lo;
            bool first = true;
            for (const LinForm8& f : ghz_forms(q)) {
                Rat v = dot8(f, gp);  // forms act on (a, z)
                if (first || v < lo) lo = v;
                first = false;
            }
            CHECK(mg.of(q) == lo);
        }
    }
}

TEST_CASE("ineq mapping under index permutations") {
    std::array<int, 4> swap23{0, 2, 1, 3};
    StateIneq s{StateIneq::S4, 0, 3};  // S4[{1,2}|{2,3}]
    StateIneq ms = map_ineq(s, swap23);
    CHECK(ms.kind == StateIneq::S4);
    CHECK(std::min(ms.p, ms.q) == 1);  // {1,3}
    CHECK(std::max(ms.p, ms.q) == 3);  // {2,3}
    CHECK(map_ineq(StateIneq{StateIneq::S3}, swap23).kind == StateIneq::S3);
    WitnessIneq w{WitnessIneq::W1, 0};
    CHECK(map_ineq(w, swap23).p == 1);
}

TEST_CASE("float tolerance scaling") {
    ProfileD p{};
    p.c = {1e6, 0, 0, 0};
    p.m = {0, 0, 0, 0};
    CHECK(float_scale(p) == doctest::Approx(1e6));
    ProfileD tiny{};
    CHECK(float_scale(tiny) == doctest::Approx(1.0));
    CHECK(float_eps() > 0);
}
