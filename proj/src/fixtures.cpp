#include "x3ent/fixtures.hpp"

#include <algorithm>

namespace x3 {

namespace {

XState make_ghz_like(std::array<int, 4> a, std::array<int, 4> b, std::array<int, 4> z) {
    XState x;
    for (int i = 0; i < 4; ++i) {
        x.a[i] = a[i];
        x.b[i] = b[i];
        x.z[i] = CRat(Rat(z[i]));
    }
    return x;
}

// all sign choices on the nonzero anti-diagonal entries
void expand_pattern(std::array<int, 4> a, std::array<int, 4> z, std::vector<IVec>& out) {
    std::vector<int> nz;
    for (int i = 0; i < 4; ++i)
        if (z[i] != 0) nz.push_back(i);
    for (int mask = 0; mask < (1 << nz.size()); ++mask) {
        QVec v(8);
        for (int i = 0; i < 4; ++i) v[i] = a[i];
        for (int i = 0; i < 4; ++i) v[4 + i] = z[i];
        for (size_t k = 0; k < nz.size(); ++k)
            if (mask & (1 << k)) v[4 + nz[k]] = -v[4 + nz[k]];
        out.push_back(canonical_ray(v));
    }
}

void finish(std::vector<IVec>& rays) {
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

GhzDiagonal ghz(std::array<int, 4> a, std::array<int, 4> z) {
    GhzDiagonal g;
    for (int i = 0; i < 4; ++i) {
        g.a[i] = a[i];
        g.z[i] = z[i];
    }
    return g;
}

}  // namespace

XState rho1() { return make_ghz_like({2, 1, 1, 2}, {2, 1, 1, 2}, {2, 0, 1, 0}); }
XState rho2() { return make_ghz_like({2, 1, 1, 2}, {2, 1, 1, 2}, {2, 1, 0, 0}); }

const std::vector<RaySetFixture>& reference_ray_sets() {
    static const std::vector<RaySetFixture> sets = [] {
        std::vector<RaySetFixture> out;
        auto add = [&](ConeId id, std::vector<IVec> rays) {
            finish(rays);
            out.push_back({id, std::move(rays)});
        };
        using P = std::array<int, 4>;
        std::vector<IVec> rays;

        // chain from the bottom cone up to A^(BvC); candidate sets accumulate
        for (int i = 0; i < 4; ++i) {
            P a{};
            a[i] = 1;
            expand_pattern(a, {0, 0, 0, 0}, rays);
        }
        expand_pattern({1, 1, 1, 1}, {1, 1, 1, 1}, rays);
        add({Shape::Bottom, Atom::A, false}, rays);  // 20

        expand_pattern({1, 0, 1, 1}, {1, 0, 0, 0}, rays);
        expand_pattern({0, 1, 1, 1}, {0, 1, 0, 0}, rays);
        expand_pattern({1, 1, 1, 0}, {0, 0, 1, 0}, rays);
        expand_pattern({1, 1, 0, 1}, {0, 0, 0, 1}, rays);
        add({Shape::Meet2, Atom::C, false}, rays);  // A^B, 28

        expand_pattern({1, 1, 0, 1}, {1, 0, 0, 0}, rays);
        expand_pattern({0, 1, 1, 1}, {0, 0, 1, 0}, rays);
        expand_pattern({1, 1, 1, 0}, {0, 1, 0, 0}, rays);
        expand_pattern({1, 0, 1, 1}, {0, 0, 0, 1}, rays);
        add({Shape::JoinOfMeets, Atom::A, false}, rays);  // 36

        expand_pattern({1, 2, 0, 1}, {1, 0, 0, 1}, rays);
        expand_pattern({1, 0, 2, 1}, {1, 0, 0, 1}, rays);
        expand_pattern({2, 1, 1, 0}, {0, 1, 1, 0}, rays);
        expand_pattern({0, 1, 1, 2}, {0, 1, 1, 0}, rays);
        expand_pattern({1, 2, 2, 1}, {1, 2, 0, 1}, rays);
        expand_pattern({1, 2, 2, 1}, {1, 0, 2, 1}, rays);
        expand_pattern({2, 1, 1, 2}, {2, 1, 1, 0}, rays);
        expand_pattern({2, 1, 1, 2}, {0, 1, 1, 2}, rays);
        add({Shape::MeetAtomJoin, Atom::A, false}, rays);  // 84

        // chain from A up to (AvB)^(AvC)
        rays.clear();
        for (int i = 0; i < 4; ++i) {
            P a{};
            a[i] = 1;
            expand_pattern(a, {0, 0, 0, 0}, rays);
        }
        expand_pattern({1, 0, 0, 1}, {1, 0, 0, 1}, rays);
        expand_pattern({0, 1, 1, 0}, {0, 1, 1, 0}, rays);
        add({Shape::Atom, Atom::A, false}, rays);  // 12

        expand_pattern({1, 1, 1, 0}, {1, 0, 0, 0}, rays);
        expand_pattern({0, 1, 1, 1}, {0, 0, 0, 1}, rays);
        expand_pattern({1, 1, 0, 1}, {0, 1, 0, 0}, rays);
        expand_pattern({1, 0, 1, 1}, {0, 0, 1, 0}, rays);
        add({Shape::JoinAtomMeet, Atom::A, false}, rays);  // 20

        expand_pattern({1, 1, 2, 0}, {1, 1, 0, 0}, rays);
        expand_pattern({1, 2, 1, 0}, {1, 0, 1, 0}, rays);
        expand_pattern({2, 1, 0, 1}, {0, 1, 0, 1}, rays);
        expand_pattern({2, 0, 1, 1}, {0, 0, 1, 1}, rays);
        expand_pattern({1, 1, 0, 2}, {1, 1, 0, 0}, rays);
        expand_pattern({1, 0, 1, 2}, {1, 0, 1, 0}, rays);
        expand_pattern({0, 1, 2, 1}, {0, 1, 0, 1}, rays);
        expand_pattern({0, 2, 1, 1}, {0, 0, 1, 1}, rays);
        add({Shape::MeetOfJoins, Atom::A, false}, rays);  // 52

        // chain from AvB to the top
        rays.clear();
        for (int i = 0; i < 4; ++i) {
            P a{};
            a[i] = 1;
            expand_pattern(a, {0, 0, 0, 0}, rays);
        }
        expand_pattern({1, 0, 0, 1}, {1, 0, 0, 1}, rays);
        expand_pattern({0, 1, 1, 0}, {0, 1, 1, 0}, rays);
        expand_pattern({1, 0, 1, 0}, {1, 0, 1, 0}, rays);
        expand_pattern({0, 1, 0, 1}, {0, 1, 0, 1}, rays);
        add({Shape::Join2, Atom::C, false}, rays);  // AvB, 20

        expand_pattern({1, 1, 0, 0}, {1, 1, 0, 0}, rays);
        expand_pattern({0, 0, 1, 1}, {0, 0, 1, 1}, rays);
        add({Shape::Top, Atom::A, false}, rays);  // 28

        return out;
    }();
    return sets;
}

const std::vector<ExtremeWitnessFixture>& extreme_witness_fixtures() {
    static const std::vector<ExtremeWitnessFixture> fx = [] {
        std::vector<ExtremeWitnessFixture> out;
        const ConeId maj{Shape::MeetAtomJoin, Atom::A, false};
        const ConeId moj{Shape::MeetOfJoins, Atom::A, false};
        out.push_back({maj, ghz({1, 0, 0, 0}, {0, 0, 0, 0}), ghz({0, 1, 1, 1}, {0, 0, 0, 0})});
        out.push_back({maj, ghz({1, 1, 1, 1}, {1, 1, 1, 1}), ghz({1, 1, 1, 1}, {-1, -1, -1, -1})});
        out.push_back({maj, ghz({1, 0, 1, 1}, {1, 0, 0, 0}), ghz({1, 3, 1, 1}, {-3, 0, 0, 0})});
        out.push_back({maj, ghz({1, 1, 0, 1}, {1, 0, 0, 0}), ghz({1, 1, 3, 1}, {-3, 0, 0, 0})});
        out.push_back({maj, ghz({1, 2, 0, 1}, {1, 0, 0, 1}), ghz({1, 1, 2, 1}, {-2, 0, 0, -2})});
        out.push_back({maj, ghz({1, 2, 2, 1}, {1, 2, 0, 1}), ghz({2, 1, 1, 2}, {-1, -3, 0, -1})});
        out.push_back({moj, ghz({1, 0, 0, 1}, {1, 0, 0, 1}), ghz({1, 1, 1, 1}, {-1, 0, 0, -1})});
        out.push_back({moj, ghz({1, 1, 1, 0}, {1, 0, 0, 0}), ghz({1, 1, 1, 3}, {-3, 0, 0, 0})});
        out.push_back({moj, ghz({1, 1, 2, 0}, {1, 1, 0, 0}), ghz({1, 5, 1, 3}, {-3, -5, 0, 0})});
        return out;
    }();
    return fx;
}

const std::vector<ImplicationFixture>& implication_fixtures() {
    static const std::vector<ImplicationFixture> fx = [] {
        std::vector<ImplicationFixture> out;
        const int p12 = 0, p13 = 1, p14 = 2, p23 = 3, p24 = 4, p34 = 5;
        const std::vector<WitnessIneq> both_w1{{WitnessIneq::W1, p14},
                                               {WitnessIneq::W1, p23}};
        auto imp = [&](std::vector<WitnessIneq> as, WitnessIneq cl, int part) {
            ImplicationFixture f;
            f.assumed = std::move(as);
            f.claimed = cl;
            f.part = part;
            f.expected = true;
            out.push_back(f);
        };
        imp(both_w1, {WitnessIneq::W3}, -1);
        for (int p : {p12, p13, p24, p34}) imp(both_w1, {WitnessIneq::W2, p}, -1);
        for (int p : {p14, p23}) {
            imp(both_w1, {WitnessIneq::W4a, p}, -1);
            imp(both_w1, {WitnessIneq::W4b, p}, -1);
        }
        // one short-pair bound and one padded bound combine into half of a
        // doubled bound
        imp({{WitnessIneq::W1, p23}, {WitnessIneq::W4a, p13}}, {WitnessIneq::W4b, p12}, 0);
        imp({{WitnessIneq::W1, p14}, {WitnessIneq::W4a, p24}}, {WitnessIneq::W4b, p12}, 1);

        auto nimp = [&](std::vector<WitnessIneq> as, WitnessIneq cl,
                        std::array<int, 8> cex) {
            ImplicationFixture f;
            f.assumed = std::move(as);
            f.claimed = cl;
            f.part = -1;
            f.expected = false;
            for (int i = 0; i < 8; ++i) f.counterexample[i] = cex[i];
            out.push_back(f);
        };
        nimp({{WitnessIneq::W3}}, {WitnessIneq::W1, p14}, {0, 1, 1, 0, 1, 0, 0, 1});
        nimp({{WitnessIneq::W3}}, {WitnessIneq::W2, p14}, {0, 0, 0, 1, 1, 0, 0, 0});
        {
            std::vector<WitnessIneq> as{{WitnessIneq::W3}};
            for (int p = 0; p < kNumPairs; ++p) as.push_back({WitnessIneq::W2, p});
            nimp(as, {WitnessIneq::W1, p14}, {0, 1, 1, 0, 1, 0, 0, 1});
        }
        return out;
    }();
    return fx;
}

}  // namespace x3
