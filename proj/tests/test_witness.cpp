#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "x3ent/fixtures.hpp"
#include "x3ent/witness.hpp"

using namespace x3;

namespace {

void check_certificate(const XState& x, const ConeId& cone, const CertifyResult& r) {
    REQUIRE(r.certificate.has_value());
    const Certificate& c = *r.certificate;
    CHECK(c.cone == cone);
    CHECK(c.witness_cone == dual_of(cone));
    CHECK(c.value < 0);
    CHECK(pair(c.witness, x) == c.value);
    CHECK(member(c.witness, c.witness_cone).holds);
    CHECK_FALSE(c.transcript.empty());
    for (const auto& e : c.transcript) CHECK(e.holds);
}

}  // namespace

TEST_CASE("member states get no certificate") {
    CertifyResult r = certify(rho1(), {Shape::Atom, Atom::A, false});
    CHECK(r.margin.holds);
    CHECK_FALSE(r.certificate.has_value());
    CHECK(certify(XState{}, {Shape::Bottom, Atom::A, false}).margin.holds);
}

TEST_CASE("rho1 against (A^B)v(A^C): frozen certificate") {
    ConeId cone{Shape::JoinOfMeets, Atom::A, false};
    CertifyResult r = certify(rho1(), cone);
    CHECK_FALSE(r.margin.holds);
    CHECK(r.margin.slack == RSum::of(-1));
    check_certificate(rho1(), cone, r);
    // deterministic simplex -> frozen witness value
    CHECK(r.certificate->value == Rat(-1, 2));
    CertifyResult again = certify(rho1(), cone);
    CHECK(again.certificate->witness == r.certificate->witness);
}

TEST_CASE("certificates across every cone for a far-outside state") {
    GhzDiagonal ghz{{1, 0, 0, 0}, {1, 0, 0, 0}};
    XState x = ghz.as_xstate();
    for (const ConeId& cone : cone_catalog()) {
        CertifyResult r = certify(x, cone);
        CHECK_FALSE(r.margin.holds);
        check_certificate(x, cone, r);
    }
}

TEST_CASE("irrational profile still yields a rational certificate") {
    // c = (sqrt2, sqrt2, sqrt2, 1), m = (4/3, 0, 0, 0): S1[1,4] fails
    XState x;
    x.a = {1, 1, 1, 1};
    x.b = {2, 2, 2, 1};
    x.z = {CRat(Rat(4, 3)), CRat(), CRat(), CRat()};
    REQUIRE(is_psd(x));
    ConeId cone{Shape::Atom, Atom::A, false};
    Margin m = member(x, cone);
    CHECK_FALSE(m.holds);
    CHECK(m.slack == RSum::of(Rat(-1, 3)));  // min(sqrt2, 1) - 4/3
    check_certificate(x, cone, certify(x, cone));
}

TEST_CASE("rank-deficient corners (one diagonal side zero)") {
    XState x;
    x.a = {0, 1, 1, 1};
    x.b = {1, 1, 1, 1};
    x.z = {CRat(), CRat(Rat(1)), CRat(), CRat()};
    REQUIRE(is_psd(x));  // a_2 b_2 = 1 = |z_2|^2
    ConeId bottom{Shape::Bottom, Atom::A, false};
    CHECK_FALSE(member(x, bottom).holds);  // S1[1,2]: min(0,1) < 1
    check_certificate(x, bottom, certify(x, bottom));

    XState y;  // mirrored: b-side zero
    y.a = {1, 1, 1, 1};
    y.b = {1, 0, 1, 1};
    y.z = {CRat(Rat(1)), {}, {}, {}};
    check_certificate(y, bottom, certify(y, bottom));
}

TEST_CASE("complex phases on the anti-diagonal") {
    XState x = rho1();
    x.z[0] = Rat(2) * CRat(Rat(3, 5), Rat(4, 5));  // same modulus, rotated
    ConeId cone{Shape::JoinOfMeets, Atom::A, false};
    Margin m = member(x, cone);
    CHECK(m.slack == RSum::of(-1));  // profile unchanged
    check_certificate(x, cone, certify(x, cone));
}

TEST_CASE("non-PSD input is rejected") {
    GhzDiagonal g{{1, 1, 1, 1}, {4, 0, 0, 0}};
    CHECK_THROWS_AS(certify(g.as_xstate(), {Shape::Top, Atom::A, false}),
                    std::domain_error);
}

TEST_CASE("implication engine basics") {
    // W1 on both cut-A pairs gives the full triangle bound W3
    std::vector<WitnessIneq> both{{WitnessIneq::W1, 2}, {WitnessIneq::W1, 3}};
    CHECK(implies(both, {WitnessIneq::W3}).implied);
    // but W3 alone cannot recover a two-index bound
    ImpliesResult r = implies({{WitnessIneq::W3}}, {WitnessIneq::W1, 2});
    CHECK_FALSE(r.implied);
    // the counterexample satisfies W3 and violates W1[1,4]
    ProfileQ p;
    for (int i = 0; i < 4; ++i) {
        p.c[i] = r.counterexample[i];
        p.m[i] = r.counterexample[4 + i];
    }
    auto mg = witness_margins(p);
    CHECK(mg.of({WitnessIneq::W3}) >= 0);
    CHECK(mg.of({WitnessIneq::W1, 2}) < 0);

    // part-wise: each W4b scalar part from one W1 plus one W4a
    CHECK(implies_part({{WitnessIneq::W1, 3}, {WitnessIneq::W4a, 1}},
                       {WitnessIneq::W4b, 0}, 0)
              .implied);
    CHECK(implies_part({{WitnessIneq::W1, 2}, {WitnessIneq::W4a, 4}},
                       {WitnessIneq::W4b, 0}, 1)
              .implied);
    // the swapped combination proves the other part, not this one
    CHECK_FALSE(implies_part({{WitnessIneq::W1, 2}, {WitnessIneq::W4a, 4}},
                             {WitnessIneq::W4b, 0}, 0)
                    .implied);
}

TEST_CASE("every fixture certificate re-verifies") {
    for (const ExtremeWitnessFixture& fx : extreme_witness_fixtures()) {
        // the fixture witness pairs nonnegatively with its whole cone's rays:
        // spot-check via the state itself (pairing exactly zero)
        CHECK(slice_dot(fx.witness, fx.state) == 0);
    }
}
