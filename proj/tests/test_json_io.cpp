#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "x3ent/fixtures.hpp"
#include "x3ent/json_io.hpp"

using namespace x3;

TEST_CASE("X-form state round trip") {
    bool float_seen = true;
    XState x = rho1();
    XState back = state_from_json(state_to_json(x), &float_seen);
    CHECK(back == x);
    CHECK_FALSE(float_seen);  // serialized as exact strings
}

TEST_CASE("number formats") {
    bool float_seen = false;
    json j = {{"a", {1, "1/3", 0.5, 2}},
              {"b", {1, 1, 1, 1}},
              {"z", {0, json::array({"1/2", "-1/2"}), 0, 0}}};
    XState x = state_from_json(j, &float_seen);
    CHECK(float_seen);  // the 0.5
    CHECK(x.a[1] == Rat(1, 3));
    CHECK(x.a[2] == Rat(1, 2));  // exact binary double
    CHECK(x.z[1] == CRat(Rat(1, 2), Rat(-1, 2)));

    float_seen = false;
    json exact = {{"a", {1, "1/3", "0.5", 2}}, {"b", {1, 1, 1, 1}}, {"z", {0, 0, 0, 0}}};
    state_from_json(exact, &float_seen);
    CHECK_FALSE(float_seen);  // decimal strings stay exact
}

TEST_CASE("dense matrices, including the necessary-only projection") {
    XState x = rho2();
    Dense8 d = to_dense(x);
    auto matrix_json = [](const Dense8& m) {
        json rows = json::array();
        for (int r = 0; r < 8; ++r) {
            json row = json::array();
            for (int c = 0; c < 8; ++c)
                row.push_back(json::array({format_rat(m[r][c].re), format_rat(m[r][c].im)}));
            rows.push_back(row);
        }
        return json{{"matrix", rows}};
    };
    bool float_seen = false, projected = true;
    XState back = state_from_json(matrix_json(d), &float_seen, &projected);
    CHECK(back == x);
    CHECK_FALSE(projected);

    // an off-X entry is discarded but flagged
    Dense8 noisy = d;
    noisy[0][1] = CRat(Rat(1), Rat(2));
    noisy[1][0] = noisy[0][1].conj();
    back = state_from_json(matrix_json(noisy), &float_seen, &projected);
    CHECK(back == x);
    CHECK(projected);

    Dense8 bad = d;
    bad[0][7] = CRat(Rat(1), Rat(1));  // breaks self-adjointness vs bad[7][0]
    CHECK_THROWS_AS(state_from_json(matrix_json(bad), &float_seen), std::invalid_argument);
}

TEST_CASE("malformed inputs") {
    bool fs = false;
    CHECK_THROWS_AS(state_from_json(json::array(), &fs), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(json{{"a", {1, 2, 3, 4}}, {"z", {0, 0, 0, 0}}}, &fs),
                    json::exception);  // missing b
    CHECK_THROWS_AS(
        state_from_json(json{{"a", {1, 2, 3}}, {"b", {1, 2, 3, 4}}, {"z", {0, 0, 0, 0}}}, &fs),
        std::invalid_argument);
    CHECK_THROWS_AS(
        state_from_json(json{{"a", {1, 2, 3, "x"}}, {"b", {1, 1, 1, 1}}, {"z", {0, 0, 0, 0}}},
                        &fs),
        std::invalid_argument);
    json nan_state = {{"a", {1, 1, 1, 1}}, {"b", {1, 1, 1, 1}}, {"z", {0, 0, 0, 0}}};
    nan_state["a"][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS(state_from_json(nan_state, &fs));
}

TEST_CASE("witness round trip") {
    bool fs = false;
    WitnessX w;
    w.s = {Rat(1), Rat(0), Rat(1, 3), Rat(2)};
    w.t = {Rat(1), Rat(2), Rat(3), Rat(0)};
    w.u = {CRat(Rat(-1, 4)), CRat(Rat(0), Rat(1)), {}, {}};
    CHECK(witness_from_json(witness_to_json(w), &fs) == w);
}

TEST_CASE("certificate serialization") {
    CertifyResult r = certify(rho1(), {Shape::JoinOfMeets, Atom::A, false});
    REQUIRE(r.certificate.has_value());
    json j = certificate_to_json(*r.certificate);
    CHECK(j["cone"] == "(A^B)v(A^C)");
    CHECK(j["witness_cone"] == "(A*vB*)^(A*vC*)");
    CHECK(j["pairing"] == "-1/2");
    CHECK(j["pairing_approx"].get<double>() == doctest::Approx(-0.5));
    bool fs = false;
    CHECK(witness_from_json(j["witness"], &fs) == r.certificate->witness);
    CHECK_FALSE(j["transcript"].empty());
}

TEST_CASE("lattice profile serialization") {
    LatticeProfile p = lattice_profile(rho1(), true);
    json j = lattice_profile_to_json(p);
    CHECK(j["psd"] == true);
    CHECK(j["mode"] == "exact");
    REQUIRE(j["cones"].size() == 23);
    const auto& cat = cone_catalog();
    for (size_t i = 0; i < cat.size(); ++i) {
        CHECK(j["cones"][i]["name"] == cone_name(cat[i]));
        CHECK(j["cones"][i]["member"] == p.margins[i].holds);
    }
    std::vector<std::string> mins = j["minimal_members"];
    CHECK(mins == std::vector<std::string>{"A^(BvC)", "Bv(A^C)"});
}
