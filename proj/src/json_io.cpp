#include "x3ent/json_io.hpp"

#include <cmath>

namespace x3 {

namespace {

Rat num_from_json(const json& j, bool* float_seen) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    // LP64: long covers the full json integer range
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite number in input");
        if (float_seen) *float_seen = true;
        return Rat(v);  // exact binary value of the double
    }
    throw std::invalid_argument("expected a number or \"p/q\" string");
}

CRat cnum_from_json(const json& j, bool* float_seen) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
        return {num_from_json(j[0], float_seen), num_from_json(j[1], float_seen)};
    }
    return CRat(num_from_json(j, float_seen));
}

std::array<Rat, 4> vec4_from_json(const json& j, bool* float_seen, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(what) + " must be an array of 4 numbers");
    std::array<Rat, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = num_from_json(j[i], float_seen);
    return out;
}

std::array<CRat, 4> cvec4_from_json(const json& j, bool* float_seen, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(what) + " must be an array of 4 entries");
    std::array<CRat, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = cnum_from_json(j[i], float_seen);
    return out;
}

json num_to_json(const Rat& q) { return format_rat(q); }

json cnum_to_json(const CRat& z) {
    return json::array({num_to_json(z.re), num_to_json(z.im)});
}

XState from_dense_json(const json& j, bool* float_seen, bool* projected) {
    const json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 8)
        throw std::invalid_argument("matrix must be 8x8");
    Dense8 d{};
    for (int r = 0; r < 8; ++r) {
        if (!m[r].is_array() || m[r].size() != 8)
            throw std::invalid_argument("matrix must be 8x8");
        for (int c = 0; c < 8; ++c) d[r][c] = cnum_from_json(m[r][c], float_seen);
    }
    if (!is_selfadjoint(d)) throw std::invalid_argument("matrix is not self-adjoint");
    XState x = xpart(d);
    if (projected) *projected = !(to_dense(x) == d);
    return x;
}

}  // namespace

XState state_from_json(const json& j, bool* float_seen, bool* projected) {
    if (!j.is_object()) throw std::invalid_argument("state must be a JSON object");
    if (float_seen) *float_seen = false;
    if (projected) *projected = false;
    if (j.contains("matrix")) return from_dense_json(j, float_seen, projected);
    XState x;
    x.a = vec4_from_json(j.at("a"), float_seen, "a");
    x.b = vec4_from_json(j.at("b"), float_seen, "b");
    x.z = cvec4_from_json(j.at("z"), float_seen, "z");
    return x;
}

json state_to_json(const XState& x) {
    json j;
    for (int i = 0; i < 4; ++i) {
        j["a"].push_back(num_to_json(x.a[i]));
        j["b"].push_back(num_to_json(x.b[i]));
        j["z"].push_back(cnum_to_json(x.z[i]));
    }
    return j;
}

WitnessX witness_from_json(const json& j, bool* float_seen) {
    if (!j.is_object()) throw std::invalid_argument("witness must be a JSON object");
    if (float_seen) *float_seen = false;
    WitnessX w;
    w.s = vec4_from_json(j.at("s"), float_seen, "s");
    w.t = vec4_from_json(j.at("t"), float_seen, "t");
    w.u = cvec4_from_json(j.at("u"), float_seen, "u");
    return w;
}

json witness_to_json(const WitnessX& w) {
    json j;
    for (int i = 0; i < 4; ++i) {
        j["s"].push_back(num_to_json(w.s[i]));
        j["t"].push_back(num_to_json(w.t[i]));
        j["u"].push_back(cnum_to_json(w.u[i]));
    }
    return j;
}

json ghz_to_json(const GhzDiagonal& g) {
    json j;
    for (int i = 0; i < 4; ++i) {
        j["a"].push_back(num_to_json(g.a[i]));
        j["z"].push_back(num_to_json(g.z[i]));
    }
    return j;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["cone"] = cone_name(c.cone);
    j["witness_cone"] = cone_name(c.witness_cone);
    j["witness"] = witness_to_json(c.witness);
    j["pairing"] = num_to_json(c.value);
    j["pairing_approx"] = to_double(c.value);
    j["transcript"] = json::array();
    for (const auto& e : c.transcript)
        j["transcript"].push_back(
            {{"criterion", e.criterion}, {"holds", e.holds}, {"slack", e.slack}});
    return j;
}

json lattice_profile_to_json(const LatticeProfile& p) {
    json j;
    j["psd"] = p.psd;
    j["mode"] = p.exact ? "exact" : "float";
    j["cones"] = json::array();
    const auto& cat = cone_catalog();
    for (size_t i = 0; i < cat.size(); ++i) {
        json c;
        c["name"] = cone_name(cat[i]);
        c["member"] = p.margins[i].holds;
        c["slack"] = p.margins[i].slack;
        c["tightest"] = p.margins[i].tightest;
        if (p.exact) c["slack_sign"] = p.exact_signs[i];
        j["cones"].push_back(c);
    }
    for (int i : p.minimal_members) j["minimal_members"].push_back(cone_name(cat[i]));
    if (j.find("minimal_members") == j.end()) j["minimal_members"] = json::array();
    return j;
}

}  // namespace x3
