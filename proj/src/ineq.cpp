#include "x3ent/ineq.hpp"

#include <algorithm>
#include <cstdlib>

namespace x3 {

int pair_of(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int p = 0; p < kNumPairs; ++p)
        if (pair_members(p) == std::array<int, 2>{i, j}) return p;
    throw std::invalid_argument("pair_of: bad indices");
}

std::string pair_name(int p) {
    auto [i, j] = pair_members(p);
    return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

int map_pair(int p, const std::array<int, 4>& idx_perm) {
    auto [i, j] = pair_members(p);
    return pair_of(idx_perm[i], idx_perm[j]);
}

std::string to_string(const StateIneq& q) {
    switch (q.kind) {
        case StateIneq::S1: return "S1" + pair_name(q.p);
        case StateIneq::S2: return "S2" + pair_name(q.p);
        case StateIneq::S3: return "S3";
        default: {
            auto [i, j] = pair_members(q.p);
            auto [k, l] = pair_members(q.q);
            return "S4[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "|" +
                   std::to_string(k + 1) + "," + std::to_string(l + 1) + "]";
        }
    }
}

std::string to_string(const WitnessIneq& q) {
    switch (q.kind) {
        case WitnessIneq::W1: return "W1" + pair_name(q.p);
        case WitnessIneq::W2: return "W2" + pair_name(q.p);
        case WitnessIneq::W3: return "W3";
        case WitnessIneq::W4a: return "W4a" + pair_name(q.p);
        default: return "W4b" + pair_name(q.p);
    }
}

StateIneq map_ineq(const StateIneq& q, const std::array<int, 4>& idx_perm) {
    StateIneq out = q;
    if (q.kind != StateIneq::S3) out.p = map_pair(q.p, idx_perm);
    if (q.kind == StateIneq::S4) out.q = map_pair(q.q, idx_perm);
    return out;
}

WitnessIneq map_ineq(const WitnessIneq& q, const std::array<int, 4>& idx_perm) {
    WitnessIneq out = q;
    if (q.kind != WitnessIneq::W3) out.p = map_pair(q.p, idx_perm);
    return out;
}

template <class S>
StateMargins<S> state_margins(const ProfileT<S>& pr) {
    auto mn = [](const S& x, const S& y) -> const S& { return y < x ? y : x; };
    auto mx = [](const S& x, const S& y) -> const S& { return x < y ? y : x; };
    StateMargins<S> out;
    std::array<S, kNumPairs> cs, ms;
    for (int p = 0; p < kNumPairs; ++p) {
        auto [i, j] = pair_members(p);
        cs[p] = pr.c[i] + pr.c[j];
        ms[p] = pr.m[i] + pr.m[j];
        out.s1[p] = mn(pr.c[i], pr.c[j]) - mx(pr.m[i], pr.m[j]);
    }
    for (int p = 0; p < kNumPairs; ++p)
        for (int q = p + 1; q < kNumPairs; ++q)
            out.s4[p][q] = mn(cs[p], cs[q]) - mx(ms[p], ms[q]);
    S csum = pr.c[0] + pr.c[1] + pr.c[2] + pr.c[3];
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        S v = csum - pr.c[i] - pr.m[i];
        if (first || v < out.s3) out.s3 = v;
        first = false;
    }
    return out;
}

template <class S>
WitnessMargins<S> witness_margins(const ProfileT<S>& pr) {
    auto mn = [](const S& x, const S& y) -> const S& { return y < x ? y : x; };
    auto mx = [](const S& x, const S& y) -> const S& { return x < y ? y : x; };
    WitnessMargins<S> out;
    const auto& r = pr.c;
    const auto& u = pr.m;
    S rsum = r[0] + r[1] + r[2] + r[3];
    S usum = u[0] + u[1] + u[2] + u[3];
    out.w3 = rsum - usum;
    for (int p = 0; p < kNumPairs; ++p) {
        auto [i, j] = pair_members(p);
        auto [k, l] = pair_members(complement_pair(p));
        out.w1[p] = r[i] + r[j] - u[i] - u[j];
        out.w2[p] = mn(rsum - r[j] - u[i], rsum - r[i] - u[j]);
        out.w4a[p] = r[i] + r[j] + Rat(2) * mn(r[k], r[l]) - u[i] - u[j];
        out.w4b[p] = r[i] + r[j] + Rat(2) * (r[k] + r[l]) - u[i] - u[j] -
                     Rat(2) * mx(u[k], u[l]);
    }
    return out;
}

// double specializations: Rat(2) * double does not compile, so provide
// arithmetic-friendly variants via overload.
template <>
WitnessMargins<double> witness_margins(const ProfileT<double>& pr) {
    WitnessMargins<double> out;
    const auto& r = pr.c;
    const auto& u = pr.m;
    double rsum = r[0] + r[1] + r[2] + r[3];
    double usum = u[0] + u[1] + u[2] + u[3];
    out.w3 = rsum - usum;
    for (int p = 0; p < kNumPairs; ++p) {
        auto [i, j] = pair_members(p);
        auto [k, l] = pair_members(complement_pair(p));
        out.w1[p] = r[i] + r[j] - u[i] - u[j];
        out.w2[p] = std::min(rsum - r[j] - u[i], rsum - r[i] - u[j]);
        out.w4a[p] = r[i] + r[j] + 2 * std::min(r[k], r[l]) - u[i] - u[j];
        out.w4b[p] = r[i] + r[j] + 2 * (r[k] + r[l]) - u[i] - u[j] -
                     2 * std::max(u[k], u[l]);
    }
    return out;
}

template StateMargins<RSum> state_margins(const ProfileT<RSum>&);
template StateMargins<Rat> state_margins(const ProfileT<Rat>&);
template StateMargins<double> state_margins(const ProfileT<double>&);
template WitnessMargins<RSum> witness_margins(const ProfileT<RSum>&);
template WitnessMargins<Rat> witness_margins(const ProfileT<Rat>&);

double float_eps() {
    if (const char* env = std::getenv("X3ENT_PRECISION")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-9;
}

double float_scale(const ProfileD& pr) {
    double cs = pr.c[0] + pr.c[1] + pr.c[2] + pr.c[3];
    double ms = pr.m[0] + pr.m[1] + pr.m[2] + pr.m[3];
    return std::max({cs, ms, 1.0});
}

std::vector<LinForm8> linear_forms(const WitnessIneq& q) {
    std::vector<LinForm8> out;
    auto form = [] { return LinForm8{}; };
    if (q.kind == WitnessIneq::W3) {
        auto f = form();
        for (int i = 0; i < 4; ++i) {
            f[i] = 1;
            f[4 + i] = -1;
        }
        out.push_back(f);
        return out;
    }
    auto [i, j] = pair_members(q.p);
    auto [k, l] = pair_members(complement_pair(q.p));
    switch (q.kind) {
        case WitnessIneq::W1: {
            auto f = form();
            f[i] = f[j] = 1;
            f[4 + i] = f[4 + j] = -1;
            out.push_back(f);
            break;
        }
        case WitnessIneq::W2: {
            auto f = form();
            f[i] = f[k] = f[l] = 1;
            f[4 + i] = -1;
            out.push_back(f);
            f = form();
            f[j] = f[k] = f[l] = 1;
            f[4 + j] = -1;
            out.push_back(f);
            break;
        }
        case WitnessIneq::W4a: {
            for (int m : {k, l}) {
                auto f = form();
                f[i] = f[j] = 1;
                f[m] = 2;
                f[4 + i] = f[4 + j] = -1;
                out.push_back(f);
            }
            break;
        }
        case WitnessIneq::W4b: {
            for (int m : {k, l}) {
                auto f = form();
                f[i] = f[j] = 1;
                f[k] = f[l] = 2;
                f[4 + i] = f[4 + j] = -1;
                f[4 + m] = -2;
                out.push_back(f);
            }
            break;
        }
        default: break;
    }
    return out;
}

std::vector<LinForm8> ghz_forms(const StateIneq& q) {
    std::vector<LinForm8> out;
    if (q.kind == StateIneq::S3) {
        for (int i = 0; i < 4; ++i)
            for (int sgn : {1, -1}) {
                LinForm8 f{};
                for (int j = 0; j < 4; ++j)
                    if (j != i) f[j] = 1;
                f[4 + i] = sgn;
                out.push_back(f);
            }
        return out;
    }
    if (q.kind == StateIneq::S1) {
        auto [i, j] = pair_members(q.p);
        for (int p : {i, j})
            for (int z : {i, j})
                for (int sgn : {1, -1}) {
                    LinForm8 f{};
                    f[p] = 1;
                    f[4 + z] = sgn;
                    out.push_back(f);
                }
        return out;
    }
    int p = q.p, r = q.kind == StateIneq::S2 ? complement_pair(q.p) : q.q;
    auto [i, j] = pair_members(p);
    auto [k, l] = pair_members(r);
    const std::array<std::array<int, 2>, 2> sides{{{i, j}, {k, l}}};
    for (const auto& cside : sides)
        for (const auto& zside : sides)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    LinForm8 f{};
                    f[cside[0]] += 1;
                    f[cside[1]] += 1;
                    f[4 + zside[0]] += s1;
                    f[4 + zside[1]] += s2;
                    out.push_back(f);
                }
    return out;
}

std::vector<LinForm8> ghz_psd_forms() {
    std::vector<LinForm8> out;
    for (int i = 0; i < 4; ++i)
        for (int sgn : {1, -1}) {
            LinForm8 f{};
            f[i] = 1;
            f[4 + i] = sgn;
            out.push_back(f);
        }
    return out;
}

}  // namespace x3
