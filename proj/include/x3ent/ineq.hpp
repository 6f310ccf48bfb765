#pragma once

#include <array>
#include <string>
#include <vector>

#include "x3ent/xcore.hpp"

namespace x3 {

// --- index pairs -----------------------------------------------------------
//
// Two-element subsets of {1,2,3,4}, in the fixed order
//   0:{1,2} 1:{1,3} 2:{1,4} 3:{2,3} 4:{2,4} 5:{3,4}.
// Each pair and its complement form a partition of {1,2,3,4}; the three
// partitions correspond to the three bipartite cuts A-BC, B-CA, C-AB.
inline constexpr int kNumPairs = 6;
constexpr std::array<int, 2> pair_members(int p) {  // 0-based indices
    constexpr std::array<std::array<int, 2>, 6> tbl{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return tbl[p];
}
constexpr int complement_pair(int p) { return 5 - p; }
int pair_of(int i, int j);  // 0-based members

enum class Atom { A = 0, B = 1, C = 2 };
// cut A <-> partition {1,4}|{2,3}; cut B <-> {1,3}|{2,4}; cut C <-> {1,2}|{3,4}
constexpr std::array<int, 2> pairs_of_atom(Atom x) {
    constexpr std::array<std::array<int, 2>, 3> tbl{{{2, 3}, {1, 4}, {0, 5}}};
    return tbl[static_cast<int>(x)];
}
constexpr Atom atom_of_pair(int p) {
    constexpr std::array<Atom, 6> tbl{Atom::C, Atom::B, Atom::A,
                                      Atom::A, Atom::B, Atom::C};
    return tbl[p];
}
std::string pair_name(int p);  // "[1,4]" style, 1-based

// Image of a pair id under a permutation of the indices {1,2,3,4}
// (idx_perm[i] = image of 0-based index i).
int map_pair(int p, const std::array<int, 4>& idx_perm);

// --- the inequality families ----------------------------------------------
//
// State side, on the profile c_i = sqrt(a_i b_i), m_i = |z_i|:
//   S1[i,j]      min(c_i, c_j) >= max(m_i, m_j)
//   S2[i,j]      the four-index inequality of the partition {i,j} | {k,l}
//   S3           sum_{j != i} c_j >= m_i for every i
//   S4[p|q]      min(c_i+c_j, c_k+c_l) >= max(m_i+m_j, m_k+m_l)
//                for two disjoint-or-not pairs p = {i,j}, q = {k,l}
// Witness side, on r_i = sqrt(s_i t_i), |u_i|:
//   W1[i,j]      r_i + r_j >= |u_i| + |u_j|
//   W2[i,j]      sum_{k != j} r_k >= |u_i|  and  sum_{k != i} r_k >= |u_j|
//   W3           sum r >= sum |u|
//   W4a[i,j]     r_i + r_j + 2 min(r_k, r_l) >= |u_i| + |u_j|
//   W4b[i,j]     r_i + r_j + 2(r_k + r_l) >= |u_i| + |u_j| + 2 max(|u_k|, |u_l|)
// where {k,l} always denotes the complement of {i,j}.

struct StateIneq {
    enum Kind { S1, S2, S3, S4 } kind;
    int p = -1, q = -1;  // pair ids; S4 uses both, S1/S2 use p only

    bool operator==(const StateIneq&) const = default;
};

struct WitnessIneq {
    enum Kind { W1, W2, W3, W4a, W4b } kind;
    int p = -1;

    bool operator==(const WitnessIneq&) const = default;
};

std::string to_string(const StateIneq& q);
std::string to_string(const WitnessIneq& q);

StateIneq map_ineq(const StateIneq& q, const std::array<int, 4>& idx_perm);
WitnessIneq map_ineq(const WitnessIneq& q, const std::array<int, 4>& idx_perm);

// --- slack evaluation ------------------------------------------------------
//
// All 22 state-side (resp. 25 witness-side) scalar margins computed once per
// profile; any criteria conjunction is then a min-scan over cached entries.
template <class S>
struct StateMargins {
    std::array<S, kNumPairs> s1{};
    std::array<std::array<S, kNumPairs>, kNumPairs> s4{};  // p < q populated
    S s3{};

    const S& of(const StateIneq& q) const {
        switch (q.kind) {
            case StateIneq::S1: return s1[q.p];
            case StateIneq::S2: {
                int a = std::min(q.p, complement_pair(q.p));
                return s4[a][complement_pair(a)];
            }
            case StateIneq::S3: return s3;
            default: return s4[std::min(q.p, q.q)][std::max(q.p, q.q)];
        }
    }
};

template <class S>
struct WitnessMargins {
    std::array<S, kNumPairs> w1{}, w2{}, w4a{}, w4b{};
    S w3{};

    const S& of(const WitnessIneq& q) const {
        switch (q.kind) {
            case WitnessIneq::W1: return w1[q.p];
            case WitnessIneq::W2: return w2[q.p];
            case WitnessIneq::W3: return w3;
            case WitnessIneq::W4a: return w4a[q.p];
            default: return w4b[q.p];
        }
    }
};

template <class S>
StateMargins<S> state_margins(const ProfileT<S>& pr);
template <class S>
WitnessMargins<S> witness_margins(const ProfileT<S>& pr);  // c=r, m=|u|

// Float-mode verdict: slack >= -eps * scale with scale = max(sum c, sum m, 1).
// eps defaults to 1e-9 and can be overridden via the X3ENT_PRECISION
// environment variable.
double float_eps();
double float_scale(const ProfileD& pr);

// --- linear expansions -----------------------------------------------------
//
// Witness criteria are conjunctions of linear inequalities coef . (r, u) >= 0
// in the 8 nonnegative variables r_1..r_4, u_1..u_4 (u here stands for |u|).
using LinForm8 = std::array<Rat, 8>;
std::vector<LinForm8> linear_forms(const WitnessIneq& q);

// On the GHZ-diagonal slice (a_1..a_4, z_1..z_4 with a = b and real z) every
// state criterion expands into linear inequalities coef . (a, z) >= 0.
std::vector<LinForm8> ghz_forms(const StateIneq& q);
// PSD on the slice: a_i >= |z_i|.
std::vector<LinForm8> ghz_psd_forms();

}  // namespace x3
