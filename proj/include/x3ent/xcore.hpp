#pragma once

#include <array>
#include <optional>
#include <vector>

#include "x3ent/radical.hpp"
#include "x3ent/rational.hpp"

namespace x3 {

// Self-adjoint 8x8 matrix supported on the diagonal and the anti-diagonal,
// in the three-qubit product basis |000>,|001>,...,|111>:
//   diagonal      a_1..a_4 at slots 1..4, b_4..b_1 at slots 5..8,
//   anti-diagonal z_i at (i, 9-i) for i = 1..4 (upper half; the lower half
//   holds the conjugates).
struct XState {
    std::array<Rat, 4> a{}, b{};
    std::array<CRat, 4> z{};

    bool operator==(const XState&) const = default;
};

// Witness candidates use the same shape with the diagonal written as s, t.
struct WitnessX {
    std::array<Rat, 4> s{}, t{};
    std::array<CRat, 4> u{};

    bool operator==(const WitnessX&) const = default;

    XState as_xstate() const { return {s, t, u}; }
};

// GHZ-diagonal elements: a = b and real z.
struct GhzDiagonal {
    std::array<Rat, 4> a{}, z{};

    bool operator==(const GhzDiagonal&) const = default;

    XState as_xstate() const;
    WitnessX as_witness() const;
};

using Dense8 = std::array<std::array<CRat, 8>, 8>;

Dense8 to_dense(const XState& x);
// Extracts the X-shaped part of an arbitrary self-adjoint matrix, discarding
// everything off the diagonal/anti-diagonal.
XState xpart(const Dense8& m);
bool is_selfadjoint(const Dense8& m);

// <x, y> = Tr(x * transpose(y)); real for self-adjoint inputs.
Rat pair(const XState& x, const XState& y);
inline Rat pair(const WitnessX& w, const XState& x) { return pair(w.as_xstate(), x); }
Rat dense_pair(const Dense8& x, const Dense8& y);

bool is_psd(const XState& x);

// c_i = sqrt(a_i b_i), m_i = |z_i| (and r_i = sqrt(s_i t_i) on the witness
// side). Exact values; rational() gives the fast all-rational view when every
// entry happens to be rational.
template <class S>
struct ProfileT {
    std::array<S, 4> c{}, m{};
};
using Profile = ProfileT<RSum>;
using ProfileQ = ProfileT<Rat>;
using ProfileD = ProfileT<double>;

Profile profile(const XState& x);    // requires a, b >= 0
Profile profile(const WitnessX& w);  // requires s, t >= 0
std::optional<ProfileQ> rational_profile(const Profile& p);
ProfileD approx_profile(const XState& x);
ProfileD approx_profile(const WitnessX& w);

// --- party symmetries ------------------------------------------------------
//
// The local symmetry group acted with here: permutations of the parties
// A, B, C combined with per-party basis flips |0> <-> |1|>. All of them map
// X-shaped matrices to X-shaped matrices.
struct PartyOp {
    std::array<int, 3> perm{0, 1, 2};        // perm[p] = image slot of party p
    std::array<bool, 3> flip{false, false, false};

    bool operator==(const PartyOp&) const = default;
};

// Basis-index map k -> image of |k| under the operation (party A is the most
// significant bit).
std::array<int, 8> basis_map(const PartyOp& op);
PartyOp compose(const PartyOp& f, const PartyOp& g);  // f after g
PartyOp inverse(const PartyOp& op);
std::vector<PartyOp> party_group();     // all 48 elements
std::vector<PartyOp> party_permutations();  // the 6 pure permutations

// Conjugation by the (real, permutation) matrix of the operation, computed on
// the dense 8x8 form. Reference implementation.
Dense8 dense_party_action(const Dense8& m, const PartyOp& op);
// Same action directly on the X-entries; agrees with the dense path.
XState party_action(const XState& x, const PartyOp& op);
WitnessX party_action(const WitnessX& w, const PartyOp& op);

}  // namespace x3
