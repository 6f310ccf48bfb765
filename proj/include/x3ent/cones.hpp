#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x3ent/ineq.hpp"

namespace x3 {

// The partial-separability lattice over the three bipartite cuts
// A (= A-BC separable), B, C, closed under meets and joins. Up to the S3
// relabeling symmetry of the cuts there are nine shapes; instantiating the
// distinguished cut gives 23 nodes. The same shapes, formed from the dual
// cones A*, B*, C*, describe the witness side.
enum class Shape {
    Bottom,        // x ^ y ^ z
    Meet2,         // y ^ z         (indexed by the excluded cut x)
    JoinOfMeets,   // (x^y) v (x^z)
    MeetAtomJoin,  // x ^ (y v z)
    Atom,          // x
    JoinAtomMeet,  // x v (y^z)
    MeetOfJoins,   // (xvy) ^ (xvz)
    Join2,         // y v z         (indexed by the excluded cut x)
    Top,           // x v y v z
};

struct ConeId {
    Shape shape = Shape::Top;
    Atom which = Atom::A;  // distinguished cut; ignored for Bottom/Top
    bool dual = false;

    friend bool operator==(const ConeId& a, const ConeId& b) {
        bool aw = a.shape != Shape::Bottom && a.shape != Shape::Top;
        bool bw = b.shape != Shape::Bottom && b.shape != Shape::Top;
        return a.shape == b.shape && a.dual == b.dual && (!aw || a.which == b.which) &&
               aw == bw;
    }
    friend bool operator!=(const ConeId& a, const ConeId& b) { return !(a == b); }
};

// All 23 primal (dual=false) cones, in a fixed bottom-to-top order.
const std::vector<ConeId>& cone_catalog();
int cone_index(const ConeId& id);  // position in cone_catalog() of the primal form

// "A^(BvC)", "(A*^B*)vC*" style
std::string cone_name(const ConeId& id);

// Dual cone: De Morgan swap of the shape plus the dual flag.
ConeId dual_of(const ConeId& id);

// Image of the cone under a relabeling of the cuts.
ConeId map_cone(const ConeId& id, const std::array<Atom, 3>& atom_perm);

// Index permutation of {1..4} induced by a cut relabeling (0-based).
std::array<int, 4> index_perm(const std::array<Atom, 3>& atom_perm);
std::array<Atom, 3> atom_perm_of(const PartyOp& op);

// Defining criteria conjunction.
std::vector<StateIneq> criteria(const ConeId& id);     // primal cones
std::vector<WitnessIneq> dual_criteria(const ConeId& id);  // dual cones

// --- membership ------------------------------------------------------------

template <class S>
struct MarginT {
    S slack{};
    bool holds = false;
    std::string tightest;  // name of the criterion attaining the slack
};
using Margin = MarginT<RSum>;
using MarginD = MarginT<double>;

template <class S>
MarginT<S> member_margin(const StateMargins<S>& mg, const ConeId& id);
template <class S>
MarginT<S> witness_member_margin(const WitnessMargins<S>& mg, const ConeId& id);

// Exact membership (criteria conjunction on the profile). Non-PSD inputs are
// still evaluated; callers should check is_psd separately.
Margin member(const XState& x, const ConeId& id);
Margin member(const WitnessX& w, const ConeId& id);  // id must be dual
MarginD member_approx(const XState& x, const ConeId& id);
MarginD member_approx(const WitnessX& w, const ConeId& id);

// --- the full lattice profile ----------------------------------------------

struct LatticeProfile {
    bool psd = false;
    bool exact = false;  // false: float mode (verdicts carry tolerance)
    std::vector<MarginD> margins;        // indexed like cone_catalog()
    std::vector<int> exact_signs;        // exact mode: sign of each slack
    std::vector<int> minimal_members;    // catalog indices
};

LatticeProfile lattice_profile(const XState& x, bool exact_mode);

// Hasse-diagram edges (from, to) with from contained in to, catalog indices.
const std::vector<std::pair<int, int>>& lattice_edges();

// Cone expressions: atoms A, B, C, '^' (meet), 'v' (join), parentheses, and
// '*' for duals -- either on every atom ("A*^B*") or trailing on a
// parenthesized expression ("(AvB)*", applied by De Morgan). Any expression
// that is one of the 23 lattice shapes up to commutativity/associativity is
// recognized.
struct ParsedCone {
    ConeId id;
    std::array<Atom, 3> perm;  // maps the A-distinguished representative here
};
std::optional<ParsedCone> parse_cone(const std::string& text, std::string* error);

// Catalog self-checks (criteria transport under all relabelings, duality
// involution, edge monotonicity on the criteria level). Throws on failure;
// run once at startup by the test binaries.
void check_catalog();

}  // namespace x3
