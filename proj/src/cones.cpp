#include "x3ent/cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace x3 {

namespace {

std::array<Atom, 2> others(Atom x) {
    switch (x) {
        case Atom::A: return {Atom::B, Atom::C};
        case Atom::B: return {Atom::A, Atom::C};
        default: return {Atom::A, Atom::B};
    }
}

const char* atom_letter(Atom x) {
    switch (x) {
        case Atom::A: return "A";
        case Atom::B: return "B";
        default: return "C";
    }
}

bool has_which(Shape s) { return s != Shape::Bottom && s != Shape::Top; }

// S2 written as the equivalent four-index form with sorted pairs, S4 sorted;
// used when comparing criteria sets.
StateIneq canon(StateIneq q) {
    if (q.kind == StateIneq::S2) {
        q.kind = StateIneq::S4;
        q.q = complement_pair(q.p);
    }
    if (q.kind == StateIneq::S4 && q.p > q.q) std::swap(q.p, q.q);
    return q;
}

}  // namespace

const std::vector<ConeId>& cone_catalog() {
    static const std::vector<ConeId> cat = [] {
        std::vector<ConeId> v;
        auto push3 = [&](Shape s) {
            for (Atom x : {Atom::A, Atom::B, Atom::C}) v.push_back({s, x, false});
        };
        v.push_back({Shape::Bottom, Atom::A, false});
        push3(Shape::Meet2);
        push3(Shape::JoinOfMeets);
        push3(Shape::MeetAtomJoin);
        push3(Shape::Atom);
        push3(Shape::JoinAtomMeet);
        push3(Shape::MeetOfJoins);
        push3(Shape::Join2);
        v.push_back({Shape::Top, Atom::A, false});
        return v;
    }();
    return cat;
}

int cone_index(const ConeId& id) {
    ConeId primal = id;
    primal.dual = false;
    const auto& cat = cone_catalog();
    for (size_t i = 0; i < cat.size(); ++i)
        if (cat[i] == primal) return static_cast<int>(i);
    throw std::invalid_argument("cone_index: unknown cone");
}

std::string cone_name(const ConeId& id) {
    std::string x = atom_letter(id.which), y, z;
    if (has_which(id.shape)) {
        auto [oy, oz] = others(id.which);
        y = atom_letter(oy);
        z = atom_letter(oz);
    }
    if (id.dual) {
        x += "*";
        y += "*";
        z += "*";
    }
    const std::string sa = id.dual ? "A*" : "A", sb = id.dual ? "B*" : "B",
                      sc = id.dual ? "C*" : "C";
    switch (id.shape) {
        case Shape::Bottom: return sa + "^" + sb + "^" + sc;
        case Shape::Meet2: return y + "^" + z;
        case Shape::JoinOfMeets: return "(" + x + "^" + y + ")v(" + x + "^" + z + ")";
        case Shape::MeetAtomJoin: return x + "^(" + y + "v" + z + ")";
        case Shape::Atom: return x;
        case Shape::JoinAtomMeet: return x + "v(" + y + "^" + z + ")";
        case Shape::MeetOfJoins: return "(" + x + "v" + y + ")^(" + x + "v" + z + ")";
        case Shape::Join2: return y + "v" + z;
        default: return sa + "v" + sb + "v" + sc;
    }
}

ConeId dual_of(const ConeId& id) {
    ConeId out = id;
    out.dual = !id.dual;
    switch (id.shape) {
        case Shape::Bottom: out.shape = Shape::Top; break;
        case Shape::Top: out.shape = Shape::Bottom; break;
        case Shape::Meet2: out.shape = Shape::Join2; break;
        case Shape::Join2: out.shape = Shape::Meet2; break;
        case Shape::JoinOfMeets: out.shape = Shape::MeetOfJoins; break;
        case Shape::MeetOfJoins: out.shape = Shape::JoinOfMeets; break;
        case Shape::MeetAtomJoin: out.shape = Shape::JoinAtomMeet; break;
        case Shape::JoinAtomMeet: out.shape = Shape::MeetAtomJoin; break;
        case Shape::Atom: break;
    }
    return out;
}

ConeId map_cone(const ConeId& id, const std::array<Atom, 3>& atom_perm) {
    ConeId out = id;
    if (has_which(id.shape)) out.which = atom_perm[static_cast<int>(id.which)];
    return out;
}

std::array<int, 4> index_perm(const std::array<Atom, 3>& atom_perm) {
    PartyOp op;
    for (int p = 0; p < 3; ++p) op.perm[p] = static_cast<int>(atom_perm[p]);
    auto bm = basis_map(op);
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = bm[i] <= 3 ? bm[i] : 7 - bm[i];
    return out;
}

std::array<Atom, 3> atom_perm_of(const PartyOp& op) {
    return {static_cast<Atom>(op.perm[0]), static_cast<Atom>(op.perm[1]),
            static_cast<Atom>(op.perm[2])};
}

std::vector<StateIneq> criteria(const ConeId& id) {
    if (id.dual) throw std::invalid_argument("criteria: dual cone, use dual_criteria");
    std::vector<StateIneq> out;
    auto s1 = [&](int p) { out.push_back({StateIneq::S1, p}); };
    auto s2 = [&](int p) { out.push_back({StateIneq::S2, std::min(p, complement_pair(p))}); };
    auto s4 = [&](int p, int q) {
        out.push_back({StateIneq::S4, std::min(p, q), std::max(p, q)});
    };
    Atom x = id.which;
    auto [y, z] = others(x);
    switch (id.shape) {
        case Shape::Bottom:
            for (int p = 0; p < kNumPairs; ++p) s1(p);
            break;
        case Shape::Meet2:
            for (Atom w : {y, z})
                for (int p : pairs_of_atom(w)) s1(p);
            break;
        case Shape::JoinOfMeets:
            for (int p : pairs_of_atom(x)) s1(p);
            for (int p = 0; p < kNumPairs; ++p)
                for (int q = p + 1; q < kNumPairs; ++q) s4(p, q);
            break;
        case Shape::MeetAtomJoin:
            for (int p : pairs_of_atom(x)) s1(p);
            s2(pairs_of_atom(x)[0]);
            break;
        case Shape::Atom:
            for (int p : pairs_of_atom(x)) s1(p);
            break;
        case Shape::JoinAtomMeet: {
            std::vector<int> ps;
            for (Atom w : {y, z})
                for (int p : pairs_of_atom(w)) ps.push_back(p);
            for (size_t a = 0; a < ps.size(); ++a)
                for (size_t b = a + 1; b < ps.size(); ++b) s4(ps[a], ps[b]);
            break;
        }
        case Shape::MeetOfJoins:
            s2(pairs_of_atom(z)[0]);  // x v y
            s2(pairs_of_atom(y)[0]);  // x v z
            break;
        case Shape::Join2:
            s2(pairs_of_atom(x)[0]);
            break;
        case Shape::Top:
            out.push_back({StateIneq::S3});
            break;
    }
    return out;
}

std::vector<WitnessIneq> dual_criteria(const ConeId& id) {
    if (!id.dual) throw std::invalid_argument("dual_criteria: primal cone, use criteria");
    std::vector<WitnessIneq> out;
    auto w1 = [&](int p) { out.push_back({WitnessIneq::W1, p}); };
    auto w2 = [&](int p) { out.push_back({WitnessIneq::W2, p}); };
    auto w3 = [&] { out.push_back({WitnessIneq::W3}); };
    auto w4 = [&](int p) {
        out.push_back({WitnessIneq::W4a, p});
        out.push_back({WitnessIneq::W4b, p});
    };
    Atom x = id.which;
    auto [y, z] = others(x);
    switch (id.shape) {
        case Shape::Bottom:
            for (int p = 0; p < kNumPairs; ++p) w1(p);
            break;
        case Shape::Meet2:
            for (Atom w : {y, z})
                for (int p : pairs_of_atom(w)) w1(p);
            break;
        case Shape::JoinOfMeets:
            for (int p : pairs_of_atom(x)) w1(p);
            w3();
            for (int p = 0; p < kNumPairs; ++p) w2(p);
            for (int p = 0; p < kNumPairs; ++p) w4(p);
            break;
        case Shape::MeetAtomJoin:
            for (int p : pairs_of_atom(x)) w1(p);
            for (int p : pairs_of_atom(x)) w2(p);
            w3();
            break;
        case Shape::Atom:
            for (int p : pairs_of_atom(x)) w1(p);
            break;
        case Shape::JoinAtomMeet:
            w3();
            for (Atom w : {y, z})
                for (int p : pairs_of_atom(w)) w2(p);
            for (int p : pairs_of_atom(x)) w4(p);
            break;
        case Shape::MeetOfJoins:
            w3();
            for (Atom w : {y, z})
                for (int p : pairs_of_atom(w)) w2(p);
            break;
        case Shape::Join2:
            for (int p : pairs_of_atom(x)) w2(p);
            w3();
            break;
        case Shape::Top:
            w3();
            break;
    }
    return out;
}

template <class S>
MarginT<S> member_margin(const StateMargins<S>& mg, const ConeId& id) {
    MarginT<S> out;
    bool first = true;
    for (const StateIneq& q : criteria(id)) {
        const S& v = mg.of(q);
        if (first || v < out.slack) {
            out.slack = v;
            out.tightest = to_string(q);
        }
        first = false;
    }
    out.holds = !(out.slack < S{});
    return out;
}

template <class S>
MarginT<S> witness_member_margin(const WitnessMargins<S>& mg, const ConeId& id) {
    MarginT<S> out;
    bool first = true;
    for (const WitnessIneq& q : dual_criteria(id)) {
        const S& v = mg.of(q);
        if (first || v < out.slack) {
            out.slack = v;
            out.tightest = to_string(q);
        }
        first = false;
    }
    out.holds = !(out.slack < S{});
    return out;
}

template MarginT<RSum> member_margin(const StateMargins<RSum>&, const ConeId&);
template MarginT<Rat> member_margin(const StateMargins<Rat>&, const ConeId&);
template MarginT<double> member_margin(const StateMargins<double>&, const ConeId&);
template MarginT<RSum> witness_member_margin(const WitnessMargins<RSum>&, const ConeId&);
template MarginT<Rat> witness_member_margin(const WitnessMargins<Rat>&, const ConeId&);
template MarginT<double> witness_member_margin(const WitnessMargins<double>&, const ConeId&);

namespace {

Margin lift_rat(MarginT<Rat> m) {
    Margin out;
    out.slack = RSum::of(m.slack);
    out.holds = m.holds;
    out.tightest = std::move(m.tightest);
    return out;
}

}  // namespace

Margin member(const XState& x, const ConeId& id) {
    Profile pr = profile(x);
    if (auto q = rational_profile(pr))
        return lift_rat(member_margin(state_margins(*q), id));
    return member_margin(state_margins(pr), id);
}

Margin member(const WitnessX& w, const ConeId& id) {
    Profile pr = profile(w);
    if (auto q = rational_profile(pr))
        return lift_rat(witness_member_margin(witness_margins(*q), id));
    return witness_member_margin(witness_margins(pr), id);
}

MarginD member_approx(const XState& x, const ConeId& id) {
    ProfileD pr = approx_profile(x);
    MarginD m = member_margin(state_margins(pr), id);
    m.holds = m.slack >= -float_eps() * float_scale(pr);
    return m;
}

MarginD member_approx(const WitnessX& w, const ConeId& id) {
    ProfileD pr = approx_profile(w);
    MarginD m = witness_member_margin(witness_margins(pr), id);
    m.holds = m.slack >= -float_eps() * float_scale(pr);
    return m;
}

const std::vector<std::pair<int, int>>& lattice_edges() {
    static const std::vector<std::pair<int, int>> edges = [] {
        std::vector<std::pair<int, int>> e;
        auto idx = [](Shape s, Atom x) { return cone_index({s, x, false}); };
        auto add = [&](int a, int b) { e.emplace_back(a, b); };
        int bottom = cone_index({Shape::Bottom, Atom::A, false});
        int top = cone_index({Shape::Top, Atom::A, false});
        for (Atom x : {Atom::A, Atom::B, Atom::C}) {
            auto [y, z] = others(x);
            add(bottom, idx(Shape::Meet2, x));
            for (Atom w : {y, z}) add(idx(Shape::Meet2, w), idx(Shape::JoinOfMeets, x));
            add(idx(Shape::JoinOfMeets, x), idx(Shape::MeetAtomJoin, x));
            for (Atom w : {y, z}) add(idx(Shape::JoinOfMeets, x), idx(Shape::JoinAtomMeet, w));
            add(idx(Shape::MeetAtomJoin, x), idx(Shape::Atom, x));
            for (Atom w : {y, z}) add(idx(Shape::MeetAtomJoin, x), idx(Shape::MeetOfJoins, w));
            add(idx(Shape::Atom, x), idx(Shape::JoinAtomMeet, x));
            add(idx(Shape::JoinAtomMeet, x), idx(Shape::MeetOfJoins, x));
            for (Atom w : {y, z}) add(idx(Shape::MeetOfJoins, x), idx(Shape::Join2, w));
            add(idx(Shape::Join2, x), top);
        }
        return e;
    }();
    return edges;
}

namespace {

// reach[i][j]: cone i contained in cone j (reflexive-transitive closure)
const std::vector<std::vector<bool>>& reachability() {
    static const std::vector<std::vector<bool>> reach = [] {
        size_t n = cone_catalog().size();
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) r[i][i] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : lattice_edges())
                for (size_t j = 0; j < n; ++j)
                    if (r[b][j] && !r[a][j]) {
                        r[a][j] = true;
                        changed = true;
                    }
        }
        return r;
    }();
    return reach;
}

}  // namespace

LatticeProfile lattice_profile(const XState& x, bool exact_mode) {
    const auto& cat = cone_catalog();
    LatticeProfile out;
    out.exact = exact_mode;
    out.psd = is_psd(x);
    std::vector<bool> holds(cat.size(), false);
    if (exact_mode) {
        Profile pr = profile(x);
        auto rq = rational_profile(pr);
        for (const ConeId& id : cat) {
            Margin m = rq ? lift_rat(member_margin(state_margins(*rq), id))
                          : member_margin(state_margins(pr), id);
            MarginD md;
            md.slack = m.slack.approx();
            md.holds = m.holds;
            md.tightest = m.tightest;
            out.margins.push_back(md);
            out.exact_signs.push_back(m.slack.sign());
            holds[out.margins.size() - 1] = m.holds;
        }
    } else {
        ProfileD pr = approx_profile(x);
        double tol = float_eps() * float_scale(pr);
        auto mg = state_margins(pr);
        for (const ConeId& id : cat) {
            MarginD m = member_margin(mg, id);
            m.holds = m.slack >= -tol;
            out.margins.push_back(m);
            holds[out.margins.size() - 1] = m.holds;
        }
    }
    // containment sanity: membership must be upward closed. Exact verdicts
    // are guaranteed monotone; float verdicts near the tolerance edge are
    // repaired upward.
    const auto& reach = reachability();
    if (exact_mode) {
        for (auto [a, b] : lattice_edges())
            if (holds[a] && !holds[b])
                throw std::logic_error("lattice_profile: membership not monotone");
    } else {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : lattice_edges())
                if (holds[a] && !holds[b]) {
                    holds[b] = true;
                    out.margins[b].holds = true;
                    changed = true;
                }
        }
    }
    for (size_t i = 0; i < cat.size(); ++i) {
        if (!holds[i]) continue;
        bool minimal = true;
        for (size_t j = 0; j < cat.size() && minimal; ++j)
            if (j != i && holds[j] && reach[j][i]) minimal = false;
        if (minimal) out.minimal_members.push_back(static_cast<int>(i));
    }
    return out;
}

void check_catalog() {
    const auto& cat = cone_catalog();
    if (cat.size() != 23) throw std::logic_error("catalog: wrong size");
    // duality is an involution and preserves 'which'
    for (const ConeId& id : cat) {
        ConeId d = dual_of(id);
        if (!d.dual || dual_of(d) != id) throw std::logic_error("catalog: duality not involutive");
        dual_criteria(d);  // must not throw
    }
    // criteria transport under every relabeling of the cuts
    std::array<Atom, 3> perm{Atom::A, Atom::B, Atom::C};
    std::array<int, 3> idxs{0, 1, 2};
    do {
        for (int p = 0; p < 3; ++p) perm[p] = static_cast<Atom>(idxs[p]);
        auto ip = index_perm(perm);
        for (const ConeId& id : cat) {
            auto direct = criteria(map_cone(id, perm));
            auto transported = criteria(id);
            for (auto& q : transported) q = map_ineq(q, ip);
            auto key = [](const StateIneq& q) {
                StateIneq c = canon(q);
                return std::array<int, 3>{static_cast<int>(c.kind), c.p, c.q};
            };
            std::vector<std::array<int, 3>> ka, kb;
            for (auto& q : direct) ka.push_back(key(q));
            for (auto& q : transported) kb.push_back(key(q));
            std::sort(ka.begin(), ka.end());
            std::sort(kb.begin(), kb.end());
            if (ka != kb) throw std::logic_error("catalog: criteria not covariant at " + cone_name(id));
            // witness side
            ConeId d = dual_of(id);
            auto ddirect = dual_criteria(map_cone(d, perm));
            auto dtrans = dual_criteria(d);
            for (auto& q : dtrans) q = map_ineq(q, ip);
            auto wkey = [](const WitnessIneq& q) {
                return std::array<int, 2>{static_cast<int>(q.kind), q.p};
            };
            std::vector<std::array<int, 2>> wa, wb;
            for (auto& q : ddirect) wa.push_back(wkey(q));
            for (auto& q : dtrans) wb.push_back(wkey(q));
            std::sort(wa.begin(), wa.end());
            std::sort(wb.begin(), wb.end());
            if (wa != wb) throw std::logic_error("catalog: dual criteria not covariant at " + cone_name(d));
        }
    } while (std::next_permutation(idxs.begin(), idxs.end()));
}

}  // namespace x3
