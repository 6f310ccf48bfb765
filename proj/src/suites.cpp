#include "x3ent/suites.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace x3 {

namespace {

void check(Suite& s, const std::string& name, bool ok, const std::string& detail = "") {
    s.checks.push_back({name, ok, detail});
}

const std::vector<IVec>& rays_of(const ConeId& cone) {
    // suites may run concurrently; the enumeration cache is shared
    static std::mutex mtx;
    static std::map<int, std::vector<IVec>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    int key = cone_index(cone);
    auto it = cache.find(key);
    if (it == cache.end()) {
        DDResult dd = extreme_rays(ghz_hrep(cone));
        if (!dd.lineality.empty())
            throw std::logic_error("rays_of: cone not pointed: " + cone_name(cone));
        it = cache.emplace(key, std::move(dd.rays)).first;
    }
    return it->second;
}

bool satisfies_hrep(const IVec& ray, const HPolyhedron& h) {
    for (const IVec& q : h.ineqs) {
        Int v = 0;
        for (size_t j = 0; j < q.size(); ++j) v += q[j] * ray[j];
        if (v < 0) return false;
    }
    return true;
}

std::string count_str(size_t got, size_t want) {
    return "rays " + std::to_string(got) + " expected " + std::to_string(want);
}

}  // namespace

Rat Sampler::rat(int maxnum, int maxden) {
    Rat q(static_cast<long>(rng() % static_cast<unsigned>(maxnum + 1)),
          static_cast<long>(1 + rng() % static_cast<unsigned>(maxden)));
    q.canonicalize();
    return q;
}

namespace {

const std::array<CRat, 8>& unit_phases() {
    static const std::array<CRat, 8> ph = [] {
        auto c = [](int a, int b, int d) { return CRat(Rat(a, d), Rat(b, d)); };
        return std::array<CRat, 8>{c(1, 0, 1),  c(-1, 0, 1), c(0, 1, 1),  c(0, -1, 1),
                                   c(3, 4, 5),  c(-3, 4, 5), c(4, -3, 5), c(5, 12, 13)};
    }();
    return ph;
}

}  // namespace

XState Sampler::state(bool deep) {
    XState x;
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i) {
        unsigned r = rng() % 20;
        if (r == 0) {
            c[i] = 0;
            x.a[i] = x.b[i] = 0;
        } else if (r == 1) {
            // rank-deficient corner: one diagonal side vanishes
            c[i] = 0;
            x.a[i] = rat(8, 4);
            x.b[i] = 0;
        } else {
            int num = 1 + static_cast<int>(rng() % 12);
            if (rng() % 8 == 0) num *= 16;  // occasional large spread
            c[i] = Rat(num, static_cast<long>(1 + rng() % 4));
            c[i].canonicalize();
            Rat g(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 4));
            g.canonicalize();
            x.a[i] = c[i] * g;
            x.b[i] = c[i] / g;
        }
    }
    Rat cmin = c[0];
    for (int i = 1; i < 4; ++i) cmin = std::min(cmin, c[i]);
    for (int i = 0; i < 4; ++i) {
        Rat bound = deep ? cmin : c[i];
        Rat frac(static_cast<long>(rng() % 5), 4);
        frac.canonicalize();
        Rat m = bound * frac;
        x.z[i] = m * unit_phases()[rng() % 8];
    }
    return x;
}

WitnessX Sampler::witness(bool deep) {
    XState x = state(deep);
    WitnessX w{x.a, x.b, x.z};
    if (!deep) {
        // allow |u| beyond the PSD range: scale some entries up
        for (int i = 0; i < 4; ++i)
            if (rng() % 3 == 0) w.u[i] = Rat(2) * w.u[i];
    }
    return w;
}

GhzDiagonal Sampler::ghz_state() {
    GhzDiagonal g;
    for (int i = 0; i < 4; ++i) {
        g.a[i] = rat(12, 4);
        Rat frac(static_cast<long>(rng() % 5), 4);
        frac.canonicalize();
        g.z[i] = g.a[i] * frac;
        if (rng() % 2) g.z[i] = -g.z[i];
    }
    return g;
}

Suite suite_table2() {
    Suite s{"table2", {}};
    for (const RaySetFixture& fx : reference_ray_sets()) {
        const std::string nm = cone_name(fx.cone);
        try {
            const auto& got = rays_of(fx.cone);
            check(s, "enumerate " + nm, ray_sets_equal(got, fx.rays),
                  count_str(got.size(), fx.rays.size()));
        } catch (const std::exception& e) {
            check(s, "enumerate " + nm, false, e.what());
        }
        // every reference ray is a PSD member of its cone
        bool members = true;
        for (const IVec& r : fx.rays) {
            XState xs = ray_to_state(r).as_xstate();
            if (!is_psd(xs) || !member(xs, fx.cone).holds) members = false;
        }
        check(s, "ray membership " + nm, members);
    }
    // insertion order must not matter
    {
        ConeId cone{Shape::MeetAtomJoin, Atom::A, false};
        HPolyhedron h = ghz_hrep(cone);
        std::vector<IVec> base = extreme_rays(h).rays;
        std::reverse(h.ineqs.begin(), h.ineqs.end());
        std::rotate(h.ineqs.begin(), h.ineqs.begin() + h.ineqs.size() / 3, h.ineqs.end());
        check(s, "insertion-order invariance", ray_sets_equal(base, extreme_rays(h).rays));
    }
    // inclusions along the lattice diagram, checked on every cone
    {
        bool ok = true;
        std::string bad;
        const auto& cat = cone_catalog();
        for (auto [a, b] : lattice_edges()) {
            HPolyhedron hb = ghz_hrep(cat[b]);
            for (const IVec& r : rays_of(cat[a]))
                if (!satisfies_hrep(r, hb)) {
                    ok = false;
                    bad = cone_name(cat[a]) + " -> " + cone_name(cat[b]);
                }
        }
        check(s, "edge inclusions", ok, bad);
    }
    return s;
}

Suite suite_extremality() {
    Suite s{"extremality", {}};
    for (const RaySetFixture& fx : reference_ray_sets()) {
        const std::string nm = cone_name(fx.cone);
        bool all_ok = true;
        std::string bad;
        for (const IVec& r : fx.rays) {
            ExtremeCheck ec = verify_extreme(r, fx.rays);
            if (!ec.extreme || !ec.witness) {
                all_ok = false;
                bad = "ray not certified extreme";
            }
        }
        check(s, "extremality witnesses " + nm, all_ok, bad);
    }
    // hand-checked witnesses, including the sign-flipped variants
    for (const ExtremeWitnessFixture& fx : extreme_witness_fixtures()) {
        const std::vector<IVec>* set = nullptr;
        for (const RaySetFixture& rs : reference_ray_sets())
            if (rs.cone == fx.cone) set = &rs.rays;
        bool ok = set != nullptr;
        std::vector<int> nz;
        for (int i = 0; i < 4; ++i)
            if (ok && fx.state.z[i] != 0) nz.push_back(i);
        for (int mask = 0; ok && mask < (1 << nz.size()); ++mask) {
            GhzDiagonal st = fx.state, wt = fx.witness;
            for (size_t k = 0; k < nz.size(); ++k)
                if (mask & (1 << k)) {
                    st.z[nz[k]] = -st.z[nz[k]];
                    wt.z[nz[k]] = -wt.z[nz[k]];
                }
            IVec ray = state_to_ray(st);
            if (std::find(set->begin(), set->end(), ray) == set->end()) ok = false;
            if (ok && slice_dot(wt, st) != 0) ok = false;
            for (const IVec& psi : *set) {
                if (!ok) break;
                if (psi == ray) continue;
                if (slice_dot(wt, ray_to_state(psi)) <= 0) ok = false;
            }
        }
        check(s, "reference witness for " + cone_name(fx.cone) + " ray", ok);
    }
    // a deliberately non-extreme point yields a decomposition
    {
        const auto& bottom = reference_ray_sets()[0];
        QVec v(8, 0);
        v[0] = 1;
        v[1] = 1;  // sum of two diagonal rays
        ExtremeCheck ec = verify_extreme(canonical_ray(v), bottom.rays);
        check(s, "non-extreme point decomposes", !ec.extreme && ec.decomposition.size() >= 2);
    }
    return s;
}

Suite suite_identities() {
    Suite s{"identities", {}};
    auto meet_of = [](Atom excluded) { return ConeId{Shape::Meet2, excluded, false}; };
    auto oth = [](Atom x) -> std::array<Atom, 2> {
        switch (x) {
            case Atom::A: return {Atom::B, Atom::C};
            case Atom::B: return {Atom::A, Atom::C};
            default: return {Atom::A, Atom::B};
        }
    };

    // joins computed from generators agree with the criteria H-representations
    for (Atom x : {Atom::A, Atom::B, Atom::C}) {
        auto [y, z] = oth(x);
        auto join_check = [&](const ConeId& target, std::vector<const ConeId*> parts,
                              const std::string& label) {
            std::vector<IVec> gens;
            for (const ConeId* p : parts)
                for (const IVec& r : rays_of(*p)) gens.push_back(r);
            check(s, label, ray_sets_equal(join_rays(std::move(gens)), rays_of(target)));
        };
        ConeId ay{Shape::Atom, y, false}, az{Shape::Atom, z, false}, ax{Shape::Atom, x, false};
        ConeId m2x{Shape::Meet2, x, false};
        join_check({Shape::Join2, x, false}, {&ay, &az}, "join generators " + cone_name({Shape::Join2, x, false}));
        join_check({Shape::JoinAtomMeet, x, false}, {&ax, &m2x},
                   "join generators " + cone_name({Shape::JoinAtomMeet, x, false}));
        ConeId myz = meet_of(z), mzy = meet_of(y);  // x^y and x^z
        join_check({Shape::JoinOfMeets, x, false}, {&myz, &mzy},
                   "join generators " + cone_name({Shape::JoinOfMeets, x, false}));
    }
    {
        ConeId aa{Shape::Atom, Atom::A, false}, ab{Shape::Atom, Atom::B, false},
            ac{Shape::Atom, Atom::C, false};
        std::vector<IVec> gens;
        for (const ConeId* p : {&aa, &ab, &ac})
            for (const IVec& r : rays_of(*p)) gens.push_back(r);
        check(s, "join generators AvBvC",
              ray_sets_equal(join_rays(std::move(gens)), rays_of({Shape::Top, Atom::A, false})));
    }

    // (x^y)v(x^z) = x ^ P with P the triple meet of the x v (y^z) cones
    for (Atom x : {Atom::A, Atom::B, Atom::C}) {
        HPolyhedron h;
        std::vector<IVec> rows = ghz_hrep({Shape::Atom, x, false}).ineqs;
        for (Atom w : {Atom::A, Atom::B, Atom::C})
            for (const IVec& q : ghz_hrep({Shape::JoinAtomMeet, w, false}).ineqs)
                rows.push_back(q);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        h.ineqs = std::move(rows);
        DDResult rhs = extreme_rays(h);
        bool ok = rhs.lineality.empty() &&
                  ray_sets_equal(rhs.rays, rays_of({Shape::JoinOfMeets, x, false}));
        check(s, "meet-distribution identity at " + cone_name({Shape::Atom, x, false}), ok);
    }
    // (xvy)^(xvz) = x v Q with Q the triple join of the y^(zvw) cones
    for (Atom x : {Atom::A, Atom::B, Atom::C}) {
        std::vector<IVec> gens;
        for (const IVec& r : rays_of({Shape::Atom, x, false})) gens.push_back(r);
        for (Atom w : {Atom::A, Atom::B, Atom::C})
            for (const IVec& r : rays_of({Shape::MeetAtomJoin, w, false})) gens.push_back(r);
        check(s, "join-distribution identity at " + cone_name({Shape::Atom, x, false}),
              ray_sets_equal(join_rays(std::move(gens)),
                             rays_of({Shape::MeetOfJoins, x, false})));
    }

    // strictness of the modular-law inequality
    {
        const ConeId jm{Shape::JoinOfMeets, Atom::A, false};
        const ConeId a{Shape::Atom, Atom::A, false};
        Margin m1 = member(rho1(), jm);
        check(s, "rho1 outside (A^B)v(A^C)",
              !m1.holds && m1.slack == RSum::of(-1),
              "slack " + m1.slack.str() + " at " + m1.tightest);
        check(s, "rho1 inside A and Bv(C^A)",
              member(rho1(), a).holds &&
                  member(rho1(), {Shape::JoinAtomMeet, Atom::B, false}).holds);
        Margin m2 = member(rho2(), jm);
        check(s, "rho2 outside (A^B)v(A^C)",
              !m2.holds && m2.slack == RSum::of(-1),
              "slack " + m2.slack.str() + " at " + m2.tightest);
        check(s, "rho2 inside A and Cv(B^A)",
              member(rho2(), a).holds &&
                  member(rho2(), {Shape::JoinAtomMeet, Atom::C, false}).holds);
        CertifyResult cr = certify(rho1(), jm);
        check(s, "rho1 certificate", cr.certificate.has_value() &&
                                          cr.certificate->value < 0);
    }
    return s;
}

Suite suite_redundancy() {
    Suite s{"redundancy", {}};
    int idx = 0;
    for (const ImplicationFixture& fx : implication_fixtures()) {
        std::string nm = "implication " + std::to_string(idx++) + ": " + to_string(fx.claimed);
        ImpliesResult r = fx.part < 0 ? implies(fx.assumed, fx.claimed)
                                      : implies_part(fx.assumed, fx.claimed, fx.part);
        if (fx.expected) {
            check(s, nm, r.implied);
            continue;
        }
        bool ok = !r.implied;
        // the LP's counterexample must genuinely separate
        if (ok) {
            ProfileQ pr;
            for (int i = 0; i < 4; ++i) {
                pr.c[i] = r.counterexample[i];
                pr.m[i] = r.counterexample[4 + i];
            }
            auto mg = witness_margins(pr);
            for (const WitnessIneq& q : fx.assumed)
                if (mg.of(q) < 0) ok = false;
            if (mg.of(fx.claimed) >= 0) ok = false;
        }
        // and so must the frozen one
        if (ok) {
            ProfileQ pr;
            for (int i = 0; i < 4; ++i) {
                pr.c[i] = fx.counterexample[i];
                pr.m[i] = fx.counterexample[4 + i];
            }
            auto mg = witness_margins(pr);
            for (const WitnessIneq& q : fx.assumed)
                if (mg.of(q) < 0) ok = false;
            if (mg.of(fx.claimed) >= 0) ok = false;
        }
        check(s, nm + " (refuted)", ok);
    }
    return s;
}

Suite suite_duality(int pairs_per_cone) {
    Suite s{"duality", {}};
    Sampler smp;
    const int pool = std::max(2000, pairs_per_cone);
    std::vector<XState> states;
    std::vector<StateMargins<Rat>> sm;
    std::vector<WitnessX> wits;
    std::vector<WitnessMargins<Rat>> wm;
    for (int k = 0; k < pool; ++k) {
        XState x = smp.state(k % 3 == 0);
        auto pr = rational_profile(profile(x));
        states.push_back(x);
        sm.push_back(state_margins(*pr));
        WitnessX w = smp.witness(k % 3 == 0);
        auto wpr = rational_profile(profile(w));
        wits.push_back(w);
        wm.push_back(witness_margins(*wpr));
    }
    for (const ConeId& cone : cone_catalog()) {
        ConeId dual = dual_of(cone);
        std::vector<int> sidx, widx;
        for (int k = 0; k < pool; ++k) {
            if (member_margin(sm[k], cone).holds) sidx.push_back(k);
            if (witness_member_margin(wm[k], dual).holds) widx.push_back(k);
        }
        if (sidx.empty() || widx.empty()) {
            check(s, "pairing " + cone_name(cone), false, "no samples in cone");
            continue;
        }
        int bad = 0;
        for (int k = 0; k < pairs_per_cone; ++k) {
            const XState& x = states[sidx[k % sidx.size()]];
            const WitnessX& w = wits[widx[(k * 7 + k / static_cast<int>(sidx.size())) %
                                          widx.size()]];
            if (pair(w, x) < 0) ++bad;
        }
        check(s, "pairing " + cone_name(cone), bad == 0,
              std::to_string(pairs_per_cone) + " pairs, " + std::to_string(bad) +
                  " negative (" + std::to_string(sidx.size()) + "/" +
                  std::to_string(widx.size()) + " members in pool)");
    }
    return s;
}

Suite suite_completeness(int states_per_cone) {
    Suite s{"completeness", {}};
    Sampler smp;
    for (const ConeId& cone : cone_catalog()) {
        int bad = 0, members = 0;
        std::string why;
        for (int k = 0; k < states_per_cone; ++k) {
            XState x = smp.state(k % 3 == 0);
            CertifyResult cr;
            try {
                cr = certify(x, cone);
            } catch (const std::exception& e) {
                ++bad;
                why = e.what();
                continue;
            }
            if (cr.margin.holds) {
                ++members;
                if (cr.certificate) ++bad;
                continue;
            }
            if (!cr.certificate) {
                ++bad;
                why = "missing certificate";
                continue;
            }
            const Certificate& c = *cr.certificate;
            if (!(c.value < 0) || pair(c.witness, x) != c.value ||
                !member(c.witness, dual_of(cone)).holds) {
                ++bad;
                why = "certificate failed re-verification";
            }
        }
        check(s, "certify " + cone_name(cone), bad == 0,
              std::to_string(members) + "/" + std::to_string(states_per_cone) +
                  " members" + (why.empty() ? "" : "; " + why));
    }
    return s;
}

Suite suite_consistency(int n_states, int n_ghz) {
    Suite s{"consistency", {}};
    Sampler smp;
    const auto& cat = cone_catalog();

    // index permutations for all six relabelings
    std::vector<std::array<Atom, 3>> perms;
    {
        std::array<int, 3> p{0, 1, 2};
        do {
            perms.push_back({static_cast<Atom>(p[0]), static_cast<Atom>(p[1]),
                             static_cast<Atom>(p[2])});
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::array<int, 4>> iperms;
    for (const auto& ap : perms) iperms.push_back(index_perm(ap));

    int mono_bad = 0, cov_bad = 0;
    for (int k = 0; k < n_states; ++k) {
        XState x = smp.state(k % 4 == 0);
        auto pr = rational_profile(profile(x));
        auto mg = state_margins(*pr);
        std::vector<bool> holds(cat.size());
        std::vector<Rat> slack(cat.size());
        for (size_t c = 0; c < cat.size(); ++c) {
            auto m = member_margin(mg, cat[c]);
            holds[c] = m.holds;
            slack[c] = m.slack;
        }
        for (auto [a, b] : lattice_edges())
            if (holds[a] && !holds[b]) ++mono_bad;
        for (size_t pi = 0; pi < perms.size(); ++pi) {
            ProfileQ pp;
            for (int i = 0; i < 4; ++i) {
                pp.c[iperms[pi][i]] = pr->c[i];
                pp.m[iperms[pi][i]] = pr->m[i];
            }
            auto pmg = state_margins(pp);
            for (size_t c = 0; c < cat.size(); ++c)
                if (member_margin(pmg, map_cone(cat[c], perms[pi])).slack != slack[c])
                    ++cov_bad;
        }
    }
    check(s, "lattice monotonicity", mono_bad == 0,
          std::to_string(n_states) + " states, " + std::to_string(mono_bad) + " violations");
    check(s, "relabeling covariance", cov_bad == 0,
          std::to_string(n_states) + " states x 6 relabelings, " +
              std::to_string(cov_bad) + " mismatches");

    // the index-table action agrees with dense conjugation on the full group
    {
        int bad = 0;
        for (int k = 0; k < 500; ++k) {
            XState x = smp.state(false);
            for (const PartyOp& op : party_group()) {
                XState fast = party_action(x, op);
                XState slow = xpart(dense_party_action(to_dense(x), op));
                if (!(fast == slow)) ++bad;
            }
        }
        check(s, "group action dense agreement", bad == 0);
    }

    // criteria membership vs H-representation on the GHZ-diagonal slice
    {
        std::vector<HPolyhedron> hreps;
        for (const ConeId& id : cat) hreps.push_back(ghz_hrep(id));
        int bad = 0;
        for (int k = 0; k < n_ghz; ++k) {
            GhzDiagonal g = smp.ghz_state();
            XState xs = g.as_xstate();
            auto pr = rational_profile(profile(xs));
            auto mg = state_margins(*pr);
            QVec v(8);
            for (int i = 0; i < 4; ++i) {
                v[i] = g.a[i];
                v[4 + i] = g.z[i];
            }
            for (size_t c = 0; c < cat.size(); ++c) {
                bool via_criteria = member_margin(mg, cat[c]).holds;
                bool via_hrep = true;
                for (const IVec& q : hreps[c].ineqs) {
                    Rat d = 0;
                    for (int j = 0; j < 8; ++j) d += v[j] * Rat(q[j]);
                    if (d < 0) {
                        via_hrep = false;
                        break;
                    }
                }
                if (via_criteria != via_hrep) ++bad;
            }
        }
        check(s, "criteria vs H-representation", bad == 0,
              std::to_string(n_ghz) + " GHZ states x 23 cones, " + std::to_string(bad) +
                  " disagreements");
    }
    return s;
}

Suite suite_fixtures() {
    Suite s{"fixtures", {}};
    try {
        check_catalog();
        check(s, "catalog self-check", true);
    } catch (const std::exception& e) {
        check(s, "catalog self-check", false, e.what());
    }

    check(s, "rho1 classification",
          member(rho1(), {Shape::Atom, Atom::A, false}).holds &&
              member(rho1(), {Shape::JoinAtomMeet, Atom::B, false}).holds &&
              !member(rho1(), {Shape::JoinOfMeets, Atom::A, false}).holds);
    check(s, "rho2 classification",
          member(rho2(), {Shape::Atom, Atom::A, false}).holds &&
              member(rho2(), {Shape::JoinAtomMeet, Atom::C, false}).holds &&
              !member(rho2(), {Shape::JoinOfMeets, Atom::A, false}).holds);
    {
        XState zero;
        LatticeProfile lp = lattice_profile(zero, true);
        bool all = lp.psd;
        for (const auto& m : lp.margins) all = all && m.holds;
        check(s, "zero state in every cone", all);
    }
    {
        GhzDiagonal g = {{1, 0, 0, 0}, {1, 0, 0, 0}};
        CertifyResult cr = certify(g.as_xstate(), {Shape::Top, Atom::A, false});
        check(s, "GHZ ray leaves the top cone",
              !cr.margin.holds && cr.certificate && cr.certificate->value < 0);
        CertifyResult cr2 = certify(g.as_xstate(), {Shape::Top, Atom::A, false});
        check(s, "certificates are deterministic",
              cr.certificate && cr2.certificate &&
                  cr.certificate->witness == cr2.certificate->witness);
    }
    {
        GhzDiagonal g = {{1, 1, 1, 1}, {4, 0, 0, 0}};
        bool rejected = false;
        try {
            certify(g.as_xstate(), {Shape::Top, Atom::A, false});
        } catch (const std::domain_error&) {
            rejected = true;
        }
        check(s, "certify rejects non-PSD input", rejected);
    }
    return s;
}

}  // namespace x3
