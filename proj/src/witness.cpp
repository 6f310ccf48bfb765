#include "x3ent/witness.hpp"

#include <stdexcept>

namespace x3 {

namespace {

// Rational bound on an exact value: side = +1 for an upper bound, -1 for a
// lower bound clamped at 0 (the values bounded here are all nonnegative).
Rat rat_bound(const RSum& v, unsigned prec, int side) {
    auto [lo, hi] = v.bounds(prec);
    if (side > 0) return hi;
    return lo < 0 ? Rat(0) : lo;
}

struct SurrogateLp {
    LinProgram lp;

    SurrogateLp(const ConeId& dual, const std::array<Rat, 4>& chi,
                const std::array<Rat, 4>& mlo) {
        lp.n = 8;
        for (const WitnessIneq& q : dual_criteria(dual))
            for (const LinForm8& f : linear_forms(q)) {
                LinCon con;
                con.a.assign(f.begin(), f.end());
                con.rel = '>';
                con.b = 0;
                lp.cons.push_back(con);
            }
        LinCon norm;
        norm.a.assign(8, Rat(1));
        norm.rel = '=';
        norm.b = 1;
        lp.cons.push_back(norm);
        lp.obj.assign(8, Rat(0));
        for (int i = 0; i < 4; ++i) {
            lp.obj[i] = chi[i];
            lp.obj[4 + i] = -mlo[i];
        }
    }
};

}  // namespace

CertifyResult certify(const XState& x, const ConeId& cone) {
    if (cone.dual) throw std::invalid_argument("certify: expected a primal cone");
    if (!is_psd(x)) throw std::domain_error("certify: input is not positive semidefinite");

    CertifyResult out;
    out.margin = member(x, cone);
    Profile pr = profile(x);
    const ConeId dual = dual_of(cone);

    if (out.margin.holds) {
        // Members must make every dual-feasible profile pair nonnegatively;
        // the surrogate objective only over-estimates, so this is a pure
        // sanity check.
        std::array<Rat, 4> chi, mlo;
        for (int i = 0; i < 4; ++i) {
            chi[i] = rat_bound(pr.c[i], 32, +1);
            mlo[i] = rat_bound(pr.m[i], 32, -1);
        }
        LpResult r = lp_solve(SurrogateLp(dual, chi, mlo).lp);
        if (r.status != LpResult::Optimal || r.value < 0)
            throw std::logic_error("certify: member failed the dual sanity bound");
        return out;
    }

    for (unsigned prec = 16; prec <= 4096; prec *= 2) {
        std::array<Rat, 4> chi, mlo;
        for (int i = 0; i < 4; ++i) {
            chi[i] = rat_bound(pr.c[i], prec, +1);
            mlo[i] = rat_bound(pr.m[i], prec, -1);
        }
        LpResult r = lp_solve(SurrogateLp(dual, chi, mlo).lp);
        if (r.status != LpResult::Optimal)
            throw std::logic_error("certify: surrogate program not optimal");
        if (r.value >= 0) continue;  // bounds still too loose

        // Degenerate diagonal entries (a_i = 0 xor b_i = 0) contribute a
        // controlled epsilon; size it against the certified surrogate gap.
        Rat degsum = 0;
        for (int i = 0; i < 4; ++i)
            if ((x.a[i] == 0) != (x.b[i] == 0)) degsum += x.a[i] + x.b[i];
        Rat eps2 = -r.value / (2 * (1 + degsum));

        for (unsigned lift_prec = prec; lift_prec <= 8192; lift_prec *= 2) {
            WitnessX w;
            for (int i = 0; i < 4; ++i) {
                const Rat ri = r.x[i], ui = r.x[4 + i];
                if (ri == 0) {
                    w.s[i] = w.t[i] = 0;
                } else if (x.a[i] > 0 && x.b[i] > 0) {
                    // sqrt(s t) = r exactly for s = r*g, t = r/g, any g > 0
                    Rat g = rat_bound(RSum::sqrt(x.b[i] / x.a[i]), lift_prec, +1);
                    w.s[i] = ri * g;
                    w.t[i] = ri / g;
                } else if (x.a[i] == 0 && x.b[i] == 0) {
                    w.s[i] = w.t[i] = ri;
                } else if (x.a[i] == 0) {
                    w.t[i] = eps2;
                    w.s[i] = ri * ri / eps2;
                } else {
                    w.s[i] = eps2;
                    w.t[i] = ri * ri / eps2;
                }
                if (ui == 0) {
                    w.u[i] = CRat(Rat(0));
                } else if (x.z[i].is_zero()) {
                    w.u[i] = CRat(-ui);
                } else {
                    // |u_i| = ui * |z_i| / m_hi <= ui keeps all criteria valid
                    Rat mhi = rat_bound(pr.m[i], lift_prec, +1);
                    w.u[i] = (-ui / mhi) * x.z[i].conj();
                }
            }

            Rat value = pair(w, x);
            Margin wm = member(w, dual);
            if (!wm.holds)
                throw std::logic_error("certify: lifted witness left the dual cone");
            if (value < 0) {
                Certificate cert;
                cert.cone = cone;
                cert.witness_cone = dual;
                cert.witness = w;
                cert.value = value;
                Profile wpr = profile(w);
                auto mg = witness_margins(wpr);
                for (const WitnessIneq& q : dual_criteria(dual)) {
                    const RSum& s = mg.of(q);
                    cert.transcript.push_back({to_string(q), s.sign() >= 0, s.approx()});
                }
                out.certificate = std::move(cert);
                return out;
            }
        }
    }
    throw std::logic_error("certify: precision cap exceeded");
}

namespace {

ImpliesResult implies_form(const std::vector<WitnessIneq>& assumed, const LinForm8& g,
                           const std::string& label) {
    LinProgram lp;
    lp.n = 8;
    for (const WitnessIneq& q : assumed)
        for (const LinForm8& f : linear_forms(q)) {
            LinCon con;
            con.a.assign(f.begin(), f.end());
            con.rel = '>';
            con.b = 0;
            lp.cons.push_back(con);
        }
    LinCon norm;
    norm.a.assign(8, Rat(1));
    norm.rel = '=';
    norm.b = 1;
    lp.cons.push_back(norm);
    lp.obj.assign(8, Rat(0));
    for (int j = 0; j < 8; ++j) lp.obj[j] = -g[j];  // maximize the violation
    lp.maximize = true;
    LpResult r = lp_solve(lp);
    if (r.status != LpResult::Optimal)
        throw std::logic_error("implies: violation program not optimal");
    ImpliesResult out;
    if (r.value > 0) {
        out.implied = false;
        for (int j = 0; j < 8; ++j) out.counterexample[j] = r.x[j];
        out.violated = label;
    } else {
        out.implied = true;
    }
    return out;
}

}  // namespace

ImpliesResult implies_part(const std::vector<WitnessIneq>& assumed,
                           const WitnessIneq& claimed, int part) {
    auto forms = linear_forms(claimed);
    if (part < 0 || part >= static_cast<int>(forms.size()))
        throw std::invalid_argument("implies_part: bad part index");
    return implies_form(assumed, forms[part],
                        to_string(claimed) + "#" + std::to_string(part));
}

ImpliesResult implies(const std::vector<WitnessIneq>& assumed, const WitnessIneq& claimed) {
    auto forms = linear_forms(claimed);
    for (size_t k = 0; k < forms.size(); ++k) {
        ImpliesResult r = implies_form(assumed, forms[k],
                                       to_string(claimed) + "#" + std::to_string(k));
        if (!r.implied) return r;
    }
    ImpliesResult ok;
    ok.implied = true;
    return ok;
}

}  // namespace x3
