#include "x3ent/ghzpoly.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

namespace x3 {

namespace {

constexpr size_t kMaxIneqs = 256;
using ZeroSet = std::bitset<kMaxIneqs>;

Int idot(const IVec& a, const IVec& b) {
    Int v = 0;
    for (size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
    return v;
}

void make_primitive(IVec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Rank of a set of integer vectors (exact Gaussian elimination).
int irank(std::vector<QVec> rows) {
    int rank = 0;
    size_t dim = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

QVec to_qvec(const IVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

}  // namespace

IVec canonical_ray(const QVec& v) {
    Int den = 1;
    for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * den;
        out[i] = s.get_num();
    }
    make_primitive(out);
    return out;
}

HPolyhedron ghz_hrep(const ConeId& cone) {
    if (cone.dual) throw std::invalid_argument("ghz_hrep: expected a primal cone");
    HPolyhedron h;
    std::vector<LinForm8> forms = ghz_psd_forms();
    for (const StateIneq& q : criteria(cone))
        for (const LinForm8& f : ghz_forms(q)) forms.push_back(f);
    std::vector<IVec> rows;
    for (const LinForm8& f : forms) rows.push_back(canonical_ray(QVec(f.begin(), f.end())));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    h.ineqs = std::move(rows);
    return h;
}

DDResult extreme_rays(const HPolyhedron& h) {
    if (h.ineqs.size() > kMaxIneqs)
        throw std::invalid_argument("extreme_rays: too many inequalities");
    const int d = h.dim;

    struct Ray {
        IVec v;
        ZeroSet zs;
    };
    std::vector<IVec> lin;  // lineality basis
    for (int i = 0; i < d; ++i) {
        IVec e(d, 0);
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<Ray> rays;

    for (size_t idx = 0; idx < h.ineqs.size(); ++idx) {
        const IVec& hh = h.ineqs[idx];
        // lineality elimination first
        int pivot = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (idot(hh, lin[i]) != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot >= 0) {
            IVec l0 = lin[pivot];
            Int d0 = idot(hh, l0);
            if (d0 < 0) {
                for (Int& x : l0) x = -x;
                d0 = -d0;
            }
            std::vector<IVec> newlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                Int di = idot(hh, lin[i]);
                IVec w(d);
                for (int j = 0; j < d; ++j) w[j] = lin[i][j] * d0 - l0[j] * di;
                make_primitive(w);
                newlin.push_back(w);
            }
            std::vector<Ray> newrays;
            for (const Ray& r : rays) {
                Int di = idot(hh, r.v);
                IVec w(d);
                for (int j = 0; j < d; ++j) w[j] = r.v[j] * d0 - l0[j] * di;
                make_primitive(w);
                Ray nr{std::move(w), r.zs};
                nr.zs.set(idx);  // h . w = 0 by construction
                newrays.push_back(std::move(nr));
            }
            Ray r0;
            r0.v = l0;
            for (size_t j = 0; j < idx; ++j) r0.zs.set(j);  // orthogonal to all prior
            newrays.push_back(std::move(r0));
            lin = std::move(newlin);
            rays = std::move(newrays);
            continue;
        }

        // standard double-description step
        std::vector<Int> dv(rays.size());
        bool has_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            dv[i] = idot(hh, rays[i].v);
            if (dv[i] < 0) has_neg = true;
        }
        if (!has_neg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (dv[i] == 0) rays[i].zs.set(idx);
            continue;
        }
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (dv[i] > 0) next.push_back(rays[i]);
            if (dv[i] == 0) {
                next.push_back(rays[i]);
                next.back().zs.set(idx);
            }
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (dv[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (dv[n] >= 0) continue;
                // combinatorial adjacency of rays p and n
                ZeroSet t = rays[p].zs & rays[n].zs;
                bool adjacent = true;
                for (size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == n) continue;
                    if ((t & ~rays[o].zs).none()) adjacent = false;
                }
                if (!adjacent) continue;
                IVec w(d);
                for (int j = 0; j < d; ++j)
                    w[j] = rays[p].v[j] * (-dv[n]) + rays[n].v[j] * dv[p];
                make_primitive(w);
                Ray nr;
                nr.v = std::move(w);
                for (size_t j = 0; j <= idx; ++j)
                    if (idot(h.ineqs[j], nr.v) == 0) nr.zs.set(j);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    DDResult out;
    out.lineality = lin;
    if (!lin.empty()) return out;  // not pointed; rays would be meaningless

    for (Ray& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());

    // cross-check: every ray satisfies the system and is tight on a rank
    // d-1 subsystem
    for (const IVec& r : out.rays) {
        std::vector<QVec> tight;
        for (const IVec& q : h.ineqs) {
            Int v = idot(q, r);
            if (v < 0) throw std::logic_error("extreme_rays: ray violates system");
            if (v == 0) tight.push_back(to_qvec(q));
        }
        if (irank(tight) != d - 1)
            throw std::logic_error("extreme_rays: ray not extreme (tight rank)");
    }
    return out;
}

GhzDiagonal ray_to_state(const IVec& r) {
    GhzDiagonal g;
    for (int i = 0; i < 4; ++i) {
        g.a[i] = Rat(r[i]);
        g.z[i] = Rat(r[4 + i]);
    }
    return g;
}

IVec state_to_ray(const GhzDiagonal& g) {
    QVec v(8);
    for (int i = 0; i < 4; ++i) {
        v[i] = g.a[i];
        v[4 + i] = g.z[i];
    }
    return canonical_ray(v);
}

Rat slice_dot(const GhzDiagonal& w, const GhzDiagonal& psi) {
    Rat v = 0;
    for (int i = 0; i < 4; ++i) v += w.a[i] * psi.a[i] + w.z[i] * psi.z[i];
    return v;
}

ExtremeCheck verify_extreme(const IVec& ray, const std::vector<IVec>& all_rays) {
    // Separating-functional program over w = p - q (componentwise), boxed by
    // 0 <= p, q <= 4: every cone handled here contains the slice simplex
    // vertices and the unit anti-diagonal perturbations, which force any
    // normalized (sum of a-part = 1) dual functional into that box.
    const int d = 8;
    std::vector<IVec> rest;
    for (const IVec& r : all_rays)
        if (r != ray) rest.push_back(r);

    LinProgram lp;
    // vars: p_0..7, q_0..7, tp, tn  (w = p - q, t = tp - tn)
    lp.n = 2 * d + 2;
    auto wcoef = [&](LinCon& con, const IVec& psi) {
        for (int j = 0; j < d; ++j) {
            con.a[j] = Rat(psi[j]);
            con.a[d + j] = Rat(-psi[j]);
        }
    };
    {
        LinCon con;  // w . ray = 0
        con.a.assign(lp.n, Rat(0));
        wcoef(con, ray);
        con.rel = '=';
        con.b = 0;
        lp.cons.push_back(con);
    }
    for (const IVec& psi : rest) {
        LinCon con;  // w . psi - t >= 0
        con.a.assign(lp.n, Rat(0));
        wcoef(con, psi);
        con.a[2 * d] = -1;
        con.a[2 * d + 1] = 1;
        con.rel = '>';
        con.b = 0;
        lp.cons.push_back(con);
    }
    {
        LinCon con;  // normalization: sum of the a-part of w equals 1
        con.a.assign(lp.n, Rat(0));
        for (int j = 0; j < 4; ++j) {
            con.a[j] = 1;
            con.a[d + j] = -1;
        }
        con.rel = '=';
        con.b = 1;
        lp.cons.push_back(con);
    }
    for (int j = 0; j < 2 * d; ++j) {
        LinCon con;  // box
        con.a.assign(lp.n, Rat(0));
        con.a[j] = 1;
        con.rel = '<';
        con.b = 4;
        lp.cons.push_back(con);
    }
    lp.obj.assign(lp.n, Rat(0));
    lp.obj[2 * d] = 1;
    lp.obj[2 * d + 1] = -1;
    lp.maximize = true;

    LpResult r = lp_solve(lp);
    ExtremeCheck out;
    if (r.status == LpResult::Optimal && r.value > 0) {
        GhzDiagonal w;
        for (int i = 0; i < 4; ++i) {
            w.a[i] = r.x[i] - r.x[d + i];
            w.z[i] = r.x[4 + i] - r.x[d + 4 + i];
        }
        // exact re-verification of the separation
        if (slice_dot(w, ray_to_state(ray)) != 0)
            throw std::logic_error("verify_extreme: witness not tight on the ray");
        for (const IVec& psi : rest)
            if (slice_dot(w, ray_to_state(psi)) <= 0)
                throw std::logic_error("verify_extreme: witness not strict on the rest");
        out.extreme = true;
        out.witness = w;
        return out;
    }

    // No separating functional: exhibit a conic decomposition.
    LinProgram dec;
    dec.n = static_cast<int>(rest.size());
    for (int j = 0; j < d; ++j) {
        LinCon con;
        con.a.assign(dec.n, Rat(0));
        for (int k = 0; k < dec.n; ++k) con.a[k] = Rat(rest[k][j]);
        con.rel = '=';
        con.b = Rat(ray[j]);
        dec.cons.push_back(con);
    }
    dec.obj.assign(dec.n, Rat(0));
    LpResult rd = lp_solve(dec);
    if (rd.status != LpResult::Optimal)
        throw std::logic_error("verify_extreme: neither witness nor decomposition found");
    QVec check(d, 0);
    for (int k = 0; k < dec.n; ++k)
        if (rd.x[k] != 0) {
            out.decomposition.emplace_back(rd.x[k], rest[k]);
            for (int j = 0; j < d; ++j) check[j] += rd.x[k] * Rat(rest[k][j]);
        }
    for (int j = 0; j < d; ++j)
        if (check[j] != Rat(ray[j]))
            throw std::logic_error("verify_extreme: decomposition check failed");
    out.extreme = false;
    return out;
}

std::vector<IVec> join_rays(std::vector<IVec> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (size_t g = 0; g < gens.size();) {
        std::vector<const IVec*> rest;
        for (size_t k = 0; k < gens.size(); ++k)
            if (k != g) rest.push_back(&gens[k]);
        LinProgram lp;
        lp.n = static_cast<int>(rest.size());
        for (size_t j = 0; j < gens[g].size(); ++j) {
            LinCon con;
            con.a.assign(lp.n, Rat(0));
            for (int k = 0; k < lp.n; ++k) con.a[k] = Rat((*rest[k])[j]);
            con.rel = '=';
            con.b = Rat(gens[g][j]);
            lp.cons.push_back(con);
        }
        lp.obj.assign(lp.n, Rat(0));
        LpResult r = lp_solve(lp);
        if (r.status == LpResult::Optimal) {
            gens.erase(gens.begin() + static_cast<long>(g));
        } else {
            ++g;
        }
    }
    return gens;
}

bool ray_sets_equal(std::vector<IVec> a, std::vector<IVec> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace x3
