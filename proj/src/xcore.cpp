#include "x3ent/xcore.hpp"

#include <cmath>
#include <stdexcept>

namespace x3 {

XState GhzDiagonal::as_xstate() const {
    XState x;
    x.a = a;
    x.b = a;
    for (int i = 0; i < 4; ++i) x.z[i] = CRat(z[i]);
    return x;
}

WitnessX GhzDiagonal::as_witness() const {
    WitnessX w;
    w.s = a;
    w.t = a;
    for (int i = 0; i < 4; ++i) w.u[i] = CRat(z[i]);
    return w;
}

Dense8 to_dense(const XState& x) {
    Dense8 m{};
    for (int i = 0; i < 4; ++i) {
        m[i][i] = CRat(x.a[i]);
        m[7 - i][7 - i] = CRat(x.b[i]);
        m[i][7 - i] = x.z[i];
        m[7 - i][i] = x.z[i].conj();
    }
    return m;
}

XState xpart(const Dense8& m) {
    XState x;
    for (int i = 0; i < 4; ++i) {
        x.a[i] = m[i][i].re;
        x.b[i] = m[7 - i][7 - i].re;
        x.z[i] = m[i][7 - i];
    }
    return x;
}

bool is_selfadjoint(const Dense8& m) {
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k)
            if (m[j][k] != m[k][j].conj()) return false;
    return true;
}

Rat pair(const XState& x, const XState& y) {
    Rat v = 0;
    for (int i = 0; i < 4; ++i) {
        v += x.a[i] * y.a[i] + x.b[i] * y.b[i];
        // both upper anti-diagonal entries plus their conjugates
        v += 2 * (x.z[i].re * y.z[i].re - x.z[i].im * y.z[i].im);
    }
    return v;
}

Rat dense_pair(const Dense8& x, const Dense8& y) {
    CRat v;
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) v = v + x[j][k] * y[j][k];
    if (v.im != 0) throw std::domain_error("dense_pair: inputs not self-adjoint");
    return v.re;
}

bool is_psd(const XState& x) {
    for (int i = 0; i < 4; ++i) {
        if (x.a[i] < 0 || x.b[i] < 0) return false;
        if (x.a[i] * x.b[i] < x.z[i].norm()) return false;
    }
    return true;
}

Profile profile(const XState& x) {
    Profile p;
    for (int i = 0; i < 4; ++i) {
        if (x.a[i] < 0 || x.b[i] < 0)
            throw std::domain_error("profile: negative diagonal entry");
        p.c[i] = RSum::sqrt(x.a[i] * x.b[i]);
        p.m[i] = RSum::sqrt(x.z[i].norm());
    }
    return p;
}

Profile profile(const WitnessX& w) { return profile(w.as_xstate()); }

std::optional<ProfileQ> rational_profile(const Profile& p) {
    ProfileQ q;
    for (int i = 0; i < 4; ++i) {
        if (!p.c[i].is_rational() || !p.m[i].is_rational()) return std::nullopt;
        q.c[i] = p.c[i].as_rational();
        q.m[i] = p.m[i].as_rational();
    }
    return q;
}

ProfileD approx_profile(const XState& x) {
    ProfileD p;
    for (int i = 0; i < 4; ++i) {
        p.c[i] = std::sqrt(to_double(x.a[i]) * to_double(x.b[i]));
        p.m[i] = std::sqrt(to_double(x.z[i].norm()));
    }
    return p;
}

ProfileD approx_profile(const WitnessX& w) { return approx_profile(w.as_xstate()); }

std::array<int, 8> basis_map(const PartyOp& op) {
    std::array<int, 8> map{};
    for (int k = 0; k < 8; ++k) {
        int bits[3] = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
        int out[3] = {0, 0, 0};
        for (int p = 0; p < 3; ++p) out[op.perm[p]] = bits[p];
        for (int p = 0; p < 3; ++p) out[p] ^= op.flip[p] ? 1 : 0;
        map[k] = (out[0] << 2) | (out[1] << 1) | out[2];
    }
    return map;
}

PartyOp compose(const PartyOp& f, const PartyOp& g) {
    PartyOp h;
    for (int p = 0; p < 3; ++p) h.perm[p] = f.perm[g.perm[p]];
    // flips read off the composed basis map: image of index 0 is pure flips
    auto mf = basis_map(f), mg = basis_map(g);
    int z = mf[mg[0]];
    h.flip = {((z >> 2) & 1) != 0, ((z >> 1) & 1) != 0, (z & 1) != 0};
    return h;
}

PartyOp inverse(const PartyOp& op) {
    PartyOp inv;
    for (int p = 0; p < 3; ++p) inv.perm[op.perm[p]] = p;
    // flips read off the inverted basis map: preimage of index 0
    auto m = basis_map(op);
    std::array<int, 8> mi{};
    for (int k = 0; k < 8; ++k) mi[m[k]] = k;
    int z = mi[0];
    inv.flip = {((z >> 2) & 1) != 0, ((z >> 1) & 1) != 0, (z & 1) != 0};
    return inv;
}

std::vector<PartyOp> party_permutations() {
    std::vector<PartyOp> out;
    std::array<int, 3> p{0, 1, 2};
    do {
        PartyOp op;
        op.perm = p;
        out.push_back(op);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<PartyOp> party_group() {
    std::vector<PartyOp> out;
    for (const PartyOp& base : party_permutations())
        for (int f = 0; f < 8; ++f) {
            PartyOp op = base;
            op.flip = {(f & 4) != 0, (f & 2) != 0, (f & 1) != 0};
            out.push_back(op);
        }
    return out;
}

Dense8 dense_party_action(const Dense8& m, const PartyOp& op) {
    auto bm = basis_map(op);
    Dense8 out{};
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) out[bm[j]][bm[k]] = m[j][k];
    return out;
}

XState party_action(const XState& x, const PartyOp& op) {
    auto bm = basis_map(op);
    XState out;
    for (int j = 0; j < 8; ++j) {
        const Rat& dv = j <= 3 ? x.a[j] : x.b[7 - j];
        int r = bm[j];
        (r <= 3 ? out.a[r] : out.b[7 - r]) = dv;
        CRat zv = j <= 3 ? x.z[j] : x.z[7 - j].conj();
        if (r <= 3) out.z[r] = zv;
    }
    return out;
}

WitnessX party_action(const WitnessX& w, const PartyOp& op) {
    XState y = party_action(w.as_xstate(), op);
    return {y.a, y.b, y.z};
}

}  // namespace x3
