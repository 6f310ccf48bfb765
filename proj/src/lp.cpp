#include "x3ent/lp.hpp"

#include <stdexcept>

namespace x3 {

namespace {

// Dense tableau: m rows over ncols structural+slack+artificial columns plus
// the RHS in column ncols. basis[i] is the variable owning row i. The cost
// row holds reduced costs (minimization) with the negated objective value in
// its RHS slot.
struct Tableau {
    int ncols = 0;
    std::vector<std::vector<Rat>> row;  // m x (ncols + 1)
    std::vector<Rat> cost;              // ncols + 1
    std::vector<int> basis;

    void pivot(int r, int c) {
        Rat p = row[r][c];
        for (auto& v : row[r]) v /= p;
        for (size_t i = 0; i < row.size(); ++i) {
            if (static_cast<int>(i) == r || row[i][c] == 0) continue;
            Rat f = row[i][c];
            for (int j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
        }
        if (cost[c] != 0) {
            Rat f = cost[c];
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * row[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; returns false on unboundedness.
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i][enter] <= 0) continue;
                Rat ratio = row[i][ncols] / row[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_solve(const LinProgram& lp) {
    const int n = lp.n;
    const int m = static_cast<int>(lp.cons.size());
    for (const auto& c : lp.cons)
        if (static_cast<int>(c.a.size()) != n)
            throw std::invalid_argument("lp_solve: constraint size mismatch");
    if (static_cast<int>(lp.obj.size()) != n)
        throw std::invalid_argument("lp_solve: objective size mismatch");

    // Count extra columns.
    int nslack = 0, nart = 0;
    for (const auto& c : lp.cons) {
        if (c.rel != '=') ++nslack;
        // after normalizing b >= 0: '<' gets a slack basis; '>' and '='
        // need an artificial
    }

    Tableau t;
    std::vector<char> rels(m);
    std::vector<std::vector<Rat>> rows(m);
    std::vector<Rat> rhs(m);
    for (int i = 0; i < m; ++i) {
        rows[i] = lp.cons[i].a;
        rhs[i] = lp.cons[i].b;
        rels[i] = lp.cons[i].rel;
        if (rhs[i] < 0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (rels[i] == '<') rels[i] = '>';
            else if (rels[i] == '>') rels[i] = '<';
        }
    }
    nart = 0;
    for (int i = 0; i < m; ++i)
        if (rels[i] != '<') ++nart;
    t.ncols = n + nslack + nart;
    t.row.assign(m, std::vector<Rat>(t.ncols + 1, 0));
    t.basis.assign(m, -1);
    int scol = n, acol = n + nslack;
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.row[i][j] = rows[i][j];
        t.row[i][t.ncols] = rhs[i];
        if (rels[i] == '<') {
            t.row[i][scol] = 1;
            t.basis[i] = scol++;
        } else if (rels[i] == '>') {
            t.row[i][scol] = -1;
            ++scol;
            t.row[i][acol] = 1;
            t.basis[i] = acol++;
            art_rows.push_back(i);
        } else {
            t.row[i][acol] = 1;
            t.basis[i] = acol++;
            art_rows.push_back(i);
        }
    }

    const int first_art = n + nslack;
    LpResult out;
    if (nart > 0) {
        // Phase 1: minimize the sum of artificials.
        t.cost.assign(t.ncols + 1, 0);
        for (int j = first_art; j < t.ncols; ++j) t.cost[j] = 1;
        for (int i : art_rows)
            for (int j = 0; j <= t.ncols; ++j) t.cost[j] -= t.row[i][j];
        if (!t.run()) throw std::logic_error("lp_solve: phase 1 unbounded");
        if (-t.cost[t.ncols] != 0) {
            out.status = LpResult::Infeasible;
            return out;
        }
        // Remove lingering artificials from the basis.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < first_art) continue;
            int piv = -1;
            for (int j = 0; j < first_art; ++j)
                if (t.row[i][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv >= 0) t.pivot(i, piv);
            // else: redundant row, harmless to keep with an artificial stuck
            // at value zero (the column is barred from re-entering below)
        }
    }

    // Phase 2.
    t.cost.assign(t.ncols + 1, 0);
    for (int j = 0; j < n; ++j) t.cost[j] = lp.maximize ? -lp.obj[j] : lp.obj[j];
    for (int i = 0; i < m; ++i) {
        if (t.cost[t.basis[i]] == 0) continue;
        Rat f = t.cost[t.basis[i]];
        for (int j = 0; j <= t.ncols; ++j) t.cost[j] -= f * t.row[i][j];
    }
    // Bar artificial columns from re-entering.
    for (int j = first_art; j < t.ncols; ++j)
        if (t.cost[j] < 0) t.cost[j] = 0;  // never pick an artificial
    // Re-run with Bland but skipping artificial columns: simplest is to give
    // them prohibitive reduced cost by zeroing negatives (done above); they
    // can still be chosen if cost drifts negative after pivots, so clamp in
    // a loop.
    for (;;) {
        bool opt = true;
        for (int j = first_art; j < t.ncols; ++j)
            if (t.cost[j] < 0) t.cost[j] = 0;
        int enter = -1;
        for (int j = 0; j < first_art; ++j)
            if (t.cost[j] < 0) {
                enter = j;
                opt = false;
                break;
            }
        if (opt) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t.row[i][enter] <= 0) continue;
            Rat ratio = t.row[i][t.ncols] / t.row[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            out.status = LpResult::Unbounded;
            return out;
        }
        t.pivot(leave, enter);
    }

    out.status = LpResult::Optimal;
    out.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) out.x[t.basis[i]] = t.row[i][t.ncols];
    out.value = 0;
    for (int j = 0; j < n; ++j) out.value += lp.obj[j] * out.x[j];
    return out;
}

}  // namespace x3
