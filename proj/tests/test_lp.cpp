#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "x3ent/lp.hpp"

using namespace x3;

namespace {

LinCon con(std::vector<Rat> a, char rel, Rat b) { return {std::move(a), rel, std::move(b)}; }

// Exhaustive vertex oracle: every basic solution from n tight constraints
// (rows or nonnegativity bounds), checked for feasibility; returns the best
// objective value over feasible vertices, or nullopt if none is feasible.
// Valid for pointed feasible regions (x >= 0 guarantees pointedness), where
// an optimum, if attained, is attained at a vertex.
std::optional<Rat> brute_force(const LinProgram& lp) {
    const int n = lp.n;
    std::vector<std::vector<Rat>> rows;  // tightenable equalities: a.x = b
    std::vector<Rat> rhs;
    for (const LinCon& c : lp.cons) {
        rows.push_back(c.a);
        rhs.push_back(c.b);
    }
    for (int i = 0; i < n; ++i) {  // x_i = 0
        std::vector<Rat> e(n, 0);
        e[i] = 1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    const int m = static_cast<int>(rows.size());

    std::optional<Rat> best;
    std::vector<int> pick(n);
    auto feasible = [&](const std::vector<Rat>& x) {
        for (int i = 0; i < n; ++i)
            if (x[i] < 0) return false;
        for (const LinCon& c : lp.cons) {
            Rat v = 0;
            for (int i = 0; i < n; ++i) v += c.a[i] * x[i];
            if (c.rel == '<' && v > c.b) return false;
            if (c.rel == '>' && v < c.b) return false;
            if (c.rel == '=' && v != c.b) return false;
        }
        return true;
    };
    // iterate over all n-subsets of rows
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        // solve rows[idx] x = rhs[idx] by Gaussian elimination
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) a[r][c] = rows[idx[r]][c];
            a[r][n] = rhs[idx[r]];
        }
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            std::swap(a[col], a[piv]);
            for (int r = 0; r < n; ++r)
                if (r != col && a[r][col] != 0) {
                    Rat f = a[r][col] / a[col][col];
                    for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
                }
        }
        if (!singular) {
            std::vector<Rat> x(n);
            for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
            if (feasible(x)) {
                Rat v = 0;
                for (int i = 0; i < n; ++i) v += lp.obj[i] * x[i];
                if (!best || (lp.maximize ? v > *best : v < *best)) best = v;
            }
        }
        // next combination
        int k = n - 1;
        while (k >= 0 && idx[k] == m - n + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("textbook cases") {
    LinProgram lp;
    lp.n = 2;
    lp.obj = {1, 1};
    lp.maximize = true;
    lp.cons = {con({1, 1}, '<', 1)};
    LpResult r = lp_solve(lp);
    REQUIRE(r.status == LpResult::Optimal);
    CHECK(r.value == 1);
    CHECK(r.x[0] + r.x[1] == 1);

    lp.cons = {con({1, 0}, '<', -1)};  // x1 <= -1 with x1 >= 0
    CHECK(lp_solve(lp).status == LpResult::Infeasible);

    lp.cons.clear();
    CHECK(lp_solve(lp).status == LpResult::Unbounded);

    lp.maximize = false;  // min x1+x2, x >= 0, no constraints
    CHECK(lp_solve(lp).status == LpResult::Optimal);
    CHECK(lp_solve(lp).value == 0);

    // equality + surplus mix
    LinProgram eq;
    eq.n = 3;
    eq.obj = {2, 3, 1};
    eq.maximize = false;
    eq.cons = {con({1, 1, 1}, '=', 6), con({0, 1, 2}, '>', 4)};
    LpResult re = lp_solve(eq);
    REQUIRE(re.status == LpResult::Optimal);
    CHECK(re.value == 6);  // x = (0, 0, 6)
    CHECK(re.x == std::vector<Rat>{0, 0, 6});
}

TEST_CASE("Beale cycling instance terminates under Bland's rule") {
    // classic degenerate example that cycles under Dantzig pivoting
    LinProgram lp;
    lp.n = 4;
    lp.maximize = true;
    lp.obj = {Rat(3, 4), -150, Rat(1, 50), -6};
    lp.cons = {con({Rat(1, 4), -60, Rat(-1, 25), 9}, '<', 0),
               con({Rat(1, 2), -90, Rat(-1, 50), 3}, '<', 0),
               con({0, 0, 1, 0}, '<', 1)};
    LpResult r = lp_solve(lp);
    REQUIRE(r.status == LpResult::Optimal);
    CHECK(r.value == Rat(1, 20));
}

TEST_CASE("witness-domain programs") {
    // variables (r1..r4, u1..u4); W3 row and a normalization
    LinProgram lp;
    lp.n = 8;
    lp.maximize = true;
    lp.obj = {0, 0, 0, 0, 1, 0, 0, 0};  // max u1
    lp.cons = {con({1, 1, 1, 1, -1, -1, -1, -1}, '>', 0),
               con({1, 1, 1, 1, 1, 1, 1, 1}, '=', 1)};
    LpResult r = lp_solve(lp);
    REQUIRE(r.status == LpResult::Optimal);
    CHECK(r.value == Rat(1, 2));  // u1 = sum r = 1/2

    lp.cons = {con({1, 1, 1, 1, -1, -1, -1, -1}, '>', 0),
               con({1, 1, 1, 1, 0, 0, 0, 0}, '=', 1),
               con({0, 0, 0, 0, 1, 0, 0, 0}, '>', 2)};
    CHECK(lp_solve(lp).status == LpResult::Infeasible);  // u1 <= sum r = 1
}

TEST_CASE("determinism") {
    LinProgram lp;
    lp.n = 3;
    lp.maximize = true;
    lp.obj = {1, 1, 1};
    lp.cons = {con({1, 1, 0}, '<', 1), con({0, 1, 1}, '<', 1), con({1, 0, 1}, '<', 1)};
    LpResult a = lp_solve(lp), b = lp_solve(lp);
    CHECK(a.x == b.x);
    CHECK(a.value == Rat(3, 2));
}

TEST_CASE("random instances against the vertex oracle") {
    std::mt19937_64 rng(42);
    int optimal = 0, infeasible = 0, unbounded = 0;
    for (int t = 0; t < 300; ++t) {
        LinProgram lp;
        lp.n = 3;
        lp.maximize = rng() % 2;
        lp.obj.resize(lp.n);
        for (auto& v : lp.obj) v = static_cast<long>(rng() % 7) - 3;
        int m = 2 + rng() % 3;
        for (int i = 0; i < m; ++i) {
            LinCon c;
            c.a.resize(lp.n);
            for (auto& v : c.a) v = static_cast<long>(rng() % 7) - 3;
            c.b = static_cast<long>(rng() % 5) - 1;
            c.rel = "<>="[rng() % 3];
            lp.cons.push_back(c);
        }
        LpResult r = lp_solve(lp);
        auto best = brute_force(lp);
        if (r.status == LpResult::Optimal) {
            ++optimal;
            REQUIRE(best.has_value());
            CHECK(r.value == *best);
            // reported vertex is feasible and attains the value
            Rat v = 0;
            for (int i = 0; i < lp.n; ++i) {
                CHECK(r.x[i] >= 0);
                v += lp.obj[i] * r.x[i];
            }
            CHECK(v == r.value);
        } else if (r.status == LpResult::Infeasible) {
            ++infeasible;
            CHECK_FALSE(best.has_value());
        } else {
            ++unbounded;
            CHECK(best.has_value());  // pointed and feasible, just unbounded
        }
    }
    // the generator must exercise all three outcomes
    CHECK(optimal > 50);
    CHECK(infeasible > 20);
    CHECK(unbounded > 20);
}
