#pragma once

#include <vector>

#include "x3ent/rational.hpp"

namespace x3 {

// Exact rational linear programming over nonnegative variables, deterministic
// (two-phase primal simplex with Bland's rule). Small problems only.
struct LinCon {
    std::vector<Rat> a;
    char rel = '<';  // '<' means <=, '=' equality, '>' means >=
    Rat b;
};

struct LinProgram {
    int n = 0;  // number of variables, all constrained >= 0
    std::vector<LinCon> cons;
    std::vector<Rat> obj;
    bool maximize = false;
};

struct LpResult {
    enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
    Rat value;            // objective at the reported vertex
    std::vector<Rat> x;   // vertex (size n), valid when status == Optimal
};

LpResult lp_solve(const LinProgram& lp);

}  // namespace x3
