// Acceptance gate: the eight headline checks, with pinned sample counts.
// Prints one [PASS]/[FAIL] line per criterion; exit 1 if any fail.

#include <chrono>
#include <cstdio>
#include <future>

#include "x3ent/suites.hpp"

using namespace x3;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    const char* label;
    bool pass;
    std::string detail;
};

std::string failures(const Suite& s) {
    std::string out;
    for (const Check& c : s.checks)
        if (!c.pass) {
            out += "\n    failed: " + c.name;
            if (!c.detail.empty()) out += " -- " + c.detail;
        }
    return out;
}

}  // namespace

int main() {
    std::vector<Criterion> crit(8);

    // the two time-budgeted suites run first, alone, so their measured
    // runtimes are not inflated by CPU contention from the sampling suites
    auto timed = [](Suite (*fn)()) {
        auto t0 = Clock::now();
        Suite s = fn();
        return std::make_pair(std::move(s), seconds_since(t0));
    };
    auto r_table2 = timed(suite_table2);
    auto r_ident = timed(suite_identities);

    auto f_extrem = std::async(std::launch::async, suite_extremality);
    auto f_redun = std::async(std::launch::async, suite_redundancy);
    auto f_dual = std::async(std::launch::async, [] { return suite_duality(10000); });
    auto f_compl = std::async(std::launch::async, [] { return suite_completeness(1000); });
    auto f_consi = std::async(std::launch::async, [] { return suite_consistency(100000, 10000); });
    auto f_fix = std::async(std::launch::async, suite_fixtures);

    {
        auto& [s, secs] = r_table2;
        bool in_time = secs < 60.0;
        crit[0] = {"reference ray sets re-enumerate: counts (20,28,36,84,12,20,52,20,28), <60 s",
                   s.pass() && in_time,
                   (in_time ? "" : "\n    over time budget") + failures(s) + "\n    " +
                       std::to_string(secs) + " s"};
    }
    {
        Suite s = f_extrem.get();
        crit[1] = {"extremality certificates for every reference ray + hand-checked witnesses",
                   s.pass(), failures(s)};
    }
    {
        Suite rho = f_fix.get();
        // criterion 3 is the rho1/rho2 classification subset of the fixture suite
        bool ok = true;
        std::string det;
        for (const Check& c : rho.checks)
            if (c.name.find("rho") != std::string::npos && !c.pass) {
                ok = false;
                det += "\n    failed: " + c.name;
            }
        crit[2] = {"modularity counterexamples rho1/rho2 classify as frozen (exact mode)", ok,
                   det};
        // remaining fixture checks fold into criterion 4's detail if broken
        for (const Check& c : rho.checks)
            if (c.name.find("rho") == std::string::npos && !c.pass)
                crit[2].detail += "\n    (fixture) failed: " + c.name;
        crit[2].pass = crit[2].pass && rho.pass();
    }
    {
        auto& [s, secs] = r_ident;
        bool in_time = secs < 120.0;
        crit[3] = {"six lattice identities as exact ray-set equalities, <120 s",
                   s.pass() && in_time,
                   (in_time ? "" : "\n    over time budget") + failures(s) + "\n    " +
                       std::to_string(secs) + " s"};
    }
    {
        Suite s = f_redun.get();
        crit[4] = {"redundancy implications decide true, non-implications refuted", s.pass(),
                   failures(s)};
    }
    {
        Suite s = f_dual.get();
        crit[5] = {"duality: 10^4 criteria-passing pairs per cone, pairing >= 0 exactly",
                   s.pass(), failures(s)};
    }
    {
        Suite s = f_compl.get();
        crit[6] = {"certification completeness: 10^3 states per cone, certificate iff non-member",
                   s.pass(), failures(s)};
    }
    {
        Suite s = f_consi.get();
        crit[7] = {"consistency: monotonicity+covariance on 10^5 states, criteria=hrep on 10^4",
                   s.pass(), failures(s)};
    }

    bool all = true;
    for (size_t i = 0; i < crit.size(); ++i) {
        all = all && crit[i].pass;
        std::printf("[%s] %zu. %s%s\n", crit[i].pass ? "PASS" : "FAIL", i + 1,
                    crit[i].label, crit[i].detail.c_str());
    }
    return all ? 0 : 1;
}
