// x3ent: classify three-qubit X-states against the partial-separability
// cone lattice, certify non-membership with dual-cone witnesses, and
// enumerate/verify the GHZ-diagonal extreme-ray structure.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "x3ent/json_io.hpp"
#include "x3ent/suites.hpp"

using namespace x3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return json::parse(f);
}

ConeId parse_primal_cone(const std::string& expr) {
    std::string err;
    auto pc = parse_cone(expr, &err);
    if (!pc) throw std::invalid_argument("bad cone expression \"" + expr + "\": " + err);
    if (pc->id.dual)
        throw std::invalid_argument("\"" + expr + "\" is a dual cone; states live in primal cones");
    return pc->id;
}

std::string ray_str(const IVec& r) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << r[i];
    os << "; ";
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << r[4 + i];
    os << ")";
    return os.str();
}

int cmd_classify(const std::string& input, bool force_exact, bool force_float,
                 const std::string& format) {
    bool float_seen = false, projected = false;
    XState x = state_from_json(read_json_input(input), &float_seen, &projected);
    bool exact = force_exact || (!force_float && !float_seen);
    LatticeProfile p = lattice_profile(x, exact);
    if (format == "json") {
        json j = lattice_profile_to_json(p);
        j["necessary_only"] = projected;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    const auto& cat = cone_catalog();
    std::cout << "psd: " << (p.psd ? "yes" : "no") << "   mode: "
              << (p.exact ? "exact" : "float") << "\n";
    if (projected)
        std::cout << "input projected to its X-part: verdicts are necessary conditions only\n";
    for (size_t i = 0; i < cat.size(); ++i) {
        std::cout << (p.margins[i].holds ? "  member      " : "  non-member  ")
                  << cone_name(cat[i]);
        std::cout << "   slack " << p.margins[i].slack;
        if (!p.margins[i].tightest.empty())
            std::cout << " at " << p.margins[i].tightest;
        std::cout << "\n";
    }
    std::cout << "minimal members:";
    for (int i : p.minimal_members) std::cout << " " << cone_name(cat[i]);
    std::cout << "\n";
    return kExitOk;
}

int cmd_certify(const std::string& input, const std::string& cone_expr,
                const std::string& format) {
    bool float_seen = false, projected = false;
    XState x = state_from_json(read_json_input(input), &float_seen, &projected);
    ConeId cone = parse_primal_cone(cone_expr);
    CertifyResult r = certify(x, cone);
    if (format == "json") {
        json j;
        j["cone"] = cone_name(cone);
        j["member"] = r.margin.holds;
        j["slack_approx"] = r.margin.slack.approx();
        j["tightest"] = r.margin.tightest;
        j["necessary_only"] = projected;
        if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (r.margin.holds) {
        std::cout << "member of " << cone_name(cone) << " (slack "
                  << r.margin.slack.str() << " at " << r.margin.tightest << ")\n";
        return kExitOk;
    }
    const Certificate& c = *r.certificate;
    std::cout << "non-member of " << cone_name(cone) << " (slack "
              << r.margin.slack.str() << " at " << r.margin.tightest << ")\n";
    std::cout << "witness in " << cone_name(c.witness_cone) << " with pairing "
              << format_rat(c.value) << ":\n";
    for (int i = 0; i < 4; ++i)
        std::cout << "  s" << i + 1 << "=" << format_rat(c.witness.s[i]) << " t" << i + 1
                  << "=" << format_rat(c.witness.t[i]) << " u" << i + 1 << "="
                  << format_crat(c.witness.u[i]) << "\n";
    return kExitOk;
}

int cmd_enumerate(const std::string& cone_expr, const std::string& format) {
    ConeId cone = parse_primal_cone(cone_expr);
    DDResult dd = extreme_rays(ghz_hrep(cone));
    if (format == "json") {
        json j;
        j["cone"] = cone_name(cone);
        j["count"] = dd.rays.size();
        j["rays"] = json::array();
        for (const IVec& r : dd.rays) {
            json row = json::array();
            for (const Int& v : r) row.push_back(v.get_str());
            j["rays"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << cone_name(cone) << ": " << dd.rays.size()
              << " extreme rays (a1..a4; z1..z4)\n";
    for (const IVec& r : dd.rays) std::cout << "  " << ray_str(r) << "\n";
    return kExitOk;
}

struct VerifyCounts {
    int pairs = 1000;    // duality pairs per cone
    int states = 100;    // completeness states per cone
    int samples = 2000;  // consistency random states
    int ghz = 1000;      // consistency GHZ-diagonal states
};

Suite run_suite(const std::string& name, const VerifyCounts& n) {
    if (name == "table2") return suite_table2();
    if (name == "extremality") return suite_extremality();
    if (name == "identities") return suite_identities();
    if (name == "redundancy") return suite_redundancy();
    if (name == "duality") return suite_duality(n.pairs);
    if (name == "completeness") return suite_completeness(n.states);
    if (name == "consistency") return suite_consistency(n.samples, n.ghz);
    if (name == "fixtures") return suite_fixtures();
    throw std::invalid_argument("unknown suite " + name);
}

int cmd_verify(const std::string& which, const VerifyCounts& n, const std::string& format) {
    std::vector<std::string> names;
    if (which == "all")
        names = {"fixtures",   "table2",     "extremality",  "identities",
                 "redundancy", "duality",    "completeness", "consistency"};
    else
        names = {which};

    std::vector<std::future<Suite>> jobs;
    for (const std::string& nm : names)
        jobs.push_back(std::async(std::launch::async,
                                  [&n, nm] { return run_suite(nm, n); }));
    std::vector<Suite> suites;
    for (auto& j : jobs) suites.push_back(j.get());

    bool all_pass = true;
    json report;
    report["suites"] = json::array();
    for (const Suite& s : suites) {
        all_pass = all_pass && s.pass();
        json js;
        js["name"] = s.name;
        js["pass"] = s.pass();
        js["checks"] = json::array();
        for (const Check& c : s.checks)
            js["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        report["suites"].push_back(js);
    }
    report["pass"] = all_pass;

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const Suite& s : suites) {
            std::cout << "suite " << s.name << ": " << (s.pass() ? "pass" : "FAIL") << "\n";
            for (const Check& c : s.checks) {
                std::cout << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.name;
                if (!c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
            }
        }
        std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

struct FixtureEntry {
    std::string name;
    std::string summary;
    json payload;
};

std::vector<FixtureEntry> fixture_registry() {
    std::vector<FixtureEntry> out;
    auto facts = [](std::initializer_list<std::pair<std::string, bool>> fs) {
        json j = json::array();
        for (const auto& [cone, member] : fs)
            j.push_back({{"cone", cone}, {"member", member}});
        return j;
    };
    {
        json j;
        j["state"] = state_to_json(rho1());
        j["expected_memberships"] = facts({{"A", true}, {"Bv(C^A)", true}, {"(A^B)v(A^C)", false}});
        out.push_back({"rho1", "modular-law gap state, member of A and Bv(C^A)", j});
    }
    {
        json j;
        j["state"] = state_to_json(rho2());
        j["expected_memberships"] = facts({{"A", true}, {"Cv(B^A)", true}, {"(A^B)v(A^C)", false}});
        out.push_back({"rho2", "modular-law gap state, member of A and Cv(B^A)", j});
    }
    for (const RaySetFixture& fx : reference_ray_sets()) {
        json j;
        j["cone"] = cone_name(fx.cone);
        j["count"] = fx.rays.size();
        j["rays"] = json::array();
        for (const IVec& r : fx.rays) {
            json row = json::array();
            for (const Int& v : r) row.push_back(v.get_str());
            j["rays"].push_back(row);
        }
        out.push_back({"rays:" + cone_name(fx.cone),
                       "reference extreme-ray set (" + std::to_string(fx.rays.size()) + " rays)",
                       j});
    }
    int k = 0;
    for (const ExtremeWitnessFixture& fx : extreme_witness_fixtures()) {
        json j;
        j["cone"] = cone_name(fx.cone);
        j["state"] = ghz_to_json(fx.state);
        j["witness"] = ghz_to_json(fx.witness);
        out.push_back({"witness:" + std::to_string(k++),
                       "extremality witness for a " + cone_name(fx.cone) + " ray", j});
    }
    k = 0;
    for (const ImplicationFixture& fx : implication_fixtures()) {
        json j;
        j["assumed"] = json::array();
        for (const WitnessIneq& q : fx.assumed) j["assumed"].push_back(to_string(q));
        j["claimed"] = to_string(fx.claimed);
        if (fx.part >= 0) j["part"] = fx.part;
        j["expected"] = fx.expected;
        if (!fx.expected) {
            json cex = json::array();
            for (const Rat& v : fx.counterexample) cex.push_back(format_rat(v));
            j["counterexample"] = cex;
        }
        out.push_back({"implication:" + std::to_string(k++),
                       std::string(fx.expected ? "implication" : "non-implication") + " " +
                           to_string(fx.claimed),
                       j});
    }
    return out;
}

int cmd_fixtures(const std::string& action, const std::string& name) {
    auto reg = fixture_registry();
    if (action == "list") {
        for (const FixtureEntry& f : reg)
            std::cout << f.name << "  --  " << f.summary << "\n";
        return kExitOk;
    }
    for (const FixtureEntry& f : reg)
        if (f.name == name) {
            std::cout << f.payload.dump(2) << "\n";
            return kExitOk;
        }
    std::cerr << "no fixture named \"" << name << "\"\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"x3ent: partial-separability cone lattice for three-qubit X-states"};
    app.require_subcommand(1);

    std::string input = "-", cone_expr, format = "text";
    bool force_exact = false, force_float = false;
    VerifyCounts counts;
    std::string suite = "all", fixture_name;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "full lattice membership profile");
    classify->add_option("input", input, "state JSON file, or - for stdin");
    classify->add_flag("--exact", force_exact, "exact arithmetic verdicts");
    classify->add_flag("--float", force_float, "floating verdicts with tolerance");
    add_format(classify);

    CLI::App* certify = app.add_subcommand("certify", "membership with witness certificate");
    certify->add_option("input", input, "state JSON file, or - for stdin");
    certify->add_option("--cone", cone_expr, "cone expression, e.g. \"(A^B)v(A^C)\"")
        ->required();
    add_format(certify);

    CLI::App* enumerate = app.add_subcommand("enumerate", "GHZ-diagonal extreme rays");
    enumerate->add_option("--cone", cone_expr, "primal cone expression")->required();
    enumerate->add_flag("--ghz", "restrict to the GHZ-diagonal slice (the only mode)");
    add_format(enumerate);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("--suite", suite,
                     "table2|extremality|identities|redundancy|duality|completeness|"
                     "consistency|fixtures|all")
        ->check(CLI::IsMember({"table2", "extremality", "identities", "redundancy",
                               "duality", "completeness", "consistency", "fixtures",
                               "all"}));
    verify->add_option("--pairs", counts.pairs, "duality pairs per cone");
    verify->add_option("--states", counts.states, "completeness states per cone");
    verify->add_option("--samples", counts.samples, "consistency random states");
    verify->add_option("--ghz-samples", counts.ghz, "consistency GHZ-diagonal states");
    add_format(verify);

    CLI::App* fixtures = app.add_subcommand("fixtures", "embedded reference data");
    CLI::App* fx_list = fixtures->add_subcommand("list", "list fixture names");
    CLI::App* fx_show = fixtures->add_subcommand("show", "print one fixture as JSON");
    fx_show->add_option("name", fixture_name, "fixture name")->required();
    fixtures->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            if (force_exact && force_float)
                throw std::invalid_argument("--exact and --float are mutually exclusive");
            return cmd_classify(input, force_exact, force_float, format);
        }
        if (certify->parsed()) return cmd_certify(input, cone_expr, format);
        if (enumerate->parsed()) return cmd_enumerate(cone_expr, format);
        if (verify->parsed()) return cmd_verify(suite, counts, format);
        if (fixtures->parsed())
            return cmd_fixtures(fx_list->parsed() ? "list" : "show", fixture_name);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
