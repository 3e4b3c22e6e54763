// Command-line front end: parameter classification, bound evaluation,
// code construction, and verification pipelines with JSON/text output.
//
// Exit codes: 0 = success, 1 = verification failure, 2 = usage or
// parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/construct.hpp"
#include "lrc/json_io.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"

namespace {

using nlohmann::json;

json regime_to_json(const lrc::RegimeLabel& r) {
    return json{{"leaf", r.leaf},
                {"conditions", r.conditions},
                {"citations", r.citations}};
}

json params_to_json(const lrc::LrcParams& p) {
    return json{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"delta", p.delta},
                {"w", p.w}, {"m", p.m}, {"u", p.u}, {"v", p.v}};
}

json report_to_json(const lrc::BoundReport& rep) {
    json j{{"params", params_to_json(rep.params)},
           {"eq1", rep.eq1},
           {"eq2", rep.eq2},
           {"cor5", rep.cor5},
           {"cor7", json{{"applicable", rep.cor7_ok}}},
           {"cor8", json{{"applicable", rep.cor8_ok}}},
           {"cor10_unachievable", rep.cor10},
           {"regime", regime_to_json(rep.regime)}};
    if (rep.cor7) j["cor7"]["value"] = *rep.cor7;
    if (rep.cor8) j["cor8"]["value"] = *rep.cor8;
    if (rep.dmax) j["dmax"] = *rep.dmax;
    if (rep.M) j["M"] = *rep.M;
    if (rep.improved) j["improved"] = *rep.improved;
    return j;
}

void print_report_text(const lrc::BoundReport& rep) {
    const auto& p = rep.params;
    std::cout << "parameters: n=" << p.n << " k=" << p.k << " r=" << p.r
              << " delta=" << p.delta << " | w=" << p.w << " m=" << p.m
              << " u=" << p.u << " v=" << p.v << "\n";
    std::cout << "regime: " << rep.regime.leaf << "\n";
    std::cout << "conditions:\n";
    for (const auto& c : rep.regime.conditions)
        std::cout << "  - " << c << "\n";
    if (!rep.regime.citations.empty()) {
        std::cout << "citations:\n";
        for (const auto& c : rep.regime.citations)
            std::cout << "  - " << c << "\n";
    }
    std::cout << "bounds:\n";
    std::cout << "  eq1  (Singleton)            = " << rep.eq1 << "\n";
    std::cout << "  eq2  (locality Singleton)   = " << rep.eq2 << "\n";
    std::cout << "  cor5 (disjoint-cover slack) = " << rep.cor5 << "\n";
    if (rep.cor7)
        std::cout << "  cor7 (tight, m>=delta)      = " << *rep.cor7 << "\n";
    else
        std::cout << "  cor7: not applicable\n";
    if (rep.cor8)
        std::cout << "  cor8 (tight, m<=delta-1)    = " << *rep.cor8 << "\n";
    else
        std::cout << "  cor8: not applicable\n";
    if (rep.dmax)
        std::cout << "  dmax (exact optimum)        = " << *rep.dmax << "\n";
    else
        std::cout << "  dmax: not determined by the closed forms\n";
    if (rep.improved)
        std::cout << "  improved (M=" << *rep.M << ")            = "
                  << *rep.improved << "\n";
    std::cout << "  eq2-unachievable by cor10: " << (rep.cor10 ? "yes" : "no")
              << "\n";
}

int run_classify(std::size_t n, std::size_t k, std::size_t r,
                 std::size_t delta, std::optional<std::size_t> m_param,
                 bool as_json) {
    lrc::LrcParams p = lrc::decompose(n, k, r, delta);
    lrc::BoundReport rep = lrc::bound_report(p, m_param);
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report_text(rep);
    return 0;
}

int run_bound(const std::string& kind, std::size_t n, std::size_t k,
              std::size_t r, std::size_t delta,
              std::optional<std::size_t> m_param, bool as_json) {
    lrc::LrcParams p = lrc::decompose(n, k, r, delta);
    std::int64_t value = 0;
    if (kind == "eq2") {
        value = lrc::eq2_bound(p);
    } else if (kind == "improved") {
        if (!m_param) {
            std::cerr << "error: --kind improved requires --M\n";
            return 2;
        }
        value = lrc::improved_bound(p, *m_param);
    } else if (kind == "cor5") {
        value = lrc::cor5_bound(p);
    } else if (kind == "cor7") {
        value = lrc::cor7_bound(p);
    } else if (kind == "cor8") {
        value = lrc::cor8_bound(p);
    } else if (kind == "dmax") {
        auto d = lrc::dmax_formula(p);
        if (!d) {
            std::cerr << "error: dmax preconditions do not hold for these "
                         "parameters\n";
            return 2;
        }
        value = *d;
    } else {
        std::cerr << "error: unknown bound kind '" << kind
                  << "' (expected eq2|improved|cor5|cor7|cor8|dmax)\n";
        return 2;
    }
    if (as_json)
        std::cout << json{{"kind", kind}, {"value", value}}.dump() << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

int run_phi(std::size_t r, std::size_t delta, std::uint64_t a,
            std::uint64_t b, bool as_json) {
    const std::uint64_t value = lrc::phi(r, delta, a, b);
    if (as_json)
        std::cout << json{{"phi", value}}.dump() << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

int run_construct(const std::string& variant, std::size_t r,
                  std::size_t delta, std::size_t m, std::size_t u,
                  std::size_t v, std::size_t w, std::uint64_t q, unsigned e,
                  const std::string& out, bool as_json) {
    if (variant != "A" && variant != "B") {
        std::cerr << "error: --variant must be A or B\n";
        return 2;
    }
    lrc::ConstructionPlan plan =
        lrc::make_plan(variant[0], r, delta, m, u, v, w, q, e);
    lrc::LinearCode code = lrc::construct(plan);
    lrc::write_code_file(out, code, plan);
    if (as_json)
        std::cout << json{{"n", code.n},
                          {"k", code.k},
                          {"predicted_d", plan.predicted_distance},
                          {"out", out}}
                         .dump()
                  << "\n";
    else
        std::cout << "n=" << code.n << " k=" << code.k
                  << " predicted_d=" << plan.predicted_distance
                  << " written to " << out << "\n";
    return 0;
}

int run_verify(const std::string& file, std::optional<std::size_t> r,
               std::optional<std::size_t> delta,
               std::optional<std::size_t> expect_d, bool as_json) {
    auto [code, plan] = lrc::read_code_file(file);
    if (!code.H) {
        lrc::Matrix h = lrc::kernel(code.G);
        code = lrc::make_code(code.G, h);
    }

    lrc::VerifyReport rep;
    if (plan) {
        if ((r && *r != plan->params.r) ||
            (delta && *delta != plan->params.delta)) {
            std::cerr << "error: given r/delta do not match the plan stored "
                         "in the file\n";
            return 2;
        }
        rep = lrc::verify_optimal(code, *plan);
        if (expect_d)
            rep.checks.push_back(
                {"expected-distance", *expect_d == plan->predicted_distance,
                 "plan predicts d = " +
                     std::to_string(plan->predicted_distance) +
                     ", expected " + std::to_string(*expect_d)});
    } else {
        if (!r || !delta) {
            std::cerr << "error: verification without plan metadata requires "
                         "--r and --delta\n";
            return 2;
        }
        lrc::RepairFamily gamma = lrc::all_repair_sets(code, *r, *delta);
        if (auto miss = lrc::first_uncovered(gamma)) {
            rep.checks.push_back({"coverage", false,
                                  "no repair set covers coordinate " +
                                      std::to_string(*miss + 1)});
        } else {
            rep.checks.push_back(
                {"coverage", true,
                 "all coordinates lie in some (r,delta)-repair set"});
            lrc::BoundWitness bw = lrc::bound_witness(code, *r, *delta);
            rep.checks.push_back(
                {"distance-bound", true,
                 "certified d <= " + std::to_string(bw.distance_bound) +
                     " (case " + bw.case_label + ", M = " +
                     std::to_string(bw.M) + ")"});
            lrc::DistanceResult dist = lrc::min_distance(
                code, lrc::DistanceMethod::columns, bw.distance_bound);
            rep.checks.push_back(
                {"distance", dist.exact,
                 dist.exact ? "d = " + std::to_string(dist.value)
                            : "no dependency found up to the certified "
                              "bound; inconsistent state"});
            if (expect_d)
                rep.checks.push_back(
                    {"expected-distance",
                     dist.exact && dist.value == *expect_d,
                     "measured d = " + std::to_string(dist.value) +
                         ", expected " + std::to_string(*expect_d)});
        }
    }

    if (as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"checks", checks}, {"ok", rep.ok()}}.dump(2)
                  << "\n";
    } else {
        for (const auto& c : rep.checks)
            std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
                      << c.detail << ")\n";
        std::cout << (rep.ok() ? "all checks passed" : "verification failed")
                  << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_distance(const std::string& file, const std::string& method,
                 std::optional<std::size_t> cap, bool as_json) {
    auto [code, plan] = lrc::read_code_file(file);
    (void)plan;
    if (!code.H) code = lrc::make_code(code.G, lrc::kernel(code.G));
    auto parsed_method = lrc::distance_method_from_string(method);
    if (!parsed_method) {
        std::cerr << "error: unknown method '" << method
                  << "' (expected codewords|columns|lemma1)\n";
        return 2;
    }
    lrc::DistanceResult res = lrc::min_distance(code, *parsed_method, cap);
    if (as_json)
        std::cout << json{{"value", res.value}, {"exact", res.exact}}.dump()
                  << "\n";
    else if (res.exact)
        std::cout << res.value << "\n";
    else
        std::cout << "greater than " << res.value << "\n";
    return 0;
}

int run_ecf(const std::string& file, std::size_t r, std::size_t delta,
            const std::optional<std::string>& code_file, bool as_json) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open file for reading: " << file << "\n";
        return 2;
    }
    json j;
    in >> j;
    lrc::RepairFamily fam = lrc::family_from_json(j);

    const bool covers = lrc::covers_all(fam);
    const bool essential = lrc::is_ecf(fam, r + delta - 1);
    const bool c1 = lrc::condition_c1(fam.blocks, delta);
    const bool c2 = lrc::condition_c2(fam.blocks, delta);
    lrc::Breakup bk = lrc::break_condition_c3(fam, delta);

    std::optional<lrc::BreakupExtension> ext;
    if (code_file) {
        auto [code, plan] = lrc::read_code_file(*code_file);
        (void)plan;
        if (code.n != fam.n) {
            std::cerr << "error: family and code lengths differ\n";
            return 2;
        }
        for (std::size_t i = 0; i < fam.blocks.size(); ++i)
            if (!lrc::is_repair_set(code, fam.blocks[i], r, delta)) {
                std::cerr << "error: block " << i + 1
                          << " is not an (r,delta)-repair set of the given "
                             "code\n";
                return 2;
            }
        ext = lrc::extend_breakup(code, fam, bk);
    }

    auto one_based = [](const std::vector<std::size_t>& xs) {
        std::vector<std::size_t> out;
        for (auto x : xs) out.push_back(x + 1);
        return out;
    };

    if (as_json) {
        json out{{"family", lrc::family_to_json(fam)},
                 {"covers_all", covers},
                 {"is_ecf", essential},
                 {"overlap", lrc::overlap(fam.blocks)},
                 {"C1", c1},
                 {"C2", c2},
                 {"C3", !c2},
                 {"V1", one_based(bk.v1)},
                 {"V1_prime", one_based(bk.v1_prime)}};
        if (ext) {
            out["V1_star"] = one_based(ext->v1_star);
            out["upsilon"] = one_based(ext->upsilon);
            out["M"] = ext->M;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n = " << fam.n << ", blocks = " << fam.blocks.size()
                  << "\n";
        for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
            std::cout << "  S" << i + 1 << " = {";
            for (std::size_t j = 0; j < fam.blocks[i].size(); ++j)
                std::cout << (j ? "," : "") << fam.blocks[i][j] + 1;
            std::cout << "}\n";
        }
        std::cout << "covers all coordinates: " << (covers ? "yes" : "no")
                  << "\n";
        std::cout << "essential covering family (block cap r+delta-1): "
                  << (essential ? "yes" : "no") << "\n";
        std::cout << "overlap D = " << lrc::overlap(fam.blocks) << "\n";
        std::cout << "C1: " << (c1 ? "yes" : "no") << ", C2: "
                  << (c2 ? "yes" : "no") << ", C3: " << (c2 ? "no" : "yes")
                  << "\n";
        auto print_idx = [&](const char* name,
                             const std::vector<std::size_t>& xs) {
            std::cout << name << " = {";
            for (std::size_t i = 0; i < xs.size(); ++i)
                std::cout << (i ? "," : "") << "S" << xs[i] + 1;
            std::cout << "}\n";
        };
        print_idx("V1", bk.v1);
        print_idx("V1'", bk.v1_prime);
        if (ext) {
            print_idx("V1*", ext->v1_star);
            std::cout << "upsilon = {";
            for (std::size_t i = 0; i < ext->upsilon.size(); ++i)
                std::cout << (i ? "," : "") << ext->upsilon[i] + 1;
            std::cout << "}\nM = " << ext->M << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "bounds, constructions, and verification for locally repairable "
        "codes with (r,delta)_a-locality"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand(
        "classify", "map (n,k,r,delta) to its tightness regime and bounds");
    std::size_t cl_n = 0, cl_k = 0, cl_r = 0, cl_delta = 0;
    std::optional<std::size_t> cl_m;
    bool cl_json = false;
    classify->add_option("--n", cl_n)->required();
    classify->add_option("--k", cl_k)->required();
    classify->add_option("--r", cl_r)->required();
    classify->add_option("--delta", cl_delta)->required();
    classify->add_option("--M", cl_m,
                         "also evaluate the improved bound at this M");
    classify->add_flag("--json", cl_json);

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate one bound");
    std::string bd_kind;
    std::size_t bd_n = 0, bd_k = 0, bd_r = 0, bd_delta = 0;
    std::optional<std::size_t> bd_m;
    bool bd_json = false;
    bound->add_option("--kind", bd_kind, "eq2|improved|cor5|cor7|cor8|dmax")
        ->required();
    bound->add_option("--n", bd_n)->required();
    bound->add_option("--k", bd_k)->required();
    bound->add_option("--r", bd_r)->required();
    bound->add_option("--delta", bd_delta)->required();
    bound->add_option("--M", bd_m);
    bound->add_flag("--json", bd_json);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "evaluate the slack function");
    std::size_t ph_r = 0, ph_delta = 0;
    std::uint64_t ph_a = 0, ph_b = 0;
    bool ph_json = false;
    phi_cmd->add_option("--r", ph_r)->required();
    phi_cmd->add_option("--delta", ph_delta)->required();
    phi_cmd->add_option("--a", ph_a)->required();
    phi_cmd->add_option("--b", ph_b)->required();
    phi_cmd->add_flag("--json", ph_json);

    // construct
    auto* construct =
        app.add_subcommand("construct", "build an optimal code and save it");
    std::string cs_variant, cs_out;
    std::size_t cs_r = 0, cs_delta = 0, cs_m = 0, cs_u = 0, cs_v = 0,
                cs_w = 0;
    std::uint64_t cs_q = 0;
    unsigned cs_e = 1;
    bool cs_json = false;
    construct->add_option("--variant", cs_variant, "A or B")->required();
    construct->add_option("--r", cs_r)->required();
    construct->add_option("--delta", cs_delta)->required();
    construct->add_option("--m", cs_m)->required();
    construct->add_option("--u", cs_u)->required();
    construct->add_option("--v", cs_v)->required();
    construct->add_option("--w", cs_w)->required();
    construct->add_option("--q", cs_q)->required();
    construct->add_option("--e", cs_e)->required();
    construct->add_option("--out", cs_out)->required();
    construct->add_flag("--json", cs_json);

    // verify
    auto* verify = app.add_subcommand("verify", "verify a saved code");
    std::string vf_file;
    std::optional<std::size_t> vf_r, vf_delta, vf_expect;
    bool vf_json = false;
    verify->add_option("--code", vf_file)->required();
    verify->add_option("--r", vf_r);
    verify->add_option("--delta", vf_delta);
    verify->add_option("--expect-d", vf_expect);
    verify->add_flag("--json", vf_json);

    // distance
    auto* distance =
        app.add_subcommand("distance", "minimum distance of a saved code");
    std::string ds_file, ds_method = "columns";
    std::optional<std::size_t> ds_cap;
    bool ds_json = false;
    distance->add_option("--code", ds_file)->required();
    distance->add_option("--method", ds_method, "codewords|columns|lemma1");
    distance->add_option("--cap", ds_cap);
    distance->add_flag("--json", ds_json);

    // ecf
    auto* ecf = app.add_subcommand(
        "ecf", "inspect a repair-set family: conditions, breakup, M");
    std::string ec_file;
    std::size_t ec_r = 0, ec_delta = 0;
    std::optional<std::string> ec_code;
    bool ec_json = false;
    ecf->add_option("--family", ec_file)->required();
    ecf->add_option("--r", ec_r)->required();
    ecf->add_option("--delta", ec_delta)->required();
    ecf->add_option("--code", ec_code,
                    "code file; enables the V1* extension and M");
    ecf->add_flag("--json", ec_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify)
            return run_classify(cl_n, cl_k, cl_r, cl_delta, cl_m, cl_json);
        if (*bound)
            return run_bound(bd_kind, bd_n, bd_k, bd_r, bd_delta, bd_m,
                             bd_json);
        if (*phi_cmd) return run_phi(ph_r, ph_delta, ph_a, ph_b, ph_json);
        if (*construct)
            return run_construct(cs_variant, cs_r, cs_delta, cs_m, cs_u, cs_v,
                                 cs_w, cs_q, cs_e, cs_out, cs_json);
        if (*verify)
            return run_verify(vf_file, vf_r, vf_delta, vf_expect, vf_json);
        if (*distance) return run_distance(ds_file, ds_method, ds_cap, ds_json);
        if (*ecf) return run_ecf(ec_file, ec_r, ec_delta, ec_code, ec_json);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
