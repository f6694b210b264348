#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlc/cache.hpp"
#include "eqlc/character.hpp"
#include "eqlc/conf.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/parallel.hpp"
#include "eqlc/verify.hpp"

using namespace eqlc;
using nlohmann::json;

namespace {

struct GlobalFlags {
    std::string cache_dir;
    std::string format = "text";
    long long oracle_budget = 1000000;
    int jobs = 0;
};

TierPolicy parse_tier(const std::string& s) {
    if (s == "oracle") return TierPolicy::oracle;
    if (s == "plethysm") return TierPolicy::plethysm;
    if (s == "auto") return TierPolicy::auto_policy;
    throw Error("unknown tier '" + s + "'");
}

json witness_json(const std::optional<ContainWitness>& w) {
    if (!w) return nullptr;
    return json{{"degree", w->degree},
                {"label", w->label.text()},
                {"small", w->small_mult.get_str()},
                {"big", w->big_mult.get_str()}};
}

void print_quadruple_result(const QuadrupleResult& r, const std::string& format) {
    if (format == "structured") {
        json rec{{"family", std::string(1, r.family)},
                 {"i", r.q.i},
                 {"j", r.q.j},
                 {"k", r.q.k},
                 {"l", r.q.l},
                 {"m", r.q.m()},
                 {"verdict", r.verdict == Verdict::contained  ? "contained"
                             : r.verdict == Verdict::violated ? "violated"
                                                              : "error"},
                 {"witness", witness_json(r.witness)},
                 {"bound", r.bound},
                 {"tier", r.tier},
                 {"millis", r.millis}};
        if (!r.error_msg.empty()) rec["error"] = r.error_msg;
        if (!r.flags.empty()) rec["flags"] = r.flags;
        std::cout << rec.dump() << "\n";
        return;
    }
    std::cout << r.family << " m=" << r.q.m() << " " << r.q.text() << ": ";
    switch (r.verdict) {
        case Verdict::contained:
            std::cout << "contained";
            break;
        case Verdict::violated:
            std::cout << "VIOLATED";
            if (r.witness)
                std::cout << " at degree " << r.witness->degree << ", " << r.witness->label.text()
                          << " (" << r.witness->small_mult.get_str() << " > "
                          << r.witness->big_mult.get_str() << ")";
            break;
        case Verdict::error:
            std::cout << "ERROR: " << r.error_msg;
            break;
    }
    std::cout << "  [bound=" << r.bound << " tier=" << r.tier << " window="
              << (r.window_ok ? "ok" : "-") << " " << r.millis << "ms]\n";
}

int run_verify(const GlobalFlags& g, char family, int degree_sum, int max_sum, bool long_run) {
    ConfOptions opts;
    opts.oracle_budget = g.oracle_budget;
    const Family& fam = family_from_tag(family);
    std::vector<int> sums;
    if (degree_sum > 0) sums.push_back(degree_sum);
    else
        for (int m = 4; m <= max_sum; ++m) sums.push_back(m);
    for (int m : sums)
        if (m > 10 && !long_run)
            throw Error("degree sum " + std::to_string(m) +
                        " needs --long-run (cluster-scale character tables)");
    GeneratorStore gens(opts);
    bool all_ok = true;
    for (int m : sums) {
        VerificationReport rep = verify_degree(fam, m, gens);
        for (const auto& r : rep.results) print_quadruple_result(r, g.format);
        all_ok &= rep.all_contained();
    }
    if (g.format != "structured")
        std::cout << (all_ok ? "all quadruples contained\n" : "NOT all quadruples contained\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact FI#-level verifier for equivariant log concavity of "
                 "configuration-space cohomology"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_option("--cache-dir", g.cache_dir, "cache directory (overrides EQLC_CACHE_DIR)");
    app.add_option("--format", g.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--oracle-budget", g.oracle_budget,
                   "monomial budget for the straightening tier");
    app.add_option("--jobs", g.jobs, "worker threads");

    auto* cmd_chartab = app.add_subcommand("chartab", "compute or load a character table");
    int chartab_n = 0;
    cmd_chartab->add_option("--n", chartab_n, "symmetric group degree")->required();

    auto* cmd_conf = app.add_subcommand("conf", "decompose one cohomology representation");
    std::string conf_family = "A", conf_tier = "auto";
    int conf_degree = 0, conf_points = 0;
    cmd_conf->add_option("--family", conf_family, "A|C")->required();
    cmd_conf->add_option("--degree", conf_degree, "cohomological degree i")->required();
    cmd_conf->add_option("--points", conf_points, "number of points n")->required();
    cmd_conf->add_option("--tier", conf_tier, "oracle|plethysm|auto");

    auto* cmd_generators = app.add_subcommand("generators", "generator module of one family degree");
    std::string gen_family = "A";
    int gen_degree = 0;
    cmd_generators->add_option("--family", gen_family, "A|C")->required();
    cmd_generators->add_option("--degree", gen_degree, "cohomological degree i")->required();

    auto* cmd_h0 = app.add_subcommand("h0", "generators of a tensor pair");
    std::string h0_family = "A", h0_pair;
    cmd_h0->add_option("--family", h0_family, "A|C")->required();
    cmd_h0->add_option("--pair", h0_pair, "i,j")->required();

    auto* cmd_verify = app.add_subcommand("verify", "FI#-level containment for all quadruples");
    std::string verify_family = "A";
    int verify_m = 0, verify_max = 0, verify_jobs = 0;
    bool long_run = false;
    cmd_verify->add_option("--family", verify_family, "A|C")->required();
    cmd_verify->add_option("--degree-sum", verify_m, "single degree sum m");
    cmd_verify->add_option("--max-sum", verify_max, "all degree sums 4..M");
    cmd_verify->add_flag("--long-run", long_run, "allow degree sums above 10");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads");

    auto* cmd_selc = app.add_subcommand("selc", "graded containment at a fixed point count");
    std::string selc_family = "A";
    int selc_m = 0, selc_n = 0;
    cmd_selc->add_option("--family", selc_family, "A|C")->required();
    cmd_selc->add_option("--degree-sum", selc_m, "degree sum m")->required();
    cmd_selc->add_option("--points", selc_n, "point count n")->required();

    auto* cmd_reproduce = app.add_subcommand("reproduce", "regenerate a worked table and diff it");
    std::string repro_id;
    cmd_reproduce->add_option("--example", repro_id,
                              "a1-table|h0-a1a1|h0-degree4-pair|fb-containment-yz")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        init_cache(g.cache_dir);
        if (g.jobs > 0) set_default_jobs(g.jobs);

        if (cmd_chartab->parsed()) {
            const CharacterTable& t = character_table(chartab_n);
            std::cout << t.serialize();
            std::cerr << "p(" << chartab_n << ") = " << t.rows.size() << ", provenance: "
                      << (t.provenance == CharacterTable::Provenance::loaded ? "loaded"
                                                                             : "computed")
                      << "\n";
            return 0;
        }
        if (cmd_conf->parsed()) {
            ConfOptions opts;
            opts.tier = parse_tier(conf_tier);
            opts.oracle_budget = g.oracle_budget;
            ConfEntry e =
                conf_character_decomposition(family_from_tag(conf_family[0]), conf_degree,
                                             conf_points, opts);
            if (g.format == "structured") {
                std::cout << json{{"family", conf_family},
                                  {"i", conf_degree},
                                  {"n", conf_points},
                                  {"decomposition", e.rep.text()},
                                  {"dimension", e.rep.dimension().get_str()},
                                  {"tier", e.tier}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << conf_family << "^" << conf_degree << " at n=" << conf_points << " : "
                          << e.rep.text() << "  [dim=" << e.rep.dimension().get_str()
                          << " tier=" << e.tier << "]\n";
            }
            return 0;
        }
        if (cmd_generators->parsed()) {
            ConfOptions opts;
            opts.oracle_budget = g.oracle_budget;
            std::string tier;
            GeneratorModule gm = conf_generators(family_from_tag(gen_family[0]), gen_degree,
                                                 opts, &tier);
            std::cout << gm.serialize();
            std::cerr << "tier: " << tier << "\n";
            return 0;
        }
        if (cmd_h0->parsed()) {
            auto comma = h0_pair.find(',');
            if (comma == std::string::npos) throw Error("--pair expects i,j");
            int pi = std::stoi(h0_pair.substr(0, comma));
            int pj = std::stoi(h0_pair.substr(comma + 1));
            ConfOptions opts;
            opts.oracle_budget = g.oracle_budget;
            GeneratorStore gens(opts);
            const Family& fam = family_from_tag(h0_family[0]);
            int bound = 2 * (pi + pj);
            int top = bound + opts.slack;
            FBModule x = fb_tensor(factor_module(fam, pi, top, gens),
                                   factor_module(fam, pj, top, gens), top);
            GeneratorModule h = h_zero(x, bound, opts.slack);
            std::cout << h.serialize();
            std::cerr << "vanishing bound " << bound << " verified through degree "
                      << bound + opts.slack << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            if ((verify_m > 0) == (verify_max > 0))
                throw Error("verify needs exactly one of --degree-sum or --max-sum");
            if (verify_jobs > 0) set_default_jobs(verify_jobs);
            return run_verify(g, verify_family[0], verify_m, verify_max, long_run);
        }
        if (cmd_selc->parsed()) {
            ConfOptions opts;
            opts.oracle_budget = g.oracle_budget;
            GeneratorStore gens(opts);
            auto results = check_graded_selc(family_from_tag(selc_family[0]), selc_m, selc_n,
                                             gens);
            bool all_ok = true;
            for (const auto& r : results) {
                all_ok &= r.contained;
                if (g.format == "structured") {
                    std::cout << json{{"family", std::string(1, r.family)},
                                      {"i", r.q.i},
                                      {"j", r.q.j},
                                      {"k", r.q.k},
                                      {"l", r.q.l},
                                      {"m", r.q.m()},
                                      {"points", r.points},
                                      {"verdict", r.contained ? "contained" : "violated"},
                                      {"left_zero", r.left_zero},
                                      {"witness", witness_json(r.witness)}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << r.family << " m=" << r.q.m() << " n=" << r.points << " "
                              << r.q.text() << ": "
                              << (r.contained ? "contained" : "VIOLATED")
                              << (r.left_zero ? " (left side zero)" : "") << "\n";
                }
            }
            if (results.empty() && g.format != "structured")
                std::cout << "no quadruples of sum " << selc_m << "; vacuously contained\n";
            return all_ok ? 0 : 1;
        }
        if (cmd_reproduce->parsed()) {
            ConfOptions opts;
            opts.oracle_budget = g.oracle_budget;
            ReproduceResult r = reproduce(repro_id, opts);
            std::cout << r.rendered;
            for (const auto& f : r.flags) std::cout << "note: " << f << "\n";
            std::cout << (r.pass ? "PASS" : "FAIL") << " (" << r.mismatches.size()
                      << " mismatched cells)\n";
            return r.pass ? 0 : 1;
        }
    } catch (const CacheCorruptError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
