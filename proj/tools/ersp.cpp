#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ersp/benchmarks.hpp"
#include "ersp/colgen.hpp"
#include "ersp/oracle.hpp"

namespace fs = std::filesystem;
using namespace ersp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitLimit = 4;

struct CommonFlags {
    std::string variant = "hom";
    std::string elementarity = "adaptive";
    std::string cuts = "on";
    std::string pricing = "bilevel";
    double time_limit = 3600.0;
    int threads = 1;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--variant", f.variant)->check(CLI::IsMember({"hom", "het"}));
    cmd->add_option("--elementarity", f.elementarity)
        ->check(CLI::IsMember({"none", "ng", "adaptive", "full"}));
    cmd->add_option("--cuts", f.cuts)->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--pricing", f.pricing)->check(CLI::IsMember({"bilevel", "pathwise"}));
    cmd->add_option("--time-limit", f.time_limit, "seconds");
    cmd->add_option("--threads", f.threads);
    cmd->add_flag("--verbose", f.verbose);
}

SolverOptions to_options(const CommonFlags& f) {
    SolverOptions opt;
    opt.variant = f.variant == "het" ? Variant::Het : Variant::Hom;
    opt.policy = f.elementarity == "none"   ? ElemPolicy::None
                 : f.elementarity == "ng"   ? ElemPolicy::NgStatic
                 : f.elementarity == "full" ? ElemPolicy::Full
                                            : ElemPolicy::Adaptive;
    opt.cuts = f.cuts == "on";
    opt.use_pathwise = f.pricing == "pathwise";
    opt.time_limit_s = f.time_limit;
    opt.threads = f.threads;
    opt.verbose = f.verbose;
    return opt;
}

std::string mode_string(const CommonFlags& f) {
    return f.variant + "/" + f.elementarity + "/cuts-" + f.cuts + "/" + f.pricing;
}

const char* kCsvHeader =
    "instance_id,seed,n_tasks,area,T_over_B,D,mode,lp_bound,ip_value,gap,iterations,"
    "ng_expansions,cuts,columns,pricing_ms,total_ms\n";

std::string csv_row(const std::string& id, uint64_t seed, const GenParams& gp,
                    const std::string& mode, const AdaptiveResult& res) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s,%llu,%d,%dx%d,%.3f,%d,%s,%.9f,%.9f,%.6f,%ld,%d,%zu,%zu,%.1f,%.1f\n",
                  id.c_str(), static_cast<unsigned long long>(seed), gp.n_tasks, gp.area_width,
                  gp.area_height, gp.T_over_B, gp.n_charge_levels, mode.c_str(), res.lp_bound,
                  res.ip.found ? res.ip.objective : -1.0, res.gap_defined ? res.gap : -1.0,
                  res.total_iterations, res.ng_expansions, res.model.cuts().size(),
                  res.model.columns().size(), res.pricing_ms, res.total_ms);
    return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

bool parse_area(const std::string& s, int* w, int* h) {
    const auto x = s.find('x');
    if (x == std::string::npos) return false;
    *w = std::stoi(s.substr(0, x));
    *h = std::stoi(s.substr(x + 1));
    return true;
}

int exit_code(const AdaptiveResult& res) {
    if (res.status != TermStatus::Converged) return kExitLimit;
    if (!res.ip.found || res.ip.artificial_active) return kExitInfeasible;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ERSP column-generation solver"};
    app.require_subcommand(1);

    // generate --------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "write instance files over a parameter grid");
    std::string gen_tasks = "8", gen_area = "3x3", gen_tb = "4.0", gen_out_dir = ".";
    int gen_levels = 1, gen_count = 1, gen_fleet = 0;
    double gen_mu = 0.6;
    uint64_t gen_seed = 1;
    gen->add_option("--tasks", gen_tasks, "comma list");
    gen->add_option("--area", gen_area, "WxH lattice cells");
    gen->add_option("--tb-ratio", gen_tb, "comma list");
    gen->add_option("--levels", gen_levels, "distinct charging-cost levels D");
    gen->add_option("--mu", gen_mu, "battery use per distance");
    gen->add_option("--fleet", gen_fleet, "machines K (0 = default)");
    gen->add_option("--seed", gen_seed, "base seed");
    gen->add_option("--count", gen_count, "instances per combination");
    gen->add_option("--out", gen_out_dir, "output directory");

    // solve -----------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "solve one instance file");
    std::string solve_instance, solve_out;
    bool with_baseline = false, with_het_compare = false, dump_labels = false;
    CommonFlags solve_flags;
    solve->add_option("--instance", solve_instance)->required();
    solve->add_option("--out", solve_out, "write summary JSON here");
    solve->add_flag("--with-baseline", with_baseline, "also run route-then-charge");
    solve->add_flag("--with-het-compare", with_het_compare, "also run the Hom-model comparison");
    solve->add_flag("--dump-labels", dump_labels, "print per-bucket subpath label counts to stderr");
    add_common(solve, solve_flags);

    // compare ---------------------------------------------------------------
    auto* compare = app.add_subcommand("compare", "bi-level vs path-based pricing on instances");
    std::vector<std::string> cmp_instances;
    std::string cmp_out;
    CommonFlags cmp_flags;
    cmp_flags.elementarity = "ng";
    compare->add_option("--instance", cmp_instances)->required()->expected(-1);
    compare->add_option("--out", cmp_out, "CSV output path");
    add_common(compare, cmp_flags);

    // batch -----------------------------------------------------------------
    auto* batch = app.add_subcommand("batch", "sweep a generation grid and solve");
    std::string b_tasks = "8", b_area = "3x3", b_tb = "4.0", b_out = "batch.csv";
    int b_levels = 1, b_count = 3, b_fleet = 0;
    double b_mu = 0.6;
    uint64_t b_seed = 1;
    CommonFlags batch_flags;
    batch->add_option("--tasks", b_tasks, "comma list");
    batch->add_option("--area", b_area);
    batch->add_option("--tb-ratio", b_tb, "comma list");
    batch->add_option("--levels", b_levels);
    batch->add_option("--mu", b_mu);
    batch->add_option("--fleet", b_fleet);
    batch->add_option("--seed", b_seed);
    batch->add_option("--count", b_count, "instances per combination");
    batch->add_option("--out", b_out, "CSV output path");
    add_common(batch, batch_flags);

    // oracle-check ----------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle-check", "certify a tiny instance against enumeration");
    std::string oc_instance;
    CommonFlags oc_flags;
    oc_flags.elementarity = "none";
    oracle->add_option("--instance", oc_instance)->required();
    add_common(oracle, oc_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            int w = 0, h = 0;
            if (!parse_area(gen_area, &w, &h)) {
                std::cerr << "bad --area, expected WxH\n";
                return kExitUsage;
            }
            fs::create_directories(gen_out_dir);
            for (int nt : parse_int_list(gen_tasks))
                for (double tb : parse_double_list(gen_tb))
                    for (int k = 0; k < gen_count; ++k) {
                        GenParams gp;
                        gp.n_tasks = nt;
                        gp.area_width = w;
                        gp.area_height = h;
                        gp.T_over_B = tb;
                        gp.mu_rate = gen_mu;
                        gp.n_charge_levels = gen_levels;
                        gp.fleet = gen_fleet;
                        gp.seed = gen_seed + static_cast<uint64_t>(k);
                        const Instance inst = generate_instance(gp);
                        char name[160];
                        std::snprintf(name, sizeof(name), "ersp_t%d_a%dx%d_tb%.1f_D%d_s%llu.json", nt,
                                      w, h, tb, gen_levels, static_cast<unsigned long long>(gp.seed));
                        save_instance(inst, (fs::path(gen_out_dir) / name).string());
                        std::cout << name << "\n";
                    }
            return kExitOk;
        }

        if (*solve) {
            const Instance inst = load_instance(solve_instance);
            const SolverOptions opt = to_options(solve_flags);
            const AdaptiveResult res = adaptive_solve(inst, opt);
            std::string summary = summary_json(inst, opt, res);
            if (with_baseline) {
                const RouteThenChargeResult rtc = route_then_charge(inst, opt);
                summary.pop_back();  // strip closing brace newline-less dump(2) ends with '}'
                char extra[256];
                std::snprintf(extra, sizeof(extra),
                              ",\n  \"route_then_charge_cost\": %.9f,\n  "
                              "\"route_then_charge_feasible\": %s\n}",
                              rtc.cost, rtc.feasible ? "true" : "false");
                summary += extra;
            }
            if (with_het_compare) {
                const HetComparison hc = compare_het_vs_hom(inst, opt);
                summary.pop_back();
                char extra[320];
                std::snprintf(extra, sizeof(extra),
                              ",\n  \"hom_repriced_charging\": %.9f,\n  \"rebalanced_charging\": "
                              "%.9f,\n  \"het_integrated_cost\": %.9f\n}",
                              hc.hom_repriced_charging, hc.rebalanced_charging, hc.integrated_cost);
                summary += extra;
            }
            std::cout << summary << "\n";
            if (!solve_out.empty()) {
                std::ofstream out(solve_out);
                out << summary << "\n";
            }
            if (dump_labels) {
                const LpSolution lp = res.model.solve_lp();
                PricingConfig cfg;
                cfg.variant = opt.variant;
                cfg.count_buckets = true;
                cfg.threads = opt.threads;
                PricingStats stats;
                find_nondominated_subpaths(inst, lp.duals, cfg, &stats);
                std::cerr << bucket_counts_json(stats) << "\n";
            }
            return exit_code(res);
        }

        if (*compare) {
            std::ostringstream csv;
            csv << "instance,lp_bilevel,lp_pathwise,bound_delta,ms_bilevel,ms_pathwise,time_ratio\n";
            int code = kExitOk;
            for (const std::string& file : cmp_instances) {
                const Instance inst = load_instance(file);
                SolverOptions opt = to_options(cmp_flags);
                opt.cuts = false;

                opt.use_pathwise = false;
                const AdaptiveResult bi = adaptive_solve(inst, opt);
                opt.use_pathwise = true;
                const AdaptiveResult pw = adaptive_solve(inst, opt);

                if (bi.status != TermStatus::Converged || pw.status != TermStatus::Converged)
                    code = kExitLimit;
                char row[320];
                std::snprintf(row, sizeof(row), "%s,%.9f,%.9f,%.3e,%.1f,%.1f,%.3f\n", file.c_str(),
                              bi.lp_bound, pw.lp_bound, std::abs(bi.lp_bound - pw.lp_bound),
                              bi.total_ms, pw.total_ms,
                              pw.total_ms > 0 ? bi.total_ms / pw.total_ms : 0.0);
                csv << row;
            }
            std::cout << csv.str();
            if (!cmp_out.empty()) std::ofstream(cmp_out) << csv.str();
            return code;
        }

        if (*batch) {
            int w = 0, h = 0;
            if (!parse_area(b_area, &w, &h)) {
                std::cerr << "bad --area, expected WxH\n";
                return kExitUsage;
            }
            struct Job {
                GenParams gp;
                std::string id;
            };
            std::vector<Job> jobs;
            for (int nt : parse_int_list(b_tasks))
                for (double tb : parse_double_list(b_tb))
                    for (int k = 0; k < b_count; ++k) {
                        GenParams gp;
                        gp.n_tasks = nt;
                        gp.area_width = w;
                        gp.area_height = h;
                        gp.T_over_B = tb;
                        gp.mu_rate = b_mu;
                        gp.n_charge_levels = b_levels;
                        gp.fleet = b_fleet;
                        gp.seed = b_seed + static_cast<uint64_t>(k);
                        char id[96];
                        std::snprintf(id, sizeof(id), "t%d_tb%.1f_s%llu", nt, tb,
                                      static_cast<unsigned long long>(gp.seed));
                        jobs.push_back({gp, id});
                    }
            std::vector<std::string> rows(jobs.size());
            const SolverOptions opt = to_options(batch_flags);
#pragma omp parallel for schedule(dynamic, 1) if (batch_flags.threads > 1) \
    num_threads(batch_flags.threads)
            for (int i = 0; i < static_cast<int>(jobs.size()); ++i) {
                const Instance inst = generate_instance(jobs[i].gp);
                SolverOptions job_opt = opt;
                job_opt.threads = 1;  // parallelism at the instance level
                const AdaptiveResult res = adaptive_solve(inst, job_opt);
                rows[i] = csv_row(jobs[i].id, jobs[i].gp.seed, jobs[i].gp, mode_string(batch_flags), res);
            }
            std::ostringstream csv;
            csv << kCsvHeader;
            for (const auto& r : rows) csv << r;
            std::cout << csv.str();
            std::ofstream(b_out) << csv.str();
            return kExitOk;
        }

        if (*oracle) {
            const Instance inst = load_instance(oc_instance);
            SolverOptions opt = to_options(oc_flags);
            opt.cuts = false;
            const AdaptiveResult res = adaptive_solve(inst, opt);

            PricingConfig cfg;
            cfg.variant = opt.variant;
            cfg.elem = opt.policy == ElemPolicy::Full ? ElemMode::Full : ElemMode::None;
            const ExactTiny exact = solve_exact_tiny(inst, cfg);

            const double lp_delta = std::abs(res.lp_bound - exact.lp_bound);
            const double ip_delta = res.ip.found && exact.ip_found
                                        ? std::abs(res.ip.objective - exact.ip_value)
                                        : -1.0;
            std::printf("colgen_lp=%.9f oracle_lp=%.9f delta=%.3e\n", res.lp_bound, exact.lp_bound,
                        lp_delta);
            std::printf("colgen_ip=%.9f oracle_ip=%.9f delta=%.3e\n",
                        res.ip.found ? res.ip.objective : -1.0, exact.ip_value, ip_delta);
            const bool ok = lp_delta < 1e-6 && ip_delta >= 0 && ip_delta < 1e-6;
            std::printf("oracle-check %s\n", ok ? "PASS" : "FAIL");
            return ok ? kExitOk : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
