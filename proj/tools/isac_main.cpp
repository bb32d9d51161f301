#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "isac/boundary.hpp"
#include "isac/comm_rate.hpp"
#include "isac/csv.hpp"
#include "isac/figures.hpp"
#include "isac/mc_sim.hpp"
#include "isac/sense_rate.hpp"
#include "isac/validation.hpp"

namespace {

using namespace isac;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitValidation = 2;

// machine-readable violation report, one JSON object per line on stderr
int report_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        nlohmann::json j{{"field", v.field}, {"message", v.message}};
        std::cerr << j.dump() << "\n";
    }
    return kExitValidation;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return cfg.output_dir + "/" + name;
}

int cmd_eval(const RunConfig& cfg, const std::string& target, int threads) {
    if (!cfg.allocation) {
        std::cerr << nlohmann::json{{"field", "allocation"},
                                    {"message", "eval requires an [allocation] section"}}
                         .dump()
                  << "\n";
        return kExitValidation;
    }
    const ResourceAllocation& a = *cfg.allocation;
    auto violations = validate(cfg.network, a);
    if (!violations.empty()) return report_violations(violations);

    const std::string cache_base = canonical_config(cfg) + ";op=" + target;
    auto evaluate = [&](const std::string& op, auto&& fn) -> QuadResult {
        if (!cfg.cache_dir) return fn();
        const std::string key = cache_base + ";" + op;
        if (auto hit = cache_lookup(*cfg.cache_dir, key)) return *hit;
        QuadResult r = fn();
        cache_store(*cfg.cache_dir, key, r);
        return r;
    };

    QuadResult rc, rs;
    if (target == "comm") {
        rc = evaluate("r_c", [&] {
            return avg_comm_rate(cfg.network, a, cfg.quadrature, cfg.formula_variant);
        });
    } else {
        rs = evaluate("r_s", [&] {
            return avg_radar_rate(cfg.network, a, cfg.quadrature, cfg.formula_variant);
        });
    }
    PerfPoint perf = make_perf(cfg.network, a, rc.value, rs.value);

    CsvBuilder csv(cfg, "target,variant,k,l,j,q,r_c,r_s,t_c,t_s,t_sum,quad_error,converged");
    const QuadResult& used = (target == "comm") ? rc : rs;
    csv.row(target, to_string(cfg.formula_variant), a.k, a.l, a.j, a.q, perf.r_c, perf.r_s,
            perf.t_c, perf.t_s, perf.t_sum, used.error, used.converged ? 1 : 0);
    write_file(out_path(cfg, "eval.csv"), csv.str());

    std::cout << "target=" << target << " variant=" << to_string(cfg.formula_variant)
              << " alloc=(" << a.k << "," << a.l << "," << a.j << "," << a.q << ")\n"
              << "r_c=" << perf.r_c << " r_s=" << perf.r_s << " t_c=" << perf.t_c
              << " t_s=" << perf.t_s << " t_sum=" << perf.t_sum << " (nats)\n"
              << "wrote " << out_path(cfg, "eval.csv") << "\n";
    (void)threads;
    return used.converged ? kExitOk : kExitNumerical;
}

int cmd_mc(const RunConfig& cfg, const std::string& target, int threads, bool dump_trials) {
    if (!cfg.allocation) {
        std::cerr << nlohmann::json{{"field", "allocation"},
                                    {"message", "mc requires an [allocation] section"}}
                         .dump()
                  << "\n";
        return kExitValidation;
    }
    const ResourceAllocation& a = *cfg.allocation;
    auto violations = validate(cfg.network, a);
    if (!violations.empty()) return report_violations(violations);

    std::vector<TrialRecord> sink;
    std::vector<TrialRecord>* sinkp = dump_trials ? &sink : nullptr;
    auto run = [&](const McConfig& mc, std::vector<TrialRecord>* sp) {
        return target == "comm" ? mc_comm_rate(cfg.network, a, mc, threads, sp)
                                : mc_radar_rate(cfg.network, a, mc, threads, sp);
    };
    McEstimate est = run(cfg.mc, sinkp);
    McConfig half = cfg.mc;
    half.window_radius_factor *= 0.5;
    McEstimate probe = run(half, nullptr);
    const double probe_delta =
        est.mean != 0.0 ? std::fabs(est.mean - probe.mean) / std::fabs(est.mean) : 0.0;

    CsvBuilder csv(cfg, "target,k,l,j,q,trials,seed,window_radius_factor,mean,ci_half_width,"
                        "ci_level,capped_trials,empty_realizations,half_window_mean,"
                        "half_window_delta_rel");
    csv.row(target, a.k, a.l, a.j, a.q, est.trials, est.seed, cfg.mc.window_radius_factor,
            est.mean, est.half_width, cfg.mc.ci_level, est.capped_trials,
            est.empty_realizations, probe.mean, probe_delta);
    write_file(out_path(cfg, "mc.csv"), csv.str());
    std::cout << "target=" << target << " mean=" << est.mean << " ±" << est.half_width
              << " (" << cfg.mc.ci_level * 100 << "% CI, " << est.trials << " trials, seed "
              << est.seed << ")\n"
              << "half-window probe delta: " << probe_delta * 100 << "%\n"
              << "wrote " << out_path(cfg, "mc.csv") << "\n";

    if (dump_trials) {
        CsvBuilder tcsv(cfg, "trial,serving_distance,sir,rate");
        for (std::size_t i = 0; i < sink.size(); ++i)
            tcsv.row(i, sink[i].serving_distance, sink[i].sir, sink[i].rate);
        write_file(out_path(cfg, "trials.csv"), tcsv.str());
        std::cout << "wrote " << out_path(cfg, "trials.csv") << "\n";
    }
    return kExitOk;
}

int cmd_boundary(const RunConfig& cfg, const std::string& method_name, int threads) {
    auto violations = validate_params(cfg.network);
    if (!violations.empty()) return report_violations(violations);
    BoundaryMethod method = parse_boundary_method(method_name);
    Frontier f = boundary(cfg.network, method, cfg.quadrature, cfg.formula_variant, threads);

    CsvBuilder csv(cfg, "k,l,j,q,r_c,r_s,t_c,t_s,t_sum,on_frontier,method");
    for (const auto& bp : f.evaluated)
        csv.row(bp.alloc.k, bp.alloc.l, bp.alloc.j, bp.alloc.q, bp.perf.r_c, bp.perf.r_s,
                bp.perf.t_c, bp.perf.t_s, bp.perf.t_sum, bp.on_frontier ? 1 : 0, f.method);
    write_file(out_path(cfg, "boundary.csv"), csv.str());

    std::cout << "method=" << f.method << " evaluated=" << f.evaluated.size()
              << " frontier=" << f.points.size() << "\n"
              << "corner comm: alloc=(" << f.corner_comm.alloc.k << "," << f.corner_comm.alloc.l
              << "," << f.corner_comm.alloc.j << "," << f.corner_comm.alloc.q
              << ") t_c=" << f.corner_comm.perf.t_c << " t_s=" << f.corner_comm.perf.t_s << "\n"
              << "corner sense: alloc=(" << f.corner_sense.alloc.k << ","
              << f.corner_sense.alloc.l << "," << f.corner_sense.alloc.j << ","
              << f.corner_sense.alloc.q << ") t_c=" << f.corner_sense.perf.t_c
              << " t_s=" << f.corner_sense.perf.t_s << "\n"
              << "wrote " << out_path(cfg, "boundary.csv") << "\n";
    return f.converged ? kExitOk : kExitNumerical;
}

int cmd_figure(const RunConfig& cfg, const std::string& id, int threads) {
    auto violations = validate_params(cfg.network);
    if (!violations.empty()) return report_violations(violations);
    const std::string csv = figure_csv(cfg, id, threads);
    write_file(out_path(cfg, id + ".csv"), csv);
    std::cout << "wrote " << out_path(cfg, id + ".csv") << "\n";
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, int threads) {
    ValidationOptions opt;
    opt.seed = cfg.mc.seed;
    opt.threads = threads;
    auto results = run_validation(opt, std::cout);
    write_file(out_path(cfg, "validate_report.csv"), validation_report_csv(results, cfg));
    int hard_fail = 0, soft_fail = 0;
    for (const auto& r : results) (r.pass ? 0 : (r.hard ? ++hard_fail : ++soft_fail));
    std::cout << "\n" << results.size() - hard_fail - soft_fail << "/" << results.size()
              << " checks passed (" << hard_fail << " hard failures, " << soft_fail
              << " soft warnings)\n"
              << "wrote " << out_path(cfg, "validate_report.csv") << "\n";
    return hard_fail == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooperative ISAC network ASE: analytic evaluators, Monte Carlo "
                 "validation and resource-allocation boundary optimization"};
    app.require_subcommand(1);

    std::string config_path;
    std::string target = "comm";
    std::string method = "enumerate";
    std::string figure_id;
    std::string out_override;
    std::string variant_override;
    long long trials_override = -1;
    long long seed_override = -1;
    int threads = 0;
    bool dump_trials = false;

    app.add_option("-c,--config", config_path, "run configuration file (INI-style)");
    app.add_option("--seed", seed_override, "override [mc] seed");
    app.add_option("--trials", trials_override, "override [mc] trials");
    app.add_option("--variant", variant_override, "override formula variant");
    app.add_option("--out", out_override, "override output directory");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* eval = app.add_subcommand("eval", "analytic rate/ASE for one allocation");
    eval->add_option("--target", target, "comm|sense")->check(CLI::IsMember({"comm", "sense"}));
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate for one allocation");
    mc->add_option("--target", target, "comm|sense")->check(CLI::IsMember({"comm", "sense"}));
    mc->add_flag("--dump-trials", dump_trials, "also write per-trial samples CSV");
    auto* bnd = app.add_subcommand("boundary", "trace the S&C performance boundary");
    bnd->add_option("--method", method, "enumerate|paper_search|paper_search_strict");
    auto* fig = app.add_subcommand("figure", "reproduce curve data CSVs");
    fig->add_option("id", figure_id, "f4|f5|f6|f7|f9|f11")->required();
    app.add_subcommand("validate", "run the full validation suite");
    app.add_subcommand("sample-config", "print a documented default config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("sample-config")) {
            std::cout << isac::sample_config_text();
            return kExitOk;
        }
        RunConfig cfg = load_config(config_path);
        if (seed_override >= 0) cfg.mc.seed = static_cast<std::uint64_t>(seed_override);
        if (trials_override > 0) cfg.mc.trials = trials_override;
        if (!variant_override.empty()) cfg.formula_variant = parse_variant(variant_override);
        if (!out_override.empty()) cfg.output_dir = out_override;

        if (app.got_subcommand("eval")) return cmd_eval(cfg, target, threads);
        if (app.got_subcommand("mc")) return cmd_mc(cfg, target, threads, dump_trials);
        if (app.got_subcommand("boundary")) return cmd_boundary(cfg, method, threads);
        if (app.got_subcommand("figure")) return cmd_figure(cfg, figure_id, threads);
        if (app.got_subcommand("validate")) return cmd_validate(cfg, threads);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
