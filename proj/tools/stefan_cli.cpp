#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stefan/config_io.hpp"
#include "stefan/experiments.hpp"

namespace {

using namespace stefan;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Preset resolved against an optional config file and key=value overrides; the
// expectations keep the preset's intent while the numbers reflect the overrides.
Preset resolve(const std::string& name, const std::string& config_path,
               const std::vector<std::string>& sets) {
    Preset p = preset(name);
    ResolvedSetup su = setup_from_preset(p);
    if (!config_path.empty()) apply_config_text(su, read_file(config_path));
    for (const auto& expr : sets) apply_override_expr(su, expr);
    p.params = su.params;
    p.cfg = su.cfg;
    p.mode = su.mode;
    return p;
}

void print_summary(const RunResult& r) {
    for (const auto& kv : r.summary) std::printf("%s = %s\n", kv.first.c_str(), kv.second.c_str());
}

int cmd_list() {
    for (const auto& name : preset_names()) {
        const Preset p = preset(name);
        std::printf("%-22s %s\n", p.name.c_str(), p.blurb.c_str());
        std::printf("%-22s   D = %g s, deltaD = %g s, c = %g 1/s, horizon = %g s, gains:", "",
                    p.cfg.D, p.cfg.deltaD, p.cfg.c, p.cfg.horizon);
        for (double g : p.gains) std::printf(" %g", g);
        std::printf("\n");
        for (const auto& [id, blurb] : p.expected)
            std::printf("%-22s   expects %s: %s\n", "", id.c_str(), blurb.c_str());
    }
    return 0;
}

int cmd_run(const Preset& p, const std::string& out_dir, bool lean) {
    RunOptions opt;
    opt.out_dir = out_dir;
    if (lean) {
        opt.diagnostics = false;
        opt.snapshots = false;
    }
    const RunResult r = run(p, opt);
    print_summary(r);
    return 0;
}

int cmd_verify(const Preset& p, const std::string& out_dir) {
    RunOptions opt;
    opt.out_dir = out_dir;
    const RunResult r = run(p, opt);
    print_summary(r);
    std::printf("\n");
    bool all_ok = true;
    for (const auto& cr : evaluate_expectations(p, r)) {
        std::printf("%s  %-26s %s\n", cr.pass ? "PASS" : "FAIL", cr.name.c_str(),
                    cr.detail.c_str());
        all_ok = all_ok && cr.pass;
    }
    return all_ok ? 0 : 1;
}

int cmd_sweep(const Preset& p, std::vector<double> gains, const std::string& out_root) {
    if (gains.empty()) gains = p.gains;
    const SweepResult res = gain_sweep(p, gains, out_root);
    std::printf("%-10s %-7s %-14s %-12s %-7s %-10s %-10s\n", "c", "clean", "terminal_s",
                "probe_pos", "gamma", "envelope", "first_neg");
    for (const auto& e : res.entries) {
        std::printf("%-10g %-7s %-14.8g %-12s %-7.4g %-10s %-10.4g\n", e.c,
                    e.monitor.clean() ? "yes" : "NO", e.terminal_s,
                    e.probe.positive ? "yes" : "NO", e.probe.gamma,
                    e.probe.envelope_ok ? "holds" : "-", e.probe.first_negative_time);
    }
    std::printf("largest_clean_gain = %g\n", res.largest_clean_gain);
    return 0;
}

void print_study(const char* label, const ConvergenceStudy& st) {
    std::printf("%s\n", label);
    for (std::size_t i = 0; i < st.resolution.size(); ++i)
        std::printf("  level %zu: resolution = %-12g terminal_s = %.12g\n", i, st.resolution[i],
                    st.terminal_s[i]);
    std::printf("  diffs:");
    for (double d : st.diffs) std::printf(" %.4g", d);
    std::printf("\n  orders:");
    for (double o : st.orders) std::printf(" %.3g", o);
    std::printf("\n");
}

int cmd_converge(const Preset& p, std::vector<int> Ns, double dt, double dt0, int levels,
                 double horizon) {
    if (horizon <= 0.0) horizon = 2.0 / p.cfg.c;
    if (Ns.empty()) Ns = {50, 100, 200};
    if (dt <= 0.0) dt = 0.002;
    if (dt0 <= 0.0) dt0 = 0.5 * p.cfg.dt;
    print_study("spatial refinement (fixed dt):", spatial_study(p, Ns, dt, horizon));
    print_study("temporal refinement (fixed N):", temporal_study(p, dt0, levels, horizon));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-loop simulation of delay-compensated melt-front control"};
    app.require_subcommand(1);

    std::string name = "exact", config_path, out_dir;
    std::vector<std::string> sets;
    bool lean = false;
    std::vector<double> gains;
    std::vector<int> Ns;
    double dt = 0.0, dt0 = 0.0, horizon = 0.0;
    int levels = 4;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("preset", name, "preset name (see list-presets)");
        sub->add_option("--config", config_path, "config file applied on top of the preset");
        sub->add_option("--set", sets, "key=value override (repeatable)");
    };

    CLI::App* list_cmd = app.add_subcommand("list-presets", "describe the built-in presets");
    CLI::App* run_cmd = app.add_subcommand("run", "run a closed-loop scenario");
    add_common(run_cmd);
    run_cmd->add_option("--out", out_dir, "write trace.csv, summary.txt, config.txt here");
    run_cmd->add_flag("--lean", lean, "skip diagnostics and snapshots");
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a preset and check its documented expectations");
    add_common(verify_cmd);
    verify_cmd->add_option("--out", out_dir, "write run artifacts here");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the scenario across controller gains");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--gains", gains, "gains to visit (default: the preset's list)")
        ->delimiter(',');
    sweep_cmd->add_option("--out", out_dir, "write per-gain artifacts under this directory");
    CLI::App* conv_cmd = app.add_subcommand("converge", "grid and step refinement studies");
    add_common(conv_cmd);
    conv_cmd->add_option("--spatial", Ns, "grid sizes for the spatial ladder")->delimiter(',');
    conv_cmd->add_option("--dt", dt, "fixed step for the spatial ladder [s]");
    conv_cmd->add_option("--dt0", dt0, "coarsest step for the temporal ladder [s]");
    conv_cmd->add_option("--levels", levels, "temporal ladder levels (halvings)");
    conv_cmd->add_option("--horizon", horizon, "study horizon [s] (default 2/c)");

    try {
        app.parse(argc, argv);
        if (list_cmd->parsed()) return cmd_list();
        const Preset p = resolve(name, config_path, sets);
        if (run_cmd->parsed()) return cmd_run(p, out_dir, lean);
        if (verify_cmd->parsed()) return cmd_verify(p, out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(p, gains, out_dir);
        if (conv_cmd->parsed()) return cmd_converge(p, Ns, dt, dt0, levels, horizon);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return 3;
    }
}
