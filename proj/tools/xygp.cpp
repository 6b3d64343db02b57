#include "xygp/adiabatic.hpp"
#include "xygp/errors.hpp"
#include "xygp/harness.hpp"
#include "xygp/interferometer.hpp"
#include "xygp/pulse_compiler.hpp"
#include "xygp/pulse_json.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef XYGP_DEFAULT_FIXTURE
#define XYGP_DEFAULT_FIXTURE "data/table1.csv"
#endif

namespace {

using namespace xygp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAcceptance = 2;

// "-" writes to stdout.
void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ValidationError("write to '" + path + "' failed");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(cell, &pos));
            if (cell.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw ValidationError("bad number '" + cell + "' in --lambda-list");
        }
    }
    return out;
}

Path parse_path(const std::string& s) {
    if (s == "C") return Path::C;
    if (s == "Cbar") return Path::Cbar;
    throw ValidationError("--path must be C or Cbar");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state geometric phase of the two-qubit XY model: simulation, sweeps, and pulse compilation"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    auto* table1 = app.add_subcommand("table1", "Check the measured phase table against the closed-form phase");
    std::string fixture = XYGP_DEFAULT_FIXTURE;
    table1->add_option("--fixture", fixture, "Phase table CSV")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Sweep lambda at fixed gamma and write a CSV");
    SweepConfig sweep_cfg;
    std::string lambda_list;
    double lambda_min = 0.0, lambda_max = 0.0;
    int lambda_steps = 0;
    std::string sweep_out;
    sweep->add_option("--gamma", sweep_cfg.gamma)->required();
    auto* list_opt = sweep->add_option("--lambda-list", lambda_list, "Comma-separated lambda values");
    auto* min_opt = sweep->add_option("--lambda-min", lambda_min);
    auto* max_opt = sweep->add_option("--lambda-max", lambda_max);
    auto* steps_opt = sweep->add_option("--steps", lambda_steps);
    list_opt->excludes(min_opt)->excludes(max_opt)->excludes(steps_opt);
    min_opt->needs(max_opt)->needs(steps_opt);
    sweep->add_option("--segments", sweep_cfg.segments)->capture_default_str();
    sweep->add_option("--cycle-time", sweep_cfg.cycle_time)->capture_default_str();
    sweep->add_option("--kappa", sweep_cfg.kappa)->capture_default_str();
    sweep->add_option("--seed", sweep_cfg.seed)->capture_default_str();
    sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0: all cores)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output CSV, '-' for stdout")->required();

    auto* schedule = app.add_subcommand("schedule", "Write the constant-adiabaticity schedule s(t) as CSV");
    double sched_lambda = 0.0, sched_gamma = 0.0, sched_kappa = 0.25;
    int sched_grid = 2048;
    std::string sched_out;
    schedule->add_option("--lambda", sched_lambda)->required();
    schedule->add_option("--gamma", sched_gamma)->required();
    schedule->add_option("--kappa", sched_kappa)->capture_default_str();
    schedule->add_option("--grid-points", sched_grid)->capture_default_str();
    schedule->add_option("--out", sched_out, "Output CSV, '-' for stdout")->required();

    auto* simulate = app.add_subcommand("simulate", "Run the interferometer on one path");
    CycleSpec sim_spec;
    std::string sim_path = "C";
    simulate->add_option("--lambda", sim_spec.params.lambda)->required();
    simulate->add_option("--gamma", sim_spec.params.gamma)->required();
    simulate->add_option("--path", sim_path)->check(CLI::IsMember({"C", "Cbar"}))->capture_default_str();
    simulate->add_option("--segments", sim_spec.segments)->capture_default_str();
    simulate->add_option("--cycle-time", sim_spec.cycle_time)->capture_default_str();

    auto* compile = app.add_subcommand("compile", "Compile one gate to a verified pulse sequence");
    std::string gate_kind;
    double g_phi = 0.0, g_theta = 0.0, g_s = 0.5, g_delta = 0.1, g_tau = 0.1, g_lambda = 0.878, g_gamma = 0.5;
    std::string g_i = "a", g_j = "1", g_path = "C", compile_out;
    compile->add_option("--gate", gate_kind)
        ->required()
        ->check(CLI::IsMember({"uz", "vd", "swap", "asp-step", "controlled-step"}));
    compile->add_option("--phi", g_phi, "uz, controlled-step")->capture_default_str();
    compile->add_option("--theta", g_theta, "vd")->capture_default_str();
    compile->add_option("--i", g_i, "swap: first spin (a, 1, 2)")->capture_default_str();
    compile->add_option("--j", g_j, "swap: second spin")->capture_default_str();
    compile->add_option("--s", g_s, "asp-step")->capture_default_str();
    compile->add_option("--delta", g_delta, "asp-step")->capture_default_str();
    compile->add_option("--tau", g_tau, "controlled-step")->capture_default_str();
    compile->add_option("--lambda", g_lambda, "asp-step, controlled-step")->capture_default_str();
    compile->add_option("--gamma", g_gamma, "asp-step, controlled-step")->capture_default_str();
    compile->add_option("--path", g_path, "controlled-step")->check(CLI::IsMember({"C", "Cbar"}))->capture_default_str();
    compile->add_option("--out", compile_out, "Output JSON, '-' for stdout")->required();

    auto* errors = app.add_subcommand("errors", "Initial-state error study on both paths");
    ErrorModelConfig err_cfg;
    errors->add_option("--lambda", err_cfg.params.lambda)->required();
    errors->add_option("--gamma", err_cfg.params.gamma)->required();
    errors->add_option("--fidelity", err_cfg.fidelity)->capture_default_str();
    errors->add_option("--samples", err_cfg.samples)->capture_default_str();
    errors->add_option("--seed", err_cfg.seed)->capture_default_str();
    errors->add_option("--segments", err_cfg.segments)->capture_default_str();
    errors->add_option("--cycle-time", err_cfg.cycle_time)->capture_default_str();

    table1->callback([&] {
        const auto report = run_table1(load_table1(fixture));
        write_table1_report(std::cout, report);
        if (!report.arithmetic_ok()) {
            std::cerr << "note: some rows do not satisfy beta_g = (beta_C + beta_Cbar)/2 within "
                      << format_number(kArithmeticToleranceDeg) << " deg\n";
        }
        if (!report.theory_ok() || !report.data_ok()) exit_code = kExitAcceptance;
    });

    sweep->callback([&] {
        if (list_opt->count()) {
            sweep_cfg.lambdas = parse_list(lambda_list);
        } else if (min_opt->count()) {
            sweep_cfg.lambdas = SweepConfig::lambda_grid(lambda_min, lambda_max, lambda_steps);
        } else {
            throw ValidationError("sweep needs --lambda-list or --lambda-min/--lambda-max/--steps");
        }
        const auto result = run_sweep(sweep_cfg);
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
        std::ostringstream csv;
        write_sweep_csv(csv, result);
        write_output(sweep_out, csv.str());
    });

    schedule->callback([&] {
        const auto sched = solve_schedule(sched_kappa, asp_initial_hamiltonian(),
                                          build_h(XYParams{sched_lambda, sched_gamma, 0.0}), sched_grid);
        std::ostringstream csv;
        write_schedule_csv(csv, sched);
        write_output(sched_out, csv.str());
        std::cerr << "T_P = " << format_number(sched.total_time) << '\n';
    });

    simulate->callback([&] {
        sim_spec.path = parse_path(sim_path);
        const auto res = run_interferometry(sim_spec);
        std::cout << "path," << to_string(sim_spec.path) << '\n'
                  << "beta_t_deg," << format_number(to_degrees(res.beta_t)) << '\n'
                  << "coherence_abs," << format_number(std::abs(res.ancilla_coherence)) << '\n'
                  << "return_fidelity," << format_number(res.system_return_fidelity) << '\n'
                  << "dynamical_phase_deg," << format_number(to_degrees(dynamical_phase(sim_spec))) << '\n'
                  << "beta_g_analytic_deg," << format_number(to_degrees(gp_analytic(sim_spec.params))) << '\n';
    });

    compile->callback([&] {
        GateSpec gate = UzGate{g_phi};
        if (gate_kind == "vd") gate = VdGate{g_theta};
        if (gate_kind == "swap") gate = SwapGate{spin_from_label(g_i), spin_from_label(g_j)};
        if (gate_kind == "asp-step") gate = AspStepGate{g_s, g_delta, g_lambda, g_gamma};
        if (gate_kind == "controlled-step") gate = ControlledStepGate{g_phi, g_tau, g_lambda, g_gamma, parse_path(g_path)};
        const SpinSystem sys = SpinSystem::defaults();
        const auto seq = compile_gate(gate, sys);
        const double fidelity = verify(seq, gate_target(gate), sys);
        std::cerr << gate_name(gate) << ": " << seq.elements().size() << " elements, "
                  << format_number(seq.total_duration() * 1e3) << " ms, verified fidelity "
                  << format_number(fidelity) << '\n';
        if (fidelity < 1.0 - 1e-9) throw ValidationError("compiled sequence failed verification");
        write_output(compile_out, sequence_to_json(seq, sys));
    });

    errors->callback([&] {
        const auto stats = run_error_model(err_cfg);
        std::cout << "model,ensemble substitute (Haar-random perturbations; measured states unavailable)\n"
                  << "samples," << stats.deviations.size() << '\n'
                  << "fidelity," << format_number(err_cfg.fidelity) << '\n'
                  << "beta_g_ideal_deg," << format_number(to_degrees(stats.beta_g_ideal)) << '\n'
                  << "median_abs_delta_deg," << format_number(to_degrees(stats.median)) << '\n'
                  << "max_abs_delta_deg," << format_number(to_degrees(stats.max)) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    } catch (const xygp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return exit_code;
}
