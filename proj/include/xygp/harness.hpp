#pragma once

// Experiment orchestration: reference-table checks, GP sweeps over lambda, schedule
// export, and the initial-state error study. File I/O is in degrees; every
// computation underneath runs in radians.

#include "xygp/adiabatic.hpp"
#include "xygp/geom_phase.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xygp {

/// 6 significant digits, "." separator, independent of the global locale.
std::string format_number(double v);

double to_degrees(double rad);
double to_radians(double deg);

// ---- reference table ----------------------------------------------------------

struct Table1Row {
    int exp_no = 0;
    double lambda = 0.0;
    double gamma = 0.5;
    double beta_C_exp = 0.0;     // degrees
    double beta_Cbar_exp = 0.0;  // degrees
    double beta_g_exp = 0.0;     // degrees
    double beta_g_th = 0.0;      // degrees
};

/// Header: exp_no,lambda,gamma,beta_C_exp_deg,beta_Cbar_exp_deg,beta_g_exp_deg,beta_g_th_deg.
/// Throws SchemaError naming the offending line.
std::vector<Table1Row> parse_table1(std::istream& in);
std::vector<Table1Row> load_table1(const std::string& path);

inline constexpr double kTheoryToleranceDeg = 0.05;
inline constexpr double kExperimentToleranceDeg = 3.0;
inline constexpr double kArithmeticToleranceDeg = 0.05;

struct Table1Check {
    Table1Row row;
    double beta_g_analytic = 0.0;  // degrees
    bool theory_ok = false;        // |analytic - th| <= 0.05
    bool data_ok = false;          // |exp - th| <= 3
    bool arithmetic_ok = false;    // |exp - (C + Cbar)/2| <= 0.05
};

struct Table1Report {
    std::vector<Table1Check> checks;
    bool theory_ok() const;
    bool data_ok() const;
    bool arithmetic_ok() const;
};

Table1Report run_table1(const std::vector<Table1Row>& rows);
void write_table1_report(std::ostream& out, const Table1Report& report);

// ---- sweeps --------------------------------------------------------------

struct SweepConfig {
    double gamma = 0.5;
    std::vector<double> lambdas;
    int segments = 64;
    double cycle_time = 40.0;
    double kappa = 0.25;
    std::uint64_t seed = 0;
    int discrete_segments = 4096;
    unsigned threads = 0;  // 0: hardware concurrency

    /// `steps` evenly spaced values from lo to hi inclusive.
    static std::vector<double> lambda_grid(double lo, double hi, int steps);
    void validate() const;
};

struct SweepRow {
    double lambda = 0.0;
    double gamma = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double beta_g_analytic = 0.0;
    double beta_g_discrete = 0.0;
    double beta_C = 0.0;
    double beta_Cbar = 0.0;
    double beta_g_interf = 0.0;
    bool analytic_assisted = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // ascending lambda
    std::vector<std::string> warnings;
};

/// Points at the r = 1 crossing are skipped with a warning. Points run in
/// parallel and are merged in lambda order. The mod-pi branch of each
/// interferometric beta_g follows the previous point of the same regime and
/// falls back to gp_analytic at the start of a regime.
SweepResult run_sweep(const SweepConfig& cfg);

inline constexpr const char* kSweepHeader =
    "lambda,gamma,r,theta_deg,beta_g_analytic_deg,beta_g_discrete_deg,beta_C_deg,beta_Cbar_deg,beta_g_interf_deg";

void write_sweep_csv(std::ostream& out, const SweepResult& result);

void write_schedule_csv(std::ostream& out, const AdiabaticSchedule& schedule);

// ---- error model ---------------------------------------------------------

struct ErrorModelConfig {
    XYParams params;
    int segments = 64;
    double cycle_time = 40.0;
    double fidelity = 0.98;  // |<Psi_g|psi>|^2 of every perturbed initial state
    int samples = 100;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ErrorModelStats {
    double beta_g_ideal = 0.0;        // rad
    std::vector<double> deviations;   // |delta beta_g| per sample, rad
    double median = 0.0;
    double max = 0.0;
};

/// Ensemble substitute for the measured initial states: sqrt(F) |Psi_g> +
/// sqrt(1 - F) |chi> with chi Haar random in the complement of |Psi_g>, read out
/// through phase_from_density on both paths.
ErrorModelStats run_error_model(const ErrorModelConfig& cfg);

} // namespace xygp
