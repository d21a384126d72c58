// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/model/channel.hpp"
#include "dib/numerics/settings.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dib {

enum class SweepMode
{
    snr_sweep,
    budget_sweep,
    single,
};

enum class Scheme
{
    ub,
    qci_j2,
    qci_j4,
    qci_j8,
    tci,
    mmse,
};

std::string scheme_name(Scheme s);
std::string diagnostic_name(Scheme s);   // header of the scheme's diagnostic column
Scheme parse_scheme(const std::string &name);   // InvalidArgument if unknown
std::vector<Scheme> all_schemes();

struct SweepRange
{
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> points() const;   // start, start + step, ... <= stop
};

// Links are symmetric, C1 = C2 = C, throughout a sweep.
struct SweepSpec
{
    SweepMode mode = SweepMode::single;
    SweepRange snr_db_range;
    SweepRange budget_range;
    double fixed_c = 10.0;
    double fixed_snr_db = 40.0;
    std::optional<double> fixed_sigma2;   // overrides fixed_snr_db when set
    std::vector<Scheme> schemes = all_schemes();
    SolverSettings settings;
    std::string output_path;              // empty: write to the stream given to run_sweep

    void validate() const;
};

SweepSpec preset(const std::string &name);   // "fig2" or "fig3"

struct SweepRow
{
    double rho_db = 0.0;
    double sigma2 = 1.0;
    double c_bits = 0.0;
    // Indexed like SweepSpec::schemes; nullopt marks a failed scheme.
    std::vector<std::optional<double>> values;
    std::vector<std::optional<double>> diagnostics;
    std::vector<std::string> errors;      // one message per failed scheme
};

// All requested schemes at one configuration; budgets may differ per relay.
// rho_db is -10 log10(sigma^2) and c_bits is C1.
SweepRow evaluate_config(const SystemConfig &config, const std::vector<Scheme> &schemes,
                         const SolverSettings &settings);

// Evaluates every sweep point on an OpenMP worker pool. Rows come back in
// sweep order whatever the completion order.
std::vector<SweepRow> evaluate_sweep(const SweepSpec &spec);
std::vector<SweepRow> evaluate_sweep_serial(const SweepSpec &spec);

std::string csv_header(const SweepSpec &spec);
std::string csv_row(const SweepRow &row);

// Evaluates the sweep and writes the CSV to spec.output_path, or to `fallback`
// when the path is empty. Scheme errors go to `log` and leave empty cells.
// Throws IoError if the file cannot be written.
void run_sweep(const SweepSpec &spec, std::ostream &fallback, std::ostream &log);

} // namespace dib
