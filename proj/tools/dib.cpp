// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------
//
// dib bound   one configuration, human-readable
// dib sweep   CSV over an SNR or budget range (presets fig2, fig3)
// dib verify  built-in oracle suites, exit status 0 iff all pass

#include "dib/errors.hpp"
#include "dib/experiments/sweep.hpp"
#include "dib/experiments/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

namespace {

struct Options
{
    std::optional<double> sigma2;
    std::optional<double> snr_db;
    std::optional<double> c1;
    std::optional<double> c2;
    std::vector<std::string> schemes;
    std::string sweep = "single";
    std::string preset;
    std::string out;
    std::optional<double> start, stop, step;
    bool corrupt_seed = false;
    dib::SolverSettings settings;
};

void add_options(CLI::App &app, Options &o)
{
    app.add_option("--sigma2", o.sigma2, "Noise power sigma^2 (linear); overrides --snr-db");
    app.add_option("--snr-db", o.snr_db, "SNR 10 log10(1/sigma^2) in dB [default 40]");
    app.add_option("--c1", o.c1, "Link budget of relay 1, bits/complex dimension [default 10]");
    app.add_option("--c2", o.c2, "Link budget of relay 2 [default: --c1]");
    app.add_option("--scheme", o.schemes,
                   "Schemes: ub, qci_J2, qci_J4, qci_J8, tci, mmse [default: all]")
        ->delimiter(',');
    app.add_option("--sweep", o.sweep, "Sweep mode: snr, budget or single")
        ->check(CLI::IsMember({"snr", "budget", "single"}))
        ->capture_default_str();
    app.add_option("--preset", o.preset, "Preset sweep: fig2 (C=10, 0-60 dB) or fig3 (40 dB, C=0-25)")
        ->check(CLI::IsMember({"fig2", "fig3"}));
    app.add_option("--start", o.start, "Sweep start (dB or bits)");
    app.add_option("--stop", o.stop, "Sweep stop, inclusive");
    app.add_option("--step", o.step, "Sweep step");
    app.add_option("--out", o.out, "CSV output path [default: stdout]");
    app.add_option("--seed", o.settings.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--samples", o.settings.mc_samples, "Monte Carlo sample count")
        ->capture_default_str();
    app.add_option("--quad-order", o.settings.quad_order, "Gauss-Laguerre order of the first pass")
        ->capture_default_str();
    app.add_option("--tol", o.settings.abs_tol, "Absolute tolerance")->capture_default_str();
    app.add_option("--max-iter", o.settings.max_iter, "Iteration cap")->capture_default_str();
    app.add_option("--grid-points", o.settings.grid_points, "Oracle lattice points per axis")
        ->capture_default_str();
}

std::vector<dib::Scheme> chosen_schemes(const Options &o)
{
    if (o.schemes.empty())
        return dib::all_schemes();
    std::vector<dib::Scheme> s;
    for (const std::string &name : o.schemes)
        s.push_back(dib::parse_scheme(name));
    return s;
}

double noise_power(const Options &o)
{
    if (o.sigma2)
        return *o.sigma2;
    return 1.0 / dib::db_to_linear(o.snr_db.value_or(40.0));
}

int run_bound(const Options &o)
{
    const double c1 = o.c1.value_or(10.0);
    const dib::SystemConfig config{noise_power(o), c1, o.c2.value_or(c1)};
    config.validate();
    o.settings.validate();
    const std::vector<dib::Scheme> schemes = chosen_schemes(o);
    const dib::SweepRow row = dib::evaluate_config(config, schemes, o.settings);

    std::printf("sigma2 %.9g  snr_db %.9g  c1 %.9g  c2 %.9g\n", config.noise_power, row.rho_db,
                config.c1, config.c2);
    for (std::size_t i = 0; i < schemes.size(); ++i)
    {
        const std::string name = dib::scheme_name(schemes[i]);
        if (row.values[i])
            std::printf("%-8s %.9g   %s %.9g\n", name.c_str(), *row.values[i],
                        dib::diagnostic_name(schemes[i]).c_str(), *row.diagnostics[i]);
        else
            std::printf("%-8s (failed)\n", name.c_str());
    }
    for (const std::string &e : row.errors)
        std::cerr << "error: " << e << '\n';
    return row.errors.empty() ? 0 : 1;
}

int run_sweep(const Options &o)
{
    dib::SweepSpec spec;
    if (!o.preset.empty())
        spec = dib::preset(o.preset);
    else
    {
        spec.mode = o.sweep == "snr"      ? dib::SweepMode::snr_sweep
                    : o.sweep == "budget" ? dib::SweepMode::budget_sweep
                                          : dib::SweepMode::single;
        if (o.snr_db)
            spec.fixed_snr_db = *o.snr_db;
        if (o.sigma2)
            spec.fixed_sigma2 = *o.sigma2;
        if (o.c1)
            spec.fixed_c = *o.c1;
        if (o.c2 && *o.c2 != spec.fixed_c)
            throw dib::InvalidArgument("sweep: budgets are symmetric; use `bound` for c1 != c2");
        dib::SweepRange &range =
            spec.mode == dib::SweepMode::snr_sweep ? spec.snr_db_range : spec.budget_range;
        if (spec.mode != dib::SweepMode::single)
        {
            if (!o.start || !o.stop || !o.step)
                throw dib::InvalidArgument("sweep: --start, --stop and --step are required");
            range = {*o.start, *o.stop, *o.step};
            if (spec.mode == dib::SweepMode::snr_sweep && o.sigma2)
                throw dib::InvalidArgument("sweep: --sigma2 conflicts with an SNR sweep");
        }
    }
    spec.settings = o.settings;
    spec.schemes = chosen_schemes(o);
    spec.output_path = o.out;
    dib::run_sweep(spec, std::cout, std::cerr);
    return 0;
}

int run_verify(const Options &o)
{
    dib::VerifyOptions v;
    v.corrupt_seed_stream = o.corrupt_seed;
    return dib::print_verification(dib::run_verification(o.settings, v), std::cout);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Rate bounds for the two-relay Rayleigh-fading diamond channel"};
    app.set_config("--config", "", "Key = value config file; command-line flags take precedence");
    app.require_subcommand(1);
    Options o;
    add_options(app, o);

    CLI::App *bound = app.add_subcommand("bound", "Evaluate the schemes at one configuration");
    CLI::App *sweep = app.add_subcommand("sweep", "Write a CSV over an SNR or budget range");
    CLI::App *verify = app.add_subcommand("verify", "Run the oracle suites");
    verify->add_flag("--corrupt-seed", o.corrupt_seed,
                     "Test hook: perturb the seed of the second determinism run");
    for (CLI::App *sub : {bound, sweep, verify})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    try
    {
        if (*bound)
            return run_bound(o);
        if (*sweep)
            return run_sweep(o);
        return run_verify(o);
    }
    catch (const dib::Error &e)
    {
        std::cerr << "dib: " << e.what() << '\n';
        return 2;
    }
}
