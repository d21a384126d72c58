// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/experiments/sweep.hpp"
#include "dib/bounds/upper_bound.hpp"
#include "dib/errors.hpp"
#include "dib/model/channel.hpp"
#include "dib/schemes/mmse.hpp"
#include "dib/schemes/qci.hpp"
#include "dib/schemes/tci.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dib {

namespace {

struct Point
{
    double rho_db;
    double sigma2;
    double c;
};

std::vector<Point> sweep_points(const SweepSpec &spec)
{
    auto at_db = [](double db, double c) { return Point{db, 1.0 / db_to_linear(db), c}; };
    // Budget and single modes hold the noise power fixed.
    auto at_fixed = [&](double c) {
        if (spec.fixed_sigma2)
            return Point{-10.0 * std::log10(*spec.fixed_sigma2) + 0.0, *spec.fixed_sigma2, c};
        return at_db(spec.fixed_snr_db, c);
    };
    std::vector<Point> pts;
    switch (spec.mode)
    {
    case SweepMode::snr_sweep:
        for (double db : spec.snr_db_range.points())
            pts.push_back(at_db(db, spec.fixed_c));
        break;
    case SweepMode::budget_sweep:
        for (double c : spec.budget_range.points())
            pts.push_back(at_fixed(c));
        break;
    case SweepMode::single:
        pts.push_back(at_fixed(spec.fixed_c));
        break;
    }
    return pts;
}

struct Outcome
{
    double value;
    double diagnostic;
};

Outcome evaluate_scheme(Scheme scheme, const SystemConfig &config, const SolverSettings &settings)
{
    switch (scheme)
    {
    case Scheme::ub:
    {
        const UpperBoundResult r = upper_bound(config, settings);
        return {r.rate, r.constraint_residual};
    }
    case Scheme::qci_j2:
    case Scheme::qci_j4:
    case Scheme::qci_j8:
    {
        const int J = scheme == Scheme::qci_j2 ? 2 : scheme == Scheme::qci_j4 ? 4 : 8;
        const QciAllocation a = optimize_allocation(build_grid(J, config), config, settings);
        return {a.lower_bound, static_cast<double>(a.iterations)};
    }
    case Scheme::tci:
    {
        const TciPoint p = tci_best(config, settings);
        return {p.rate, p.thresholds[0]};
    }
    case Scheme::mmse:
    {
        const MmseResult r = mmse_rate(config, settings);
        return {r.rate, r.mc_halfwidth};
    }
    }
    throw InvalidArgument("evaluate_scheme: unknown scheme");
}

std::vector<SweepRow> evaluate_impl(const SweepSpec &spec, bool parallel)
{
    spec.validate();
    const std::vector<Point> pts = sweep_points(spec);
    std::vector<SweepRow> rows(pts.size());
    const int n = static_cast<int>(pts.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i)
    {
        rows[i] = evaluate_config({pts[i].sigma2, pts[i].c, pts[i].c}, spec.schemes, spec.settings);
        rows[i].rho_db = pts[i].rho_db;
    }
    return rows;
}

std::string format_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

std::string diagnostic_name(Scheme s)
{
    switch (s)
    {
    case Scheme::ub:
        return "ub_residual";
    case Scheme::tci:
        return "tci_threshold";
    case Scheme::mmse:
        return "mmse_halfwidth";
    default:
        return scheme_name(s) + "_iterations";
    }
}


std::string scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::ub:
        return "ub";
    case Scheme::qci_j2:
        return "qci_J2";
    case Scheme::qci_j4:
        return "qci_J4";
    case Scheme::qci_j8:
        return "qci_J8";
    case Scheme::tci:
        return "tci";
    case Scheme::mmse:
        return "mmse";
    }
    return "?";
}

Scheme parse_scheme(const std::string &name)
{
    for (Scheme s : all_schemes())
        if (scheme_name(s) == name)
            return s;
    throw InvalidArgument("unknown scheme '" + name + "'");
}

std::vector<Scheme> all_schemes()
{
    return {Scheme::ub, Scheme::qci_j2, Scheme::qci_j4, Scheme::qci_j8, Scheme::tci, Scheme::mmse};
}

std::vector<double> SweepRange::points() const
{
    const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> p(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        p[i] = start + static_cast<double>(i) * step;
    return p;
}

void SweepSpec::validate() const
{
    settings.validate();
    if (schemes.empty())
        throw InvalidArgument("SweepSpec: no schemes requested");
    auto check = [](const SweepRange &r, const char *what) {
        if (!(r.step > 0.0) || !(r.start <= r.stop) || !std::isfinite(r.stop))
            throw InvalidArgument(std::string("SweepSpec: bad ") + what + " range");
    };
    if (mode == SweepMode::snr_sweep)
        check(snr_db_range, "SNR");
    if (mode == SweepMode::budget_sweep)
    {
        check(budget_range, "budget");
        if (budget_range.start < 0.0)
            throw InvalidArgument("SweepSpec: budgets must be >= 0");
    }
    if (!(fixed_c >= 0.0))
        throw InvalidArgument("SweepSpec: fixed_c must be >= 0");
    if (fixed_sigma2 && !(*fixed_sigma2 > 0.0))
        throw InvalidArgument("SweepSpec: sigma2 must be > 0");
}

SweepSpec preset(const std::string &name)
{
    SweepSpec spec;
    if (name == "fig2")
    {
        spec.mode = SweepMode::snr_sweep;
        spec.snr_db_range = {0.0, 60.0, 2.0};
        spec.fixed_c = 10.0;
    }
    else if (name == "fig3")
    {
        spec.mode = SweepMode::budget_sweep;
        spec.budget_range = {0.0, 25.0, 1.0};
        spec.fixed_snr_db = 40.0;
    }
    else
        throw InvalidArgument("unknown preset '" + name + "' (expected fig2 or fig3)");
    return spec;
}

SweepRow evaluate_config(const SystemConfig &config, const std::vector<Scheme> &schemes,
                         const SolverSettings &settings)
{
    SweepRow row;
    row.rho_db = -10.0 * std::log10(config.noise_power) + 0.0;   // no "-0"
    row.sigma2 = config.noise_power;
    row.c_bits = config.c1;
    for (Scheme s : schemes)
    {
        try
        {
            const Outcome o = evaluate_scheme(s, config, settings);
            row.values.emplace_back(o.value);
            row.diagnostics.emplace_back(o.diagnostic);
        }
        catch (const std::exception &e)
        {
            row.values.emplace_back(std::nullopt);
            row.diagnostics.emplace_back(std::nullopt);
            row.errors.push_back(scheme_name(s) + ": " + e.what());
        }
    }
    return row;
}

std::vector<SweepRow> evaluate_sweep(const SweepSpec &spec) { return evaluate_impl(spec, true); }

std::vector<SweepRow> evaluate_sweep_serial(const SweepSpec &spec)
{
    return evaluate_impl(spec, false);
}

std::string csv_header(const SweepSpec &spec)
{
    std::string h = "rho_db,c_bits";
    for (Scheme s : spec.schemes)
        h += "," + scheme_name(s);
    for (Scheme s : spec.schemes)
        h += "," + diagnostic_name(s);
    return h;
}

std::string csv_row(const SweepRow &row)
{
    std::string line = format_value(row.rho_db) + "," + format_value(row.c_bits);
    for (const auto &v : row.values)
        line += "," + (v ? format_value(*v) : std::string());
    for (const auto &d : row.diagnostics)
        line += "," + (d ? format_value(*d) : std::string());
    return line;
}

void run_sweep(const SweepSpec &spec, std::ostream &fallback, std::ostream &log)
{
    const std::vector<SweepRow> rows = evaluate_sweep(spec);
    std::ostringstream csv;
    csv << csv_header(spec) << '\n';
    for (const SweepRow &row : rows)
    {
        csv << csv_row(row) << '\n';
        for (const std::string &e : row.errors)
            log << "rho_db=" << format_value(row.rho_db) << " c_bits=" << format_value(row.c_bits)
                << ": " << e << '\n';
    }

    if (spec.output_path.empty())
    {
        fallback << csv.str();
        return;
    }
    std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("run_sweep: cannot open '" + spec.output_path + "' for writing");
    out << csv.str();
    out.close();
    if (!out)
        throw IoError("run_sweep: failed writing '" + spec.output_path + "'");
}

} // namespace dib
