// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/errors.hpp"
#include "dib/experiments/sweep.hpp"
#include "dib/experiments/verify.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dib;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SweepSpec small_snr_sweep()
{
    SweepSpec spec;
    spec.mode = SweepMode::snr_sweep;
    spec.snr_db_range = {0.0, 20.0, 10.0};
    spec.fixed_c = 4.0;
    spec.settings.mc_samples = 20'000;
    return spec;
}

} // namespace

TEST_CASE("scheme names round-trip")
{
    for (Scheme s : all_schemes())
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK(scheme_name(Scheme::qci_j4) == "qci_J4");
    CHECK(all_schemes().size() == 6);
    CHECK_THROWS_AS(parse_scheme("qci_J16"), InvalidArgument);
    CHECK_THROWS_AS(parse_scheme(""), InvalidArgument);
}

TEST_CASE("ranges")
{
    CHECK(SweepRange{0.0, 60.0, 2.0}.points().size() == 31);
    CHECK(SweepRange{0.0, 25.0, 1.0}.points().size() == 26);
    CHECK(SweepRange{1.0, 1.0, 1.0}.points() == std::vector<double>{1.0});
    const std::vector<double> p = SweepRange{0.0, 1.0, 0.1}.points();
    REQUIRE(p.size() == 11);
    CHECK(p.back() == 1.0);
}

TEST_CASE("spec validation")
{
    SweepSpec ok = small_snr_sweep();
    CHECK_NOTHROW(ok.validate());

    SweepSpec bad = ok;
    bad.snr_db_range.step = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = ok;
    bad.snr_db_range = {5.0, 1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = ok;
    bad.schemes.clear();
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = ok;
    bad.fixed_c = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("presets")
{
    const SweepSpec f2 = preset("fig2");
    CHECK(f2.mode == SweepMode::snr_sweep);
    CHECK(f2.fixed_c == 10.0);
    CHECK(f2.snr_db_range.points().size() == 31);
    CHECK(f2.snr_db_range.points().front() == 0.0);
    CHECK(f2.snr_db_range.points().back() == 60.0);

    const SweepSpec f3 = preset("fig3");
    CHECK(f3.mode == SweepMode::budget_sweep);
    CHECK(f3.fixed_snr_db == 40.0);
    CHECK(f3.budget_range.points().size() == 26);
    CHECK_THROWS_AS(preset("fig4"), InvalidArgument);
}

TEST_CASE("csv layout")
{
    SweepSpec spec;
    spec.schemes = {Scheme::ub, Scheme::mmse};
    CHECK(csv_header(spec) == "rho_db,c_bits,ub,mmse,ub_residual,mmse_halfwidth");
    CHECK(csv_header(SweepSpec{}) ==
          "rho_db,c_bits,ub,qci_J2,qci_J4,qci_J8,tci,mmse,ub_residual,qci_J2_iterations,"
          "qci_J4_iterations,qci_J8_iterations,tci_threshold,mmse_halfwidth");

    SweepRow row;
    row.rho_db = 40.0;
    row.c_bits = 10.0;
    row.values = {1.0 / 3.0, std::nullopt};
    row.diagnostics = {1e-12, 0.5};
    CHECK(csv_row(row) == "40,10,0.333333333,,1e-12,0.5");
}

TEST_CASE("single point orders the lower bounds under the upper bound")
{
    SolverSettings s;
    s.mc_samples = 200'000;
    const SweepRow row = evaluate_config({1.0, 5.0, 5.0}, all_schemes(), s);
    CHECK(row.rho_db == 0.0);
    CHECK(row.c_bits == 5.0);
    REQUIRE(row.errors.empty());
    const double ub = *row.values[0];
    const double halfwidth = *row.diagnostics[5];
    for (std::size_t i = 1; i < row.values.size(); ++i)
        CHECK(*row.values[i] <= ub + 3.0 * halfwidth);
}

TEST_CASE("a failing scheme leaves an empty cell and a log line")
{
    SweepSpec spec = small_snr_sweep();
    spec.schemes = {Scheme::ub, Scheme::mmse};
    spec.settings.max_iter = 1;
    std::ostringstream csv, log;
    run_sweep(spec, csv, log);

    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line))
    {
        ++rows;
        // rho_db, c_bits, empty ub, mmse value, empty residual, half-width
        CHECK_THAT(line, Catch::Matchers::Matches(R"([0-9.e+-]+,4,,[0-9.e+-]+,,[0-9.e+-]+)"));
    }
    CHECK(rows == 3);
    CHECK_THAT(log.str(), ContainsSubstring("ub"));
    CHECK_THAT(log.str(), ContainsSubstring("rho_db=10"));
}

TEST_CASE("parallel and serial sweeps agree bit for bit")
{
    SweepSpec spec = small_snr_sweep();
    const std::vector<SweepRow> a = evaluate_sweep(spec);
    const std::vector<SweepRow> b = evaluate_sweep_serial(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(csv_row(a[i]) == csv_row(b[i]));

    spec.mode = SweepMode::budget_sweep;
    spec.budget_range = {0.0, 6.0, 3.0};
    spec.fixed_snr_db = 20.0;
    const std::vector<SweepRow> c = evaluate_sweep(spec);
    REQUIRE(c.size() == 3);
    CHECK(c[0].c_bits == 0.0);
    CHECK(c[2].c_bits == 6.0);
    CHECK_THAT(c[1].rho_db, WithinAbs(20.0, 1e-12));

    spec.fixed_sigma2 = 0.1;
    const std::vector<SweepRow> d = evaluate_sweep(spec);
    for (const SweepRow &row : d)
    {
        CHECK(row.sigma2 == 0.1);
        CHECK_THAT(row.rho_db, WithinAbs(10.0, 1e-12));
    }
}

TEST_CASE("csv files are byte-identical across runs")
{
    const auto dir = std::filesystem::temp_directory_path() / "dib_test_experiments";
    std::filesystem::create_directories(dir);
    SweepSpec spec = small_snr_sweep();
    std::ostringstream sink, log;
    spec.output_path = (dir / "a.csv").string();
    run_sweep(spec, sink, log);
    spec.output_path = (dir / "b.csv").string();
    run_sweep(spec, sink, log);
    CHECK(sink.str().empty());
    const std::string a = slurp(dir / "a.csv");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(dir / "b.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable output path")
{
    SweepSpec spec = small_snr_sweep();
    spec.schemes = {Scheme::ub};
    spec.output_path = "/nonexistent-dir/out.csv";
    std::ostringstream sink, log;
    CHECK_THROWS_AS(run_sweep(spec, sink, log), IoError);
}

TEST_CASE("verification suite")
{
    SolverSettings s;
    const std::vector<VerifyCheck> checks = run_verification(s);
    CHECK(checks.size() == 7);
    std::ostringstream out;
    CHECK(print_verification(checks, out) == 0);
    for (const VerifyCheck &c : checks)
    {
        CAPTURE(c.name, c.detail);
        CHECK(c.passed);
    }

    SECTION("a corrupted seed stream fails the determinism check")
    {
        const std::vector<VerifyCheck> bad = run_verification(s, {true});
        std::ostringstream sink;
        CHECK(print_verification(bad, sink) != 0);
        int failed = 0;
        for (const VerifyCheck &c : bad)
            if (!c.passed)
            {
                ++failed;
                CHECK_THAT(c.name, ContainsSubstring("determinism"));
            }
        CHECK(failed == 1);
    }

    SECTION("a loose solver tolerance still meets the lattice gate")
    {
        SolverSettings loose;
        loose.abs_tol = 1e-1;
        const std::vector<VerifyCheck> res = run_verification(loose);
        CHECK(res.front().passed);
    }
}
