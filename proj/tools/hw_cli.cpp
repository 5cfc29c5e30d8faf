// Command-line interface for the Hartman-Watson small-time asymptotics
// library: saddle diagnostics, density evaluation by several methods,
// asymptotics-vs-oracle comparison tables (CSV), Yor conditional/marginal
// densities, and validation of the inversion engine on the Levy pair.
//
// Exit codes: 0 success, 1 usage or argument error, 2 domain/convergence error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hw/asian.hpp"
#include "hw/asymptotics.hpp"
#include "hw/errors.hpp"
#include "hw/inversion.hpp"
#include "hw/saddle.hpp"

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("not a number: " + item);
        out.push_back(v);
    }
    return out;
}

void print_density(const hw::LogDensity& d, bool linear) {
    std::cout << "method    = " << to_string(d.method) << "\n";
    std::cout << "log_value = " << fmt(d.log_value) << "\n";
    if (linear && d.value) std::cout << "value     = " << fmt(*d.value) << "\n";
}

struct ComparisonRecord {
    double t = 0.0;
    double r = 0.0;
    std::optional<double> u0, log_f_main, log_f_rough, log_f_crude, log_f_oracle, rel_log_gap_main;
    std::string warnings;

    void add_warning(const std::string& w) {
        if (!warnings.empty()) warnings += "; ";
        warnings += w;
    }
};

std::string cell(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

ComparisonRecord compare_row(double t, const hw::HwParams& params,
                             const hw::inversion::ContourSpec& contour) {
    ComparisonRecord rec;
    rec.t = t;
    rec.r = params.r;
    try {
        hw::saddle::SaddleSolution sol = hw::saddle::solve_saddle(t, params);
        rec.u0 = sol.u0;
        rec.log_f_main = hw::asymptotics::density_main(sol, params).log_value;
        if (t < 1.0) rec.log_f_rough = hw::asymptotics::density_rough(sol, params).log_value;
    } catch (const hw::domain_error& e) {
        rec.add_warning(e.what());
    }
    if (t < 1.0) rec.log_f_crude = hw::asymptotics::log_density_crude(t);
    if (t >= 1e-3) {
        try {
            rec.log_f_oracle = hw::inversion::oracle_density(t, params, contour).log_value;
        } catch (const std::runtime_error& e) {
            rec.add_warning(e.what());
        }
    }
    if (rec.log_f_main && rec.log_f_oracle && *rec.log_f_oracle != 0.0)
        rec.rel_log_gap_main = std::abs(*rec.log_f_main - *rec.log_f_oracle) / std::abs(*rec.log_f_oracle);
    return rec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hartman-Watson density: saddle-point asymptotics and Laplace-inversion oracle"};
    app.require_subcommand(1);

    double rel_tol = 1e-10;
    std::size_t max_nodes = 500000;
    bool linear = false;
    app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance")
        ->envname("HW_REL_TOL");
    app.add_option("--max-nodes", max_nodes, "quadrature evaluation budget");
    app.add_flag("--linear", linear, "also print linear values where representable");

    auto positive = [](const std::string& name) {
        return CLI::Validator(
            [name](std::string& s) -> std::string {
                double v = 0.0;
                try {
                    v = std::stod(s);
                } catch (...) {
                    return name + " must be a number";
                }
                if (!(v > 0.0)) return name + " must be positive";
                return {};
            },
            "POSITIVE");
    };

    // --- saddle ---
    auto* c_saddle = app.add_subcommand("saddle", "solve the saddle-point equation");
    double s_r = 1.0, s_t = 0.01;
    c_saddle->add_option("--r", s_r, "Bessel argument r")->required()->check(positive("r"));
    c_saddle->add_option("--t", s_t, "time t")->required()->check(positive("t"));

    // --- density ---
    auto* c_density = app.add_subcommand("density", "evaluate the Hartman-Watson density");
    double d_r = 1.0, d_t = 0.01;
    std::string d_method = "main";
    c_density->add_option("--r", d_r, "Bessel argument r")->required()->check(positive("r"));
    c_density->add_option("--t", d_t, "time t")->required()->check(positive("t"));
    c_density->add_option("--method", d_method, "main|rough|crude|oracle")
        ->check(CLI::IsMember({"main", "rough", "crude", "oracle"}));

    // --- compare ---
    auto* c_compare = app.add_subcommand("compare", "asymptotics-vs-oracle CSV table");
    double g_r = 1.0;
    std::string g_tlist, g_out;
    double g_tmin = 0.0, g_tmax = 0.0;
    std::size_t g_tcount = 0;
    c_compare->add_option("--r", g_r, "Bessel argument r")->required()->check(positive("r"));
    c_compare->add_option("--t", g_tlist, "comma-separated t values");
    c_compare->add_option("--t-min", g_tmin, "log-grid lower end");
    c_compare->add_option("--t-max", g_tmax, "log-grid upper end");
    c_compare->add_option("--t-count", g_tcount, "log-grid size");
    c_compare->add_option("--out", g_out, "CSV output path (default stdout)");

    // --- asian ---
    auto* c_asian = app.add_subcommand("asian", "Yor conditional/marginal density for the "
                                                "time-integral of geometric Brownian motion");
    double a_t = 1.0, a_nu = 0.0, a_u = 1.0, a_x = 0.0;
    bool a_marginal = false;
    std::string a_method = "auto";
    c_asian->add_option("--t", a_t, "time horizon")->required()->check(positive("t"));
    c_asian->add_option("--nu", a_nu, "drift")->required();
    c_asian->add_option("--u", a_u, "evaluation point")->required()->check(positive("u"));
    auto* xopt = c_asian->add_option("--x", a_x, "conditioning endpoint W_t + nu t");
    auto* mflag = c_asian->add_flag("--marginal", a_marginal, "integrate over the endpoint law");
    xopt->excludes(mflag);
    c_asian->add_option("--method", a_method, "auto|oracle|main|rough")
        ->check(CLI::IsMember({"auto", "oracle", "main", "rough"}));

    // --- levy-check ---
    auto* c_levy = app.add_subcommand("levy-check", "validate the inversion engine on the "
                                                    "Levy transform pair");
    std::string l_tlist = "0.05,0.1,0.5,1,2,5";
    c_levy->add_option("--t", l_tlist, "comma-separated t values");

    for (CLI::App* sc : {c_saddle, c_density, c_compare, c_asian, c_levy}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    hw::inversion::ContourSpec contour;
    contour.rel_tol = rel_tol;
    contour.max_nodes = max_nodes;

    try {
        if (c_saddle->parsed()) {
            const hw::HwParams params = hw::HwParams::from_r(s_r);
            const hw::saddle::SaddleSolution sol = hw::saddle::solve_saddle(s_t, params);
            std::cout << "r          = " << fmt(params.r) << "\n";
            std::cout << "rho        = " << fmt(params.rho) << "\n";
            std::cout << "t          = " << fmt(sol.t) << "\n";
            std::cout << "u0         = " << fmt(sol.u0) << "\n";
            std::cout << "residual   = " << fmt(sol.residual) << "\n";
            std::cout << "iterations = " << sol.iterations << "\n";
            std::cout << "M          = " << fmt(sol.m_exact) << "\n";
            std::cout << "from_sp    = " << fmt(hw::saddle::from_sp_identity(sol, params)) << "\n";
        } else if (c_density->parsed()) {
            const hw::HwParams params = hw::HwParams::from_r(d_r);
            if (d_method == "main") {
                print_density(hw::asymptotics::density_main(d_t, params), linear);
            } else if (d_method == "rough") {
                print_density(hw::asymptotics::density_rough(d_t, params), linear);
            } else if (d_method == "crude") {
                print_density(hw::LogDensity::from_log(hw::asymptotics::log_density_crude(d_t),
                                                       hw::DensityKind::Crude),
                              linear);
            } else {
                const hw::inversion::OracleReport rep =
                    hw::inversion::oracle_density_report(d_t, params, contour);
                print_density(rep.density, linear);
                std::cout << "abscissa   = " << fmt(rep.abscissa) << "\n";
                std::cout << "half_width = " << fmt(rep.half_width) << "\n";
                std::cout << "quad_error = " << fmt(rep.rel_error_estimate) << "\n";
                std::cout << "nodes      = " << rep.evaluations << "\n";
            }
        } else if (c_compare->parsed()) {
            std::vector<double> grid;
            if (!g_tlist.empty()) grid = parse_list(g_tlist);
            else if (g_tcount > 0 && g_tmin > 0.0 && g_tmax > g_tmin) {
                for (std::size_t i = 0; i < g_tcount; ++i) {
                    double f = g_tcount == 1 ? 0.0 : static_cast<double>(i) / (g_tcount - 1);
                    grid.push_back(std::exp(std::log(g_tmin) +
                                            f * (std::log(g_tmax) - std::log(g_tmin))));
                }
            }
            if (grid.empty()) {
                std::cerr << "compare: empty t grid; pass --t or --t-min/--t-max/--t-count\n";
                return 1;
            }
            for (double t : grid)
                if (!(t > 0.0)) { std::cerr << "compare: t must be positive\n"; return 1; }

            const hw::HwParams params = hw::HwParams::from_r(g_r);
            std::ostringstream csv;
            csv << "t,r,u0,log_f_main,log_f_rough,log_f_crude,log_f_oracle,rel_log_gap_main,warnings\n";
            std::size_t succeeded = 0;
            std::optional<double> max_gap;
            for (double t : grid) {
                ComparisonRecord rec = compare_row(t, params, contour);
                if (rec.log_f_main || rec.log_f_oracle || rec.log_f_crude) ++succeeded;
                if (rec.rel_log_gap_main && (!max_gap || *rec.rel_log_gap_main > *max_gap))
                    max_gap = rec.rel_log_gap_main;
                csv << fmt(rec.t) << ',' << fmt(rec.r) << ',' << cell(rec.u0) << ','
                    << cell(rec.log_f_main) << ',' << cell(rec.log_f_rough) << ','
                    << cell(rec.log_f_crude) << ',' << cell(rec.log_f_oracle) << ','
                    << cell(rec.rel_log_gap_main) << ',' << rec.warnings << '\n';
            }
            if (!g_out.empty()) {
                std::ofstream out(g_out, std::ios::binary);
                if (!out) { std::cerr << "compare: cannot open " << g_out << "\n"; return 1; }
                out << csv.str();
            } else {
                std::cout << csv.str();
            }
            if (max_gap) std::cerr << "max rel_log_gap_main = " << fmt(*max_gap) << "\n";
            else std::cerr << "max rel_log_gap_main = n/a (no oracle rows)\n";
            if (succeeded == 0) { std::cerr << "compare: no row succeeded\n"; return 2; }
        } else if (c_asian->parsed()) {
            hw::asian::FMethod m = hw::asian::FMethod::Auto;
            if (a_method == "oracle") m = hw::asian::FMethod::Oracle;
            else if (a_method == "main") m = hw::asian::FMethod::Main;
            else if (a_method == "rough") m = hw::asian::FMethod::Rough;
            if (a_marginal) {
                print_density(hw::asian::marginal_density(a_t, a_nu, a_u, m, {}, contour), linear);
            } else {
                hw::asian::GbmIntegralQuery q{a_t, a_nu, a_x, a_u, m};
                print_density(hw::asian::conditional_density(q, contour), linear);
            }
        } else if (c_levy->parsed()) {
            std::vector<double> grid = parse_list(l_tlist);
            if (grid.empty()) { std::cerr << "levy-check: empty t grid\n"; return 1; }
            double max_rel = 0.0;
            for (double t : grid) {
                if (!(t > 0.0)) { std::cerr << "levy-check: t must be positive\n"; return 1; }
                const double lo = hw::inversion::levy_oracle(t, contour).log_value;
                const double lc = hw::asymptotics::levy_density(t).log_value;
                const double rel = std::abs(std::expm1(lo - lc));
                max_rel = std::max(max_rel, rel);
                std::cout << "t = " << fmt(t) << "  log_oracle = " << fmt(lo)
                          << "  log_closed = " << fmt(lc) << "  rel_error = " << fmt(rel) << "\n";
            }
            std::cout << "max relative error = " << fmt(max_rel) << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hw::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
