// Command-line driver: error-vs-order sweeps, decay-model fits, the named
// figure presets, and a fast self-check battery over the library's
// independent evaluation routes.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "eulersum/analysis.hpp"
#include "eulersum/cli.hpp"
#include "eulersum/euler_series.hpp"
#include "eulersum/pade.hpp"
#include "eulersum/series_tools.hpp"

namespace es = eulersum;

namespace {

std::string trimmed(const std::string& s) {
    const char* ws = " \t\r\n";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

es::Real parse_real_flag(const std::string& text, const char* flag) {
    es::ScopedPrecision guard(50);
    try {
        return es::Real(trimmed(text));
    } catch (const std::exception&) {
        throw es::config_error(std::string(flag) + ": unparsable number '" +
                               text + "'");
    }
}

std::vector<es::ErrorMethod> parse_method_list(const std::string& csv) {
    std::vector<es::ErrorMethod> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        const auto method = es::parse_error_method(item);
        if (!method) {
            throw es::config_error("unknown method '" + item + "'");
        }
        out.push_back(*method);
    }
    if (out.empty()) {
        throw es::config_error("--methods: empty list");
    }
    return out;
}

// Runs the sweep and sends the table to the config's output path, or to
// stdout when no path is set.
int execute_sweep(const es::SweepConfig& cfg) {
    const std::vector<es::SweepRow> table = es::run_sweep(cfg);
    if (cfg.output_path.empty()) {
        if (cfg.emit_format == "json") {
            es::emit_json(table, cfg, std::cout);
        } else {
            es::emit_csv(table, cfg, std::cout);
        }
    } else {
        es::emit(table, cfg);
        std::cout << "wrote " << cfg.output_path << " (" << table.size()
                  << " rows, digits=" << es::effective_digits(cfg) << ")\n";
    }
    return 0;
}

struct VerifyReporter {
    unsigned failures = 0;

    void operator()(bool ok, const std::string& name,
                    const std::string& detail = std::string()) {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << '\n';
        if (!ok) ++failures;
    }
};

std::string rel_detail(const es::Real& rel) {
    es::ScopedPrecision guard(30);
    return "rel=" + rel.str(3, std::ios_base::scientific);
}

int run_verify_command() {
    VerifyReporter report;

    {
        // Quadrature route against the exponential-integral route at the
        // classical reference point z = 1.
        const auto ctx = es::make_context(40);
        es::ScopedPrecision guard(40);
        const es::Complex one{es::Real(1)};
        const es::Complex a = es::euler_integral(one, ctx);
        const es::Complex b = es::euler_integral_via_exp_integral(one, ctx);
        const es::Real gap = es::abs(a - b);
        report(gap <= es::Real("1e-20"),
               "reference value: quadrature vs exponential-integral route",
               "gap=" + gap.str(3, std::ios_base::scientific));
    }

    const auto ctx60 = es::make_context(60);
    const es::Real tol_identity("1e-10");
    {
        es::ScopedPrecision guard(60);
        const es::Complex z_pi4 =
            es::from_polar(es::Real(10), es::const_pi() / 4);
        const struct {
            unsigned k, n;
            es::Complex z;
            const char* label;
        } delta_rows[] = {
            {8, 0, es::Complex{es::Real(1)}, "delta error identity at z=1"},
            {12, 0, es::Complex{es::Real(10)}, "delta error identity at z=10"},
            {5, 1, z_pi4, "delta error identity at z=10 cis(pi/4), n=1"},
        };
        for (const auto& row : delta_rows) {
            const es::Complex direct =
                es::delta_error_direct(row.k, row.n, row.z, ctx60);
            const es::Complex closed =
                es::delta_error_closed(row.k, row.n, row.z, ctx60).value;
            const es::Real rel = es::abs(direct - closed) / es::abs(closed);
            report(rel <= tol_identity, row.label, rel_detail(rel));
        }
        const struct {
            unsigned k, n;
            es::Complex z;
            const char* label;
        } pade_rows[] = {
            {8, 0, es::Complex{es::Real(10)},
             "rational-table error identity at z=10"},
            {5, 1, es::Complex{es::Real(1)},
             "rational-table error identity at z=1, n=1"},
        };
        for (const auto& row : pade_rows) {
            const es::Complex direct = es::observed_error(
                es::ErrorMethod::pade, row.k, row.n, row.z, ctx60);
            const es::Complex closed =
                es::pade_error_closed(row.k, row.n, row.z, ctx60);
            const es::Real rel = es::abs(direct - closed) / es::abs(closed);
            report(rel <= tol_identity, row.label, rel_detail(rel));
        }
    }

    for (const long zv : {1L, 10L}) {
        const auto rep =
            es::check_stieltjes_inequalities(es::Real(zv), 6, ctx60);
        std::ostringstream detail;
        detail << rep.checks.size() << " checks, " << rep.failed
               << " failed, " << rep.inconclusive << " inconclusive";
        report(rep.all_hold(),
               "order relations of the approximant table at z=" +
                   std::to_string(zv),
               detail.str());
    }

    {
        const es::MomentSequence moments = es::euler_moments();
        bool ok = true;
        for (unsigned k = 0; 2 * k <= 12; ++k) {
            for (unsigned n = 0; n + 2 * k <= 12; ++n) {
                if (!(es::hankel_determinant(moments, k, n) > 0)) ok = false;
            }
        }
        report(ok, "moment determinants positive through order 10");
    }

    {
        es::ScopedPrecision guard(60);
        const es::Complex z{es::Real(1)};
        for (const unsigned n : {3U, 4U}) {
            const es::Complex d = es::remainder_difference(n, z, ctx60).value;
            const es::Complex s = es::remainder_stieltjes(n, z, ctx60).value;
            const es::Complex l =
                es::remainder_laguerre_integral(n, z, ctx60).value;
            const es::Complex f =
                es::remainder_factorial_series(n, z, 2000, ctx60).value;
            const es::Real scale = es::abs(d);
            const es::Complex vals[] = {d, s, l, f};
            es::Real worst(0);
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j) {
                    const es::Real gap = es::abs(vals[i] - vals[j]) / scale;
                    if (gap > worst) worst = gap;
                }
            }
            report(worst <= es::Real("1e-12"),
                   "truncation remainder four ways at n=" + std::to_string(n),
                   rel_detail(worst));
        }
    }

    if (report.failures == 0) {
        std::cout << "verify: all checks passed\n";
        return 0;
    }
    std::cout << "verify: " << report.failures << " check(s) failed\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "High-precision experiments on the factorially divergent model "
        "series: error sweeps of the sequence transformations, decay-model "
        "fits, figure presets, and a self-check battery."};
    app.require_subcommand(1);

    auto* sweep = app.add_subcommand(
        "sweep", "Run an error-vs-order sweep and emit a table");
    std::string sweep_config, sweep_methods, sweep_zmod, sweep_zphase;
    std::string sweep_out, sweep_format;
    unsigned sweep_digits = 0, sweep_kmin = 0, sweep_kmax = 0;
    sweep->add_option("--config", sweep_config,
                      "Config file (flat key=value)");
    auto* o_methods = sweep->add_option(
        "--methods", sweep_methods, "Comma list: delta,pade,levin_d,drummond");
    auto* o_zmod = sweep->add_option("--z-mod", sweep_zmod,
                                     "Argument modulus (decimal string)");
    auto* o_zphase = sweep->add_option("--z-phase", sweep_zphase,
                                       "Argument phase in radians");
    auto* o_digits =
        sweep->add_option("--digits", sweep_digits, "Requested digits");
    auto* o_kmin = sweep->add_option("--kmin", sweep_kmin, "Lowest order");
    auto* o_kmax = sweep->add_option("--kmax", sweep_kmax, "Highest order");
    auto* o_out = sweep->add_option("--out", sweep_out,
                                    "Output path (stdout when absent)");
    auto* o_format =
        sweep->add_option("--format", sweep_format, "csv or json");

    auto* fit = app.add_subcommand(
        "fit", "Fit |error| ~ A exp(-alpha k^nu) over an order range");
    std::string fit_method = "delta", fit_zmod = "10", fit_zphase = "0";
    unsigned fit_kmin = 10, fit_kmax = 60, fit_digits = 0;
    bool fit_envelope = false;
    fit->add_option("--method", fit_method, "delta|pade|levin_d|drummond");
    fit->add_option("--z-mod", fit_zmod, "Argument modulus");
    fit->add_option("--z-phase", fit_zphase, "Argument phase in radians");
    fit->add_option("--kmin", fit_kmin, "Lowest order in the fit window");
    fit->add_option("--kmax", fit_kmax, "Highest order in the fit window");
    fit->add_option("--digits", fit_digits,
                    "Requested digits (raised to 2*kmax+30 when lower)");
    fit->add_flag("--envelope", fit_envelope,
                  "Fit the local maxima of |error| instead of raw points");

    auto* verify = app.add_subcommand(
        "verify", "Cross-check the independent evaluation routes");

    auto* preset = app.add_subcommand(
        "preset", "Run a named figure preset (fig1, fig2a..fig2d, fig3)");
    std::string preset_name;
    std::string preset_out, preset_format;
    unsigned preset_digits = 0, preset_kmax = 0;
    preset->add_option("name", preset_name, "Preset name")->required();
    auto* p_digits =
        preset->add_option("--digits", preset_digits, "Override digits");
    auto* p_kmax =
        preset->add_option("--kmax", preset_kmax, "Override highest order");
    auto* p_out =
        preset->add_option("--out", preset_out, "Override output path");
    auto* p_format =
        preset->add_option("--format", preset_format, "Override format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            es::SweepConfig cfg;
            if (!sweep_config.empty()) {
                cfg = es::load_config_file(sweep_config);
            }
            if (o_methods->count() > 0) {
                cfg.methods = parse_method_list(sweep_methods);
            }
            if (o_zmod->count() > 0) {
                const es::Real mod = parse_real_flag(sweep_zmod, "--z-mod");
                const es::Real phase =
                    o_zphase->count() > 0
                        ? parse_real_flag(sweep_zphase, "--z-phase")
                        : es::Real(0);
                cfg.z_list.assign(1, {mod, phase});
            } else if (o_zphase->count() > 0) {
                throw es::config_error("--z-phase needs --z-mod");
            }
            if (o_digits->count() > 0) cfg.digits = sweep_digits;
            if (o_kmin->count() > 0) cfg.k_min = sweep_kmin;
            if (o_kmax->count() > 0) cfg.k_max = sweep_kmax;
            if (o_out->count() > 0) cfg.output_path = sweep_out;
            if (o_format->count() > 0) cfg.emit_format = sweep_format;
            return execute_sweep(cfg);
        }
        if (fit->parsed()) {
            const auto method = es::parse_error_method(fit_method);
            if (!method) {
                throw es::config_error("--method: unknown method '" +
                                       fit_method + "'");
            }
            if (fit_kmin < 1 || fit_kmax < fit_kmin) {
                throw es::config_error("fit: bad order range");
            }
            const es::Real mod = parse_real_flag(fit_zmod, "--z-mod");
            const es::Real phase = parse_real_flag(fit_zphase, "--z-phase");
            {
                es::ScopedPrecision guard(60);
                if (!(mod > 0) || !(es::abs(phase) < es::const_pi())) {
                    throw es::config_error(
                        "fit: modulus must be positive and the phase must "
                        "lie strictly inside (-pi, pi)");
                }
            }
            const unsigned eff =
                std::max(fit_digits, 2 * fit_kmax + 30);
            const auto ctx = es::make_context(eff);
            std::vector<std::pair<unsigned, es::Real>> points;
            {
                es::ScopedPrecision guard(eff);
                const es::Complex z = es::from_polar(
                    es::anchored(mod, eff), es::anchored(phase, eff));
                for (unsigned k = fit_kmin; k <= fit_kmax; ++k) {
                    try {
                        points.emplace_back(
                            k, es::abs(es::observed_error(*method, k, 0, z,
                                                          ctx)));
                    } catch (const es::breakdown_error&) {
                        // A degenerate order is left out of the fit.
                    }
                }
            }
            if (fit_envelope) points = es::envelope_points(points);
            const es::FitResult result =
                es::fit_exp_model(points, fit_kmin, fit_kmax, ctx);
            es::ScopedPrecision guard(30);
            std::cout << "points=" << points.size()
                      << " nu=" << result.nu.str(6)
                      << " alpha=" << result.alpha.str(6)
                      << " A=" << result.amplitude.str(6)
                      << " residual=" << result.residual.str(6) << '\n';
            return 0;
        }
        if (verify->parsed()) {
            return run_verify_command();
        }
        if (preset->parsed()) {
            const char* env = std::getenv("EULERSUM_PRESET_DIR");
            const std::string dir =
                (env != nullptr && *env != '\0') ? env : "./presets";
            es::SweepConfig cfg =
                es::load_config_file(dir + "/" + preset_name + ".cfg");
            if (p_digits->count() > 0) cfg.digits = preset_digits;
            if (p_kmax->count() > 0) cfg.k_max = preset_kmax;
            if (p_out->count() > 0) cfg.output_path = preset_out;
            if (p_format->count() > 0) cfg.emit_format = preset_format;
            return execute_sweep(cfg);
        }
    } catch (const es::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const es::parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const es::error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
