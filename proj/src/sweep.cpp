#include <cstdint>
#include <iomanip>
#include <sstream>
#include <utility>

#include "eulersum/cli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

unsigned effective_digits(const SweepConfig& cfg) {
    const unsigned floor_digits = 2 * cfg.k_max + 30;
    return cfg.digits > floor_digits ? cfg.digits : floor_digits;
}

void validate(const SweepConfig& cfg) {
    if (cfg.methods.empty()) {
        throw config_error("sweep config: no methods selected");
    }
    if (cfg.z_list.empty()) {
        throw config_error("sweep config: no arguments given");
    }
    if (cfg.k_min < 1) {
        throw config_error("sweep config: k_min must be at least 1");
    }
    if (cfg.k_max < cfg.k_min) {
        throw config_error("sweep config: k_max below k_min");
    }
    ScopedPrecision guard(60);
    const Real pi = const_pi();
    for (const auto& zp : cfg.z_list) {
        if (!(zp.first > 0)) {
            throw config_error("sweep config: modulus must be positive");
        }
        if (!(abs(zp.second) < pi)) {
            throw config_error(
                "sweep config: phase must lie strictly inside (-pi, pi)");
        }
    }
    if (cfg.emit_format != "csv" && cfg.emit_format != "json") {
        throw config_error("sweep config: unknown format '" + cfg.emit_format +
                           "' (expected csv or json)");
    }
}

namespace {

// Companion columns for one row: the decay estimate always (its evaluation
// cannot fail off the cut), the closed form where its representation
// converges.  The extra context carries 20 guard digits; results are
// re-rounded to the table's precision.
void attach_delta_columns(SweepRow& row, const Complex& z, unsigned eff,
                          const PrecisionContext& extra) {
    row.record.asymptotic =
        anchored(delta_error_asymptotic(row.record.k, z, extra), eff);
    try {
        row.record.closed_form = anchored(
            delta_error_closed(row.record.k, row.record.n, z, extra).value,
            eff);
    } catch (const quadrature_error&) {
        row.status = "closed_form_unavailable";
    } catch (const cut_error&) {
        row.status = "closed_form_unavailable";
    }
}

void attach_pade_columns(SweepRow& row, const Complex& z, unsigned eff,
                         const PrecisionContext& extra) {
    row.record.asymptotic = anchored(
        pade_error_asymptotic(row.record.k, row.record.n, z, extra), eff);
    try {
        row.record.closed_form = anchored(
            pade_error_closed(row.record.k, row.record.n, z, extra), eff);
    } catch (const quadrature_error&) {
        row.status = "closed_form_unavailable";
    } catch (const breakdown_error&) {
        row.status = "closed_form_unavailable";
    } catch (const cut_error&) {
        row.status = "closed_form_unavailable";
    }
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const unsigned eff = effective_digits(cfg);
    const PrecisionContext ctx = make_context(eff);
    const PrecisionContext extra = make_context(eff + 20);

    std::vector<SweepRow> table;
    table.reserve(cfg.z_list.size() * cfg.methods.size() *
                  (cfg.k_max - cfg.k_min + 1));
    for (const auto& zp : cfg.z_list) {
        Complex z;
        {
            ScopedPrecision guard(eff + 20);
            z = from_polar(anchored(zp.first, eff + 20),
                           anchored(zp.second, eff + 20));
        }
        for (const ErrorMethod method : cfg.methods) {
            for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
                SweepRow row;
                row.record.method = method;
                row.record.k = k;
                row.record.n = cfg.n;
                row.record.z = anchored(z, eff);
                row.status = "ok";
                try {
                    row.record.observed =
                        observed_error(method, k, cfg.n, z, ctx);
                } catch (const breakdown_error&) {
                    row.status = "transform_breakdown";
                    table.push_back(std::move(row));
                    continue;
                }
                if (method == ErrorMethod::delta && cfg.n == 0) {
                    attach_delta_columns(row, z, eff, extra);
                } else if (method == ErrorMethod::pade) {
                    attach_pade_columns(row, z, eff, extra);
                }
                table.push_back(std::move(row));
            }
        }
    }
    return table;
}

std::string canonical_config_text(const SweepConfig& cfg) {
    std::ostringstream out;
    out << "methods=";
    for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
        if (i != 0) out << ',';
        out << to_string(cfg.methods[i]);
    }
    out << '\n';
    {
        // Re-serialize at a fixed precision so equal values hash equally
        // regardless of the precision they were parsed at.
        ScopedPrecision guard(50);
        for (const auto& zp : cfg.z_list) {
            const Real mod = anchored(zp.first, 50);
            const Real phase = anchored(zp.second, 50);
            out << "z=" << mod.str(40, std::ios_base::scientific) << ','
                << phase.str(40, std::ios_base::scientific) << '\n';
        }
    }
    out << "kmin=" << cfg.k_min << '\n';
    out << "kmax=" << cfg.k_max << '\n';
    out << "n=" << cfg.n << '\n';
    out << "digits=" << cfg.digits << '\n';
    return out.str();
}

std::string config_hash(const SweepConfig& cfg) {
    const std::string text = canonical_config_text(cfg);
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace eulersum
