// Batch experiment driver: error-vs-order sweeps over the transformation
// methods, decay-model fitting, and deterministic CSV/JSON emission.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/analysis.hpp"
#include "eulersum/precision.hpp"

namespace eulersum {

// One sweep request: which methods to run, at which arguments (each given
// as modulus and phase in radians), over which order range, at what
// requested precision, and where/how to emit the table.
//
// The working precision actually used is effective_digits(cfg): the
// requested digits, raised to at least 2*k_max + 30 so that the raw
// partial sums at the top order still leave headroom after the
// transformation's cancellation.
struct SweepConfig {
    std::vector<ErrorMethod> methods;
    std::vector<std::pair<Real, Real>> z_list;  // (modulus, phase)
    unsigned k_min = 1;
    unsigned k_max = 1;
    unsigned n = 0;
    unsigned digits = 40;
    std::string output_path;
    std::string emit_format = "csv";  // "csv" | "json"
};

unsigned effective_digits(const SweepConfig& cfg);

// Throws config_error on an invalid request: no methods, no arguments,
// k_min < 1 or k_max < k_min, non-positive modulus, a phase on or beyond
// the cut (|phase| >= pi), or an unknown emit format.
void validate(const SweepConfig& cfg);

// One table row: the error record plus a status tag.  "ok" when every
// requested column was computed; "closed_form_unavailable" when the
// observed error exists but the closed-form column could not be evaluated
// (e.g. the integral representation diverges for Re(1/z) < 0);
// "transform_breakdown" when the transformation itself failed.
struct SweepRow {
    ErrorRecord record;
    std::string status;
};

// Runs the sweep: for each argument, method, and order k in
// [k_min, k_max], the observed transformation error; rows for the delta
// transformation at base index 0 and for the rational-table rows also
// carry the closed-form and decay-estimate columns (computed with 20
// guard digits).  Row order is argument-major, then method, then k.
// Deterministic: identical configs produce identical tables.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Decay-model fit |error| ~ A exp(-alpha k^nu): grid search over
// nu in [0.4, 1.1] in steps of 0.005; at each nu a linear least-squares
// fit of log|error| against (1, k^nu) gives (log A, -alpha); the triple
// with the smallest root-mean-square log-magnitude misfit wins.
struct FitResult {
    Real amplitude;  // A
    Real alpha;      // decay coefficient
    Real nu;         // decay exponent
    Real residual;   // rms of log|error| misfit
};

// Fits the model over the points with k in [k_lo, k_hi] and a nonzero
// magnitude.  Throws parameter_error when fewer than 8 usable points
// remain.
FitResult fit_exp_model(const std::vector<std::pair<unsigned, Real>>& points,
                        unsigned k_lo, unsigned k_hi,
                        const PrecisionContext& ctx);

// Strict-interior local maxima of the magnitude sequence, for fitting
// oscillatory error sequences whose raw points dip through zero.
std::vector<std::pair<unsigned, Real>> envelope_points(
    const std::vector<std::pair<unsigned, Real>>& points);

// Canonical flat key=value form of the sweep parameters (methods,
// arguments, order range, base index, digits) — the text that is hashed
// for the output header.  Output path and format are excluded: they do
// not affect the table's content.
std::string canonical_config_text(const SweepConfig& cfg);

// 64-bit FNV-1a hash of canonical_config_text, as 16 hex digits.
std::string config_hash(const SweepConfig& cfg);

// Table serialization.  Columns, in order:
//   method,k,n,z_re,z_im,err_re,err_im,err_abs,
//   closed_re,closed_im,asym_re,asym_im,status
// Numbers carry effective_digits significant digits; absent columns are
// empty.  The first line is a header comment recording the digits and
// the config hash; no timestamps anywhere, so identical configs emit
// byte-identical files.  JSON mirrors the same schema as an object with
// "digits", "config_hash", and a "records" array (numeric error fields
// as decimal strings to preserve precision).
void emit_csv(const std::vector<SweepRow>& table, const SweepConfig& cfg,
              std::ostream& out);
void emit_json(const std::vector<SweepRow>& table, const SweepConfig& cfg,
               std::ostream& out);

// Writes the table to cfg.output_path in cfg.emit_format.  Throws
// parameter_error for an empty table and config_error when the path
// cannot be opened for writing.
void emit(const std::vector<SweepRow>& table, const SweepConfig& cfg);

// Flat key=value config parser (the preset file format).  Keys: methods
// (comma list), z (modulus,phase — repeatable), kmin, kmax, n, digits,
// out, format.  '#' starts a comment.  Unknown keys or malformed values
// throw config_error.
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config_file(const std::string& path);

}  // namespace eulersum
