#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulersum/cli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

std::string number_field(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

// The thirteen column values of one row, absent columns as empty strings.
std::vector<std::string> row_fields(const SweepRow& row, unsigned eff) {
    ScopedPrecision guard(eff);
    const ErrorRecord& r = row.record;
    std::vector<std::string> f;
    f.reserve(13);
    f.push_back(to_string(r.method));
    f.push_back(std::to_string(r.k));
    f.push_back(std::to_string(r.n));
    f.push_back(number_field(r.z.re, eff));
    f.push_back(number_field(r.z.im, eff));
    if (row.status == "transform_breakdown") {
        f.push_back("");
        f.push_back("");
        f.push_back("");
    } else {
        f.push_back(number_field(r.observed.re, eff));
        f.push_back(number_field(r.observed.im, eff));
        f.push_back(number_field(abs(r.observed), eff));
    }
    if (r.closed_form) {
        f.push_back(number_field(r.closed_form->re, eff));
        f.push_back(number_field(r.closed_form->im, eff));
    } else {
        f.push_back("");
        f.push_back("");
    }
    if (r.asymptotic) {
        f.push_back(number_field(r.asymptotic->re, eff));
        f.push_back(number_field(r.asymptotic->im, eff));
    } else {
        f.push_back("");
        f.push_back("");
    }
    f.push_back(row.status);
    return f;
}

constexpr const char* kColumnNames[] = {
    "method",    "k",         "n",       "z_re",    "z_im",
    "err_re",    "err_im",    "err_abs", "closed_re", "closed_im",
    "asym_re",   "asym_im",   "status"};

}  // namespace

void emit_csv(const std::vector<SweepRow>& table, const SweepConfig& cfg,
              std::ostream& out) {
    const unsigned eff = effective_digits(cfg);
    out << "# digits=" << eff << " config=" << config_hash(cfg) << '\n';
    out << "method,k,n,z_re,z_im,err_re,err_im,err_abs,"
           "closed_re,closed_im,asym_re,asym_im,status\n";
    for (const SweepRow& row : table) {
        const std::vector<std::string> fields = row_fields(row, eff);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out << ',';
            out << fields[i];
        }
        out << '\n';
    }
}

void emit_json(const std::vector<SweepRow>& table, const SweepConfig& cfg,
               std::ostream& out) {
    const unsigned eff = effective_digits(cfg);
    nlohmann::ordered_json doc;
    doc["digits"] = eff;
    doc["config_hash"] = config_hash(cfg);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const SweepRow& row : table) {
        const std::vector<std::string> fields = row_fields(row, eff);
        nlohmann::ordered_json rec;
        rec["method"] = fields[0];
        rec["k"] = row.record.k;
        rec["n"] = row.record.n;
        // Numeric columns stay decimal strings: JSON doubles would truncate
        // them.
        for (std::size_t i = 3; i < 12; ++i) {
            rec[kColumnNames[i]] = fields[i];
        }
        rec["status"] = row.status;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    out << doc.dump(2) << '\n';
}

void emit(const std::vector<SweepRow>& table, const SweepConfig& cfg) {
    if (table.empty()) {
        throw parameter_error("emit: empty table");
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        throw config_error("emit: cannot open output path '" +
                           cfg.output_path + "'");
    }
    if (cfg.emit_format == "json") {
        emit_json(table, cfg, out);
    } else {
        emit_csv(table, cfg, out);
    }
    out.flush();
    if (!out) {
        throw config_error("emit: write failed for '" + cfg.output_path + "'");
    }
}

SweepConfig parse_config_text(const std::string& text) {
    SweepConfig cfg;
    cfg.methods.clear();
    cfg.z_list.clear();

    const auto trim = [](std::string s) {
        const char* ws = " \t\r\n";
        const auto a = s.find_first_not_of(ws);
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(ws);
        return s.substr(a, b - a + 1);
    };
    const auto split = [&trim](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const auto pos = s.find(sep, start);
            if (pos == std::string::npos) {
                parts.push_back(trim(s.substr(start)));
                return parts;
            }
            parts.push_back(trim(s.substr(start, pos - start)));
            start = pos + 1;
        }
    };
    const auto parse_unsigned = [](const std::string& key,
                                   const std::string& value) -> unsigned {
        std::size_t used = 0;
        unsigned long parsed = 0;
        try {
            parsed = std::stoul(value, &used);
        } catch (const std::exception&) {
            throw config_error("config: key '" + key +
                               "' needs a nonnegative integer, got '" + value +
                               "'");
        }
        if (used != value.size() || value[0] == '-') {
            throw config_error("config: key '" + key +
                               "' needs a nonnegative integer, got '" + value +
                               "'");
        }
        return static_cast<unsigned>(parsed);
    };

    // Numbers in config files are read at a fixed precision comfortably
    // above any phase literal the presets carry.
    ScopedPrecision guard(50);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("config: expected key=value, got '" + line +
                               "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "methods") {
            for (const std::string& name : split(value, ',')) {
                const auto method = parse_error_method(name);
                if (!method) {
                    throw config_error("config: unknown method '" + name +
                                       "'");
                }
                cfg.methods.push_back(*method);
            }
        } else if (key == "z") {
            const std::vector<std::string> parts = split(value, ',');
            if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
                throw config_error(
                    "config: key 'z' needs 'modulus,phase', got '" + value +
                    "'");
            }
            try {
                cfg.z_list.emplace_back(Real(parts[0]), Real(parts[1]));
            } catch (const std::exception&) {
                throw config_error("config: unparsable number in z line '" +
                                   value + "'");
            }
        } else if (key == "kmin") {
            cfg.k_min = parse_unsigned(key, value);
        } else if (key == "kmax") {
            cfg.k_max = parse_unsigned(key, value);
        } else if (key == "n") {
            cfg.n = parse_unsigned(key, value);
        } else if (key == "digits") {
            cfg.digits = parse_unsigned(key, value);
        } else if (key == "out") {
            cfg.output_path = value;
        } else if (key == "format") {
            cfg.emit_format = value;
        } else {
            throw config_error("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

SweepConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error("config: cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace eulersum
