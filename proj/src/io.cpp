#include <radspec/io.hpp>

#include <radspec/errors.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace radspec::io {

namespace {

std::string printf_double(const char* fmt, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

// Quote a CSV field only when it needs it (comma, quote or newline inside).
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string format_csv(double value) { return printf_double("%.12g", value); }

std::string format_json(double value) {
    if (!std::isfinite(value)) return "null";
    return printf_double("%.17g", value);
}

std::string json_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

std::string to_csv(const LevelsReport& report) {
    std::string out = "n,energy,u0\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_csv(row.energy);
        out += ',';
        out += format_csv(row.u0);
        out += '\n';
    }
    return out;
}

std::string to_json(const LevelsReport& report) {
    std::string out = "{\n";
    out += "  \"source\": " + json_quote(report.source) + ",\n";
    out += "  \"criterion\": " + json_quote(report.criterion) + ",\n";
    out += "  \"hbar\": " + format_json(report.hbar) + ",\n";
    out += "  \"ell\": " + std::to_string(report.ell) + ",\n";
    out += "  \"levels\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"n\": " + std::to_string(row.n) + ", \"energy\": " +
               format_json(row.energy) + ", \"u0\": " + format_json(row.u0) + "}";
    }
    out += report.rows.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string to_csv(const SpectrumReport& report) {
    std::string out = "n,e_ref,e_approx,abs_dev,u0,class\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_csv(row.e_ref);
        out += ',';
        out += format_csv(row.e_approx);
        out += ',';
        out += format_csv(row.abs_dev);
        out += ',';
        out += format_csv(row.u0_approx);
        out += ',';
        out += to_string(row.cls);
        out += '\n';
    }
    return out;
}

std::string to_json(const SpectrumReport& report) {
    std::string out = "{\n";
    out += "  \"reference\": " + json_quote(report.reference_label) + ",\n";
    out += "  \"approx\": " + json_quote(report.approx_label) + ",\n";
    out += "  \"criterion\": " + json_quote(report.criterion) + ",\n";
    out += "  \"tol\": " + format_json(report.tol) + ",\n";
    out += std::string("  \"truncated\": ") + (report.truncated ? "true" : "false") + ",\n";
    out += "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"n\": " + std::to_string(row.n);
        out += ", \"e_ref\": " + format_json(row.e_ref);
        out += ", \"e_approx\": " + format_json(row.e_approx);
        out += ", \"abs_dev\": " + format_json(row.abs_dev);
        out += ", \"u0\": " + format_json(row.u0_approx);
        out += ", \"class\": " + json_quote(to_string(row.cls)) + "}";
    }
    out += report.rows.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "r_m,beta_r_m,e_dirichlet,e_full_line,gap,u0_abs,error\n";
    for (const auto& row : rows) {
        out += format_csv(row.r_m);
        out += ',';
        out += format_csv(row.beta_r_m);
        out += ',';
        out += format_csv(row.e_dirichlet);
        out += ',';
        out += format_csv(row.e_full_line);
        out += ',';
        out += format_csv(row.gap);
        out += ',';
        out += format_csv(row.u0_abs);
        out += ',';
        out += csv_field(row.error);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<SweepRow>& rows) {
    std::string out = "{\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"r_m\": " + format_json(row.r_m);
        out += ", \"beta_r_m\": " + format_json(row.beta_r_m);
        out += ", \"e_dirichlet\": " + format_json(row.e_dirichlet);
        out += ", \"e_full_line\": " + format_json(row.e_full_line);
        out += ", \"gap\": " + format_json(row.gap);
        out += ", \"u0_abs\": " + format_json(row.u0_abs);
        out += ", \"error\": " + json_quote(row.error) + "}";
    }
    out += rows.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string to_csv(const ShootingResult& result) {
    std::string out = "r,u\n";
    for (std::size_t i = 0; i < result.u.size(); ++i) {
        out += format_csv(result.grid.r(i));
        out += ',';
        out += format_csv(result.u[i]);
        out += '\n';
    }
    return out;
}

std::string to_json(const ShootingResult& result) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(result.n) + ",\n";
    out += "  \"energy\": " + format_json(result.energy) + ",\n";
    out += "  \"u0\": " + format_json(result.u0) + ",\n";
    out += "  \"du0\": " + format_json(result.du0) + ",\n";
    out += "  \"bc\": " + json_quote(to_string(result.bc)) + ",\n";
    out += "  \"iterations\": " + std::to_string(result.iterations) + ",\n";
    out += "  \"grid\": {\"r_start\": " + format_json(result.grid.r_start);
    out += ", \"r_end\": " + format_json(result.grid.r_end);
    out += ", \"h\": " + format_json(result.grid.h);
    out += ", \"count\": " + std::to_string(result.grid.count) + "}\n";
    out += "}\n";
    return out;
}

std::string to_csv(const ClassifyReport& report) {
    std::string out = "n,class\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += to_string(report.classes[i]);
        out += '\n';
    }
    return out;
}

std::string to_json(const ClassifyReport& report) {
    std::string out = "{\n";
    out += "  \"source\": " + json_quote(report.source) + ",\n";
    out += "  \"hbar\": " + format_json(report.hbar) + ",\n";
    out += "  \"tol\": " + format_json(report.tol) + ",\n";
    out += "  \"classes\": [";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        if (i > 0) out += ", ";
        out += json_quote(to_string(report.classes[i]));
    }
    out += "]\n}\n";
    return out;
}

std::string to_csv(const DeltaExpansion& expansion) {
    std::string out = "p,coeff\n";
    for (const auto& term : expansion.terms) {
        out += std::to_string(term.p);
        out += ',';
        out += format_csv(term.coeff);
        out += '\n';
    }
    return out;
}

std::string to_json(const DeltaExpansion& expansion) {
    std::string out = "{\n";
    out += "  \"ell\": " + std::to_string(expansion.ell) + ",\n";
    out += "  \"lambda\": " + std::to_string(expansion.lambda) + ",\n";
    out += "  \"terms\": [";
    for (std::size_t i = 0; i < expansion.terms.size(); ++i) {
        if (i > 0) out += ", ";
        out += "{\"p\": " + std::to_string(expansion.terms[i].p) +
               ", \"coeff\": " + format_json(expansion.terms[i].coeff) + "}";
    }
    out += "],\n";
    out += "  \"rendered\": " + json_quote(frobenius::render(expansion));
    // a pure s-wave delta folds the angular factor into one number
    bool collapses = expansion.ell == 0 &&
                     (expansion.empty() ||
                      (expansion.terms.size() == 1 && expansion.terms[0].p == 0));
    if (collapses) {
        double total = frobenius::collapse_y00(expansion);
        out += ",\n  \"y00_collapsed\": " + format_json(total);
        out += ",\n  \"note\": " +
               json_quote("multiplying in Y00 reduces Q to " + format_json(total) +
                          " times a bare delta");
    }
    out += "\n}\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw config_error("cannot open output file: " + path);
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.close();
    if (!file) {
        std::remove(path.c_str());
        throw config_error("failed while writing output file: " + path);
    }
}

} // namespace radspec::io
