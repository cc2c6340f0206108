#pragma once

#include <radspec/compare.hpp>
#include <radspec/frobenius.hpp>
#include <radspec/numerov.hpp>

#include <string>
#include <vector>

namespace radspec {

struct LevelRow {
    int n;
    double energy;
    double u0;
};

/// Spectrum listing, analytic or numeric.
struct LevelsReport {
    std::string source;    ///< e.g. "analytic morse"
    std::string criterion; ///< boundary condition or "analytic full-line"
    double hbar = 1.0;
    int ell = 0;
    std::vector<LevelRow> rows;
};

struct ClassifyReport {
    std::string source;
    double hbar = 1.0;
    double tol = 0.0;
    std::vector<LevelClass> classes;
};

namespace io {

/// 12 significant digits; non-finite values come out as "nan"/"inf" text.
std::string format_csv(double value);

/// 17 significant digits (round-trips a double exactly); non-finite values
/// become JSON null.
std::string format_json(double value);

std::string json_quote(const std::string& text);

std::string to_csv(const LevelsReport& report);
std::string to_json(const LevelsReport& report);

std::string to_csv(const SpectrumReport& report);
std::string to_json(const SpectrumReport& report);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);

/// Sampled wavefunction as two-column plot data (r, u).
std::string to_csv(const ShootingResult& result);
/// Level metadata only; the samples stay in the CSV form.
std::string to_json(const ShootingResult& result);

std::string to_csv(const ClassifyReport& report);
std::string to_json(const ClassifyReport& report);

std::string to_csv(const DeltaExpansion& expansion);
std::string to_json(const DeltaExpansion& expansion);

/// Writes the whole string, or throws config_error without leaving a partial
/// file behind.
void write_file(const std::string& path, const std::string& content);

} // namespace io
} // namespace radspec
