#include <radspec/cli.hpp>

#include <radspec/analytic.hpp>
#include <radspec/compare.hpp>
#include <radspec/errors.hpp>
#include <radspec/frobenius.hpp>
#include <radspec/io.hpp>
#include <radspec/numerov.hpp>
#include <radspec/potential.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace radspec::cli {

namespace {

std::string trim(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    std::size_t last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw config_error(where + ": not a number: '" + text + "'");
    }
    if (pos != text.size()) throw config_error(where + ": not a number: '" + text + "'");
    return value;
}

int parse_int(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw config_error(where + ": not an integer: '" + text + "'");
    }
    if (pos != text.size() || value < -1000000 || value > 1000000)
        throw config_error(where + ": not an integer in range: '" + text + "'");
    return static_cast<int>(value);
}

std::vector<double> parse_number_list(const std::string& text, const std::string& where) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = trim(comma == std::string::npos ? text.substr(start)
                                                           : text.substr(start, comma - start));
        if (item.empty()) throw config_error(where + ": empty entry in list '" + text + "'");
        values.push_back(parse_number(item, where));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) throw config_error(where + ": empty list");
    return values;
}

bool parse_bool(const std::string& text, const std::string& where) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw config_error(where + ": expected true or false, got '" + text + "'");
}

BoundaryCondition parse_bc(const std::string& text, const std::string& where) {
    if (text == "dirichlet") return BoundaryCondition::dirichlet_origin;
    if (text == "neumann") return BoundaryCondition::neumann_origin;
    if (text == "full-line" || text == "full_line") return BoundaryCondition::full_line;
    throw config_error(where + ": boundary condition must be dirichlet, neumann or full-line, "
                               "got '" +
                       text + "'");
}

/// Flat key = value file with # comments. Keys are taken once; anything left
/// over at the end is reported with its line number.
class ConfigFile {
public:
    explicit ConfigFile(std::string path) : path_(std::move(path)) {
        std::ifstream file(path_);
        if (!file) throw config_error("cannot read config file: " + path_);
        std::string line;
        int line_no = 0;
        while (std::getline(file, line)) {
            ++line_no;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::string text = trim(line);
            if (text.empty()) continue;
            std::size_t eq = text.find('=');
            if (eq == std::string::npos)
                throw config_error(at(line_no) + "expected key = value");
            std::string key = trim(text.substr(0, eq));
            std::string value = trim(text.substr(eq + 1));
            if (key.empty()) throw config_error(at(line_no) + "missing key before '='");
            if (value.empty())
                throw config_error(at(line_no) + "missing value for key '" + key + "'");
            if (entries_.count(key))
                throw config_error(at(line_no) + "duplicate key '" + key + "'");
            entries_[key] = Entry{value, line_no, false};
        }
    }

    const std::string& path() const { return path_; }

    std::optional<std::string> take(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    std::string where(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return path_ + ": key '" + key + "'";
        return at(it->second.line) + "key '" + key + "'";
    }

    std::string require_string(const std::string& key, const std::string& context) {
        auto value = take(key);
        if (!value)
            throw config_error(path_ + ": missing key '" + key + "' (" + context + ")");
        return *value;
    }

    double require_number(const std::string& key, const std::string& context) {
        return parse_number(require_string(key, context), where(key));
    }

    double number_or(const std::string& key, double fallback) {
        auto value = take(key);
        if (!value) return fallback;
        return parse_number(*value, where(key));
    }

    std::optional<double> take_number(const std::string& key) {
        auto value = take(key);
        if (!value) return std::nullopt;
        return parse_number(*value, where(key));
    }

    std::optional<int> take_int(const std::string& key) {
        auto value = take(key);
        if (!value) return std::nullopt;
        return parse_int(*value, where(key));
    }

    std::optional<bool> take_bool(const std::string& key) {
        auto value = take(key);
        if (!value) return std::nullopt;
        return parse_bool(*value, where(key));
    }

    /// Every key must have been consumed by now.
    void finish() const {
        const Entry* leftover = nullptr;
        std::string key;
        for (const auto& [k, entry] : entries_) {
            if (entry.used) continue;
            if (!leftover || entry.line < leftover->line) {
                leftover = &entry;
                key = k;
            }
        }
        if (leftover)
            throw config_error(at(leftover->line) + "key '" + key +
                               "' is not recognized for this setup");
    }

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool used = false;
    };

    std::string at(int line) const { return path_ + ": line " + std::to_string(line) + ": "; }

    std::string path_;
    std::map<std::string, Entry> entries_;
};

struct Settings {
    PotentialModel model = CenteredHarmonic{1.0, 1.0};
    int ell = 0;
    double hbar = 1.0;
    std::optional<BoundaryCondition> bc;
    std::optional<int> n;
    std::optional<int> n_max;
    std::optional<double> tol;
    std::optional<double> step;
    std::optional<std::string> output;
    std::optional<std::string> format;
    bool parabolic = false;
};

PotentialModel build_model(ConfigFile& cfg) {
    std::string type = cfg.require_string("type", "selects the potential");
    std::string context = "required by type " + type;
    if (type == "shifted_harmonic")
        return ShiftedHarmonic{cfg.require_number("m", context),
                               cfg.require_number("omega", context), cfg.number_or("r_m", 0.0),
                               cfg.number_or("V_m", 0.0)};
    if (type == "centered_harmonic")
        return CenteredHarmonic{cfg.require_number("m", context),
                                cfg.require_number("omega", context)};
    if (type == "morse")
        return Morse{cfg.require_number("m", context), cfg.require_number("V_m", context),
                     cfg.require_number("a", context), cfg.number_or("r_m", 0.0)};
    if (type == "harmonic_plus_linear")
        return HarmonicPlusLinear{cfg.require_number("m", context),
                                  cfg.require_number("omega", context),
                                  cfg.require_number("C", context)};
    if (type == "taylor")
        return TaylorPotential{cfg.require_number("m", context),
                               parse_number_list(cfg.require_string("coeffs", context),
                                                 cfg.where("coeffs"))};
    throw config_error(cfg.where("type") + ": unknown potential type '" + type + "'");
}

Settings load_settings(const std::string& path) {
    ConfigFile cfg(path);
    Settings s;
    s.model = build_model(cfg);
    if (auto v = cfg.take_int("ell")) s.ell = *v;
    if (auto v = cfg.take_number("hbar")) s.hbar = *v;
    if (auto v = cfg.take("bc")) s.bc = parse_bc(*v, cfg.where("bc"));
    s.n = cfg.take_int("n");
    s.n_max = cfg.take_int("n_max");
    s.tol = cfg.take_number("tol");
    s.step = cfg.take_number("h");
    s.output = cfg.take("output");
    s.format = cfg.take("format");
    if (auto v = cfg.take_bool("parabolic")) s.parabolic = *v;
    cfg.finish();

    try {
        potential::validate(s.model);
    } catch (const domain_error& e) {
        throw config_error(path + ": " + e.what());
    }
    if (s.ell < 0) throw config_error(path + ": ell must be nonnegative");
    if (!(s.hbar > 0.0)) throw config_error(path + ": hbar must be positive");
    if (s.n && *s.n < 0) throw config_error(path + ": n must be nonnegative");
    if (s.n_max && *s.n_max < 0) throw config_error(path + ": n_max must be nonnegative");
    if (s.tol && !(*s.tol > 0.0)) throw config_error(path + ": tol must be positive");
    if (s.step && !(*s.step > 0.0)) throw config_error(path + ": h must be positive");
    if (s.format && *s.format != "csv" && *s.format != "json")
        throw config_error(path + ": format must be csv or json");
    if (s.parabolic) s.model = potential::parabolic_fit(s.model);
    return s;
}

SolverOptions options_from(const Settings& s) {
    SolverOptions options;
    if (s.step) options.step = *s.step;
    return options;
}

/// Levels 0..n_max inclusive; without n_max, every bound level of a well
/// with a dissociation limit.
int resolve_count(const Settings& s, const std::optional<int>& n_max_flag) {
    std::optional<int> n_max = n_max_flag ? n_max_flag : s.n_max;
    if (n_max) {
        if (*n_max < 0) throw config_error("n_max must be nonnegative");
        return *n_max + 1;
    }
    if (const Morse* morse = std::get_if<Morse>(&s.model))
        return analytic::morse_bound_count(*morse, s.hbar);
    throw config_error("n_max is required: this potential has no finite level count");
}

LevelSource make_source(const Settings& s) {
    if (s.bc) return compare::numerov_source(s.model, s.ell, s.hbar, *s.bc, options_from(s));
    if (s.ell != 0)
        throw config_error("closed-form spectra are s-wave only; set bc to solve ell > 0");
    return compare::analytic_source(s.model, s.hbar);
}

std::string run_levels(const Settings& s, const std::optional<int>& n_max_flag,
                       const std::string& format) {
    int count = resolve_count(s, n_max_flag);
    LevelsReport report;
    report.hbar = s.hbar;
    report.ell = s.ell;
    if (s.bc) {
        report.source = "numerov " + potential::model_name(s.model);
        report.criterion = to_string(*s.bc);
        if (count > 0) {
            auto results =
                numerov::solve_levels(s.model, s.ell, s.hbar, *s.bc, count - 1, options_from(s));
            for (const auto& res : results)
                report.rows.push_back(LevelRow{res.n, res.energy, res.u0});
        }
    } else {
        if (s.ell != 0)
            throw config_error("closed-form spectra are s-wave only; set bc to solve ell > 0");
        report.source = "analytic " + potential::model_name(s.model);
        report.criterion = "analytic full-line";
        for (int n = 0; n < count; ++n) {
            EigenPair pair = analytic::eigenpair(s.model, s.hbar, n);
            report.rows.push_back(LevelRow{n, pair.energy, pair.u0});
        }
    }
    return format == "json" ? io::to_json(report) : io::to_csv(report);
}

std::string run_wavefunction(const Settings& s, const std::optional<int>& n_flag,
                             const std::optional<double>& step_flag, const std::string& format) {
    std::optional<int> n = n_flag ? n_flag : s.n;
    if (!n) throw config_error("wavefunction needs a level index: pass --n or set n");
    if (!s.bc)
        throw config_error("wavefunction needs bc (dirichlet, neumann or full-line)");
    SolverOptions options = options_from(s);
    if (step_flag) {
        if (!(*step_flag > 0.0)) throw config_error("--grid-step must be positive");
        options.step = *step_flag;
    }
    ShootingResult result = numerov::solve_level(s.model, s.ell, s.hbar, *s.bc, *n, options);
    return format == "json" ? io::to_json(result) : io::to_csv(result);
}

std::string run_compare(const Settings& s, const std::string& reference_path,
                        const std::optional<int>& n_max_flag,
                        const std::optional<double>& tol_flag, const std::string& format) {
    Settings ref = load_settings(reference_path);
    if (ref.hbar != s.hbar)
        throw config_error("hbar differs between config and reference file");
    std::optional<int> n_max = n_max_flag ? n_max_flag : s.n_max;
    int count;
    if (n_max) {
        count = *n_max + 1;
    } else if (const Morse* morse = std::get_if<Morse>(&ref.model)) {
        count = analytic::morse_bound_count(*morse, ref.hbar);
    } else {
        count = resolve_count(s, std::nullopt);
    }
    double tol = tol_flag ? *tol_flag : s.tol.value_or(compare::kClassifyTol);
    if (!(tol > 0.0)) throw config_error("tol must be positive");
    SpectrumReport report = compare::compare_spectra(make_source(ref), make_source(s), count, tol);
    return format == "json" ? io::to_json(report) : io::to_csv(report);
}

std::string run_classify(const Settings& s, const std::optional<int>& n_max_flag,
                         const std::optional<double>& tol_flag, const std::string& format) {
    int count = resolve_count(s, n_max_flag);
    double tol = tol_flag ? *tol_flag : s.tol.value_or(compare::kClassifyTol);
    if (!(tol > 0.0)) throw config_error("tol must be positive");
    ClassifyReport report;
    report.source = "analytic " + potential::model_name(s.model);
    report.hbar = s.hbar;
    report.tol = tol;
    report.classes = compare::classify_levels(s.model, s.hbar, count, tol);
    return format == "json" ? io::to_json(report) : io::to_csv(report);
}

std::string run_qdelta(int ell, int lambda, const std::string& coeffs_text,
                       const std::string& format) {
    auto roots = frobenius::indicial_roots(ell); // rejects ell < 0
    if (lambda != roots.first && lambda != roots.second)
        throw domain_error("lambda must be an indicial root, here " +
                           std::to_string(roots.first) + " or " + std::to_string(roots.second));
    SeriesSolution sol;
    sol.ell = ell;
    sol.lambda = lambda;
    sol.energy = 0.0;
    sol.coeffs = parse_number_list(coeffs_text, "--coeffs");
    DeltaExpansion expansion = frobenius::q_delta(sol);
    return format == "json" ? io::to_json(expansion) : io::to_csv(expansion);
}

std::string run_bc_sweep(const Settings& s, const std::string& rm_text,
                         const std::optional<int>& n_flag, const std::string& format) {
    std::optional<int> n = n_flag ? n_flag : s.n;
    if (!n) throw config_error("bc-sweep needs a level index: pass --n or set n");
    ShiftedHarmonic base{1.0, 1.0, 0.0, 0.0};
    if (const ShiftedHarmonic* sh = std::get_if<ShiftedHarmonic>(&s.model)) {
        base = *sh;
    } else if (const CenteredHarmonic* ch = std::get_if<CenteredHarmonic>(&s.model)) {
        base = ShiftedHarmonic{ch->mass, ch->omega, 0.0, 0.0};
    } else {
        throw config_error("bc-sweep needs a harmonic well (type shifted_harmonic or "
                           "centered_harmonic, or parabolic = true)");
    }
    std::vector<double> r_m_values = parse_number_list(rm_text, "--rm-list");
    auto rows = compare::bc_sensitivity_sweep(base, s.hbar, *n, r_m_values, options_from(s));
    return format == "json" ? io::to_json(rows) : io::to_csv(rows);
}

struct CommandFlags {
    std::string config;
    std::string reference;
    std::string output;
    std::string format;
    std::string coeffs;
    std::string rm_list;
    int n = 0;
    int n_max = 0;
    int ell = 0;
    int lambda = 0;
    double tol = 0.0;
    double grid_step = 0.0;

    CLI::Option* output_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* n_max_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* grid_step_opt = nullptr;
};

std::optional<int> opt_int(const CLI::Option* opt, int value) {
    if (opt && opt->count()) return value;
    return std::nullopt;
}

std::optional<double> opt_double(const CLI::Option* opt, double value) {
    if (opt && opt->count()) return value;
    return std::nullopt;
}

std::string resolve_format(const Settings& s, const CommandFlags& flags, const char* fallback) {
    std::string format =
        flags.format_opt->count() ? flags.format : s.format.value_or(fallback);
    if (format != "csv" && format != "json")
        throw config_error("format must be csv or json, got '" + format + "'");
    return format;
}

void add_output_flags(CLI::App* cmd, CommandFlags& flags) {
    flags.output_opt =
        cmd->add_option("--output", flags.output, "write the result to this file");
    flags.format_opt = cmd->add_option("--format", flags.format, "csv or json");
}

void emit(const Settings& s, const CommandFlags& flags, const std::string& content,
          std::ostream& out) {
    std::optional<std::string> path;
    if (flags.output_opt->count())
        path = flags.output;
    else
        path = s.output;
    if (path)
        io::write_file(*path, content);
    else
        out << content;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"radial bound-state toolkit"};
    app.require_subcommand(1);

    CommandFlags levels, wavefn, comp, classify, qdelta, sweep;

    CLI::App* levels_cmd = app.add_subcommand("levels", "bound-level energies");
    levels_cmd->add_option("--config", levels.config, "flat key = value run file")->required();
    levels.n_max_opt = levels_cmd->add_option("--n-max", levels.n_max, "highest level index");
    add_output_flags(levels_cmd, levels);

    CLI::App* wavefn_cmd = app.add_subcommand("wavefunction", "sampled radial function");
    wavefn_cmd->add_option("--config", wavefn.config, "flat key = value run file")->required();
    wavefn.n_opt = wavefn_cmd->add_option("--n", wavefn.n, "level index");
    wavefn.grid_step_opt =
        wavefn_cmd->add_option("--grid-step", wavefn.grid_step, "override the grid step");
    add_output_flags(wavefn_cmd, wavefn);

    CLI::App* compare_cmd = app.add_subcommand("compare", "deviation table of two spectra");
    compare_cmd->add_option("--config", comp.config, "approximate-side run file")->required();
    compare_cmd->add_option("--reference", comp.reference, "reference-side run file")
        ->required();
    comp.n_max_opt = compare_cmd->add_option("--n-max", comp.n_max, "highest level index");
    comp.tol_opt = compare_cmd->add_option("--tol", comp.tol, "origin classification tolerance");
    add_output_flags(compare_cmd, comp);

    CLI::App* classify_cmd = app.add_subcommand("classify", "origin-condition classification");
    classify_cmd->add_option("--config", classify.config, "flat key = value run file")
        ->required();
    classify.n_max_opt = classify_cmd->add_option("--n-max", classify.n_max, "highest level");
    classify.tol_opt =
        classify_cmd->add_option("--tol", classify.tol, "origin classification tolerance");
    add_output_flags(classify_cmd, classify);

    CLI::App* qdelta_cmd = app.add_subcommand("qdelta", "delta-source content of a series");
    qdelta_cmd->add_option("--ell", qdelta.ell, "angular momentum")->required();
    qdelta_cmd->add_option("--lambda", qdelta.lambda, "indicial exponent")->required();
    qdelta_cmd->add_option("--coeffs", qdelta.coeffs, "series coefficients a0,a1,...")
        ->required();
    add_output_flags(qdelta_cmd, qdelta);

    CLI::App* sweep_cmd = app.add_subcommand("bc-sweep", "boundary-condition sensitivity");
    sweep_cmd->add_option("--config", sweep.config, "flat key = value run file")->required();
    sweep_cmd->add_option("--rm-list", sweep.rm_list, "well offsets r_m, ascending")
        ->required();
    sweep.n_opt = sweep_cmd->add_option("--n", sweep.n, "level index");
    add_output_flags(sweep_cmd, sweep);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("radspec");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        Settings settings;
        const CommandFlags* flags = nullptr;
        std::string content;
        if (app.got_subcommand(levels_cmd)) {
            flags = &levels;
            settings = load_settings(levels.config);
            content = run_levels(settings, opt_int(levels.n_max_opt, levels.n_max),
                                 resolve_format(settings, levels, "csv"));
        } else if (app.got_subcommand(wavefn_cmd)) {
            flags = &wavefn;
            settings = load_settings(wavefn.config);
            content = run_wavefunction(settings, opt_int(wavefn.n_opt, wavefn.n),
                                       opt_double(wavefn.grid_step_opt, wavefn.grid_step),
                                       resolve_format(settings, wavefn, "csv"));
        } else if (app.got_subcommand(compare_cmd)) {
            flags = &comp;
            settings = load_settings(comp.config);
            content = run_compare(settings, comp.reference, opt_int(comp.n_max_opt, comp.n_max),
                                  opt_double(comp.tol_opt, comp.tol),
                                  resolve_format(settings, comp, "csv"));
        } else if (app.got_subcommand(classify_cmd)) {
            flags = &classify;
            settings = load_settings(classify.config);
            content =
                run_classify(settings, opt_int(classify.n_max_opt, classify.n_max),
                             opt_double(classify.tol_opt, classify.tol),
                             resolve_format(settings, classify, "csv"));
        } else if (app.got_subcommand(qdelta_cmd)) {
            flags = &qdelta;
            content = run_qdelta(qdelta.ell, qdelta.lambda, qdelta.coeffs,
                                 resolve_format(settings, qdelta, "json"));
        } else {
            flags = &sweep;
            settings = load_settings(sweep.config);
            content = run_bc_sweep(settings, sweep.rm_list, opt_int(sweep.n_opt, sweep.n),
                                   resolve_format(settings, sweep, "csv"));
        }
        emit(settings, *flags, content, out);
        return kExitOk;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const error& e) {
        err << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitSolver;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace radspec::cli
