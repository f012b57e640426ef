#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lipkin/bogoliubov.hpp"
#include "lipkin/error.hpp"
#include "lipkin/grid.hpp"
#include "lipkin/meanfield.hpp"
#include "lipkin/model.hpp"
#include "lipkin/scaling.hpp"
#include "lipkin/spectrum.hpp"
#include "lipkin/validation.hpp"

namespace lipkin::cli {
namespace {

using json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    double epsilon = 1.0;
    std::optional<double> gamma_x;
    std::string gamma_x_range;
    double gamma_y = 1.0;
    std::optional<std::int64_t> n;
    std::string n_list;
    std::string evaluator = "all";
    bool special_line = false;
    std::string window;
    std::string out;
    std::string format = "csv";
    int jobs = 0;
    std::uint64_t seed = 1;
    std::string dump;
    std::string config;
    std::string summary;
    bool drop_smallest = false;
    validation::CompareConfig compare;
};

double parse_number(std::string_view s) {
    std::string tmp(s);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError("not a finite number: '" + tmp + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("not an integer: '" + std::string(s) + "'");
    return v;
}

exact::Limits limits_from_env() {
    exact::Limits limits;
    if (const char* env = std::getenv("LIPKIN_MAX_N"); env != nullptr && *env != '\0') {
        const auto v = parse_int(env);
        if (v < 1) throw ConfigError("LIPKIN_MAX_N must be positive");
        limits.max_n = v;
    }
    return limits;
}

// JSON config entries become "--key=value" tokens placed ahead of the real
// arguments; options take their last occurrence, so explicit flags win.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    std::vector<std::string> tokens;
    for (const auto& [key, value] : doc.items()) {
        if (key == "config") throw ConfigError("config files cannot nest");
        const std::string flag = "--" + key;
        if (value.is_boolean()) {
            if (value.get<bool>()) tokens.push_back(flag);
        } else if (value.is_string()) {
            tokens.push_back(flag + "=" + value.get<std::string>());
        } else if (value.is_number_integer()) {
            tokens.push_back(flag + "=" + std::to_string(value.get<std::int64_t>()));
        } else if (value.is_number()) {
            tokens.push_back(flag + "=" + format_double(value.get<double>()));
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ',';
                if (item.is_string()) joined += item.get<std::string>();
                else if (item.is_number_integer()) joined += std::to_string(item.get<std::int64_t>());
                else throw ConfigError("config key '" + key + "': unsupported array entry");
            }
            tokens.push_back(flag + "=" + joined);
        } else {
            throw ConfigError("config key '" + key + "': unsupported value type");
        }
    }
    return tokens;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
        else if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    }
    return path;
}

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

json json_cell(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Table held as column names plus rows of preformatted cells; JSON output keeps the numbers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> csv_rows;
    json json_rows = json::array();
};

std::string render_csv(const Table& t) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) s += ',';
        s += t.columns[i];
    }
    s += '\n';
    for (const auto& row : t.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += row[i];
        }
        s += '\n';
    }
    return s;
}

std::vector<double> gamma_grid(const Settings& s) {
    if (!s.gamma_x_range.empty()) return parse_range(s.gamma_x_range);
    if (s.gamma_x) return {*s.gamma_x};
    throw ConfigError("one of --gamma-x or --gamma-x-range is required");
}

std::vector<std::int64_t> size_list(const Settings& s) {
    if (!s.n_list.empty()) return parse_n_list(s.n_list);
    const std::int64_t n = s.n.value_or(40);
    if (n < 1) throw ConfigError("--n must be positive");
    return {n};
}

struct GridPoint {
    double gamma_x;
    std::int64_t n;
};

std::vector<GridPoint> cartesian(const std::vector<std::int64_t>& sizes, const std::vector<double>& gammas) {
    std::vector<GridPoint> pts;
    for (const auto n : sizes)
        for (const double g : gammas) pts.push_back({g, n});
    return pts;
}

ModelParams point_params(const Settings& s, const GridPoint& g) {
    ModelParams p{s.epsilon, g.gamma_x, s.gamma_y, g.n};
    try {
        validate(p);
    } catch (const InvalidParams& e) {
        throw ConfigError(e.what());
    }
    return p;
}

std::string cmd_phase(const Settings& s) {
    const auto pts = cartesian(size_list(s), gamma_grid(s));
    for (const auto& g : pts) point_params(s, g);

    struct Row {
        ModelParams p;
        PhaseRegion region;
        bool swapped;
        meanfield::CriticalPoint cp;
        meanfield::MeanFieldObservables obs;
    };
    const auto rows = grid::map(
        std::span<const GridPoint>(pts),
        [&](const GridPoint& g) {
            const ModelParams p = point_params(s, g);
            const auto canon = canonicalize(p);
            Row r{p, classify_phase(p), canon.swapped, meanfield::critical_point(canon.params),
                  meanfield::mf_observables(canon.params)};
            // Region III minimises at phi = pi/2, 3pi/2 once the axes are exchanged back.
            if (canon.swapped)
                for (double& phi : r.cp.phi_c) phi += 0.5 * std::numbers::pi;
            return r;
        },
        s.jobs);

    Table t;
    t.columns = {"epsilon", "gamma_x", "gamma_y", "N", "region", "swapped", "rho_c", "phi_c", "e_gs_mf", "ne_mf"};
    for (const auto& r : rows) {
        std::string phis;
        json phi_json = json::array();
        for (const double phi : r.cp.phi_c) {
            if (!phis.empty()) phis += ';';
            phis += format_double(phi);
            phi_json.push_back(phi);
        }
        t.csv_rows.push_back({format_double(r.p.epsilon), format_double(r.p.gamma_x), format_double(r.p.gamma_y),
                              std::to_string(r.p.n_atoms), std::string(to_string(r.region)),
                              r.swapped ? "1" : "0", format_double(r.cp.rho_c), phis, format_double(r.obs.e_gs),
                              format_double(r.obs.n_e)});
        json j;
        j["epsilon"] = r.p.epsilon;
        j["gamma_x"] = r.p.gamma_x;
        j["gamma_y"] = r.p.gamma_y;
        j["N"] = r.p.n_atoms;
        j["region"] = to_string(r.region);
        j["swapped"] = r.swapped;
        j["rho_c"] = r.cp.rho_c;
        j["phi_c"] = phi_json;
        j["e_gs_mf"] = r.obs.e_gs;
        j["ne_mf"] = r.obs.n_e;
        t.json_rows.push_back(j);
    }
    return s.format == "json" ? t.json_rows.dump(2) + "\n" : render_csv(t);
}

std::string cmd_sweep(const Settings& s, const exact::Limits& limits) {
    const auto pts = cartesian(size_list(s), gamma_grid(s));
    for (const auto& g : pts) point_params(s, g);
    const bool want_mf = s.evaluator == "meanfield" || s.evaluator == "all";
    const bool want_trunc = s.evaluator == "truncated" || s.evaluator == "all";
    const bool want_exact = s.evaluator == "exact" || s.evaluator == "all";

    struct Row {
        ModelParams p;
        std::optional<double> e_mf, e_t, e_x, ne_mf, ne_t, ne_x, gap_t, gap1, gap2;
    };
    const auto rows = grid::map(
        std::span<const GridPoint>(pts),
        [&](const GridPoint& g) {
            Row r{point_params(s, g), {}, {}, {}, {}, {}, {}, {}, {}, {}};
            const auto canon = canonicalize(r.p).params;
            if (want_mf) {
                const auto mf = meanfield::mf_observables(canon);
                r.e_mf = mf.e_gs;
                r.ne_mf = mf.n_e;
            }
            if (want_trunc) {
                try {
                    const auto t = bogoliubov::truncated_solution(canon);
                    r.e_t = t.e_gs_t;
                    r.ne_t = t.n_e_t;
                    r.gap_t = t.gap;
                } catch (const SingularPoint&) {
                }
            }
            if (want_exact) {
                const auto low = exact::low_spectrum(r.p, 3, limits);
                const double e0 = low.levels[0].energy;
                r.e_x = e0 / r.p.n();
                double jz = 0.0;
                for (std::size_t i = 0; i < low.ground_vector.size(); ++i) {
                    const double m = low.ground_first_m + 2.0 * static_cast<double>(i);
                    jz += m * low.ground_vector[i] * low.ground_vector[i];
                }
                r.ne_x = 2.0 * jz / r.p.n() + 1.0;
                if (low.levels.size() > 1) r.gap1 = low.levels[1].energy - e0;
                if (low.levels.size() > 2) r.gap2 = low.levels[2].energy - e0;
            }
            return r;
        },
        s.jobs);

    Table t;
    t.columns = {"gamma_x", "N",       "e_gs_mf",   "e_gs_trunc", "e_gs_exact", "ne_mf",  "ne_trunc",
                 "ne_exact", "gap_trunc", "gap1_exact", "gap2_exact", "epsilon", "gamma_y"};
    for (const auto& r : rows) {
        t.csv_rows.push_back({format_double(r.p.gamma_x), std::to_string(r.p.n_atoms), cell(r.e_mf), cell(r.e_t),
                              cell(r.e_x), cell(r.ne_mf), cell(r.ne_t), cell(r.ne_x), cell(r.gap_t), cell(r.gap1),
                              cell(r.gap2), format_double(r.p.epsilon), format_double(r.p.gamma_y)});
        json j;
        j["gamma_x"] = r.p.gamma_x;
        j["N"] = r.p.n_atoms;
        j["e_gs_mf"] = json_cell(r.e_mf);
        j["e_gs_trunc"] = json_cell(r.e_t);
        j["e_gs_exact"] = json_cell(r.e_x);
        j["ne_mf"] = json_cell(r.ne_mf);
        j["ne_trunc"] = json_cell(r.ne_t);
        j["ne_exact"] = json_cell(r.ne_x);
        j["gap_trunc"] = json_cell(r.gap_t);
        j["gap1_exact"] = json_cell(r.gap1);
        j["gap2_exact"] = json_cell(r.gap2);
        j["epsilon"] = r.p.epsilon;
        j["gamma_y"] = r.p.gamma_y;
        t.json_rows.push_back(j);
    }
    return s.format == "json" ? t.json_rows.dump(2) + "\n" : render_csv(t);
}

struct ExponentsOutput {
    std::string table;
    std::string summary;
};

ExponentsOutput cmd_exponents(const Settings& s, const exact::Limits& limits) {
    if (s.n_list.empty()) throw ConfigError("exponents requires --n-list");
    const auto sizes = parse_n_list(s.n_list);
    const std::size_t usable = sizes.size() - (s.drop_smallest ? 1 : 0);
    if (sizes.size() < 1 || usable < 3)
        throw FitError("power-law fit needs at least 3 sizes, got " + std::to_string(usable));

    ModelParams base{s.epsilon, 0.0, s.gamma_y, sizes.front()};
    if (s.special_line) base.gamma_y = base.gamma_c();
    try {
        validate(base);
    } catch (const InvalidParams& e) {
        throw ConfigError(e.what());
    }
    std::optional<scaling::Window> window;
    if (!s.window.empty()) {
        const auto [lo, hi] = parse_window(s.window);
        window = scaling::Window{lo, hi, s.special_line && hi >= base.gamma_c()};
    }

    // Sizes run one after another; --jobs bounds the coarse-grid threads inside each search.
    std::vector<scaling::CampaignRow> rows;
    for (const auto n : sizes) {
        const auto opts = scaling::campaign_options(n, s.special_line, s.jobs);
        rows.push_back({n, scaling::find_chi_max(base, n, window, opts, limits)});
    }

    std::vector<scaling::SizedValue> pts;
    json warnings = json::array();
    for (const auto& r : rows) {
        pts.push_back({static_cast<double>(r.n), r.peak.value});
        if (r.peak.at_edge) warnings.push_back("N=" + std::to_string(r.n) + ": maximum at window edge");
    }
    const auto fit = scaling::fit_power_law(pts, {s.drop_smallest});

    json summary;
    summary["campaign"] = s.special_line ? "special" : "generic";
    summary["epsilon"] = base.epsilon;
    summary["gamma_y"] = base.gamma_y;
    summary["slope"] = fit.slope;
    summary["prefactor"] = fit.prefactor;
    summary["r_squared"] = fit.r_squared;
    summary["n_points"] = fit.n_points;
    summary["warnings"] = warnings;

    Table t;
    t.columns = {"N", "gamma_star", "chi_f_max", "at_edge", "epsilon", "gamma_y"};
    for (const auto& r : rows) {
        t.csv_rows.push_back({std::to_string(r.n), format_double(r.peak.gamma_star), format_double(r.peak.value),
                              r.peak.at_edge ? "1" : "0", format_double(base.epsilon), format_double(base.gamma_y)});
        json j;
        j["N"] = r.n;
        j["gamma_star"] = r.peak.gamma_star;
        j["chi_f_max"] = r.peak.value;
        j["at_edge"] = r.peak.at_edge;
        j["epsilon"] = base.epsilon;
        j["gamma_y"] = base.gamma_y;
        t.json_rows.push_back(j);
    }
    if (s.format == "json") {
        json doc;
        doc["rows"] = t.json_rows;
        doc["fit"] = summary;
        return {doc.dump(2) + "\n", {}};
    }
    return {render_csv(t), summary.dump(2) + "\n"};
}

json report_json(const validation::CompareReport& report) {
    json doc;
    doc["seed"] = report.seed;
    doc["pass"] = report.all_pass();
    json checks = json::array();
    for (const auto& c : report.checks) {
        json j;
        j["name"] = c.name;
        j["samples"] = c.samples;
        j["max_deviation"] = c.max_deviation;
        j["tolerance"] = c.tolerance;
        j["pass"] = c.pass;
        checks.push_back(j);
    }
    doc["checks"] = checks;
    return doc;
}

void write_output(const Settings& s, const std::string& text, std::ostream& out) {
    if (s.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(s.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + s.out + "'");
    f << text;
}

void write_dump_file(const Settings& s, const exact::Limits& limits) {
    if (s.dump.empty()) return;
    const auto sizes = size_list(s);
    const auto gammas = gamma_grid(s);
    std::ofstream f(s.dump, std::ios::binary);
    if (!f) throw ConfigError("cannot open dump file '" + s.dump + "'");
    for (const auto n : sizes)
        for (const double g : gammas) {
            const ModelParams p = point_params(s, {g, n});
            exact::write_dump(f, exact::build_blocks(p, limits), exact::ground_state(p, limits));
        }
}

void add_options(CLI::App& app, Settings& s) {
    app.add_option("--epsilon", s.epsilon, "single-particle splitting (> 0)");
    app.add_option("--gamma-x", s.gamma_x, "coupling gamma_x");
    app.add_option("--gamma-x-range", s.gamma_x_range, "gamma_x grid a:b:points");
    app.add_option("--gamma-y", s.gamma_y, "coupling gamma_y");
    app.add_option("--n", s.n, "atom number N (default 40; compare: N of the chi checks, default 200)");
    app.add_option("--n-list", s.n_list, "comma-separated N values, 2^k accepted");
    app.add_option("--evaluator", s.evaluator, "meanfield | truncated | exact | all")
        ->check(CLI::IsMember({"meanfield", "truncated", "exact", "all"}));
    app.add_flag("--special-line", s.special_line, "exponents: gamma_y = gamma_c campaign");
    app.add_option("--window", s.window, "exponents: gamma_x search window a:b");
    app.add_option("--out", s.out, "output file (default stdout)");
    app.add_option("--format", s.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", s.jobs, "worker threads; 1 is serial, 0 lets the runtime decide")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", s.seed, "compare: RNG seed");
    app.add_option("--dump", s.dump, "write blocks and ground vectors to this file");
    app.add_option("--config", s.config, "JSON file of option values; explicit flags override it");
    app.add_option("--summary", s.summary, "exponents: write the fit summary JSON here (default stderr)");
    app.add_flag("--drop-smallest", s.drop_smallest, "exponents: exclude the smallest N from the fit");
    app.add_option("--dense-max-n", s.compare.dense_max_n, "compare: largest N of the dense check");
    app.add_option("--dense-sets", s.compare.dense_sets, "compare: random sets for the dense check");
    app.add_option("--chi-sets", s.compare.chi_sets, "compare: random sets for the chi checks");
    app.add_option("--minimizer-sets", s.compare.minimizer_sets, "compare: random sets for the minimiser check");
    app.add_option("--fd-delta", s.compare.fd_delta, "compare: finite-difference step");
    app.add_option("--tol-eigen", s.compare.tol_eigen, "compare: eigenvalue tolerance");
    app.add_option("--tol-chi-sum", s.compare.tol_chi_sum, "compare: sum vs resolvent relative tolerance");
    app.add_option("--tol-chi-fd", s.compare.tol_chi_fd, "compare: finite difference relative tolerance");
    app.add_option("--tol-rho", s.compare.tol_rho, "compare: rho_c tolerance in units of sqrt(N)");
}

}  // namespace

std::vector<std::int64_t> parse_n_list(std::string_view text) {
    if (text.empty()) throw ConfigError("empty N list");
    std::vector<std::int64_t> out;
    for (auto item : split(text, ',')) {
        std::int64_t v = 0;
        if (item.rfind("2^", 0) == 0) {
            const auto k = parse_int(item.substr(2));
            if (k < 0 || k > 40) throw ConfigError("exponent out of range in '" + std::string(item) + "'");
            v = std::int64_t{1} << k;
        } else {
            v = parse_int(item);
        }
        if (v < 1) throw ConfigError("N must be positive, got '" + std::string(item) + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be a:b:points, got '" + std::string(text) + "'");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const auto points = parse_int(parts[2]);
    if (points < 1) throw ConfigError("range needs at least one point");
    if (points == 1 && a != b) throw ConfigError("a single-point range needs a == b");
    return grid::linspace(a, b, static_cast<std::size_t>(points));
}

std::pair<double, double> parse_window(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ConfigError("window must be a:b, got '" + std::string(text) + "'");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    if (!(a < b)) throw ConfigError("window needs a < b");
    return {a, b};
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Lipkin model: phase diagram, sweeps, scaling campaigns and cross-checks", "lipkin"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    add_options(app, s);
    auto* phase = app.add_subcommand("phase", "mean-field region, rho_c and observables per grid point");
    auto* sweep = app.add_subcommand("sweep", "mean-field, truncated and exact observables over a gamma_x grid");
    auto* exps = app.add_subcommand("exponents", "susceptibility peak campaign and power-law fit");
    auto* compare = app.add_subcommand("compare", "cross-evaluator consistency report");
    for (auto* sub : {phase, sweep, exps, compare}) sub->fallthrough();

    try {
        std::vector<std::string> tokens;
        if (const auto path = find_config_path(args)) tokens = config_tokens(*path);
        tokens.insert(tokens.end(), args.begin(), args.end());
        // CLI11 consumes the vector from the back.
        std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lipkin: " << e.what() << "\n";
        return kConfigError;
    } catch (const ConfigError& e) {
        err << "lipkin: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        const auto limits = limits_from_env();
        if (phase->parsed()) {
            const auto text = cmd_phase(s);
            write_output(s, text, out);
        } else if (sweep->parsed()) {
            const auto text = cmd_sweep(s, limits);
            write_dump_file(s, limits);
            write_output(s, text, out);
        } else if (exps->parsed()) {
            const auto result = cmd_exponents(s, limits);
            write_output(s, result.table, out);
            if (!result.summary.empty()) {
                if (s.summary.empty()) {
                    err << result.summary;
                } else {
                    std::ofstream f(s.summary, std::ios::binary);
                    if (!f) throw ConfigError("cannot open summary file '" + s.summary + "'");
                    f << result.summary;
                }
            }
        } else if (compare->parsed()) {
            auto cfg = s.compare;
            cfg.seed = s.seed;
            cfg.jobs = s.jobs;
            if (cfg.dense_max_n < 1 || cfg.dense_sets < 1 || cfg.chi_sets < 1 || cfg.minimizer_sets < 1 ||
                !(cfg.fd_delta > 0.0))
                throw ConfigError("compare sample counts and step must be positive");
            if (s.n || !s.n_list.empty()) cfg.chi_n = size_list(s).back();
            if (cfg.chi_n > limits.sum_cap) throw ConfigError("compare --n exceeds the full-decomposition cap");
            const auto report = validation::run_compare(cfg);
            const auto text = report_json(report).dump(2) + "\n";
            if (!report.all_pass()) {
                out << text;
                err << "lipkin: validation failed\n";
                return kValidationFailure;
            }
            write_output(s, text, out);
        }
    } catch (const ConfigError& e) {
        err << "lipkin: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidParams& e) {
        err << "lipkin: " << e.what() << "\n";
        return kConfigError;
    } catch (const FitError& e) {
        err << "lipkin: " << e.what() << "\n";
        return kFitError;
    } catch (const Error& e) {
        err << "lipkin: " << e.what() << "\n";
        return kSolverError;
    } catch (const std::exception& e) {
        err << "lipkin: " << e.what() << "\n";
        return kSolverError;
    }
    return kOk;
}

}  // namespace lipkin::cli
