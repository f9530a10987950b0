#include "mlcp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <regex>
#include <sstream>
#include <variant>

#include "mlcp/asymp.hpp"
#include "mlcp/errors.hpp"
#include "mlcp/exact_mgf.hpp"
#include "mlcp/identities.hpp"
#include "mlcp/sampler.hpp"

namespace mlcp::cli {

namespace {

using json = nlohmann::json;

// Malformed input that is not tied to a model parameter (bad JSON, unknown
// keys, unreadable files). Reported like a DomainError.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string constraint, const std::string& what)
        : std::runtime_error(what), constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

// ---------------------------------------------------------------- output

using Cell = std::variant<std::nullptr_t, bool, long long, std::uint64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string number(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                return "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return number(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (v.find_first_of(",\"\n") == std::string::npos) return v;
                std::string q = "\"";
                for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return q + "\"";
            } else {
                return std::to_string(v);
            }
        },
        c);
}

std::string json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                return "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return std::isfinite(v) ? number(v) : "null";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return json(v).dump();
            } else {
                return std::to_string(v);
            }
        },
        c);
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

std::string json_object(const std::vector<std::string>& keys, const std::vector<Cell>& row) {
    std::string s = "{";
    for (std::size_t i = 0; i < keys.size(); ++i) s += (i ? "," : "") + json(keys[i]).dump() + ":" + json_cell(row[i]);
    return s + "}";
}

std::string json_rows(const Table& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) s += (i ? "," : "") + json_object(t.columns, t.rows[i]);
    return s + "]";
}

// A main table plus optional named secondary tables. CSV separates the
// blocks by a blank line; JSON nests them under their names. A secondary
// table with `single` set is written as one object in JSON.
struct Section {
    std::string name;
    Table table;
    bool single = false;
};

void emit(std::ostream& os, Format f, const std::string& command, const Table& main,
          const std::vector<Section>& extra = {}) {
    if (f == Format::Csv) {
        write_csv(os, main);
        for (const auto& s : extra) {
            os << '\n';
            write_csv(os, s.table);
        }
        return;
    }
    os << "{\"command\":" << json(command).dump() << ",\"rows\":" << json_rows(main);
    for (const auto& s : extra) {
        os << "," << json(s.name).dump() << ":";
        if (s.single && s.table.rows.size() == 1)
            os << json_object(s.table.columns, s.table.rows[0]);
        else
            os << json_rows(s.table);
    }
    os << "}\n";
}

void error_record(std::ostream& err, const std::string& kind, const std::string& constraint, const std::string& msg) {
    json j;
    j["error"] = kind;
    if (!constraint.empty()) j["constraint"] = constraint;
    j["message"] = msg;
    err << j.dump() << '\n';
}

// ---------------------------------------------------------------- config

struct RawConfig {
    std::optional<double> b, alpha, r, u;
    std::optional<int> a;
    std::vector<long> n_list;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<long> samples;
    std::optional<std::string> output;
    std::optional<double> eps;
    std::optional<long> m_prime;
};

template <typename T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ConfigError(key, "config field '" + key + "' has the wrong type");
    }
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where, "config section '" + where + "' must be an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || k == a;
        if (!known) throw ConfigError(k, "unknown config field '" + k + "'");
    }
}

RawConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("config is not valid JSON: ") + e.what());
    }
    require_keys(j, {"params", "n_list", "tol", "seed", "samples", "output", "diagnostic"}, "config");
    RawConfig c;
    if (j.contains("params")) {
        const json& p = j["params"];
        require_keys(p, {"b", "alpha", "r", "u", "a"}, "params");
        if (p.contains("b")) c.b = get_as<double>(p["b"], "b");
        if (p.contains("alpha")) c.alpha = get_as<double>(p["alpha"], "alpha");
        if (p.contains("r")) c.r = get_as<double>(p["r"], "r");
        if (p.contains("u")) c.u = get_as<double>(p["u"], "u");
        if (p.contains("a")) {
            if (!p["a"].is_number_integer()) throw ConfigError("a", "config field 'a' must be an integer");
            c.a = p["a"].get<int>();
        }
    }
    if (j.contains("n_list")) {
        if (!j["n_list"].is_array()) throw ConfigError("n_list", "n_list must be an array of integers");
        for (const auto& v : j["n_list"]) {
            if (!v.is_number_integer()) throw ConfigError("n_list", "n_list must be an array of integers");
            c.n_list.push_back(v.get<long>());
        }
    }
    if (j.contains("tol")) c.tol = get_as<double>(j["tol"], "tol");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].is_number_float()) throw ConfigError("seed", "seed must be an integer");
        c.seed = j["seed"].is_number_unsigned() ? j["seed"].get<std::uint64_t>()
                                                : static_cast<std::uint64_t>(j["seed"].get<std::int64_t>());
    }
    if (j.contains("samples")) {
        if (!j["samples"].is_number_integer()) throw ConfigError("samples", "samples must be an integer");
        c.samples = j["samples"].get<long>();
    }
    if (j.contains("output")) c.output = get_as<std::string>(j["output"], "output");
    if (j.contains("diagnostic")) {
        const json& d = j["diagnostic"];
        require_keys(d, {"eps", "m_prime"}, "diagnostic");
        if (d.contains("eps")) c.eps = get_as<double>(d["eps"], "eps");
        if (d.contains("m_prime")) {
            if (!d["m_prime"].is_number_integer()) throw ConfigError("m_prime", "m_prime must be an integer");
            c.m_prime = d["m_prime"].get<long>();
        }
    }
    return c;
}

// later values win
void overlay(RawConfig& base, const RawConfig& top) {
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(base.b, top.b);
    take(base.alpha, top.alpha);
    take(base.r, top.r);
    take(base.u, top.u);
    take(base.a, top.a);
    if (!top.n_list.empty()) base.n_list = top.n_list;
    take(base.tol, top.tol);
    take(base.seed, top.seed);
    take(base.samples, top.samples);
    take(base.output, top.output);
    take(base.eps, top.eps);
    take(base.m_prime, top.m_prime);
}

RunConfig finish(const RawConfig& raw, bool needs_model) {
    RunConfig c;
    if (raw.output) {
        if (*raw.output == "csv")
            c.output = Format::Csv;
        else if (*raw.output == "json")
            c.output = Format::Json;
        else
            throw ConfigError("output", "output must be csv or json");
    }
    if (raw.tol) c.tol = *raw.tol;
    if (!(c.tol > 0.0)) throw DomainError("tol", "tol must be positive");
    if (raw.seed) c.seed = *raw.seed;
    if (raw.samples) c.samples = *raw.samples;
    if (raw.eps || raw.m_prime) {
        if (!raw.eps) throw DomainError("eps", "diagnostic needs eps");
        if (!raw.m_prime) throw DomainError("m_prime", "diagnostic needs m_prime");
        c.diagnostic = Diagnostic{*raw.eps, *raw.m_prime};
    }
    if (!needs_model) return c;

    if (!raw.r) throw DomainError("r", "parameter r is required");
    if (!raw.u) throw DomainError("u", "parameter u is required");
    if (!raw.a) throw DomainError("a", "parameter a is required");
    c.params = Params(raw.b.value_or(1.0), raw.alpha.value_or(0.0), *raw.r, *raw.u, *raw.a);
    if (raw.n_list.empty()) throw DomainError("n_list", "n_list must not be empty");
    for (std::size_t i = 0; i < raw.n_list.size(); ++i) {
        if (raw.n_list[i] < 1) throw DomainError("n_list", "every n must be positive");
        if (i > 0 && raw.n_list[i] <= raw.n_list[i - 1]) throw DomainError("n_list", "n_list must be strictly increasing");
    }
    c.n_list = raw.n_list;
    return c;
}

// ---------------------------------------------------------------- commands

int cmd_exact(const RunConfig& c, std::ostream& os) {
    Table t{{"n", "ln_mgf", "seconds"}, {}};
    Table d{{"n", "eps", "m_prime", "M", "j_minus", "j_plus", "S0", "S1", "S2", "S3"}, {}};
    for (long n : c.n_list) {
        const auto t0 = std::chrono::steady_clock::now();
        const double v = exact::ln_mgf_exact(c.params, n).ln_mgf;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        t.rows.push_back({static_cast<long long>(n), v, secs});
        if (c.diagnostic) {
            const exact::SplitInfo s = exact::split_sums(c.params, n, c.diagnostic->eps, c.diagnostic->m_prime);
            d.rows.push_back({static_cast<long long>(n), s.eps, static_cast<long long>(s.M_prime), s.M,
                              static_cast<long long>(s.j_minus), static_cast<long long>(s.j_plus), s.S0, s.S1, s.S2, s.S3});
        }
    }
    std::vector<Section> extra;
    if (c.diagnostic) extra.push_back({"diagnostic", d});
    emit(os, c.output, "exact", t, extra);
    return k_exit_ok;
}

int cmd_compare(const RunConfig& c, std::ostream& os) {
    const asymp::AsymptoticCoeffs k = asymp::coefficients(c.params, c.tol);
    Table t{{"n", "ln_mgf", "prediction", "residual"}, {}};
    std::vector<double> res;
    for (long n : c.n_list) {
        const double v = exact::ln_mgf_exact(c.params, n).ln_mgf;
        const double pred = asymp::predict(n, k);
        t.rows.push_back({static_cast<long long>(n), v, pred, v - pred});
        res.push_back(v - pred);
    }
    const double slope = c.n_list.size() >= 3 ? asymp::convergence_slope(c.n_list, res)
                                              : std::numeric_limits<double>::quiet_NaN();
    Table s{{"C1", "C2", "C3", "slope"}, {{k.C1, k.C2, k.C3, slope}}};
    emit(os, c.output, "compare", t, {{"summary", s, true}});
    return k_exit_ok;
}

int cmd_mc(const RunConfig& c, std::ostream& os) {
    Table t{{"n", "ln_estimate", "ln_stderr", "estimate_E", "stderr_E", "samples", "seed"}, {}};
    for (long n : c.n_list) {
        const sampler::MCResult r = sampler::mc_ln_mgf(c.params, n, c.samples, c.seed);
        t.rows.push_back({static_cast<long long>(n), r.ln_estimate, r.ln_stderr, r.estimate_E, r.stderr_E,
                          static_cast<long long>(r.samples), r.seed});
    }
    emit(os, c.output, "mc", t);
    return k_exit_ok;
}

int cmd_identities(const RunConfig& c, std::ostream& os, std::ostream& err) {
    const auto checks = identities::run_all();
    Table t{{"name", "passed", "worst_deviation", "detail"}, {}};
    json failures = json::array();
    for (const auto& ch : checks) {
        t.rows.push_back({ch.name, ch.passed, ch.worst_deviation, ch.detail});
        if (!ch.passed) failures.push_back(ch.name);
    }
    emit(os, c.output, "identities", t);
    if (failures.empty()) return k_exit_ok;
    json j;
    j["error"] = "identity";
    j["failures"] = failures;
    err << j.dump() << '\n';
    return k_exit_identity;
}

std::string coefficient_list(const combo::Poly& p) {
    if (p.coeffs().empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? " " : "") + combo::to_string(p.coeffs()[i]);
    return s;
}

int cmd_dump_polys(const RunConfig& c, int a_max, const combo::Rational& b, std::ostream& os) {
    if (a_max < 0 || a_max > 40) throw DomainError("a_max", "a_max must lie in 0..40");
    Table t{{"family", "index", "polynomial", "coefficients"}, {}};
    auto add = [&](const char* family, int index, const combo::Poly& p) {
        t.rows.push_back({std::string(family), static_cast<long long>(index), combo::to_string(p), coefficient_list(p)});
    };
    for (int k = 0; k <= a_max; ++k) add("He", k, combo::assoc_hermite(0, k));
    for (int k = 0; k <= a_max; ++k) add("He1", k, combo::assoc_hermite(1, k));
    for (int a = 0; a <= a_max; ++a) add("p0", a, combo::p0(a));
    for (int a = 0; a <= a_max; ++a) add("q0", a, combo::q0(a));
    for (int a = 0; a <= a_max; ++a) add("p1", a, combo::p1(a, b));
    for (int a = 0; a <= a_max; ++a) add("q1", a, combo::q1(a, b));
    emit(os, c.output, "dump-polys", t);
    return k_exit_ok;
}

}  // namespace

combo::Rational rational_from_text(const std::string& text) {
    static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, fraction)) {
        const combo::BigInt den(m[2].str());
        if (den == 0) throw DomainError("b", "zero denominator in " + text);
        return combo::Rational(combo::BigInt(m[1].str()), den);
    }
    if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
        std::string digits = m[2].str() + m[3].str();
        // a leading 0 would make cpp_int read octal
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        combo::Rational v{combo::BigInt(digits)};
        long shift = -static_cast<long>(m[3].length());
        if (m[4].matched) shift += std::stol(m[4].str());
        if (std::abs(shift) > 400) throw DomainError("b", "exponent out of range in " + text);
        const combo::Rational ten(10);
        for (long i = 0; i < std::abs(shift); ++i) {
            if (shift > 0)
                v *= ten;
            else
                v /= ten;
        }
        return m[1].str() == "-" ? combo::Rational(-v) : v;
    }
    throw DomainError("b", "not a decimal or fraction: " + text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact, asymptotic and Monte Carlo evaluation of the Mittag-Leffler ensemble MGF", "mlcp"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::string b_text;
    std::optional<std::string> format;
    RawConfig flags;
    std::vector<long> n_flag;
    int a_max = 4;

    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--seed", flags.seed, "Monte Carlo seed");
    app.add_option("--samples", flags.samples, "Monte Carlo sample count");
    app.add_option("--tol", flags.tol, "quadrature tolerance for the coefficients (default 1e-9)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write results to this file");
    app.add_option("--b", b_text, "b > 0 (exact rational for dump-polys, default 1)");
    app.add_option("--alpha", flags.alpha, "alpha > -1 (default 0)");
    app.add_option("--r", flags.r, "radius, 0 < r < b^(-1/(2b))");
    app.add_option("--u", flags.u, "jump parameter u");
    app.add_option("--a", flags.a, "root exponent a >= 0");
    app.add_option("--n", n_flag, "comma-separated n list")->delimiter(',');
    app.add_option("--eps", flags.eps, "diagnostic split: eps");
    app.add_option("--m-prime", flags.m_prime, "diagnostic split: m'");
    app.add_option("--a-max", a_max, "dump-polys: largest index (default 4)");

    CLI::App* exact_cmd = app.add_subcommand("exact", "ln E_n for every n in n_list");
    CLI::App* compare_cmd = app.add_subcommand("compare", "exact values against C1 n + C2 sqrt(n) + C3");
    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of ln E_n");
    CLI::App* ident_cmd = app.add_subcommand("identities", "run every identity and invariant suite");
    CLI::App* dump_cmd = app.add_subcommand("dump-polys", "exact polynomial tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return k_exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return k_exit_ok;
    } catch (const CLI::ParseError& e) {
        error_record(err, "config", "arguments", e.what());
        return k_exit_config;
    }

    try {
        if (!b_text.empty()) {
            const combo::Rational b = rational_from_text(b_text);
            flags.b = static_cast<double>(b);
        }
        flags.n_list = n_flag;
        if (format) flags.output = *format;

        RawConfig raw;
        if (!config_path.empty()) raw = load_config_file(config_path);
        overlay(raw, flags);

        const bool model = !(ident_cmd->parsed() || dump_cmd->parsed());
        const RunConfig cfg = finish(raw, model);

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw ConfigError("out", "cannot open output file " + out_path);
        }
        std::ostream& os = out_path.empty() ? out : file;
        int code = k_exit_ok;
        if (exact_cmd->parsed()) code = cmd_exact(cfg, os);
        if (compare_cmd->parsed()) code = cmd_compare(cfg, os);
        if (mc_cmd->parsed()) code = cmd_mc(cfg, os);
        if (ident_cmd->parsed()) code = cmd_identities(cfg, os, err);
        if (dump_cmd->parsed()) code = cmd_dump_polys(cfg, a_max, b_text.empty() ? combo::Rational(1) : rational_from_text(b_text), os);
        os.flush();
        return code;
    } catch (const ConfigError& e) {
        error_record(err, "config", e.constraint(), e.what());
        return k_exit_config;
    } catch (const DomainError& e) {
        error_record(err, "domain", e.constraint(), e.what());
        return k_exit_config;
    } catch (const RangeError& e) {
        error_record(err, "range", "", e.what());
        return k_exit_config;
    } catch (const AccuracyError& e) {
        error_record(err, "accuracy", "", e.what());
        return k_exit_accuracy;
    } catch (const CancellationError& e) {
        error_record(err, "cancellation", "", e.what());
        return k_exit_accuracy;
    } catch (const DegenerateEstimateError& e) {
        error_record(err, "degenerate", "", e.what());
        return k_exit_accuracy;
    }
}

}  // namespace mlcp::cli
