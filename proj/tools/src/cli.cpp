#include "sqparity/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "sqparity/asymptotic.hpp"
#include "sqparity/gauss.hpp"
#include "sqparity/lambda.hpp"
#include "sqparity/modular.hpp"
#include "sqparity/series.hpp"
#include "sqparity/zeta.hpp"

namespace sqparity::cli {

namespace {

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string, BigInt>;

struct Field {
    std::string key;
    Cell value;
};

struct Report {
    std::vector<Field> summary;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;  // diagnostic stream only
    bool ok = true;
};

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_real(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, BigInt>) {
                return v.get_str();
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigInt>) {
                return v.get_str();
            } else {
                return v;
            }
        },
        cell);
}

void write_csv(const Report& report, std::ostream& out, std::ostream& err) {
    if (!report.columns.empty()) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
            out << (i ? "," : "") << report.columns[i];
        }
        out << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
            out << '\n';
        }
        for (const auto& f : report.summary) err << f.key << ": " << cell_text(f.value) << '\n';
        return;
    }
    for (std::size_t i = 0; i < report.summary.size(); ++i) {
        out << (i ? "," : "") << report.summary[i].key;
    }
    out << '\n';
    for (std::size_t i = 0; i < report.summary.size(); ++i) {
        out << (i ? "," : "") << cell_text(report.summary[i].value);
    }
    out << '\n';
}

void write_json(const Report& report, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& f : report.summary) doc[f.key] = cell_json(f.value);
    if (!report.columns.empty()) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : report.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
}

class Progress {
public:
    Progress(const RunConfig& config, std::ostream& err) : quiet_(config.quiet), err_(err) {}
    void operator()(const std::string& message) const {
        if (!quiet_) err_ << "[sqparity] " << message << '\n';
    }

private:
    bool quiet_;
    std::ostream& err_;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

// ---------------------------------------------------------------------------

Report cmd_count(const RunConfig& c, const Progress& progress) {
    progress("parity DP up to n = " + std::to_string(c.max_n));
    const auto rows = count_by_parity(c.max_n);
    progress("product expansion up to n = " + std::to_string(c.max_n));
    const auto product = g_coefficients(c.max_n);

    Report r;
    r.columns = {"n", "even", "odd", "a2"};
    std::uint64_t mismatches = 0;
    for (const auto& row : rows) {
        if (product[row.n] != row.a2) ++mismatches;
        r.rows.push_back({static_cast<std::uint64_t>(row.n), row.even_count, row.odd_count, row.a2});
    }
    r.summary = {{"max", c.max_n}, {"product_mismatches", mismatches}};
    r.ok = mismatches == 0;
    if (!r.ok) r.notes.push_back("parity DP and product expansion disagree");
    return r;
}

Report cmd_exceptional(const RunConfig& c, const Progress& progress) {
    progress("parity DP up to n = " + std::to_string(c.max_n));
    const auto rows = count_by_parity(c.max_n);
    progress("product expansion up to n = " + std::to_string(c.max_n));
    const auto product = g_coefficients(c.max_n);

    std::uint64_t mismatches = 0;
    std::uint64_t sign_violations = 0;
    for (const auto& row : rows) {
        if (product[row.n] != row.a2) ++mismatches;
        if (row.n >= 65 && sgn(row.a2) <= 0) ++sign_violations;
    }
    const auto exceptional = exceptional_set(rows);
    const auto beyond = static_cast<std::uint64_t>(
        std::count_if(exceptional.begin(), exceptional.end(), [](std::size_t n) { return n > 64; }));

    Report r;
    r.columns = {"n"};
    for (const auto n : exceptional) r.rows.push_back({static_cast<std::uint64_t>(n)});
    r.summary = {{"max", c.max_n},
                 {"count", static_cast<std::uint64_t>(exceptional.size())},
                 {"beyond_64", beyond},
                 {"sign_violations", sign_violations},
                 {"product_mismatches", mismatches}};
    r.ok = beyond == 0 && sign_violations == 0 && mismatches == 0;
    if (c.max_n > 64) {
        r.notes.push_back(beyond == 0 ? "none in (64, " + std::to_string(c.max_n) + "]"
                                      : std::to_string(beyond) + " equalities in (64, " +
                                            std::to_string(c.max_n) + "]");
    }
    return r;
}

Report cmd_glaisher(const RunConfig& c, const Progress&) {
    Report r;
    const bool holds = glaisher_check(c.max_n);
    r.summary = {{"max", c.max_n}, {"holds", holds}};
    r.ok = holds;
    return r;
}

Report cmd_gauss_check(const RunConfig& c, const Progress& progress) {
    require(c.b_max >= 1, "gauss-check: --bmax must be >= 1");
    progress("direct vs closed Gauss sums for b <= " + std::to_string(c.b_max));
    const auto rep = gauss_agreement_scan(c.b_max);
    constexpr double tolerance = 1e-9;
    Report r;
    r.summary = {{"b_max", rep.b_max},
                 {"pairs_checked", rep.pairs_checked},
                 {"max_abs_error", rep.max_abs_error},
                 {"max_scaled_error", rep.max_scaled_error},
                 {"argmax_a", rep.argmax_a},
                 {"argmax_b", rep.argmax_b},
                 {"tolerance", tolerance},
                 {"pass", rep.max_scaled_error < tolerance}};
    r.ok = rep.max_scaled_error < tolerance;
    return r;
}

Report cmd_lambda(const RunConfig& c, const Progress&) {
    const ReducedFraction frac(c.a, c.b);
    const LambdaEvaluator evaluator(c.b);
    const auto v = evaluator.evaluate(frac);
    const double bound = special_constants().bound_constant;
    Report r;
    r.summary = {{"a", c.a},
                 {"b", c.b},
                 {"big_star_re", v.big_star.real()},
                 {"big_star_im", v.big_star.imag()},
                 {"small_star_re", v.small_star.real()},
                 {"small_star_im", v.small_star.imag()},
                 {"max_component", max_component(v.small_star)},
                 {"bound", bound}};
    return r;
}

Report cmd_lambda_scan(const RunConfig& c, const Progress& progress) {
    require(c.b_max >= 2, "lambda-scan: --bmax must be >= 2");
    progress("scanning lambda* over 2 <= b <= " + std::to_string(c.b_max));
    const auto rep = verify_lemma_bound(c.b_max);
    Report r;
    r.summary = {{"b_max", rep.b_max},
                 {"max_value", rep.max_value},
                 {"argmax_a", rep.argmax_a},
                 {"argmax_b", rep.argmax_b},
                 {"bound", rep.bound},
                 {"pairs_checked", rep.pairs_checked},
                 {"violations", rep.violations},
                 {"holds", rep.holds()}};
    if (c.per_denominator) {
        r.columns = {"b", "argmax_a", "max_value"};
        for (const auto& d : rep.per_denominator) r.rows.push_back({d.b, d.argmax_a, d.max_value});
    }
    r.ok = rep.holds();
    return r;
}

Report cmd_divisor_bound(const RunConfig& c, const Progress& progress) {
    Report r;
    if (c.trials > 0) {
        progress("randomized divisor-sum bound, " + std::to_string(c.trials) + " trials");
        std::mt19937_64 rng(c.seed);
        constexpr std::array<std::uint64_t, 3> moduli = {2, 4, 8};
        std::uniform_int_distribution<std::size_t> pick_modulus(0, moduli.size() - 1);
        std::uint64_t violations = 0;
        double worst_ratio = 0.0;
        for (std::uint64_t t = 0; t < c.trials; ++t) {
            const std::uint64_t L = moduli[pick_modulus(rng)];
            const std::uint64_t beta = std::uniform_int_distribution<std::uint64_t>(L, 100000)(rng);
            const std::uint64_t l = 2 * std::uniform_int_distribution<std::uint64_t>(0, L / 2 - 1)(rng) + 1;
            const auto res = divisor_sum_bound(beta, L, l);
            if (!res.holds()) ++violations;
            worst_ratio = std::max(worst_ratio, res.exact / res.bound);
        }
        r.summary = {{"trials", c.trials},
                     {"seed", c.seed},
                     {"violations", violations},
                     {"max_exact_over_bound", worst_ratio}};
        r.ok = violations == 0;
        return r;
    }
    const auto res = divisor_sum_bound(c.beta, c.L, c.l);
    r.summary = {{"beta", c.beta}, {"L", c.L},         {"l", c.l},
                 {"exact", res.exact}, {"bound", res.bound}, {"holds", res.holds()}};
    r.ok = res.holds();
    return r;
}

Report cmd_wright_verify(const RunConfig& c, const Progress& progress) {
    const std::vector<std::int64_t> moduli =
        c.moduli.empty() ? std::vector<std::int64_t>{1, 2, 3, 4, 5, 8} : c.moduli;
    const std::vector<double> taus = c.taus.empty() ? std::vector<double>{0.3, 0.5, 1.0} : c.taus;
    constexpr double tolerance = 1e-6;
    Report r;
    r.columns = {"a", "b", "tau", "rel_error", "b1", "b2"};
    double worst = 0.0;
    for (const auto b : moduli) {
        require(b >= 1, "wright-verify: moduli must be positive");
        progress("Wright transformation at b = " + std::to_string(b));
        for (std::int64_t a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (const double tau : taus) {
                const ReducedFraction frac(a, b);
                const double e = verify_wright_transform(frac, {tau, 0.0});
                worst = std::max(worst, e);
                const auto b1 = least_b1(b);
                r.rows.push_back({a, b, tau, e, b1, b / b1});
            }
        }
    }
    r.summary = {{"max_rel_error", worst}, {"tolerance", tolerance}, {"pass", worst < tolerance}};
    r.ok = worst < tolerance;
    return r;
}

Report cmd_g_factor_check(const RunConfig& c, const Progress&) {
    const std::vector<double> radii = c.radii.empty() ? std::vector<double>{0.2, 0.3, 0.4} : c.radii;
    const std::vector<double> phases = c.phases.empty() ? std::vector<double>{0.0, 0.2, 0.4} : c.phases;
    constexpr double tolerance = 1e-10;
    Report r;
    r.columns = {"modulus", "phase", "rel_error"};
    double worst = 0.0;
    for (const double m : radii) {
        require(m >= 0.0 && m < 1.0, "g-factor-check: moduli must lie in [0, 1)");
        for (const double ph : phases) {
            const double e = verify_g_factorization(std::polar(m, ph));
            worst = std::max(worst, e);
            r.rows.push_back({m, ph, e});
        }
    }
    r.summary = {{"max_rel_error", worst}, {"tolerance", tolerance}, {"pass", worst < tolerance}};
    r.ok = worst < tolerance;
    return r;
}

Report cmd_small_tau(const RunConfig& c, const Progress&) {
    const std::vector<double> ys = c.ys.empty() ? std::vector<double>{0.2, 0.1, 0.05, 0.02} : c.ys;
    Report r;
    r.columns = {"y", "x", "residual"};
    bool decreasing = true;
    double previous = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double residual = verify_small_tau_expansion({ys[i], c.x, std::nullopt});
        if (i > 0 && !(residual < previous)) decreasing = false;
        previous = residual;
        r.rows.push_back({ys[i], c.x, residual});
    }
    r.summary = {{"strictly_decreasing", decreasing}};
    r.ok = decreasing;
    return r;
}

Report cmd_asympt(const RunConfig& c, const Progress& progress) {
    const std::vector<std::uint64_t> grid =
        c.grid.empty() ? std::vector<std::uint64_t>{1000, 5000, 10000} : c.grid;
    const std::uint64_t table = std::max<std::uint64_t>(c.max_n, *std::max_element(grid.begin(), grid.end()));
    progress("parity DP up to n = " + std::to_string(table));
    const auto rows = count_by_parity(table);
    const auto reports = error_report(rows, grid);
    Report r;
    r.columns = {"n", "exact_a2", "a2_main", "ratio_a2", "exact_p2", "p2_main", "ratio_p2",
                 "parity_ratio_minus_one"};
    for (const auto& rep : reports) {
        r.rows.push_back({rep.n, rep.exact_a2, rep.a2_main, rep.ratio_a2, rep.exact_p2, rep.p2_main,
                          rep.ratio_p2, parity_balance(rows[rep.n]).ratio_minus_one});
    }
    return r;
}

Report cmd_meinardus_check(const RunConfig&, const Progress&) {
    const auto& k = asymptotic_constants();
    constexpr double tolerance = 1e-10;
    Report r;
    r.columns = {"data", "C", "kappa", "exp_coeff", "expected_C", "expected_kappa",
                 "expected_exp_coeff", "max_abs_diff"};
    struct Expected {
        std::string name;
        MeinardusData data;
        double C;
        double kappa;
        double exp_coeff;
    };
    const std::vector<Expected> cases = {
        {"H2", MeinardusData::for_h2(), k.B0, -7.0 / 6.0, k.Lambda},
        {"G", MeinardusData::for_g(),
         std::cbrt(k.B) / (std::sqrt(3.0 * std::numbers::pi) * std::pow(2.0, 5.0 / 6.0)), -5.0 / 6.0,
         3.0 * std::pow(k.E, 2.0 / 3.0)},
    };
    bool ok = true;
    for (const auto& e : cases) {
        const auto got = meinardus_constants(e.data);
        const double diff = std::max({std::abs(got.C - e.C), std::abs(got.kappa - e.kappa),
                                      std::abs(got.exp_coeff - e.exp_coeff)});
        ok = ok && diff < tolerance;
        r.rows.push_back({e.name, got.C, got.kappa, got.exp_coeff, e.C, e.kappa, e.exp_coeff, diff});
    }

    double saddle = 0.0;
    for (const std::uint64_t n : {1ULL, 1000ULL, 1000000ULL}) {
        const auto p = saddle_params(n);
        saddle = std::max(saddle, std::abs(p.B - 2.0 * static_cast<double>(n) * std::pow(p.y, 1.5)) / p.B);
    }
    const double remark = std::abs(k.remark1 - k.B0 / 2.0);
    ok = ok && saddle < 1e-12 && remark < 1e-12;
    r.summary = {{"saddle_identity_rel_error", saddle},
                 {"remark1_abs_diff", remark},
                 {"pass", ok}};
    r.ok = ok;
    return r;
}

Report cmd_f_max(const RunConfig&, const Progress&) {
    const auto m = maximize_f();
    const double t_error = std::abs(m.t - 1.0 / std::sqrt(3.0));
    const double value_error = std::abs(m.value - std::pow(3.0, 0.75) / 2.0);
    Report r;
    r.summary = {{"t", m.t},
                 {"value", m.value},
                 {"t_error", t_error},
                 {"value_error", value_error},
                 {"pass", t_error < 1e-8 && value_error < 1e-12}};
    r.ok = t_error < 1e-8 && value_error < 1e-12;
    return r;
}

using Handler = Report (*)(const RunConfig&, const Progress&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"count", cmd_count},
        {"exceptional", cmd_exceptional},
        {"glaisher", cmd_glaisher},
        {"gauss-check", cmd_gauss_check},
        {"lambda", cmd_lambda},
        {"lambda-scan", cmd_lambda_scan},
        {"divisor-bound", cmd_divisor_bound},
        {"wright-verify", cmd_wright_verify},
        {"g-factor-check", cmd_g_factor_check},
        {"small-tau", cmd_small_tau},
        {"asympt", cmd_asympt},
        {"meinardus-check", cmd_meinardus_check},
        {"f-max", cmd_f_max},
    };
    return table;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto it = handlers().find(config.subcommand);
    if (it == handlers().end()) {
        err << "sqparity: unknown subcommand '" << config.subcommand << "'\n";
        return kExitUsage;
    }
    const Progress progress(config, err);

    Report report;
    try {
        report = it->second(config, progress);
    } catch (const std::invalid_argument& e) {
        err << "sqparity " << config.subcommand << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "sqparity " << config.subcommand << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "sqparity " << config.subcommand << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "sqparity " << config.subcommand << ": check failed: " << e.what() << '\n';
        return kExitViolation;
    }

    std::ostringstream data;
    if (config.format == OutputFormat::json) {
        write_json(report, data);
    } else {
        write_csv(report, data, err);
    }
    for (const auto& note : report.notes) err << note << '\n';

    if (config.output_path.empty()) {
        out << data.str();
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) {
            err << "sqparity: cannot open " << config.output_path << " for writing\n";
            return kExitUsage;
        }
        file << data.str();
        if (!file) {
            err << "sqparity: write to " << config.output_path << " failed\n";
            return kExitViolation;
        }
    }
    if (!report.ok) {
        err << "sqparity " << config.subcommand << ": FAILED\n";
        return kExitViolation;
    }
    return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification toolkit for parity-refined partitions into squares", "sqparity"};
    app.require_subcommand(1, 1);

    RunConfig config;
    std::string format = "csv";
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", config.output_path, "Write data to a file instead of stdout");
        sub->add_flag("-q,--quiet", config.quiet, "No progress messages");
    };

    auto* count = app.add_subcommand("count", "Parity-refined counts p2(0,2,n), p2(1,2,n), a2(n)");
    config.max_n = 100;
    count->add_option("--max", config.max_n, "Largest n")->capture_default_str();

    auto* exceptional = app.add_subcommand("exceptional", "n with p2(0,2,n) = p2(1,2,n)");
    exceptional->add_option("--max", config.max_n, "Largest n")->capture_default_str();

    auto* glaisher = app.add_subcommand("glaisher", "Glaisher's identity for r = 1");
    glaisher->add_option("--max", config.max_n, "Largest n");

    auto* gauss = app.add_subcommand("gauss-check", "Closed-form vs direct Gauss sums");
    config.b_max = 2000;
    gauss->add_option("--bmax", config.b_max, "Largest modulus");

    auto* lambda = app.add_subcommand("lambda", "Lambda* and lambda* at a/b");
    lambda->add_option("--a", config.a, "Numerator")->required();
    lambda->add_option("--b", config.b, "Denominator")->required();

    auto* scan = app.add_subcommand("lambda-scan", "Exhaustive lambda* bound scan");
    scan->add_option("--bmax", config.b_max, "Largest denominator");
    scan->add_flag("--per-b", config.per_denominator, "Emit the per-denominator maxima");

    auto* divisor = app.add_subcommand("divisor-bound", "Divisor-sum bound, one triple or randomized");
    divisor->add_option("--beta", config.beta, "beta");
    divisor->add_option("--L", config.L, "Modulus L");
    divisor->add_option("--l", config.l, "Residue l");
    divisor->add_option("--random", config.trials, "Number of randomized triples");
    divisor->add_option("--seed", config.seed, "RNG seed for --random");

    auto* wright = app.add_subcommand("wright-verify", "Wright's transformation for H2");
    wright->add_option("--b", config.moduli, "Denominators (default 1 2 3 4 5 8)");
    wright->add_option("--tau", config.taus, "Real tau' values (default 0.3 0.5 1)");

    auto* gfactor = app.add_subcommand("g-factor-check", "G(q) series vs H2 quotient");
    gfactor->add_option("--modulus", config.radii, "Values of |q| (default 0.2 0.3 0.4)");
    gfactor->add_option("--phase", config.phases, "Values of arg q (default 0 0.2 0.4)");

    auto* small = app.add_subcommand("small-tau", "Small-tau expansion of Log G");
    small->add_option("--y", config.ys, "Values of y (default 0.2 0.1 0.05 0.02)");
    small->add_option("--x", config.x, "x, with tau = y - 2 pi i x");

    auto* asympt = app.add_subcommand("asympt", "Exact counts vs main terms");
    asympt->add_option("--grid", config.grid, "Values of n (default 1000 5000 10000)");
    asympt->add_option("--max", config.max_n, "Table size (default max of grid)");

    auto* meinardus = app.add_subcommand("meinardus-check", "Meinardus constants vs closed forms");
    auto* fmax = app.add_subcommand("f-max", "Maximize f(t)");

    for (auto* sub : {count, exceptional, glaisher, gauss, lambda, scan, divisor, wright, gfactor,
                      small, asympt, meinardus, fmax}) {
        add_common(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        const int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto subs = app.get_subcommands();
    config.subcommand = subs.front()->get_name();
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

    // defaults that depend on the subcommand
    const auto given = [&](const char* name) { return subs.front()->count(name) > 0; };
    if (config.subcommand == "exceptional" && !given("--max")) config.max_n = 50000;
    if (config.subcommand == "glaisher" && !given("--max")) config.max_n = 500;
    if (config.subcommand == "lambda-scan" && !given("--bmax")) config.b_max = 600;
    if (config.subcommand == "asympt" && !given("--max")) config.max_n = 0;
    if (config.subcommand == "divisor-bound" && config.trials == 0 &&
        !(given("--beta") && given("--L") && given("--l"))) {
        err << "sqparity divisor-bound: give --beta, --L and --l, or --random N\n";
        return kExitUsage;
    }
    return run(config, out, err);
}

} // namespace sqparity::cli
