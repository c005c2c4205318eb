#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookstat/cache.hpp"
#include "hookstat/extremal.hpp"
#include "hookstat/integrals.hpp"
#include "hookstat/measure.hpp"
#include "hookstat/rsk.hpp"
#include "hookstat/table.hpp"

namespace hookstat::cli {

inline constexpr const char* version = "0.1.0";

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed command invocation; validated before dispatch.
struct RunConfig {
    std::string command;
    Int k = 0, l = 0;
    double beta = 2.0;
    Int n = 0;
    std::vector<Int> n_grid;
    Int p = 1;
    Int q = 0;  // > 0 selects column statistics where applicable
    double z = 0.0;
    std::vector<double> z_grid;
    double scale = 0.0;  // Gaussian scale for raw integrals; 0 = natural
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = CounterRng::default_seed;
    double tolerance = 1e-2;
    std::string format = "csv";  // csv | json
    std::string method = "auto";
    std::optional<std::filesystem::path> cache_dir;
    int threads = 1;
    Int max_n = 100'000;  // per-row enumeration budget for table commands
    std::string name;     // integral selector for cmd_integrals
};

struct CommandOutput {
    std::string command;
    nlohmann::json params;
    Table table;
    std::vector<std::string> errors;
    std::uint64_t seed = 0;
};

inline Method parse_method(const std::string& m) {
    if (m == "auto") return Method::automatic;
    if (m == "closed") return Method::closed;
    if (m == "quadrature") return Method::quadrature;
    if (m == "mc" || m == "monte-carlo") return Method::monte_carlo;
    throw ValidationError("unknown method '" + m + "'");
}

inline void validate_common(const RunConfig& c, bool needs_bound = true) {
    if (needs_bound && (c.k < 0 || c.l < 0 || c.k + c.l < 1))
        throw ValidationError("need k,l >= 0 with k+l >= 1");
    if (!(c.beta > 0)) throw ValidationError("beta must be > 0");
    if (c.format != "csv" && c.format != "json") throw ValidationError("format must be csv|json");
    if (c.threads < 1) throw ValidationError("threads must be >= 1");
}

inline std::optional<std::filesystem::path> resolve_cache_dir(const RunConfig& c) {
    if (c.cache_dir) return c.cache_dir;
    if (const char* env = std::getenv("HOOK_PLANCHEREL_CACHE"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

namespace detail {

inline nlohmann::json base_params(const RunConfig& c) {
    nlohmann::json p;
    p["k"] = c.k;
    p["l"] = c.l;
    p["beta"] = c.beta;
    p["method"] = c.method;
    p["threads"] = c.threads;
    return p;
}

template <class F>
auto run_grid(const std::vector<Int>& grid, int threads, F&& per_item) {
    using R = std::invoke_result_t<F, Int>;
    std::vector<R> out(grid.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = per_item(grid[i]);
        return out;
    }
    std::size_t next = 0;
    while (next < grid.size()) {
        const std::size_t batch =
            std::min<std::size_t>(static_cast<std::size_t>(threads), grid.size() - next);
        std::vector<std::future<R>> fut;
        for (std::size_t b = 0; b < batch; ++b)
            fut.push_back(std::async(std::launch::async, per_item, grid[next + b]));
        for (std::size_t b = 0; b < batch; ++b) out[next + b] = fut[b].get();
        next += batch;
    }
    return out;
}

}  // namespace detail

/// Finite-n second-term coefficients against their limit constant.
inline CommandOutput cmd_convergence(const RunConfig& c) {
    validate_common(c);
    if (c.n_grid.empty() && c.n != 0)
        throw ValidationError("cmd_convergence: use --n-grid");
    const bool column_mode = c.q > 0;
    if (column_mode && (c.q < 1 || c.q > c.l)) throw ValidationError("q out of range");
    if (!column_mode && (c.p < 1 || c.p > c.k)) throw ValidationError("p out of range");

    const MeasureSpec spec(HookBound(c.k, c.l), c.beta);
    const Method method = parse_method(c.method);
    McOptions mc{c.samples, c.seed, c.tolerance, true};
    const QuadratureResult limit =
        column_mode
            ? limit_second_term_hook_col(c.k, c.l, c.beta, c.q, HookRoute::direct, method,
                                         quad::default_tolerance, mc)
            : limit_second_term_hook(c.k, c.l, c.beta, c.p, HookRoute::direct, method,
                                     quad::default_tolerance, mc);

    CommandOutput out;
    out.command = "convergence";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params[column_mode ? "q" : "p"] = column_mode ? c.q : c.p;
    out.params["n_grid"] = c.n_grid;
    out.table.columns = {"n", column_mode ? "c_col" : "c_row", "limit", "gap"};

    auto cache_dir = resolve_cache_dir(c);
    std::optional<MomentCache> cache;
    if (cache_dir) cache.emplace(*cache_dir);

    struct Row {
        Int n;
        std::optional<double> value;
        std::string error;
    };
    auto rows = detail::run_grid(c.n_grid, c.threads, [&](Int n) -> Row {
        if (n < 1) return {n, std::nullopt, "invalid n"};
        if (n > c.max_n) return {n, std::nullopt, "enumeration budget exceeded (max-n)"};
        MomentRecord rec = compute_moments_cached(spec, n, cache ? &*cache : nullptr);
        const double v = column_mode ? second_term_col(spec, c.q, n, rec)
                                     : second_term_row(spec, c.p, n, rec);
        return {n, v, ""};
    });
    for (const auto& r : rows) {
        if (r.value) {
            out.table.add_row({r.n, *r.value, limit.value, *r.value - limit.value});
        } else {
            out.table.add_row({r.n, std::string("error"), limit.value, std::string("error")});
            out.errors.push_back("n=" + std::to_string(r.n) + ": " + r.error);
        }
    }
    return out;
}

/// Limit constants by every route that applies, with cross-route deltas.
inline CommandOutput cmd_limits(const RunConfig& c) {
    validate_common(c);
    const bool column_mode = c.q > 0;
    const Int idx = column_mode ? c.q : c.p;
    const Int arm = column_mode ? c.l : c.k;
    if (idx < 1 || idx > arm) throw ValidationError("row/column index out of range");

    CommandOutput out;
    out.command = "limits";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params[column_mode ? "q" : "p"] = idx;
    out.table.columns = {"route", "value", "std_error", "method", "delta_vs_first"};

    McOptions mc{c.samples, c.seed, c.tolerance, true};
    std::optional<double> reference;
    auto add = [&](const std::string& route, const QuadratureResult& r) {
        if (!reference) reference = r.value;
        out.table.add_row({route, r.value, r.std_error, std::string(method_name(r.method)),
                           r.value - *reference});
    };
    auto route_call = [&](HookRoute route, Method m) {
        return column_mode ? limit_second_term_hook_col(c.k, c.l, c.beta, idx, route, m,
                                                        quad::default_tolerance, mc)
                           : limit_second_term_hook(c.k, c.l, c.beta, idx, route, m,
                                                    quad::default_tolerance, mc);
    };

    try {
        add("closed", route_call(HookRoute::direct, Method::closed));
    } catch (const std::invalid_argument&) {
        try {
            add("closed-scaling", route_call(HookRoute::scaling, Method::closed));
        } catch (const std::invalid_argument&) { /* no closed form at this beta */ }
    }
    if (arm <= 3) add("quadrature", route_call(HookRoute::direct, Method::quadrature));
    add("scaling", route_call(HookRoute::scaling, Method::automatic));
    add("monte-carlo", route_call(HookRoute::direct, Method::monte_carlo));
    if (c.k + c.l - 1 <= 2 || c.method == "mc") {
        QuadratureResult full = hook_ratio_full(
            c.k, c.l, c.beta, column_mode ? 1 : c.p,
            c.k + c.l - 1 <= 2 ? Method::quadrature : Method::monte_carlo,
            quad::default_tolerance, mc);
        if (!column_mode) add("full-domain", full);
    }
    return out;
}

/// r(z) next to the finite-n distribution values along the z-grid.
inline CommandOutput cmd_distribution(const RunConfig& c) {
    validate_common(c);
    if (c.z_grid.empty()) throw ValidationError("cmd_distribution: need --z-grid");
    for (double z : c.z_grid)
        if (!(z > 0)) throw ValidationError("z values must be > 0");
    if (c.p < 1 || c.p > c.k) throw ValidationError("p out of range");

    const MeasureSpec spec(HookBound(c.k, c.l), c.beta);
    const Method method = parse_method(c.method);
    McOptions mc{c.samples, c.seed, c.tolerance, true};

    CommandOutput out;
    out.command = "distribution";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params["p"] = c.p;
    out.params["z_grid"] = c.z_grid;
    out.params["n_grid"] = c.n_grid;
    out.table.columns = {"z", "r"};
    for (Int n : c.n_grid) {
        const std::string sn = std::to_string(n);
        out.table.columns.push_back("s_n" + sn);
        out.table.columns.push_back("first_term_n" + sn);
        out.table.columns.push_back("lambda_p_n" + sn);
    }

    for (double z : c.z_grid) {
        const double r =
            distribution_limit_r(c.k, c.l, c.beta, z, method, quad::default_tolerance, mc).value;
        std::vector<Cell> row{z, r};
        for (Int n : c.n_grid) {
            TruncatedMoments tm = compute_truncated_moments(spec, n, z);
            row.emplace_back(truncated_mass_ratio(tm));
            row.emplace_back(static_cast<double>(n) / static_cast<double>(c.k + c.l) * r);
            row.emplace_back(distribution_row(spec, c.p, n, z, tm));
        }
        out.table.add_row(std::move(row));
    }
    return out;
}

/// The conjectured-oscillation series; exploratory output only.
inline CommandOutput cmd_oscillation(const RunConfig& c) {
    validate_common(c);
    if (!(c.z > 0)) throw ValidationError("cmd_oscillation: need --z > 0");
    const MeasureSpec spec(HookBound(c.k, c.l), c.beta);
    const Method method = parse_method(c.method);
    McOptions mc{c.samples, c.seed, c.tolerance, true};
    const double r =
        distribution_limit_r(c.k, c.l, c.beta, c.z, method, quad::default_tolerance, mc).value;

    CommandOutput out;
    out.command = "oscillation";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params["z"] = c.z;
    out.params["n_grid"] = c.n_grid;
    out.params["r"] = r;
    out.params["label"] = "conjecture exploration";
    out.table.comment_lines.push_back(
        "conjecture exploration: empirical series, no convergence asserted");
    out.table.columns = {"n", "value", "running_inf", "running_sup"};
    auto series = oscillation_series(spec, c.z, c.n_grid, r);
    for (const auto& pt : series)
        out.table.add_row({pt.n, pt.value, pt.running_inf, pt.running_sup});
    return out;
}

/// Expected vs Hermite-maximal shape at one n.
inline CommandOutput cmd_compare_max(const RunConfig& c) {
    validate_common(c);
    if (c.n < 1) throw ValidationError("cmd_compare_max: need --n >= 1");
    const MeasureSpec spec(HookBound(c.k, c.l), c.beta);
    CommandOutput out;
    out.command = "compare-max";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params["n"] = c.n;
    out.table.columns = {"kind",          "index",         "expected_finite",
                         "expected_asym", "maximal_asym",  "maximal_exact",
                         "coeff_gap"};
    for (const auto& row : compare_shapes(spec, c.n)) {
        out.table.add_row({row.kind, row.index, row.expected_finite, row.expected_asymptotic,
                           row.maximal_asymptotic, row.maximal_exact,
                           row.expected_minus_maximal / std::sqrt(double(c.n))});
    }
    return out;
}

/// RSK census identities and hook-length-vs-backtracking checks; any
/// mismatch is a verification failure (exit 4).
inline CommandOutput cmd_verify(const RunConfig& c) {
    const Int census_max = c.n > 0 ? std::min<Int>(c.n, 10) : 8;
    CommandOutput out;
    out.command = "verify";
    out.seed = c.seed;
    out.params["census_max_n"] = census_max;
    out.table.columns = {"check", "status", "detail"};
    bool ok = true;

    const std::vector<HookBound> bounds{{1, 1}, {2, 0}, {2, 1}, {3, 0}};
    for (const auto& bound : bounds) {
        for (Int n = 1; n <= census_max; ++n) {
            BigInt sum_f = 0, sum_f2 = 0;
            for_each_hook_partition(bound, n, [&](const Partition& lambda) {
                BigInt f = exact_tableaux_count(lambda);
                sum_f += f;
                sum_f2 += f * f;
            });
            HookCensus census = brute_force_hook_census(bound, static_cast<int>(n));
            const bool match =
                sum_f2 == census.perm_count && sum_f == census.involution_count;
            ok = ok && match;
            out.table.add_row(
                {"rsk-census k=" + std::to_string(bound.k) + " l=" + std::to_string(bound.l) +
                     " n=" + std::to_string(n),
                 std::string(match ? "pass" : "FAIL"),
                 "perms=" + census.perm_count.str() + " involutions=" +
                     census.involution_count.str()});
        }
    }
    const Int hook_max = std::min<Int>(census_max + 2, 10);
    for (Int n = 1; n <= hook_max; ++n) {
        bool all = true;
        for_each_hook_partition(HookBound(n, 0), n, [&](const Partition& lambda) {
            if (exact_tableaux_count(lambda) != count_syt_backtracking(lambda)) all = false;
        });
        ok = ok && all;
        out.table.add_row({"hook-formula-vs-backtracking n=" + std::to_string(n),
                           std::string(all ? "pass" : "FAIL"), ""});
    }
    if (!ok) out.errors.push_back("verification mismatch");
    return out;
}

/// Evaluate one named Selberg-type integral.
inline CommandOutput cmd_integrals(const RunConfig& c) {
    const Method method = parse_method(c.method);
    McOptions mc{c.samples, c.seed, c.tolerance, true};
    CommandOutput out;
    out.command = "integrals";
    out.seed = c.seed;
    out.params = detail::base_params(c);
    out.params["name"] = c.name;
    out.table.columns = {"name", "value", "std_error", "method", "samples"};
    auto add = [&](const QuadratureResult& r) {
        out.table.add_row({c.name, r.value, r.std_error, std::string(method_name(r.method)),
                           static_cast<Int>(r.samples)});
    };
    if (c.name == "strip") {
        std::optional<Int> w;
        if (c.p >= 1) w = c.p;  // --p 0 selects the unweighted integral
        add(strip_integral(c.k, c.beta, c.scale > 0 ? c.scale : double(c.k), w, method,
                           quad::default_tolerance, mc));
    } else if (c.name == "hook-denominator-beta2") {
        add(QuadratureResult::closed(hook_denominator_closed_beta2(c.k, c.l)));
    } else if (c.name == "hook-full") {
        add(hook_full_integral(c.k, c.l, c.beta,
                               c.p >= 1 ? ArmWeight::row(c.p) : ArmWeight::none(), std::nullopt,
                               method, quad::default_tolerance, mc));
    } else if (c.name == "hook-factorized") {
        add(hook_integral_factorized(c.k, c.l, c.beta,
                                     c.p >= 1 ? ArmWeight::row(c.p) : ArmWeight::none(), method,
                                     quad::default_tolerance, mc));
    } else if (c.name == "limit-strip") {
        add(limit_second_term_strip(c.k, c.beta, c.p, method, quad::default_tolerance, mc));
    } else if (c.name == "limit-hook") {
        add(limit_second_term_hook(c.k, c.l, c.beta, c.p, HookRoute::direct, method,
                                   quad::default_tolerance, mc));
    } else if (c.name == "limit-hook-scaling") {
        add(limit_second_term_hook(c.k, c.l, c.beta, c.p, HookRoute::scaling, method,
                                   quad::default_tolerance, mc));
    } else if (c.name == "r") {
        if (!(c.z > 0)) throw ValidationError("integral 'r' needs --z > 0");
        add(distribution_limit_r(c.k, c.l, c.beta, c.z, method, quad::default_tolerance, mc));
    } else if (c.name == "shift") {
        if (!(c.z > 0)) throw ValidationError("integral 'shift' needs --z > 0");
        add(conjectured_shift_s(c.k, c.l, c.beta, c.p, c.z, method, quad::default_tolerance,
                                mc));
    } else if (c.name == "selberg") {
        if (c.z_grid.size() != 3) throw ValidationError("selberg needs --z-grid x,y,z");
        out.table.add_row({c.name,
                           selberg_reference(static_cast<int>(c.n), c.z_grid[0], c.z_grid[1],
                                             c.z_grid[2]),
                           0.0, std::string("closed"), Int{0}});
    } else if (c.name == "mehta") {
        if (!(c.z > 0)) throw ValidationError("mehta needs --z > 0");
        out.table.add_row(
            {c.name, mehta_reference(c.k, c.z), 0.0, std::string("closed"), Int{0}});
    } else {
        throw ValidationError("unknown integral name '" + c.name + "'");
    }
    return out;
}

inline CommandOutput run_command(const RunConfig& c) {
    if (c.command == "convergence") return cmd_convergence(c);
    if (c.command == "limits") return cmd_limits(c);
    if (c.command == "distribution") return cmd_distribution(c);
    if (c.command == "oscillation") return cmd_oscillation(c);
    if (c.command == "compare-max") return cmd_compare_max(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "integrals") return cmd_integrals(c);
    throw ValidationError("unknown command '" + c.command + "'");
}

/// JSON document per the external contract: command, params, results,
/// errors, seed, version.  Doubles keep full precision here.
inline std::string emit_json(const CommandOutput& out) {
    nlohmann::json doc;
    doc["command"] = out.command;
    doc["params"] = out.params;
    doc["seed"] = out.seed;
    doc["version"] = version;
    doc["errors"] = out.errors;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& row : out.table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size() && i < out.table.columns.size(); ++i) {
            const auto& cell = row[i];
            if (std::holds_alternative<std::string>(cell))
                obj[out.table.columns[i]] = std::get<std::string>(cell);
            else if (std::holds_alternative<Int>(cell))
                obj[out.table.columns[i]] = std::get<Int>(cell);
            else
                obj[out.table.columns[i]] = std::get<double>(cell);
        }
        results.push_back(std::move(obj));
    }
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

inline std::string emit(const CommandOutput& out, const std::string& format) {
    return format == "json" ? emit_json(out) : emit_csv(out.table);
}

}  // namespace hookstat::cli
