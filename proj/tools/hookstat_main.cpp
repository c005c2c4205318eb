// hookstat: finite-n beta-Plancherel statistics on hook-bounded Young
// diagrams, their Selberg-type integral limits, Hermite-root maximal
// shapes, and RSK cross-checks.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hookstat/cli.hpp"

namespace {

using hookstat::Int;
using hookstat::cli::RunConfig;

// "100:900:100" (inclusive range) or "100,200,300"
std::vector<Int> parse_int_grid(const std::string& text) {
    std::vector<Int> out;
    if (text.find(':') != std::string::npos) {
        Int a = 0, b = 0, step = 1;
        if (std::sscanf(text.c_str(), "%lld:%lld:%lld", (long long*)&a, (long long*)&b,
                        (long long*)&step) < 2 ||
            step <= 0)
            throw hookstat::cli::ValidationError("bad grid '" + text + "'");
        for (Int v = a; v <= b; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::vector<double> parse_double_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double a = 0, b = 0, step = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0)
            throw hookstat::cli::ValidationError("bad grid '" + text + "'");
        for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
    return out;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& n_grid_text,
                      std::string& z_grid_text, std::string& cache_text) {
    cmd->add_option("-k,--k", cfg.k, "rows of the hook bound");
    cmd->add_option("-l,--l", cfg.l, "columns of the hook bound");
    cmd->add_option("-b,--beta", cfg.beta, "measure exponent beta > 0");
    cmd->add_option("-n,--n", cfg.n, "single diagram size");
    cmd->add_option("--n-grid", n_grid_text, "n values: 'a:b:step' or comma list");
    cmd->add_option("-p,--p", cfg.p, "row index (0 = unweighted where applicable)");
    cmd->add_option("-q,--q", cfg.q, "column index (select column statistics)");
    cmd->add_option("-z,--z", cfg.z, "truncation parameter z > 0");
    cmd->add_option("--z-grid", z_grid_text, "z values: 'a:b:step' or comma list");
    cmd->add_option("--scale", cfg.scale, "Gaussian scale override for raw integrals");
    cmd->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
    cmd->add_option("--seed", cfg.seed, "RNG seed (default fixed for reproducibility)");
    cmd->add_option("--tolerance", cfg.tolerance, "Monte-Carlo relative error budget");
    cmd->add_option("--format", cfg.format, "output format: csv|json");
    cmd->add_option("--method", cfg.method, "auto|closed|quadrature|mc");
    cmd->add_option("--cache-dir", cache_text,
                    "moment cache directory (or env HOOK_PLANCHEREL_CACHE)");
    cmd->add_option("--threads", cfg.threads, "worker threads for grid commands");
    cmd->add_option("--max-n", cfg.max_n, "per-row enumeration budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beta-Plancherel statistics for Young diagrams in the (k,l)-hook"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string n_grid_text, z_grid_text, cache_text, output_path;
    app.add_option("-o,--output", output_path, "write output to a file instead of stdout");

    for (const char* name : {"convergence", "limits", "distribution", "oscillation",
                             "compare-max", "verify", "integrals"}) {
        auto* sub = app.add_subcommand(name);
        add_common_flags(sub, cfg, n_grid_text, z_grid_text, cache_text);
        if (std::string(name) == "integrals")
            sub->add_option("--name", cfg.name,
                            "strip|hook-full|hook-factorized|hook-denominator-beta2|"
                            "limit-strip|limit-hook|limit-hook-scaling|r|shift|selberg|mehta");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!n_grid_text.empty()) cfg.n_grid = parse_int_grid(n_grid_text);
        if (!z_grid_text.empty()) cfg.z_grid = parse_double_grid(z_grid_text);
        if (!cache_text.empty()) cfg.cache_dir = cache_text;

        hookstat::cli::CommandOutput out = hookstat::cli::run_command(cfg);
        const std::string text = hookstat::cli::emit(out, cfg.format);
        if (output_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(output_path, std::ios::trunc | std::ios::binary);
            f << text;
        }
        if (cfg.command == "verify" && !out.errors.empty()) {
            std::cerr << "verification mismatch\n";
            return 4;
        }
        return 0;
    } catch (const hookstat::cli::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const hookstat::McToleranceError& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return 3;
    } catch (const hookstat::RskBudgetError& e) {
        std::cerr << "budget failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
