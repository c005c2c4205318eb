#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "hookstat/partition.hpp"
#include "hookstat/rng.hpp"
#include "hookstat/tableaux.hpp"

namespace hookstat {

/// Shape of the Schensted insertion tableau of a permutation of 1..n.
/// The first row length is the longest increasing subsequence, the first
/// column the longest decreasing one.
inline Partition rsk_shape(std::span<const int> sigma) {
    std::vector<std::vector<int>> rows;
    for (int value : sigma) {
        int carry = value;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            std::swap(carry, *it);  // bump
        }
        if (!placed) rows.push_back({carry});
    }
    Partition shape;
    for (auto& row : rows) shape.parts.push_back(static_cast<Int>(row.size()));
    return shape;
}

/// Longest increasing subsequence by patience sorting; independent of the
/// insertion path above.
inline int lis_length(std::span<const int> seq) {
    std::vector<int> tails;
    for (int x : seq) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

inline int lds_length(std::span<const int> seq) {
    std::vector<int> neg(seq.begin(), seq.end());
    for (auto& x : neg) x = -x;
    return lis_length(neg);
}

inline bool is_involution(std::span<const int> sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[static_cast<std::size_t>(sigma[i] - 1)] != static_cast<int>(i) + 1)
            return false;
    return true;
}

inline std::vector<int> inverse_permutation(std::span<const int> sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

struct HookCensus {
    Int perm_count = 0;
    Int involution_count = 0;
};

/// Exhaustive scan of S_n: how many permutations have RSK shape inside the
/// hook, and how many of those are involutions.  Must reproduce
/// sum (f^lambda)^2 and sum f^lambda over H(k,l;n).
inline HookCensus brute_force_hook_census(HookBound bound, int n) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("brute_force_hook_census: n must be in [0,10]");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    HookCensus census;
    do {
        if (hook_membership(rsk_shape(sigma), bound)) {
            ++census.perm_count;
            if (is_involution(sigma)) ++census.involution_count;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return census;
}

/// Number of standard Young tableaux by direct backtracking over the cell
/// filling order; oracle for the hook length formula (n <= ~12).
inline BigInt count_syt_backtracking(const Partition& shape) {
    const Int rows = shape.rows();
    std::vector<Int> filled(static_cast<std::size_t>(rows), 0);  // cells used per row
    BigInt count = 0;
    auto rec = [&](auto&& self, Int placed, Int total) -> void {
        if (placed == total) {
            ++count;
            return;
        }
        for (Int r = 0; r < rows; ++r) {
            if (filled[static_cast<std::size_t>(r)] >= shape.parts[static_cast<std::size_t>(r)])
                continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <=
                             filled[static_cast<std::size_t>(r)])
                continue;  // column constraint
            ++filled[static_cast<std::size_t>(r)];
            self(self, placed + 1, total);
            --filled[static_cast<std::size_t>(r)];
        }
    };
    rec(rec, 0, shape.n());
    return count;
}

struct PermutationSample {
    std::vector<int> values;
    Partition shape;
    bool is_involution = false;
    std::uint64_t attempts = 0;
};

struct RskBudgetError : std::runtime_error {
    std::uint64_t attempts;
    double acceptance_rate;
    RskBudgetError(std::uint64_t a, double rate)
        : std::runtime_error("rejection sampling budget exceeded after " + std::to_string(a) +
                             " attempts (acceptance ~ " + std::to_string(rate) + ")"),
          attempts(a),
          acceptance_rate(rate) {}
};

namespace detail {

inline std::vector<int> random_permutation(int n, CounterRng& rng) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(sigma[static_cast<std::size_t>(i)], sigma[j]);
    }
    return sigma;
}

// ratios I(m-1)/I(m) of involution counts, from the exact recurrence
// I(m) = I(m-1) + (m-1) I(m-2)
inline std::vector<double> involution_fixed_point_prob(int n) {
    std::vector<BigInt> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = 1;
    if (n >= 1) inv[1] = 1;
    for (int m = 2; m <= n; ++m)
        inv[static_cast<std::size_t>(m)] = inv[static_cast<std::size_t>(m - 1)] +
                                           (m - 1) * inv[static_cast<std::size_t>(m - 2)];
    std::vector<double> prob(static_cast<std::size_t>(n) + 1, 1.0);
    using F = boost::multiprecision::cpp_bin_float_50;
    for (int m = 1; m <= n; ++m)
        prob[static_cast<std::size_t>(m)] = static_cast<double>(
            F(inv[static_cast<std::size_t>(m - 1)]) / F(inv[static_cast<std::size_t>(m)]));
    return prob;
}

// Uniform involution via the fixed-point/2-cycle construction.
inline std::vector<int> random_involution(int n, CounterRng& rng,
                                          const std::vector<double>& fixed_prob) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<int> free(static_cast<std::size_t>(n));
    std::iota(free.begin(), free.end(), 1);
    while (!free.empty()) {
        const int m = static_cast<int>(free.size());
        const int a = free.back();
        free.pop_back();
        if (m == 1 || rng.next_uniform() <= fixed_prob[static_cast<std::size_t>(m)]) continue;
        const auto idx = static_cast<std::size_t>(rng.next_below(free.size()));
        const int b = free[idx];
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(idx));
        sigma[static_cast<std::size_t>(a - 1)] = b;
        sigma[static_cast<std::size_t>(b - 1)] = a;
    }
    return sigma;
}

}  // namespace detail

/// Uniform sample from S_{k,l;n} (or its involutions) by rejection; the
/// involution proposals come from the exact fixed-point construction, so
/// no permutation-level rejection is wasted on the beta=1 measure.
inline PermutationSample sample_restricted_permutation(HookBound bound, int n,
                                                       std::uint64_t seed,
                                                       bool involutions_only,
                                                       std::uint64_t max_attempts = 1'000'000,
                                                       CounterRng* external_rng = nullptr) {
    if (n < 1) throw std::invalid_argument("sample_restricted_permutation: n must be >= 1");
    CounterRng own(CounterRng::stream(seed, 0));
    CounterRng& rng = external_rng ? *external_rng : own;
    const auto fixed_prob =
        involutions_only ? detail::involution_fixed_point_prob(n) : std::vector<double>{};
    for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<int> sigma = involutions_only
                                     ? detail::random_involution(n, rng, fixed_prob)
                                     : detail::random_permutation(n, rng);
        Partition shape = rsk_shape(sigma);
        if (hook_membership(shape, bound)) {
            PermutationSample out;
            out.values = std::move(sigma);
            out.shape = std::move(shape);
            out.is_involution = involutions_only || is_involution(out.values);
            out.attempts = attempt;
            return out;
        }
    }
    throw RskBudgetError(max_attempts, 0.0);
}

struct RowStats {
    std::vector<double> mean;       // per requested row
    std::vector<double> std_error;
    double acceptance_rate = 0.0;
    std::uint64_t samples = 0;
};

/// Empirical row-length means of the RSK shape over S_{k,l;n}: uniform
/// permutations realize beta = 2, uniform involutions beta = 1.
inline RowStats monte_carlo_row_stats(HookBound bound, int n, std::uint64_t samples,
                                      std::uint64_t seed, bool involutions_only,
                                      Int report_rows = 0,
                                      std::uint64_t max_attempts_per_sample = 1'000'000) {
    if (samples == 0) throw std::invalid_argument("monte_carlo_row_stats: samples must be > 0");
    if (report_rows <= 0) report_rows = bound.k > 0 ? bound.k : 1;
    CounterRng rng(CounterRng::stream(seed, 0));
    std::vector<CompensatedSum> sum(static_cast<std::size_t>(report_rows)),
        sumsq(static_cast<std::size_t>(report_rows));
    std::uint64_t attempts_total = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        PermutationSample ps = sample_restricted_permutation(
            bound, n, seed, involutions_only, max_attempts_per_sample, &rng);
        attempts_total += ps.attempts;
        for (Int p = 1; p <= report_rows; ++p) {
            const double v = static_cast<double>(ps.shape.part(p));
            sum[static_cast<std::size_t>(p - 1)].add(v);
            sumsq[static_cast<std::size_t>(p - 1)].add(v * v);
        }
    }
    RowStats out;
    out.samples = samples;
    out.acceptance_rate = static_cast<double>(samples) / static_cast<double>(attempts_total);
    const double nn = static_cast<double>(samples);
    for (Int p = 0; p < report_rows; ++p) {
        const double mean = sum[static_cast<std::size_t>(p)].value() / nn;
        const double var =
            std::max(0.0, sumsq[static_cast<std::size_t>(p)].value() / nn - mean * mean);
        out.mean.push_back(mean);
        out.std_error.push_back(std::sqrt(var / nn));
    }
    return out;
}

}  // namespace hookstat
