#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookstat/numeric.hpp"
#include "hookstat/partition.hpp"

namespace hookstat {

using BigInt = boost::multiprecision::cpp_int;

/// f^lambda, the number of standard Young tableaux of shape lambda,
/// by the hook length formula f = n! / prod(hooks).
struct TableauxCount {
    std::optional<BigInt> exact;
    double log_value = 0.0;  // ln f^lambda
};

namespace detail {

// Sum of ln(hook) over all cells of a compact hook shape.
//
// Within a row the conjugate profile lambda'_j is a step function with at
// most k+l jumps, so the hooks along each row split into runs of
// consecutive integers; every run contributes a ratio of factorials.
// Cost is O((k+l)^2) per shape independent of n.
inline double log_hook_product(const HookShape& s, const LogFactorials& lf) {
    const Int k = s.k(), l = s.l();
    CompensatedSum acc;

    // breakpoints of j -> lambda'_j: after each top row value and at every
    // column index <= l+1 (the tail only affects j <= l)
    std::vector<Int> brk;
    brk.reserve(static_cast<std::size_t>(k + l) + 2);
    for (Int i = 0; i < k; ++i) brk.push_back(s.rows[static_cast<std::size_t>(i)] + 1);
    for (Int j = 1; j <= l + 1; ++j) brk.push_back(j);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

    for (Int i = 1; i <= k; ++i) {
        const Int len = s.rows[static_cast<std::size_t>(i - 1)];
        if (len < 1) break;
        Int a = 1;
        std::size_t bi = 0;
        while (a <= len) {
            while (bi < brk.size() && brk[bi] <= a) ++bi;
            Int b = bi < brk.size() ? std::min(brk[bi], len + 1) : len + 1;
            // hooks at columns [a, b-1] are consecutive integers starting at h_a
            const Int h_a = len - a + s.col_length(a) - i + 1;
            acc.add(lf(h_a) - lf(h_a - (b - a)));
            a = b;
        }
    }

    // tail cells, walked down each of the first l columns; the row lengths
    // below row k form a step function with at most l jumps
    std::vector<Int> tbrk;
    tbrk.reserve(static_cast<std::size_t>(l) + 1);
    for (Int j = 0; j < l; ++j) tbrk.push_back(s.tail_cols[static_cast<std::size_t>(j)] + 1);
    std::sort(tbrk.begin(), tbrk.end());
    tbrk.erase(std::unique(tbrk.begin(), tbrk.end()), tbrk.end());

    for (Int j = 1; j <= l; ++j) {
        const Int height = s.tail_cols[static_cast<std::size_t>(j - 1)];
        if (height < 1) break;
        const Int colj = s.col_length(j);
        Int a = 1;  // a = i - k, depth below the k-th row
        std::size_t bi = 0;
        while (a <= height) {
            while (bi < tbrk.size() && tbrk[bi] <= a) ++bi;
            Int b = bi < tbrk.size() ? std::min(tbrk[bi], height + 1) : height + 1;
            const Int h_a = s.row_length(k + a) + colj - (k + a) - j + 1;
            acc.add(lf(h_a) - lf(h_a - (b - a)));
            a = b;
        }
    }
    return acc.value();
}

// Exact hook product by visiting every cell; used for the exact path and
// as an independent cross-check of the run-based log path.
inline BigInt exact_hook_product(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    BigInt prod = 1;
    for (Int i = 1; i <= lambda.rows(); ++i) {
        const Int len = lambda.part(i);
        for (Int j = 1; j <= len; ++j)
            prod *= static_cast<long long>(len - j + conj.part(j) - i + 1);
    }
    return prod;
}

inline BigInt factorial_big(Int n) {
    BigInt f = 1;
    for (Int i = 2; i <= n; ++i) f *= static_cast<long long>(i);
    return f;
}

}  // namespace detail

/// ln f^lambda = ln n! - sum ln(hook), compensated.  f^empty = 1.
inline double log_tableaux_count(const HookShape& s, const LogFactorials& lf) {
    const Int n = s.cells();
    if (n == 0) return 0.0;
    return lf(n) - detail::log_hook_product(s, lf);
}

inline double log_tableaux_count(const Partition& lambda, const LogFactorials& lf) {
    std::vector<Int> rows(lambda.parts.begin(), lambda.parts.end());
    HookShape s{rows, {}};
    return log_tableaux_count(s, lf);
}

inline BigInt exact_tableaux_count(const Partition& lambda) {
    const Int n = lambda.n();
    if (n == 0) return 1;
    BigInt num = detail::factorial_big(n);
    BigInt den = detail::exact_hook_product(lambda);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("exact_tableaux_count: hook product does not divide n!");
    return q;
}

enum class TableauxMode { exact, log };

inline TableauxCount tableaux_count(const Partition& lambda, TableauxMode mode) {
    const Int n = lambda.n();
    LogFactorials lf(static_cast<std::size_t>(std::max<Int>(n + lambda.rows() + 2, 2)));
    TableauxCount out;
    out.log_value = log_tableaux_count(lambda, lf);
    if (mode == TableauxMode::exact) out.exact = exact_tableaux_count(lambda);
    return out;
}

}  // namespace hookstat
