#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "hookstat/partition.hpp"

namespace hookstat {

namespace detail {

// Tail columns: weakly decreasing heights t_1 >= ... >= t_m summing to rem.
// Heights are unbounded; only the count of nonzero columns is capped by m.
template <class F>
void enum_tail_cols(std::vector<Int>& cols, std::size_t j, Int rem, Int prev, Int m, F& f) {
    if (j == static_cast<std::size_t>(m)) {
        if (rem == 0) f();
        return;
    }
    Int slots = m - static_cast<Int>(j);
    // t_j = 0 forces the remaining columns to 0 as well
    Int lo = rem > 0 ? (rem + slots - 1) / slots : 0;
    for (Int t = std::min(prev, rem); t >= lo; --t) {
        cols[j] = t;
        enum_tail_cols(cols, j + 1, rem - t, t, m, f);
        if (t == 0) break;
    }
}

template <class F>
void enum_top_rows(std::vector<Int>& rows, std::vector<Int>& cols, std::size_t i, Int rem,
                   Int prev, Int k, Int l, F& visit) {
    if (i == static_cast<std::size_t>(k)) {
        // the tail can use at most min(l, lambda_k) nonzero columns
        Int m = std::min<Int>(l, k > 0 ? rows[static_cast<std::size_t>(k - 1)] : l);
        if (rem == 0) {
            std::fill(cols.begin(), cols.end(), 0);
            visit(HookShape{rows, cols});
            return;
        }
        if (m <= 0) return;
        auto emit = [&] {
            for (std::size_t j = static_cast<std::size_t>(m); j < cols.size(); ++j) cols[j] = 0;
            visit(HookShape{rows, cols});
        };
        enum_tail_cols(cols, 0, rem, rem, m, emit);
        return;
    }
    Int slots = k - static_cast<Int>(i);
    // with no tail available the remaining rows must absorb everything
    Int lo = (l == 0 && rem > 0) ? (rem + slots - 1) / slots : 0;
    for (Int r = std::min(prev, rem); r >= lo; --r) {
        rows[i] = r;
        enum_top_rows(rows, cols, i + 1, rem - r, r, k, l, visit);
        if (r == 0) break;
    }
}

}  // namespace detail

/// Visit every diagram of H(k,l;n) once, in compact form.  The HookShape
/// passed to the visitor references scratch buffers valid only during the
/// call.  Deterministic order: top rows descending-lex, then tail columns
/// descending-lex.
template <class F>
void for_each_hook_shape(HookBound bound, Int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_hook_shape: n must be >= 0");
    std::vector<Int> rows(static_cast<std::size_t>(bound.k), 0);
    std::vector<Int> cols(static_cast<std::size_t>(bound.l), 0);
    detail::enum_top_rows(rows, cols, 0, n, n, bound.k, bound.l, visit);
}

/// Visit every lambda in H(k,l;n), materialized, in reverse-lexicographic
/// order of the parts.  The Partition reference is reused between calls.
template <class F>
void for_each_hook_partition(HookBound bound, Int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_hook_partition: n must be >= 0");
    Partition buf;
    buf.parts.reserve(static_cast<std::size_t>(n) + 1);
    auto rec = [&](auto&& self, Int rem, Int idx) -> void {
        if (rem == 0) {
            visit(const_cast<const Partition&>(buf));
            return;
        }
        Int cap = buf.parts.empty() ? rem : std::min(rem, buf.parts.back());
        if (idx >= bound.k) cap = std::min(cap, bound.l);
        if (cap < 1) return;
        if (idx >= bound.k) {
            // all later parts are also capped at l; always feasible since the
            // number of parts is unconstrained
        } else if (bound.l == 0) {
            Int slots = bound.k - idx;
            if (rem > cap * slots) return;  // cannot fit in the strip
        }
        for (Int p = cap; p >= 1; --p) {
            buf.parts.push_back(p);
            self(self, rem - p, idx + 1);
            buf.parts.pop_back();
        }
    };
    rec(rec, n, 0);
}

/// Materialize H(k,l;n) in reverse-lexicographic order.
inline std::vector<Partition> list_hook_partitions(HookBound bound, Int n) {
    std::vector<Partition> out;
    for_each_hook_partition(bound, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline Int count_hook_partitions(HookBound bound, Int n) {
    Int c = 0;
    for_each_hook_shape(bound, n, [&](const HookShape&) { ++c; });
    return c;
}

/// Truncation threshold for H(k,l;n,z): first row and first column both
/// bounded by n/(k+l) + z*sqrt(n).
inline double truncation_threshold(HookBound bound, Int n, double z) {
    return static_cast<double>(n) / static_cast<double>(bound.k + bound.l) +
           z * std::sqrt(static_cast<double>(n));
}

inline bool truncation_accepts(const HookShape& s, double threshold) {
    return static_cast<double>(s.first_row()) <= threshold &&
           static_cast<double>(s.first_col()) <= threshold;
}

/// H(k,l;n,z): members of H(k,l;n) whose first row and first column stay
/// below the truncation threshold.  Emitted as the identical-order filter
/// of the reverse-lexicographic stream.
template <class F>
void for_each_truncated_partition(HookBound bound, Int n, double z, F&& visit) {
    if (!(z > 0)) throw std::invalid_argument("for_each_truncated_partition: z must be > 0");
    const double threshold = truncation_threshold(bound, n, z);
    for_each_hook_partition(bound, n, [&](const Partition& p) {
        Int first_col = p.rows();
        if (static_cast<double>(p.part(1)) <= threshold &&
            static_cast<double>(first_col) <= threshold)
            visit(p);
    });
}

inline std::vector<Partition> list_truncated_partitions(HookBound bound, Int n, double z) {
    std::vector<Partition> out;
    for_each_truncated_partition(bound, n, z, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace hookstat
