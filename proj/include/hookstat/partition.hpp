#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace hookstat {

using Int = std::int64_t;

/// Integer partition: weakly decreasing positive parts.  The empty
/// partition is the unique partition of 0.
struct Partition {
    std::vector<Int> parts;

    Partition() = default;
    explicit Partition(std::vector<Int> p) : parts(std::move(p)) {
        if (!is_valid())
            throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }

    bool is_valid() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
        }
        return true;
    }

    Int n() const { return std::accumulate(parts.begin(), parts.end(), Int{0}); }
    Int rows() const { return static_cast<Int>(parts.size()); }

    /// 1-based part access; rows beyond the diagram have length 0.
    Int part(Int p) const {
        if (p < 1) throw std::out_of_range("Partition::part: index must be >= 1");
        return p <= rows() ? parts[static_cast<std::size_t>(p - 1)] : 0;
    }

    bool operator==(const Partition&) const = default;
};

/// conjugate(lambda)'_q = #{p : lambda_p >= q}
inline Partition conjugate(const Partition& lambda) {
    Partition out;
    if (lambda.parts.empty()) return out;
    out.parts.assign(static_cast<std::size_t>(lambda.parts[0]), 0);
    for (Int q = 1; q <= lambda.parts[0]; ++q) {
        Int cnt = 0;
        for (Int p : lambda.parts)
            if (p >= q) ++cnt;
            else break;
        out.parts[static_cast<std::size_t>(q - 1)] = cnt;
    }
    return out;
}

/// The (k,l)-hook: partitions whose (k+1)-th part is at most l.
struct HookBound {
    Int k = 0;
    Int l = 0;

    HookBound() = default;
    HookBound(Int k_, Int l_) : k(k_), l(l_) {
        if (k < 0 || l < 0 || k + l < 1)
            throw std::invalid_argument("HookBound: need k,l >= 0 and k+l >= 1");
    }

    HookBound conjugated() const { return HookBound(l, k); }
    bool operator==(const HookBound&) const = default;
};

inline bool hook_membership(const Partition& lambda, HookBound bound) {
    return lambda.part(bound.k + 1) <= bound.l;
}

/// Compact description of a hook-bounded diagram: the first k row lengths,
/// plus the heights of the first l columns *below* row k.  Diagrams in
/// H(k,l;n) have all rows beyond the k-th of length <= l, so the tail is
/// determined by those l column heights.  Avoids materializing 1^m runs.
struct HookShape {
    std::span<const Int> rows;       // k entries, weakly decreasing, >= 0
    std::span<const Int> tail_cols;  // l entries, weakly decreasing, >= 0

    Int k() const { return static_cast<Int>(rows.size()); }
    Int l() const { return static_cast<Int>(tail_cols.size()); }

    Int cells() const {
        Int s = 0;
        for (Int r : rows) s += r;
        for (Int t : tail_cols) s += t;
        return s;
    }

    /// 1-based row length, valid for any p >= 1.
    Int row_length(Int p) const {
        if (p <= k()) return rows[static_cast<std::size_t>(p - 1)];
        Int m = p - k();  // row index within the tail
        Int cnt = 0;
        for (Int t : tail_cols)
            if (t >= m) ++cnt;
            else break;
        return cnt;
    }

    /// 1-based column length lambda'_q, valid for any q >= 1.
    Int col_length(Int q) const {
        Int cnt = 0;
        for (Int r : rows)
            if (r >= q) ++cnt;
            else break;
        if (q <= l()) cnt += tail_cols[static_cast<std::size_t>(q - 1)];
        return cnt;
    }

    Int first_row() const { return row_length(1); }
    Int first_col() const { return col_length(1); }
};

/// Expand a compact shape to an explicit parts list.
inline Partition to_partition(const HookShape& s) {
    Partition out;
    out.parts.reserve(static_cast<std::size_t>(s.k()) + 16);
    for (Int r : s.rows)
        if (r > 0) out.parts.push_back(r);
    if (!s.tail_cols.empty() && s.tail_cols[0] > 0) {
        for (Int m = 1; m <= s.tail_cols[0]; ++m) {
            Int len = 0;
            for (Int t : s.tail_cols)
                if (t >= m) ++len;
                else break;
            out.parts.push_back(len);
        }
    }
    return out;
}

/// Inverse of to_partition for lambda in H(k,l): split at row k.
inline void to_hook_shape(const Partition& lambda, HookBound bound,
                          std::vector<Int>& rows, std::vector<Int>& tail_cols) {
    if (!hook_membership(lambda, bound))
        throw std::domain_error("to_hook_shape: partition not inside the hook");
    rows.assign(static_cast<std::size_t>(bound.k), 0);
    for (Int i = 1; i <= bound.k; ++i) rows[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    tail_cols.assign(static_cast<std::size_t>(bound.l), 0);
    for (Int q = 1; q <= bound.l; ++q) {
        Int cnt = 0;
        for (Int i = bound.k + 1; i <= lambda.rows(); ++i)
            if (lambda.part(i) >= q) ++cnt;
            else break;
        tail_cols[static_cast<std::size_t>(q - 1)] = cnt;
    }
}

}  // namespace hookstat
