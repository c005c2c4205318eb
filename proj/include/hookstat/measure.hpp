#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hookstat/enumerate.hpp"
#include "hookstat/numeric.hpp"
#include "hookstat/partition.hpp"
#include "hookstat/tableaux.hpp"

namespace hookstat {

/// beta-Plancherel measure on H(k,l;n): mass of lambda proportional to
/// (f^lambda)^beta.
struct MeasureSpec {
    HookBound bound;
    double beta = 2.0;

    MeasureSpec() = default;
    MeasureSpec(HookBound b, double beta_) : bound(b), beta(beta_) {
        if (!(beta > 0)) throw std::invalid_argument("MeasureSpec: beta must be > 0");
    }
};

/// Log-space moments of one (k,l,beta,n) cell: the normalizer and the
/// row/column numerators sum_lambda lambda_p (f^lambda)^beta.
struct MomentRecord {
    Int n = 0;
    double log_denominator = -std::numeric_limits<double>::infinity();
    std::vector<double> log_row_numerators;  // k entries
    std::vector<double> log_col_numerators;  // l entries
};

inline LogFactorials make_log_factorials(HookBound bound, Int n) {
    return LogFactorials(static_cast<std::size_t>(n + bound.k + bound.l + 2));
}

inline MomentRecord compute_moments(const MeasureSpec& spec, Int n, const LogFactorials& lf) {
    const Int k = spec.bound.k, l = spec.bound.l;
    LogSumExp den;
    std::vector<LogSumExp> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(l));
    for_each_hook_shape(spec.bound, n, [&](const HookShape& s) {
        const double lw = spec.beta * log_tableaux_count(s, lf);
        den.add(lw);
        for (Int p = 1; p <= k; ++p) {
            const Int len = s.rows[static_cast<std::size_t>(p - 1)];
            if (len > 0) rows[static_cast<std::size_t>(p - 1)].add(std::log(double(len)) + lw);
        }
        for (Int q = 1; q <= l; ++q) {
            const Int len = s.col_length(q);
            if (len > 0) cols[static_cast<std::size_t>(q - 1)].add(std::log(double(len)) + lw);
        }
    });
    MomentRecord rec;
    rec.n = n;
    rec.log_denominator = den.value();
    for (auto& r : rows) rec.log_row_numerators.push_back(r.value());
    for (auto& c : cols) rec.log_col_numerators.push_back(c.value());
    return rec;
}

inline MomentRecord compute_moments(const MeasureSpec& spec, Int n) {
    const LogFactorials lf = make_log_factorials(spec.bound, n);
    return compute_moments(spec, n, lf);
}

/// rho(lambda) = (f^lambda)^beta / Z.  Rejects lambda outside the hook.
inline double plancherel_weight(const Partition& lambda, const MeasureSpec& spec, Int n) {
    if (lambda.n() != n)
        throw std::invalid_argument("plancherel_weight: |lambda| != n");
    if (!hook_membership(lambda, spec.bound))
        throw std::domain_error("plancherel_weight: lambda outside H(k,l;n)");
    const LogFactorials lf = make_log_factorials(spec.bound, n);
    const MomentRecord rec = compute_moments(spec, n, lf);
    return std::exp(spec.beta * log_tableaux_count(lambda, lf) - rec.log_denominator);
}

inline void check_row_index(const MeasureSpec& spec, Int p) {
    if (p < 1 || p > spec.bound.k)
        throw std::out_of_range("row index p must satisfy 1 <= p <= k");
}
inline void check_col_index(const MeasureSpec& spec, Int q) {
    if (q < 1 || q > spec.bound.l)
        throw std::out_of_range("column index q must satisfy 1 <= q <= l");
}

inline double expected_row_length(const MomentRecord& rec, Int p) {
    return std::exp(rec.log_row_numerators[static_cast<std::size_t>(p - 1)] -
                    rec.log_denominator);
}
inline double expected_col_length(const MomentRecord& rec, Int q) {
    return std::exp(rec.log_col_numerators[static_cast<std::size_t>(q - 1)] -
                    rec.log_denominator);
}

inline double expected_row_length(const MeasureSpec& spec, Int p, Int n) {
    check_row_index(spec, p);
    return expected_row_length(compute_moments(spec, n), p);
}
inline double expected_col_length(const MeasureSpec& spec, Int q, Int n) {
    check_col_index(spec, q);
    return expected_col_length(compute_moments(spec, n), q);
}

/// c_p(n): the sqrt(n)-scale deviation of the expected p-th row from the
/// flat value n/(k+l).
inline double second_term_row(const MeasureSpec& spec, Int p, Int n,
                              const MomentRecord& rec) {
    check_row_index(spec, p);
    const double flat = static_cast<double>(n) / static_cast<double>(spec.bound.k + spec.bound.l);
    return (expected_row_length(rec, p) - flat) / std::sqrt(static_cast<double>(n));
}
inline double second_term_row(const MeasureSpec& spec, Int p, Int n) {
    check_row_index(spec, p);
    return second_term_row(spec, p, n, compute_moments(spec, n));
}
inline double second_term_col(const MeasureSpec& spec, Int q, Int n,
                              const MomentRecord& rec) {
    check_col_index(spec, q);
    const double flat = static_cast<double>(n) / static_cast<double>(spec.bound.k + spec.bound.l);
    return (expected_col_length(rec, q) - flat) / std::sqrt(static_cast<double>(n));
}
inline double second_term_col(const MeasureSpec& spec, Int q, Int n) {
    check_col_index(spec, q);
    return second_term_col(spec, q, n, compute_moments(spec, n));
}

/// Per-n shape statistics: expected row/column lengths and their centered
/// coefficients.
struct ShapeStatistics {
    Int n = 0;
    std::vector<double> expected_rows, expected_cols;
    std::vector<double> c_rows, c_cols;
};

inline ShapeStatistics shape_statistics(const MeasureSpec& spec, Int n,
                                        const MomentRecord& rec) {
    ShapeStatistics st;
    st.n = n;
    const double flat = static_cast<double>(n) / static_cast<double>(spec.bound.k + spec.bound.l);
    const double root = std::sqrt(static_cast<double>(n));
    for (Int p = 1; p <= spec.bound.k; ++p) {
        const double e = expected_row_length(rec, p);
        st.expected_rows.push_back(e);
        st.c_rows.push_back((e - flat) / root);
    }
    for (Int q = 1; q <= spec.bound.l; ++q) {
        const double e = expected_col_length(rec, q);
        st.expected_cols.push_back(e);
        st.c_cols.push_back((e - flat) / root);
    }
    return st;
}

inline ShapeStatistics shape_statistics(const MeasureSpec& spec, Int n) {
    return shape_statistics(spec, n, compute_moments(spec, n));
}

/// Moments of the z-truncated set H(k,l;n,z) next to the full ones,
/// gathered in the same pass.
struct TruncatedMoments {
    MomentRecord full;
    double log_truncated_denominator = -std::numeric_limits<double>::infinity();
    std::vector<double> log_truncated_rows;  // k entries
    std::vector<double> log_truncated_cols;  // l entries
};

inline TruncatedMoments compute_truncated_moments(const MeasureSpec& spec, Int n, double z,
                                                  const LogFactorials& lf) {
    if (!(z > 0)) throw std::invalid_argument("compute_truncated_moments: z must be > 0");
    const Int k = spec.bound.k, l = spec.bound.l;
    const double threshold = truncation_threshold(spec.bound, n, z);
    LogSumExp den, tden;
    std::vector<LogSumExp> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(l));
    std::vector<LogSumExp> trows(static_cast<std::size_t>(k)), tcols(static_cast<std::size_t>(l));
    for_each_hook_shape(spec.bound, n, [&](const HookShape& s) {
        const double lw = spec.beta * log_tableaux_count(s, lf);
        const bool in = truncation_accepts(s, threshold);
        den.add(lw);
        if (in) tden.add(lw);
        for (Int p = 1; p <= k; ++p) {
            const Int len = s.rows[static_cast<std::size_t>(p - 1)];
            if (len == 0) continue;
            const double t = std::log(double(len)) + lw;
            rows[static_cast<std::size_t>(p - 1)].add(t);
            if (in) trows[static_cast<std::size_t>(p - 1)].add(t);
        }
        for (Int q = 1; q <= l; ++q) {
            const Int len = s.col_length(q);
            if (len == 0) continue;
            const double t = std::log(double(len)) + lw;
            cols[static_cast<std::size_t>(q - 1)].add(t);
            if (in) tcols[static_cast<std::size_t>(q - 1)].add(t);
        }
    });
    TruncatedMoments out;
    out.full.n = n;
    out.full.log_denominator = den.value();
    for (auto& r : rows) out.full.log_row_numerators.push_back(r.value());
    for (auto& c : cols) out.full.log_col_numerators.push_back(c.value());
    out.log_truncated_denominator = tden.value();
    for (auto& r : trows) out.log_truncated_rows.push_back(r.value());
    for (auto& c : tcols) out.log_truncated_cols.push_back(c.value());
    return out;
}

inline TruncatedMoments compute_truncated_moments(const MeasureSpec& spec, Int n, double z) {
    const LogFactorials lf = make_log_factorials(spec.bound, n);
    return compute_truncated_moments(spec, n, z, lf);
}

/// lambda_p(n,z): expectation of the p-th row restricted to the truncated
/// set, normalized by the full-set denominator.
inline double distribution_row(const MeasureSpec& spec, Int p, Int n, double z,
                               const TruncatedMoments& tm) {
    check_row_index(spec, p);
    return std::exp(tm.log_truncated_rows[static_cast<std::size_t>(p - 1)] -
                    tm.full.log_denominator);
}
inline double distribution_row(const MeasureSpec& spec, Int p, Int n, double z) {
    return distribution_row(spec, p, n, z, compute_truncated_moments(spec, n, z));
}

inline double distribution_col(const MeasureSpec& spec, Int q, Int n, double z,
                               const TruncatedMoments& tm) {
    check_col_index(spec, q);
    return std::exp(tm.log_truncated_cols[static_cast<std::size_t>(q - 1)] -
                    tm.full.log_denominator);
}
inline double distribution_col(const MeasureSpec& spec, Int q, Int n, double z) {
    return distribution_col(spec, q, n, z, compute_truncated_moments(spec, n, z));
}

/// s(n,z): probability mass of the truncated set.
inline double truncated_mass_ratio(const TruncatedMoments& tm) {
    return std::exp(tm.log_truncated_denominator - tm.full.log_denominator);
}
inline double truncated_mass_ratio(const MeasureSpec& spec, Int n, double z) {
    return truncated_mass_ratio(compute_truncated_moments(spec, n, z));
}

/// One sample of the conjectured oscillation: value(n) together with the
/// running infimum/supremum over the grid walked so far.
struct OscillationPoint {
    Int n = 0;
    double value = 0.0;
    double running_inf = 0.0;
    double running_sup = 0.0;
};

/// (sqrt(n)/(k+l)) * (s(n,z) - r(z)) along an increasing n-grid.  The limit
/// value r(z) is supplied by the caller (it comes from the integral layer);
/// no convergence or symmetry is asserted.
inline std::vector<OscillationPoint> oscillation_series(const MeasureSpec& spec, double z,
                                                        std::span<const Int> n_grid,
                                                        double r_limit) {
    std::vector<OscillationPoint> out;
    double inf = std::numeric_limits<double>::infinity();
    double sup = -std::numeric_limits<double>::infinity();
    for (Int n : n_grid) {
        const double s = truncated_mass_ratio(spec, n, z);
        const double v = std::sqrt(static_cast<double>(n)) /
                         static_cast<double>(spec.bound.k + spec.bound.l) * (s - r_limit);
        inf = std::min(inf, v);
        sup = std::max(sup, v);
        out.push_back({n, v, inf, sup});
    }
    return out;
}

/// c_p(n,z) = (lambda_p(n,z) - (n/(k+l)) r(z)) / sqrt(n).
inline double second_term_distribution(const MeasureSpec& spec, Int p, Int n, double z,
                                       double r_limit) {
    check_row_index(spec, p);
    const double flat = static_cast<double>(n) / static_cast<double>(spec.bound.k + spec.bound.l);
    return (distribution_row(spec, p, n, z) - flat * r_limit) / std::sqrt(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Exact big-integer path for integer beta (1 or 2); detects log-space bugs
// at moderate n.

struct ExactMoments {
    BigInt denominator = 0;
    std::vector<BigInt> row_numerators, col_numerators;
};

inline ExactMoments compute_moments_exact(HookBound bound, int beta, Int n) {
    if (beta != 1 && beta != 2)
        throw std::invalid_argument("compute_moments_exact: beta must be 1 or 2");
    ExactMoments m;
    m.row_numerators.assign(static_cast<std::size_t>(bound.k), 0);
    m.col_numerators.assign(static_cast<std::size_t>(bound.l), 0);
    for_each_hook_partition(bound, n, [&](const Partition& lambda) {
        BigInt f = exact_tableaux_count(lambda);
        BigInt w = beta == 2 ? f * f : f;
        m.denominator += w;
        for (Int p = 1; p <= bound.k; ++p)
            m.row_numerators[static_cast<std::size_t>(p - 1)] += w * lambda.part(p);
        const Partition conj = conjugate(lambda);
        for (Int q = 1; q <= bound.l; ++q)
            m.col_numerators[static_cast<std::size_t>(q - 1)] += w * conj.part(q);
    });
    return m;
}

/// Quotient of two nonnegative big integers as a double, safe when both
/// exceed the double range.
inline double big_ratio(const BigInt& num, const BigInt& den) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(Float(num) / Float(den));
}

}  // namespace hookstat
