#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hookstat/enumerate.hpp"
#include "hookstat/hermite.hpp"
#include "hookstat/integrals.hpp"
#include "hookstat/measure.hpp"
#include "hookstat/tableaux.hpp"

namespace hookstat {

/// Asymptotic maximizer of f^lambda in the k-row strip: the p-th row is
/// n/k + x_{k+1-p} sqrt(n/k) with x_1 < ... < x_k the roots of H_k.
inline std::vector<double> maximal_shape_strip(Int k, Int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("maximal_shape_strip: need k,n >= 1");
    const auto roots = hermite_roots(static_cast<int>(k));
    std::vector<double> rows(static_cast<std::size_t>(k));
    const double flat = double(n) / double(k);
    const double spread = std::sqrt(double(n) / double(k));
    for (Int p = 1; p <= k; ++p)
        rows[static_cast<std::size_t>(p - 1)] =
            flat + roots[static_cast<std::size_t>(k - p)] * spread;
    return rows;
}

struct HookMaximalShape {
    std::vector<double> rows;  // k entries, descending
    std::vector<double> cols;  // l entries, descending
};

/// Hook analogue: both arms follow Hermite roots of their own dimension,
/// around the common flat value n/(k+l).
inline HookMaximalShape maximal_shape_hook(Int k, Int l, Int n) {
    if (k < 0 || l < 0 || k + l < 1 || n < 1)
        throw std::invalid_argument("maximal_shape_hook: bad arguments");
    HookMaximalShape out;
    const double flat = double(n) / double(k + l);
    const double spread = std::sqrt(double(n) / double(k + l));
    if (k >= 1) {
        const auto roots = hermite_roots(static_cast<int>(k));
        for (Int p = 1; p <= k; ++p)
            out.rows.push_back(flat + roots[static_cast<std::size_t>(k - p)] * spread);
    }
    if (l >= 1) {
        const auto roots = hermite_roots(static_cast<int>(l));
        for (Int q = 1; q <= l; ++q)
            out.cols.push_back(flat + roots[static_cast<std::size_t>(l - q)] * spread);
    }
    return out;
}

struct MaximalShapeResult {
    Partition shape;
    double log_f = 0.0;
    bool tie = false;                // an exact tie was found and broken
    std::vector<Partition> tied_with;
};

/// Exact argmax of f^lambda over H(k,l;n): log-space scan with a
/// big-integer recheck whenever two candidates land within 1e-9 in log.
/// Exact ties resolve to the reverse-lexicographically first shape.
inline MaximalShapeResult maximal_shape_exact(HookBound bound, Int n) {
    const LogFactorials lf = make_log_factorials(bound, n);
    MaximalShapeResult best;
    best.log_f = -std::numeric_limits<double>::infinity();
    bool have = false;
    for_each_hook_shape(bound, n, [&](const HookShape& s) {
        const double lv = log_tableaux_count(s, lf);
        if (!have) {
            best.shape = to_partition(s);
            best.log_f = lv;
            have = true;
            return;
        }
        if (lv > best.log_f + 1e-9) {
            best.shape = to_partition(s);
            best.log_f = lv;
            best.tie = false;
            best.tied_with.clear();
            return;
        }
        if (lv >= best.log_f - 1e-9) {
            // too close for doubles: settle exactly
            Partition cand = to_partition(s);
            const BigInt fc = exact_tableaux_count(cand);
            const BigInt fb = exact_tableaux_count(best.shape);
            if (fc > fb) {
                best.shape = std::move(cand);
                best.log_f = lv;
                best.tie = false;
                best.tied_with.clear();
            } else if (fc == fb) {
                // reverse-lex first = lexicographically larger parts
                best.tie = true;
                if (std::lexicographical_compare(best.shape.parts.begin(),
                                                 best.shape.parts.end(), cand.parts.begin(),
                                                 cand.parts.end())) {
                    best.tied_with.push_back(best.shape);
                    best.shape = std::move(cand);
                    best.log_f = lv;
                } else {
                    best.tied_with.push_back(std::move(cand));
                }
            }
        }
    });
    if (!have) throw std::invalid_argument("maximal_shape_exact: empty hook set");
    return best;
}

/// Limit shape of the unrestricted Plancherel diagram (rotated axes).
inline double vk_curve(double x) {
    if (std::abs(x) > 1) throw std::invalid_argument("vk_curve: |x| <= 1 required");
    return 1.0 + (2.0 / pi_v) * (x * std::sqrt(1.0 - x * x) - std::acos(x));
}

/// Limit curve of the strip maximizer.
inline double strip_limit_curve(double x) {
    if (std::abs(x) > 1) throw std::invalid_argument("strip_limit_curve: |x| <= 1 required");
    return (2.0 / pi_v) * (x * std::asin(x) + std::sqrt(1.0 - x * x));
}

struct ShapeComparisonRow {
    std::string kind;            // "row" or "col"
    Int index = 0;               // p or q
    double expected_finite = 0;  // E at this n
    double expected_asymptotic = 0;
    double maximal_asymptotic = 0;
    double maximal_exact = 0;
    double expected_minus_maximal = 0;  // asymptotic coefficients gap, x sqrt(n)
};

/// Side-by-side table of expected vs maximal shapes at one n.
inline std::vector<ShapeComparisonRow> compare_shapes(const MeasureSpec& spec, Int n) {
    const Int k = spec.bound.k, l = spec.bound.l;
    const MomentRecord rec = compute_moments(spec, n);
    const HookMaximalShape mx = maximal_shape_hook(k, l, n);
    const MaximalShapeResult exact = maximal_shape_exact(spec.bound, n);
    const Partition exact_conj = conjugate(exact.shape);
    const double flat = double(n) / double(k + l);
    const double root = std::sqrt(double(n));

    std::vector<ShapeComparisonRow> out;
    for (Int p = 1; p <= k; ++p) {
        ShapeComparisonRow r;
        r.kind = "row";
        r.index = p;
        r.expected_finite = expected_row_length(rec, p);
        const double c = limit_second_term_hook(k, l, spec.beta, p).value;
        r.expected_asymptotic = flat + c * root;
        r.maximal_asymptotic = mx.rows[static_cast<std::size_t>(p - 1)];
        r.maximal_exact = double(exact.shape.part(p));
        r.expected_minus_maximal = r.expected_asymptotic - r.maximal_asymptotic;
        out.push_back(r);
    }
    for (Int q = 1; q <= l; ++q) {
        ShapeComparisonRow r;
        r.kind = "col";
        r.index = q;
        r.expected_finite = expected_col_length(rec, q);
        const double c = limit_second_term_hook_col(k, l, spec.beta, q).value;
        r.expected_asymptotic = flat + c * root;
        r.maximal_asymptotic = mx.cols[static_cast<std::size_t>(q - 1)];
        r.maximal_exact = double(exact_conj.part(q));
        r.expected_minus_maximal = r.expected_asymptotic - r.maximal_asymptotic;
        out.push_back(r);
    }
    return out;
}

}  // namespace hookstat
