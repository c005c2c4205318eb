#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "hookstat/numeric.hpp"
#include "hookstat/partition.hpp"
#include "hookstat/quadrature.hpp"
#include "hookstat/rng.hpp"

namespace hookstat {

/// D(x) = prod_{i<j} (x_i - x_j); 1 on fewer than two coordinates,
/// nonnegative on descending input.
inline double vandermonde(std::span<const double> x) {
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) p *= x[i] - x[j];
    return p;
}

/// Omega_{(k,l)}: x_1 >= ... >= x_k, y_1 >= ... >= y_l, sum x + sum y = 0.
/// With a truncation z the leading coordinates are bounded: x_1, y_1 <= z.
/// Integrals use the (k+l-1)-dimensional Lebesgue measure obtained by
/// eliminating the last coordinate through the zero-sum constraint.
struct OrderedZeroSumDomain {
    Int k = 0;
    Int l = 0;
    std::optional<double> truncation;

    OrderedZeroSumDomain(Int k_, Int l_, std::optional<double> z = std::nullopt)
        : k(k_), l(l_), truncation(z) {
        if (k < 0 || l < 0 || k + l < 1)
            throw std::invalid_argument("OrderedZeroSumDomain: need k,l >= 0, k+l >= 1");
        if (truncation && !(*truncation > 0))
            throw std::invalid_argument("OrderedZeroSumDomain: truncation must be > 0");
    }
};

/// Optional coordinate factor multiplying the symmetric integrand.
struct ArmWeight {
    enum class Kind { none, row, col };
    Kind kind = Kind::none;
    Int index = 1;

    static ArmWeight none() { return {Kind::none, 1}; }
    static ArmWeight row(Int p) { return {Kind::row, p}; }
    static ArmWeight col(Int q) { return {Kind::col, q}; }
};

namespace detail {

inline double arm_weight_value(const ArmWeight& w, std::span<const double> x,
                               std::span<const double> y) {
    switch (w.kind) {
        case ArmWeight::Kind::none: return 1.0;
        case ArmWeight::Kind::row: return x[static_cast<std::size_t>(w.index - 1)];
        case ArmWeight::Kind::col: return y[static_cast<std::size_t>(w.index - 1)];
    }
    return 1.0;
}

// weight * [D_k(x) D_l(y) e^{-(scale/2) sum}]^beta at explicit coordinates;
// assembled in log space so the Gaussian tail always wins over the
// polynomial blow-up at the extreme nodes double-exponential rules visit
inline double hook_integrand(std::span<const double> x, std::span<const double> y, double beta,
                             double scale, const ArmWeight& w) {
    double sumsq = 0.0;
    for (double v : x) sumsq += v * v;
    for (double v : y) sumsq += v * v;
    const double d = vandermonde(x) * vandermonde(y);
    if (!(d > 0.0)) return 0.0;  // ordered-domain boundary (or rounding past it)
    const double core = std::exp(beta * std::log(d) - beta * 0.5 * scale * sumsq);
    return arm_weight_value(w, x, y) * core;
}

}  // namespace detail

/// Adaptive quadrature over Omega_{(k,l)} for k+l-1 <= 2, by explicit
/// parametrization of the wedge.  The y-dominant shapes reduce to the
/// x-dominant ones by swapping arms.
inline Estimate hook_integral_quad(const OrderedZeroSumDomain& dom, double beta, double scale,
                                   ArmWeight w, double tol = quad::default_tolerance) {
    const Int k = dom.k, l = dom.l;
    if (k < l) {
        ArmWeight swapped = w;
        if (w.kind == ArmWeight::Kind::row) swapped.kind = ArmWeight::Kind::col;
        if (w.kind == ArmWeight::Kind::col) swapped.kind = ArmWeight::Kind::row;
        return hook_integral_quad(OrderedZeroSumDomain(l, k, dom.truncation), beta, scale,
                                  swapped, tol);
    }
    const double inf = std::numeric_limits<double>::infinity();
    const double z = dom.truncation.value_or(inf);

    if (k == 1 && l == 0) {
        // single point x_1 = 0; the 0-dimensional integral is the integrand value
        double x[1] = {0.0};
        return {detail::hook_integrand(x, {}, beta, scale, w), 0.0};
    }
    if (k == 2 && l == 0) {
        auto f = [&](double t) {
            double x[2] = {t, -t};
            return detail::hook_integrand(x, {}, beta, scale, w);
        };
        return std::isfinite(z) ? quad::segment(f, 0.0, z, tol) : quad::ray(f, 0.0, tol);
    }
    if (k == 1 && l == 1) {
        auto f = [&](double t) {
            double x[1] = {t}, y[1] = {-t};
            return detail::hook_integrand(x, y, beta, scale, w);
        };
        return std::isfinite(z) ? quad::segment(f, -z, z, tol) : quad::line(f, tol);
    }
    if (k == 3 && l == 0) {
        auto outer = [&](double x1) {
            auto inner = [&](double x2) {
                double x[3] = {x1, x2, -(x1 + x2)};
                return detail::hook_integrand(x, {}, beta, scale, w);
            };
            return quad::segment(inner, -0.5 * x1, x1, tol).value;
        };
        return std::isfinite(z) ? quad::segment(outer, 0.0, z, tol) : quad::ray(outer, 0.0, tol);
    }
    if (k == 2 && l == 1) {
        auto outer = [&](double x1) {
            auto inner = [&](double x2) {
                double x[2] = {x1, x2};
                double y[1] = {-(x1 + x2)};
                return detail::hook_integrand(x, y, beta, scale, w);
            };
            if (!std::isfinite(z)) return quad::ray_below(inner, x1, tol).value;
            // y_1 <= z bounds x_2 from below
            return quad::segment(inner, -z - x1, x1, tol).value;
        };
        return std::isfinite(z) ? quad::ray_below(outer, z, tol) : quad::line(outer, tol);
    }
    throw std::invalid_argument("hook_integral_quad: dimension k+l-1 > 2, use Monte-Carlo");
}

struct McOptions {
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = CounterRng::default_seed;
    double rel_tol = 1e-2;
    bool enforce_tolerance = true;
};

namespace detail {

inline constexpr std::uint64_t mc_block = 1u << 16;

inline double log_factorial_small(Int m) {
    double s = 0;
    for (Int i = 2; i <= m; ++i) s += std::log(double(i));
    return s;
}

// (2 pi / (beta scale))^{(m-1)/2} / (sqrt(m) k! l!)
inline double mc_prefactor(Int k, Int l, double beta, double scale) {
    const Int m = k + l;
    double lg = 0.5 * (m - 1) * std::log(2.0 * std::numbers::pi / (beta * scale));
    lg -= 0.5 * std::log(double(m));
    lg -= log_factorial_small(k) + log_factorial_small(l);
    return std::exp(lg);
}

// One projected-and-sorted Gaussian configuration.  The Gaussian factor of
// the integrand cancels against the sampling density exactly, leaving
// weight * D^beta * indicator as the per-sample term.
template <class Term>
void mc_scan(Int k, Int l, double beta, double scale, const McOptions& opt, Term&& term) {
    const Int m = k + l;
    const double sd = 1.0 / std::sqrt(beta * scale);
    std::vector<double> v(static_cast<std::size_t>(m));
    const std::uint64_t blocks = (opt.samples + mc_block - 1) / mc_block;
    std::uint64_t produced = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        GaussianSampler gauss(CounterRng::stream(opt.seed, b));
        const std::uint64_t count = std::min<std::uint64_t>(mc_block, opt.samples - produced);
        for (std::uint64_t i = 0; i < count; ++i) {
            double mean = 0.0;
            for (auto& vi : v) {
                vi = sd * gauss.next();
                mean += vi;
            }
            mean /= static_cast<double>(m);
            for (auto& vi : v) vi -= mean;
            std::sort(v.begin(), v.begin() + k, std::greater<>());
            std::sort(v.begin() + k, v.end(), std::greater<>());
            std::span<const double> x(v.data(), static_cast<std::size_t>(k));
            std::span<const double> y(v.data() + k, static_cast<std::size_t>(l));
            double d = vandermonde(x) * vandermonde(y);
            term(x, y, std::pow(d, beta));
        }
        produced += count;
    }
}

}  // namespace detail

/// Importance-sampled Monte-Carlo for the same family of integrals, any
/// dimension.  Samples i.i.d. Gaussians matched to the integrand's Gaussian
/// factor, projects onto the zero-sum hyperplane and sorts each arm; the
/// k! l! sector count and the hyperplane measure normalization enter
/// through a closed-form prefactor.
inline QuadratureResult hook_integral_mc(const OrderedZeroSumDomain& dom, double beta,
                                         double scale, ArmWeight w, const McOptions& opt) {
    if (opt.samples == 0) throw std::invalid_argument("hook_integral_mc: samples must be > 0");
    const double z = dom.truncation.value_or(std::numeric_limits<double>::infinity());
    CompensatedSum sum, sumsq;
    detail::mc_scan(dom.k, dom.l, beta, scale, opt,
                    [&](std::span<const double> x, std::span<const double> y, double dpow) {
                        double t = 0.0;
                        const bool in = (x.empty() || x[0] <= z) && (y.empty() || y[0] <= z);
                        if (in) t = detail::arm_weight_value(w, x, y) * dpow;
                        sum.add(t);
                        sumsq.add(t * t);
                    });
    const double nn = static_cast<double>(opt.samples);
    const double mean = sum.value() / nn;
    const double var = std::max(0.0, sumsq.value() / nn - mean * mean);
    const double pre = detail::mc_prefactor(dom.k, dom.l, beta, scale);
    QuadratureResult r;
    r.value = pre * mean;
    r.std_error = pre * std::sqrt(var / nn);
    r.method = QuadratureResult::Method::monte_carlo;
    r.samples = opt.samples;
    if (opt.enforce_tolerance && !(r.std_error <= opt.rel_tol * std::abs(r.value)))
        throw McToleranceError(r);
    return r;
}

struct RatioEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Ratio of a weighted/truncated integral to the plain one over the same
/// untruncated domain, from a shared sample stream; the prefactors cancel
/// and the error comes from the delta method.
inline RatioEstimate hook_ratio_mc(const OrderedZeroSumDomain& numerator_domain, double beta,
                                   double scale, ArmWeight num_weight, const McOptions& opt) {
    if (opt.samples == 0) throw std::invalid_argument("hook_ratio_mc: samples must be > 0");
    const double z =
        numerator_domain.truncation.value_or(std::numeric_limits<double>::infinity());
    CompensatedSum sa, sb, saa, sbb, sab;
    detail::mc_scan(numerator_domain.k, numerator_domain.l, beta, scale, opt,
                    [&](std::span<const double> x, std::span<const double> y, double dpow) {
                        const bool in = (x.empty() || x[0] <= z) && (y.empty() || y[0] <= z);
                        const double a =
                            in ? detail::arm_weight_value(num_weight, x, y) * dpow : 0.0;
                        const double b = dpow;
                        sa.add(a);
                        sb.add(b);
                        saa.add(a * a);
                        sbb.add(b * b);
                        sab.add(a * b);
                    });
    const double A = sa.value(), B = sb.value();
    if (B == 0.0) throw std::runtime_error("hook_ratio_mc: denominator sample mass is zero");
    const double r = A / B;
    const double s2 = std::max(0.0, saa.value() - 2.0 * r * sab.value() + r * r * sbb.value());
    RatioEstimate out;
    out.value = r;
    out.std_error = std::sqrt(s2) / std::abs(B);
    out.samples = opt.samples;
    if (opt.enforce_tolerance) {
        const double scale_ref = std::max(std::abs(r), 1e-3);
        if (!(out.std_error <= opt.rel_tol * scale_ref)) {
            QuadratureResult q{out.value, out.std_error, QuadratureResult::Method::monte_carlo,
                               out.samples};
            throw McToleranceError(q);
        }
    }
    return out;
}

}  // namespace hookstat
