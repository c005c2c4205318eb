#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "hookstat/ordered_domain.hpp"
#include "hookstat/quadrature.hpp"

// Evaluation of the Selberg-type integrals behind the hook statistics:
//
//   I(k,l,beta)   = int_{Omega_{(k,l)}} [D_k(x) D_l(y) e^{-((k+l)/2)(sum x^2 + sum y^2)}]^beta
//   I_p(k,l,beta) = same with an extra x_p factor
//
// together with their truncated variants and the classical Selberg/Mehta
// formulas used to validate the numeric engines.  Every ratio of interest
// (limit coefficients, distribution limits) reduces to these.
//
// Closed forms implemented:
//  * strip denominator, beta = 2:
//      (sqrt(2 pi))^{k-1} (1/sqrt2)^{k^2-1} (1/sqrt k)^{k^2} 1! 2! ... (k-1)!
//  * strip denominator, beta = 1:
//      (1/sqrt k)^{k(k+1)/2} (1/k!) (sqrt2)^{3k-1} (1/sqrt pi) prod_j Gamma(1+j/2)
//    (exponent k(k+1)/2: the k=2,3 worked values 1/2 and sqrt(pi)/27 pin it)
//  * hook denominator, beta = 2:
//      (1/(k! l!)) sqrt2 (2 pi)^{(k+l-1)/2} (2(k+l))^{-(k^2+l^2)/2} prod_i i! prod_j j!
//    (prefactor likewise pinned by the strip specialization and the (1,1),
//     (2,1) quadrature values)
//  * weighted strip numerators for k <= 3 at beta in {1,2}; the k = 2 case
//    is elementary for every beta.
//
// A Gaussian scale change x -> sqrt(k/scale) x moves any strip value from
// its natural scale k to an arbitrary one; the weighted variant picks up
// one extra half power.

namespace hookstat {

enum class Method { automatic, closed, quadrature, monte_carlo };

inline constexpr double pi_v = std::numbers::pi;

// ---------------------------------------------------------------------------
// Reference formulas (validation targets for the quadrature/MC engines)

/// Right-hand side of Selberg's integral formula on [0,1]^n.
inline double selberg_reference(int n_vars, double x, double y, double z) {
    if (n_vars < 1 || !(x > 0) || !(y > 0) || !(z > 0))
        throw std::invalid_argument("selberg_reference: need n >= 1 and x,y,z > 0");
    double lg = 0.0;
    for (int j = 1; j <= n_vars; ++j) {
        lg += std::lgamma(1 + j * z) + std::lgamma(x + (j - 1) * z) +
              std::lgamma(y + (j - 1) * z);
        lg -= std::lgamma(1 + z) + std::lgamma(x + y + (n_vars + j - 2) * z);
    }
    return std::exp(lg);
}

/// Mehta's integral: (sqrt(2 pi))^k prod_j Gamma(1+jz)/Gamma(1+z).
inline double mehta_reference(Int k, double z) {
    if (k < 1 || !(z > 0)) throw std::invalid_argument("mehta_reference: need k >= 1, z > 0");
    double lg = 0.5 * k * std::log(2.0 * pi_v);
    for (Int j = 1; j <= k; ++j) lg += std::lgamma(1 + j * z) - std::lgamma(1 + z);
    return std::exp(lg);
}

/// Left-hand side of Selberg's formula by direct quadrature (n <= 2).
inline Estimate selberg_lhs_quadrature(int n_vars, double x, double y, double z,
                                       double tol = 1e-9) {
    if (n_vars == 1) {
        return quad::segment(
            [&](double u) { return std::pow(u, x - 1) * std::pow(1 - u, y - 1); }, 0.0, 1.0,
            tol);
    }
    if (n_vars == 2) {
        // symmetric integrand: twice the ordered region u2 < u1
        auto outer = [&](double u1) {
            auto inner = [&](double u2) {
                return std::pow(u1 * u2, x - 1) * std::pow((1 - u1) * (1 - u2), y - 1) *
                       std::pow(u1 - u2, 2 * z);
            };
            return quad::segment(inner, 0.0, u1, tol).value;
        };
        Estimate e = quad::segment(outer, 0.0, 1.0, tol);
        return {2.0 * e.value, 2.0 * e.abs_error};
    }
    throw std::invalid_argument("selberg_lhs_quadrature: only n <= 2 supported");
}

/// Left-hand side of Mehta's integral by nested quadrature over the ordered
/// chamber in gap coordinates (k <= 3).
inline Estimate mehta_lhs_quadrature(Int k, double z, double tol = 1e-9) {
    if (k == 1) {
        return quad::line([](double x) { return std::exp(-0.5 * x * x); }, tol);
    }
    if (k == 2) {
        auto outer = [&](double x1) {
            auto inner = [&](double t) {
                const double x2 = x1 - t;
                return std::pow(t, 2 * z) * std::exp(-0.5 * (x1 * x1 + x2 * x2));
            };
            return quad::ray(inner, 0.0, tol).value;
        };
        Estimate e = quad::line(outer, tol);
        return {2.0 * e.value, 2.0 * e.abs_error};
    }
    if (k == 3) {
        auto outer = [&](double x1) {
            auto mid = [&](double t1) {
                auto inner = [&](double t2) {
                    const double x2 = x1 - t1, x3 = x2 - t2;
                    return std::pow(t1 * t2 * (t1 + t2), 2 * z) *
                           std::exp(-0.5 * (x1 * x1 + x2 * x2 + x3 * x3));
                };
                return quad::ray(inner, 0.0, tol).value;
            };
            return quad::ray(mid, 0.0, tol).value;
        };
        Estimate e = quad::line(outer, tol);
        return {6.0 * e.value, 6.0 * e.abs_error};
    }
    throw std::invalid_argument("mehta_lhs_quadrature: only k <= 3 supported");
}

/// Left-hand side of Mehta's integral by plain Gaussian Monte-Carlo.
inline QuadratureResult mehta_lhs_mc(Int k, double z, const McOptions& opt) {
    CompensatedSum sum, sumsq;
    std::vector<double> x(static_cast<std::size_t>(k));
    const std::uint64_t blocks = (opt.samples + detail::mc_block - 1) / detail::mc_block;
    std::uint64_t produced = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        GaussianSampler gauss(CounterRng::stream(opt.seed, b));
        const std::uint64_t count =
            std::min<std::uint64_t>(detail::mc_block, opt.samples - produced);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (auto& xi : x) xi = gauss.next();
            double prod = 1.0;
            for (std::size_t a = 0; a < x.size(); ++a)
                for (std::size_t c = a + 1; c < x.size(); ++c)
                    prod *= std::pow(std::abs(x[a] - x[c]), 2 * z);
            sum.add(prod);
            sumsq.add(prod * prod);
        }
        produced += count;
    }
    const double nn = static_cast<double>(opt.samples);
    const double mean = sum.value() / nn;
    const double var = std::max(0.0, sumsq.value() / nn - mean * mean);
    const double pre = std::pow(2.0 * pi_v, 0.5 * k);
    QuadratureResult r{pre * mean, pre * std::sqrt(var / nn),
                       QuadratureResult::Method::monte_carlo, opt.samples};
    if (opt.enforce_tolerance && !(r.std_error <= opt.rel_tol * std::abs(r.value)))
        throw McToleranceError(r);
    return r;
}

// ---------------------------------------------------------------------------
// Closed forms for the strip family

namespace detail {

inline bool is_integer_beta(double beta, int value) { return beta == double(value); }

// value at the natural scale k, unweighted
inline std::optional<double> strip_closed_base(Int k, double beta) {
    if (k == 1) return 1.0;
    if (is_integer_beta(beta, 2)) {
        double lg = 0.5 * (k - 1) * std::log(2.0 * pi_v) -
                    0.5 * (double(k) * k - 1) * std::log(2.0) -
                    0.5 * double(k) * k * std::log(double(k));
        for (Int j = 1; j < k; ++j) lg += std::lgamma(double(j) + 1);
        return std::exp(lg);
    }
    if (is_integer_beta(beta, 1)) {
        double lg = -0.25 * double(k) * (k + 1) * std::log(double(k)) -
                    std::lgamma(double(k) + 1) + 0.5 * (3.0 * k - 1) * std::log(2.0) -
                    0.5 * std::log(pi_v);
        for (Int j = 1; j <= k; ++j) lg += std::lgamma(1.0 + 0.5 * j);
        return std::exp(lg);
    }
    return std::nullopt;
}

// weighted value at an arbitrary scale; k <= 3, beta in {1,2}
inline std::optional<double> strip_closed_weighted(Int k, double beta, double scale, Int p) {
    if (k == 1) return 0.0;
    const bool b1 = is_integer_beta(beta, 1), b2 = is_integer_beta(beta, 2);
    if (!b1 && !b2) return std::nullopt;
    if (k == 2) {
        // int_0^inf x (2x e^{-scale x^2})^beta dx, elementary
        const double v = std::pow(2.0, beta) * std::tgamma(0.5 * (beta + 2)) /
                         (2.0 * std::pow(beta * scale, 0.5 * (beta + 2)));
        return p == 1 ? v : -v;
    }
    if (k == 3) {
        if (p == 2) return 0.0;
        const double base = b2 ? std::sqrt(pi_v) / (288.0 * std::sqrt(2.0))
                               : 1.0 / 18.0;                     // natural scale 3
        const double v = base * std::pow(3.0 / scale, 0.5 * (3.0 * beta + 3.0));
        return p == 1 ? v : -v;
    }
    return std::nullopt;
}

inline std::optional<double> strip_closed_value(Int k, double beta, double scale,
                                                std::optional<Int> weight_row) {
    if (weight_row) return strip_closed_weighted(k, beta, scale, *weight_row);
    auto base = strip_closed_base(k, beta);
    if (!base) return std::nullopt;
    const double expo = 0.5 * (beta * 0.5 * double(k) * (k - 1) + double(k) - 1);
    return *base * std::pow(double(k) / scale, expo);
}

}  // namespace detail

/// Gamma-product value of the hook denominator I(k,l,2).
inline double hook_denominator_closed_beta2(Int k, Int l) {
    if (k < 0 || l < 0 || k + l < 1)
        throw std::invalid_argument("hook_denominator_closed_beta2: bad (k,l)");
    double lg = 0.5 * std::log(2.0) + 0.5 * (k + l - 1) * std::log(2.0 * pi_v) -
                std::lgamma(double(k) + 1) - std::lgamma(double(l) + 1) -
                0.5 * (double(k) * k + double(l) * l) * std::log(2.0 * (k + l));
    for (Int i = 1; i <= k; ++i) lg += std::lgamma(double(i) + 1);
    for (Int j = 1; j <= l; ++j) lg += std::lgamma(double(j) + 1);
    return std::exp(lg);
}

// ---------------------------------------------------------------------------
// Strip integrals with method dispatch

/// int over Omega_k of (x_p?) [D_k(x) e^{-(scale/2) sum x_i^2}]^beta.
inline QuadratureResult strip_integral(Int k, double beta, double scale,
                                       std::optional<Int> weight_row,
                                       Method method = Method::automatic,
                                       double tol = quad::default_tolerance,
                                       const McOptions& mc = {}) {
    if (k < 1 || !(scale > 0) || !(beta > 0))
        throw std::invalid_argument("strip_integral: need k >= 1, scale > 0, beta > 0");
    if (weight_row && (*weight_row < 1 || *weight_row > k))
        throw std::out_of_range("strip_integral: weight row out of range");

    if (method == Method::closed || method == Method::automatic) {
        if (auto v = detail::strip_closed_value(k, beta, scale, weight_row))
            return QuadratureResult::closed(*v);
        if (method == Method::closed)
            throw std::invalid_argument("strip_integral: no closed form for these parameters");
    }
    ArmWeight w = weight_row ? ArmWeight::row(*weight_row) : ArmWeight::none();
    if ((method == Method::quadrature || method == Method::automatic) && k <= 3) {
        Estimate e = hook_integral_quad(OrderedZeroSumDomain(k, 0), beta, scale, w, tol);
        return {e.value, std::max(e.abs_error, 1e-15 * std::abs(e.value)),
                QuadratureResult::Method::quadrature, 0};
    }
    if (method == Method::quadrature)
        throw std::invalid_argument("strip_integral: quadrature limited to k <= 3");
    return hook_integral_mc(OrderedZeroSumDomain(k, 0), beta, scale, w, mc);
}

/// Full-domain integral over Omega_{(k,l)} at the hook's natural Gaussian
/// scale k+l, optionally weighted/truncated.
inline QuadratureResult hook_full_integral(Int k, Int l, double beta, ArmWeight w,
                                           std::optional<double> trunc_z,
                                           Method method = Method::automatic,
                                           double tol = quad::default_tolerance,
                                           const McOptions& mc = {}) {
    const double scale = double(k + l);
    OrderedZeroSumDomain dom(k, l, trunc_z);
    if (method == Method::closed)
        throw std::invalid_argument("hook_full_integral: no closed form dispatch here");
    if ((method == Method::quadrature || method == Method::automatic) && k + l - 1 <= 2) {
        Estimate e = hook_integral_quad(dom, beta, scale, w, tol);
        return {e.value, std::max(e.abs_error, 1e-15 * std::abs(e.value)),
                QuadratureResult::Method::quadrature, 0};
    }
    if (method == Method::quadrature)
        throw std::invalid_argument("hook_full_integral: dimension too high for quadrature");
    return hook_integral_mc(dom, beta, scale, w, mc);
}

/// The same integral through the zero-sum factorization: the x-arm and
/// y-arm separate once the shared total sum u is integrated out,
///   I = J_x * J_y * sqrt(2 pi k l / beta)/(k+l),
/// with J_x, J_y strip integrals at scale k+l.  The u-odd cross term
/// vanishes, so the row weight multiplies the x-arm only.
inline QuadratureResult hook_integral_factorized(Int k, Int l, double beta, ArmWeight w,
                                                 Method method = Method::automatic,
                                                 double tol = quad::default_tolerance,
                                                 const McOptions& mc = {}) {
    const double scale = double(k + l);
    std::optional<Int> row_w, col_w;
    if (w.kind == ArmWeight::Kind::row) row_w = w.index;
    if (w.kind == ArmWeight::Kind::col) col_w = w.index;
    if (l == 0) return strip_integral(k, beta, scale, row_w, method, tol, mc);
    if (k == 0) return strip_integral(l, beta, scale, col_w, method, tol, mc);
    QuadratureResult jx = strip_integral(k, beta, scale, row_w, method, tol, mc);
    QuadratureResult jy = strip_integral(l, beta, scale, col_w, method, tol, mc);
    const double coupling = std::sqrt(2.0 * pi_v * double(k) * double(l) / beta) / double(k + l);
    QuadratureResult out;
    out.value = jx.value * jy.value * coupling;
    out.std_error = coupling * std::hypot(jx.std_error * jy.value, jy.std_error * jx.value);
    out.method = std::max(jx.method, jy.method);  // closed < quadrature < monte_carlo
    out.samples = jx.samples + jy.samples;
    return out;
}

namespace detail {

inline QuadratureResult ratio_result(const QuadratureResult& num, const QuadratureResult& den) {
    QuadratureResult r;
    r.value = num.value / den.value;
    const double rel_n = num.value != 0 ? num.std_error / std::abs(num.value) : 0.0;
    const double rel_d = den.std_error / std::abs(den.value);
    r.std_error = num.value != 0
                      ? std::abs(r.value) * std::hypot(rel_n, rel_d)
                      : num.std_error / std::abs(den.value);
    r.method = std::max(num.method, den.method);
    r.samples = num.samples + den.samples;
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Limit coefficients

/// Limit of the centered p-th row coefficient on the strip: ratio of the
/// weighted to the plain strip integral at scale k.  Zero for k = 1.
inline QuadratureResult limit_second_term_strip(Int k, double beta, Int p,
                                                Method method = Method::automatic,
                                                double tol = quad::default_tolerance,
                                                const McOptions& mc = {}) {
    if (p < 1 || p > k) throw std::out_of_range("limit_second_term_strip: p out of range");
    if (k == 1) return QuadratureResult::closed(0.0);
    QuadratureResult num = strip_integral(k, beta, double(k), p, method, tol, mc);
    QuadratureResult den = strip_integral(k, beta, double(k), std::nullopt, method, tol, mc);
    return detail::ratio_result(num, den);
}

enum class HookRoute { direct, scaling };

/// Hook-case limit coefficient for row p.  The direct route evaluates the
/// factorized x-arm ratio at Gaussian scale k+l; the scaling route
/// multiplies the strip limit by sqrt(k/(k+l)).  Both must agree.
inline QuadratureResult limit_second_term_hook(Int k, Int l, double beta, Int p,
                                               HookRoute route = HookRoute::direct,
                                               Method method = Method::automatic,
                                               double tol = quad::default_tolerance,
                                               const McOptions& mc = {}) {
    if (p < 1 || p > k) throw std::out_of_range("limit_second_term_hook: p out of range");
    if (route == HookRoute::scaling) {
        QuadratureResult r = limit_second_term_strip(k, beta, p, method, tol, mc);
        const double factor = std::sqrt(double(k) / double(k + l));
        r.value *= factor;
        r.std_error *= factor;
        return r;
    }
    if (k == 1) return QuadratureResult::closed(0.0);
    const double scale = double(k + l);
    QuadratureResult num = strip_integral(k, beta, scale, p, method, tol, mc);
    QuadratureResult den = strip_integral(k, beta, scale, std::nullopt, method, tol, mc);
    return detail::ratio_result(num, den);
}

inline QuadratureResult limit_second_term_hook_col(Int k, Int l, double beta, Int q,
                                                   HookRoute route = HookRoute::direct,
                                                   Method method = Method::automatic,
                                                   double tol = quad::default_tolerance,
                                                   const McOptions& mc = {}) {
    if (q < 1 || q > l) throw std::out_of_range("limit_second_term_hook_col: q out of range");
    return limit_second_term_hook(l, k, beta, q, route, method, tol, mc);
}

/// Un-factorized limit ratio straight over Omega_{(k,l)}; the agreement
/// with limit_second_term_hook checks the factorization numerically.
inline QuadratureResult hook_ratio_full(Int k, Int l, double beta, Int p,
                                        Method method = Method::automatic,
                                        double tol = quad::default_tolerance,
                                        const McOptions& mc = {}) {
    if (p < 1 || p > k) throw std::out_of_range("hook_ratio_full: p out of range");
    const double scale = double(k + l);
    if (method == Method::monte_carlo || (method == Method::automatic && k + l - 1 > 2)) {
        RatioEstimate r = hook_ratio_mc(OrderedZeroSumDomain(k, l), beta, scale,
                                        ArmWeight::row(p), mc);
        return {r.value, r.std_error, QuadratureResult::Method::monte_carlo, r.samples};
    }
    QuadratureResult num = hook_full_integral(k, l, beta, ArmWeight::row(p), std::nullopt,
                                              Method::quadrature, tol, mc);
    QuadratureResult den = hook_full_integral(k, l, beta, ArmWeight::none(), std::nullopt,
                                              Method::quadrature, tol, mc);
    return detail::ratio_result(num, den);
}

// ---------------------------------------------------------------------------
// Distribution limit r(z) and the conjectured shift

/// r_{(k,l),beta}(z): mass ratio of the z-truncated to the full domain.
inline QuadratureResult distribution_limit_r(Int k, Int l, double beta, double z,
                                             Method method = Method::automatic,
                                             double tol = quad::default_tolerance,
                                             const McOptions& mc = {}) {
    if (!(z > 0)) throw std::invalid_argument("distribution_limit_r: z must be > 0");
    if (k < l) return distribution_limit_r(l, k, beta, z, method, tol, mc);
    const double scale = double(k + l);
    if (method == Method::closed || method == Method::automatic) {
        if (k + l == 1) return QuadratureResult::closed(1.0);
        if (k == 2 && l == 0)  // one ordered gap: an incomplete-Gamma ratio
            return QuadratureResult::closed(
                boost::math::gamma_p(0.5 * (beta + 1), beta * scale * z * z));
        if (k == 1 && l == 1)  // symmetric 1-d slice: an erf ratio
            return QuadratureResult::closed(boost::math::erf(std::sqrt(beta * scale) * z));
        if (method == Method::closed)
            throw std::invalid_argument("distribution_limit_r: no closed form for these (k,l)");
    }
    if ((method == Method::quadrature || method == Method::automatic) && k + l - 1 <= 2) {
        QuadratureResult num =
            hook_full_integral(k, l, beta, ArmWeight::none(), z, Method::quadrature, tol, mc);
        QuadratureResult den = hook_full_integral(k, l, beta, ArmWeight::none(), std::nullopt,
                                                  Method::quadrature, tol, mc);
        return detail::ratio_result(num, den);
    }
    if (method == Method::quadrature)
        throw std::invalid_argument("distribution_limit_r: dimension too high for quadrature");
    RatioEstimate r = hook_ratio_mc(OrderedZeroSumDomain(k, l, z), beta, scale,
                                    ArmWeight::none(), mc);
    return {r.value, r.std_error, QuadratureResult::Method::monte_carlo, r.samples};
}

/// s_p(z): x_p-weighted truncated mass over the plain denominator.
/// Exploratory output for the oscillation conjecture; no claim beyond the
/// numeric accuracy of the evaluation.
inline QuadratureResult conjectured_shift_s(Int k, Int l, double beta, Int p, double z,
                                            Method method = Method::automatic,
                                            double tol = quad::default_tolerance,
                                            const McOptions& mc = {}) {
    if (!(z > 0)) throw std::invalid_argument("conjectured_shift_s: z must be > 0");
    if (p < 1 || p > k) throw std::out_of_range("conjectured_shift_s: p out of range");
    const double scale = double(k + l);
    if (k == 1 && l == 1)  // odd weight on a symmetric slice
        return QuadratureResult::closed(0.0);
    if ((method == Method::quadrature || method == Method::automatic) && k + l - 1 <= 2) {
        QuadratureResult num =
            hook_full_integral(k, l, beta, ArmWeight::row(p), z, Method::quadrature, tol, mc);
        QuadratureResult den = hook_full_integral(k, l, beta, ArmWeight::none(), std::nullopt,
                                                  Method::quadrature, tol, mc);
        return detail::ratio_result(num, den);
    }
    if (method == Method::quadrature || method == Method::closed)
        throw std::invalid_argument("conjectured_shift_s: method unavailable for these (k,l)");
    RatioEstimate r = hook_ratio_mc(OrderedZeroSumDomain(k, l, z), beta, scale,
                                    ArmWeight::row(p), mc);
    return {r.value, r.std_error, QuadratureResult::Method::monte_carlo, r.samples};
}

// ---------------------------------------------------------------------------
// Asymptotics of sum (f^lambda)^beta over H(k,l;n)

/// ln of [gamma_{k,l} n^{-(k(k+1)+l(l+1)-2)/4} (k+l)^n]^beta (sqrt n)^{k+l-1} I(k,l,beta).
inline double sum_asymptotics_log_prediction(Int k, Int l, double beta, Int n,
                                             Method method = Method::automatic,
                                             double tol = quad::default_tolerance,
                                             const McOptions& mc = {}) {
    if (n < 1) throw std::invalid_argument("sum_asymptotics_log_prediction: n must be >= 1");
    const double m = double(k + l);
    const double log_gamma_kl = -0.5 * (m - 1) * std::log(2.0 * pi_v) +
                                0.5 * (double(k) * k + double(l) * l) * std::log(m) -
                                double(k) * double(l) * std::log(2.0);
    const double exponent = (double(k) * (k + 1) + double(l) * (l + 1) - 2.0) / 4.0;
    const double log_n = std::log(double(n));

    double log_I;
    if (beta == 2.0) {
        log_I = std::log(hook_denominator_closed_beta2(k, l));
    } else {
        QuadratureResult I = hook_integral_factorized(k, l, beta, ArmWeight::none(), method,
                                                      tol, mc);
        log_I = std::log(I.value);
    }
    return beta * (log_gamma_kl - exponent * log_n + double(n) * std::log(m)) +
           0.5 * (m - 1.0) * log_n + log_I;
}

}  // namespace hookstat
