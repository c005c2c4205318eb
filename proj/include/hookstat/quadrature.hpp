#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace hookstat {

/// Value of a Selberg-type integral together with an honest accuracy tag.
struct QuadratureResult {
    enum class Method { closed, quadrature, monte_carlo };

    double value = 0.0;
    double std_error = 0.0;  // 0 exactly when method == closed
    Method method = Method::closed;
    std::uint64_t samples = 0;

    static QuadratureResult closed(double v) { return {v, 0.0, Method::closed, 0}; }
};

inline const char* method_name(QuadratureResult::Method m) {
    switch (m) {
        case QuadratureResult::Method::closed: return "closed";
        case QuadratureResult::Method::quadrature: return "quadrature";
        case QuadratureResult::Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

/// Monte-Carlo did not reach the requested relative tolerance.
struct McToleranceError : std::runtime_error {
    QuadratureResult result;
    explicit McToleranceError(const QuadratureResult& r)
        : std::runtime_error("Monte-Carlo std_error " + std::to_string(r.std_error) +
                             " exceeds tolerance for value " + std::to_string(r.value)),
          result(r) {}
};

struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

/// Thin double-exponential wrappers.  The reported abs_error folds the
/// engine's last-refinement delta together with the termination tolerance,
/// erring on the conservative side.
namespace quad {

inline constexpr double default_tolerance = 1e-10;

inline double combine_error(double raw, double tol, double v, double l1) {
    return std::abs(raw) + tol * (std::abs(v) + std::abs(l1));
}

template <class F>
Estimate segment(F&& f, double a, double b, double tol = default_tolerance) {
    if (!(a < b)) return {0.0, 0.0};
    boost::math::quadrature::tanh_sinh<double> integ;
    double err = 0, l1 = 0;
    double v = integ.integrate(f, a, b, tol, &err, &l1);
    return {v, combine_error(err, tol, v, l1)};
}

/// integral over [a, inf)
template <class F>
Estimate ray(F&& f, double a, double tol = default_tolerance) {
    boost::math::quadrature::exp_sinh<double> integ;
    double err = 0, l1 = 0;
    double v = integ.integrate([&, a](double t) { return f(a + t); }, tol, &err, &l1);
    return {v, combine_error(err, tol, v, l1)};
}

/// integral over (-inf, b]
template <class F>
Estimate ray_below(F&& f, double b, double tol = default_tolerance) {
    boost::math::quadrature::exp_sinh<double> integ;
    double err = 0, l1 = 0;
    double v = integ.integrate([&, b](double t) { return f(b - t); }, tol, &err, &l1);
    return {v, combine_error(err, tol, v, l1)};
}

template <class F>
Estimate line(F&& f, double tol = default_tolerance) {
    boost::math::quadrature::sinh_sinh<double> integ;
    double err = 0, l1 = 0;
    double v = integ.integrate(f, tol, &err, &l1);
    return {v, combine_error(err, tol, v, l1)};
}

}  // namespace quad

}  // namespace hookstat
