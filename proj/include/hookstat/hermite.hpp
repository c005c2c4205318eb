#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookstat {

using HermiteInt = boost::multiprecision::cpp_int;

/// Coefficients of the physicists' Hermite polynomial H_k, ascending powers,
/// via H_{k+1} = 2x H_k - 2k H_{k-1}.
inline std::vector<HermiteInt> hermite_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("hermite_polynomial: k must be >= 0");
    std::vector<HermiteInt> prev{1};  // H_0
    if (k == 0) return prev;
    std::vector<HermiteInt> cur{0, 2};  // H_1
    for (int j = 1; j < k; ++j) {
        std::vector<HermiteInt> next(static_cast<std::size_t>(j) + 2, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * j * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// (H_k(x), H_k'(x)) by the three-term recurrence; H' = 2k H_{k-1}.
inline std::pair<double, double> hermite_eval(int k, double x) {
    double hm1 = 0.0, h = 1.0;
    for (int j = 0; j < k; ++j) {
        double next = 2.0 * x * h - 2.0 * j * hm1;
        hm1 = h;
        h = next;
    }
    return {h, 2.0 * k * hm1};
}

namespace detail {

// Eigenvalues of a symmetric tridiagonal matrix by QL with implicit shifts.
// diag holds the diagonal, off the k-1 subdiagonal entries; diag is
// overwritten with the eigenvalues (unsorted).
inline void tridiagonal_eigenvalues(std::vector<double>& diag, std::vector<double>& off) {
    const int n = static_cast<int>(diag.size());
    off.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m == l) break;
            if (iter++ == 64)
                throw std::runtime_error("tridiagonal_eigenvalues: QL did not converge");
            double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * off[i], b = c * off[i];
                r = std::hypot(f, g);
                off[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
}

}  // namespace detail

/// All k roots of H_k, ascending: eigenvalues of the Golub-Welsch Jacobi
/// matrix (off-diagonal sqrt(i/2)), symmetrized about 0 and polished by two
/// Newton steps on the recurrence.
inline std::vector<double> hermite_roots(int k) {
    if (k < 1) throw std::invalid_argument("hermite_roots: k must be >= 1");
    std::vector<double> diag(static_cast<std::size_t>(k), 0.0);
    std::vector<double> off;
    for (int i = 1; i < k; ++i) off.push_back(std::sqrt(0.5 * i));
    detail::tridiagonal_eigenvalues(diag, off);
    std::sort(diag.begin(), diag.end());
    // the spectrum is symmetric; average the +/- pairs
    std::vector<double> roots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        roots[static_cast<std::size_t>(i)] =
            0.5 * (diag[static_cast<std::size_t>(i)] - diag[static_cast<std::size_t>(k - 1 - i)]);
    for (auto& r : roots) {
        for (int it = 0; it < 2; ++it) {
            auto [h, dh] = hermite_eval(k, r);
            if (dh != 0.0) r -= h / dh;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hookstat
