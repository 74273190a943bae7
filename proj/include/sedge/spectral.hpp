#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sedge/charpoly.hpp"
#include "sedge/constructions.hpp"
#include "sedge/errors.hpp"
#include "sedge/graph.hpp"
#include "sedge/matrix.hpp"

namespace sedge {

struct spectrum {
    int source_dimension = 0;
    std::vector<double> eigenvalues;  // sorted descending
};

namespace detail {

constexpr int eigen_dimension_cap = 256;
constexpr int eigen_iteration_cap = 64;
constexpr double eigen_offdiag_eps = 1e-12;

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction of a symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e with e[0] unused).
inline void tridiagonalize(std::vector<std::vector<double>>& a, std::vector<double>& d,
                           std::vector<double>& e) {
    const int n = static_cast<int>(a.size());
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i][j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
inline void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eigen_offdiag_eps * dd) break;
            }
            if (m != l) {
                if (iter++ == eigen_iteration_cap)
                    throw error("eigenvalue iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace detail

inline spectrum eigenvalues(const imat& mtx) {
    if (!mtx.is_square()) throw not_symmetric_error("eigenvalues need a square symmetric matrix");
    if (!mtx.is_symmetric()) throw not_symmetric_error("matrix is not symmetric");
    if (mtx.rows > detail::eigen_dimension_cap)
        throw size_limit_error("eigensolver dimension cap exceeded");
    const int n = mtx.rows;
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(mtx(i, j));
    std::vector<double> d, e;
    detail::tridiagonalize(a, d, e);
    detail::ql_eigenvalues(d, e);
    std::sort(d.begin(), d.end(), std::greater<>());
    return spectrum{n, std::move(d)};
}

inline spectrum graph_spectrum(const graph& g) { return eigenvalues(adjacency_matrix(g)); }

inline double energy(const graph& g) {
    auto s = graph_spectrum(g);
    double sum = 0.0;
    for (double v : s.eigenvalues) sum += std::abs(v);
    return sum;
}

// Exact integer decision: equal adjacency characteristic polynomials.
inline bool is_cospectral(const graph& g, const graph& h) {
    if (g.n != h.n) return false;
    return char_poly(adjacency_matrix(g)) == char_poly(adjacency_matrix(h));
}

// Spectrum of [[A', B'], [B', A']] splits as spec(A'+B') and spec(A'-B').
struct split_spectra {
    spectrum plus;   // A' + B'
    spectrum minus;  // A' - B'
};

inline split_spectra block_split_spectrum(const imat& a, const imat& b) {
    return split_spectra{eigenvalues(a + b), eigenvalues(a - b)};
}

inline split_spectra block_split_spectrum(const gamma_blocks& blocks) {
    return block_split_spectrum(blocks.a0, blocks.b0);
}

inline split_spectra block_split_spectrum(const cover_blocks& blocks) {
    return block_split_spectrum(blocks.p, blocks.q);
}

} // namespace sedge
