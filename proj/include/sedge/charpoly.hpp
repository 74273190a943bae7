#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sedge/errors.hpp"
#include "sedge/matrix.hpp"
#include "sedge/poly.hpp"

namespace sedge {

// Fraction-free (Bareiss) determinant; every internal division is exact.
inline bigint integer_determinant(std::vector<std::vector<bigint>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    bigint sign = 1;
    bigint prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == -1) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                bigint num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                bigint q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0) throw error("fraction-free elimination produced a nonzero remainder");
                a[i][j] = std::move(q);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bigint integer_determinant(const imat& m) {
    if (!m.is_square()) throw invalid_parameter_error("determinant needs a square matrix");
    std::vector<std::vector<bigint>> a(m.rows, std::vector<bigint>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = m(i, j);
    return integer_determinant(std::move(a));
}

namespace detail {

// Division-free characteristic polynomial, exact over the integers.
// Returns ascending coefficients of det(uI - A), monic of degree n.
inline std::vector<bigint> charpoly_berkowitz(const imat& a) {
    const int n = a.rows;
    // descending coefficients, p[0] leading
    std::vector<bigint> p{1};
    if (n == 0) return p;
    p = {1, -a(0, 0)};
    for (int r = 1; r < n; ++r) {
        // scalars -R M^k S for the Toeplitz column, M the leading r-by-r block
        std::vector<bigint> col(r + 2);
        col[0] = 1;
        col[1] = -a(r, r);
        std::vector<bigint> w(r);
        for (int i = 0; i < r; ++i) w[i] = a(i, r);  // S
        for (int k = 2; k <= r + 1; ++k) {
            bigint dot = 0;
            for (int i = 0; i < r; ++i) dot += a(r, i) * w[i];  // R M^{k-2} S
            col[k] = -dot;
            if (k <= r) {
                std::vector<bigint> nw(r);
                for (int i = 0; i < r; ++i) {
                    bigint s = 0;
                    for (int j = 0; j < r; ++j)
                        if (a(i, j) != 0) s += a(i, j) * w[j];
                    nw[i] = std::move(s);
                }
                w = std::move(nw);
            }
        }
        std::vector<bigint> np(r + 2, bigint(0));
        for (int i = 0; i <= r + 1; ++i)
            for (int j = 0; j < static_cast<int>(p.size()); ++j)
                if (i - j >= 0 && i - j <= r + 1) {
                    // Toeplitz: row i, column j holds col[i - j]
                    if (i - j < static_cast<int>(col.size())) np[i] += col[i - j] * p[j];
                }
        p = std::move(np);
    }
    return p;
}

// --- modular arithmetic for the large-matrix path ---

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// char poly of A mod p via Hessenberg reduction, ascending coefficients.
inline std::vector<u64> charpoly_mod(const imat& a, u64 p) {
    const int n = a.rows;
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = a(i, j) % static_cast<std::int64_t>(p);
            h[i][j] = v < 0 ? v + p : v;
        }
    // similarity reduction to upper Hessenberg
    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (h[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == -1) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
        }
        u64 inv = invmod(h[k + 1][k], p);
        for (int i = k + 2; i < n; ++i) {
            if (h[i][k] == 0) continue;
            u64 f = mulmod(h[i][k], inv, p);
            for (int j = k; j < n; ++j) {
                u64 sub = mulmod(f, h[k + 1][j], p);
                h[i][j] = h[i][j] >= sub ? h[i][j] - sub : h[i][j] + p - sub;
            }
            for (int i2 = 0; i2 < n; ++i2) {
                u64 add = mulmod(f, h[i2][i], p);
                h[i2][k + 1] = (h[i2][k + 1] + add) % p;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{i,k} (prod_j h_{j+1,j}) p_{i-1}
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const auto& pk1 = polys[k - 1];
        std::vector<u64> cur(k + 1, 0);
        u64 hk = h[k - 1][k - 1];
        for (int t = 0; t < k; ++t) {
            cur[t + 1] = (cur[t + 1] + pk1[t]) % p;
            u64 sub = mulmod(hk, pk1[t], p);
            cur[t] = cur[t] >= sub ? cur[t] - sub : cur[t] + p - sub;
        }
        u64 prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = mulmod(prod, h[i][i - 1], p);
            if (prod == 0) break;
            u64 f = mulmod(h[i - 1][k - 1], prod, p);
            if (f == 0) continue;
            const auto& pi1 = polys[i - 1];
            for (int t = 0; t < i; ++t) {
                u64 sub = mulmod(f, pi1[t], p);
                cur[t] = cur[t] >= sub ? cur[t] - sub : cur[t] + p - sub;
            }
        }
        polys[k] = std::move(cur);
    }
    return polys[n];
}

// bits needed for any characteristic polynomial coefficient of A:
// |c_{n-k}| <= C(n,k) * prod of the k largest row 2-norms
inline double charpoly_coeff_bits(const imat& a) {
    const int n = a.rows;
    double bits = n;  // covers the binomial factor
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += double(a(i, j)) * double(a(i, j));
        if (s > 1) bits += 0.5 * std::log2(s);
    }
    return bits;
}

inline std::vector<bigint> charpoly_modular_crt(const imat& a) {
    const int n = a.rows;
    const double need_bits = charpoly_coeff_bits(a) + 2;  // sign + slack
    std::vector<u64> primes;
    double have_bits = 0;
    u64 cand = (u64(1) << 62) - 1;
    while (have_bits < need_bits) {
        while (!is_prime_u64(cand)) --cand;
        primes.push_back(cand);
        have_bits += std::log2(double(cand));
        --cand;
    }
    bigint modulus = 1;
    std::vector<bigint> coeffs(n + 1, bigint(0));
    for (u64 p : primes) {
        auto res = charpoly_mod(a, p);
        if (modulus == 1) {
            for (int k = 0; k <= n; ++k) coeffs[k] = res[k];
            modulus = p;
            continue;
        }
        // combine: x = c + modulus * ((r - c) * modulus^{-1} mod p)
        bigint mod_inv = bigint(invmod(static_cast<u64>(modulus % p), p));
        for (int k = 0; k <= n; ++k) {
            bigint diff = (bigint(res[k]) - coeffs[k]) % p;
            if (diff < 0) diff += p;
            bigint t = diff * mod_inv % p;
            coeffs[k] += modulus * t;
        }
        modulus *= p;
    }
    bigint half = modulus >> 1;
    for (auto& v : coeffs)
        if (v > half) v -= modulus;
    return coeffs;
}

} // namespace detail

// det(uI - A) with exact integer coefficients, monic of degree n.
// Small matrices go through the division-free route; larger ones through
// Hessenberg reduction modulo word-sized primes with CRT reconstruction.
inline ipoly char_poly(const imat& a, int direct_threshold = 16) {
    if (!a.is_square()) throw invalid_parameter_error("characteristic polynomial needs a square matrix");
    if (a.rows <= direct_threshold) {
        auto desc = detail::charpoly_berkowitz(a);
        std::reverse(desc.begin(), desc.end());
        return ipoly(std::move(desc));
    }
    return ipoly(detail::charpoly_modular_crt(a));
}

} // namespace sedge
