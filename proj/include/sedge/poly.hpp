#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "sedge/errors.hpp"

namespace sedge {

using bigint = boost::multiprecision::cpp_int;

// Integer-coefficient polynomial in u; coefficient k is the u^k term.
// Normalized: no trailing zeros, the zero polynomial has no coefficients.
struct ipoly {
    std::vector<bigint> c;

    ipoly() = default;
    ipoly(std::initializer_list<long long> init) {
        for (auto v : init) c.emplace_back(v);
        normalize();
    }
    explicit ipoly(std::vector<bigint> coeffs) : c(std::move(coeffs)) { normalize(); }

    static ipoly constant(bigint v) {
        ipoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }
    static ipoly monomial(bigint v, int k) {
        ipoly p;
        if (v != 0) {
            p.c.assign(k + 1, bigint(0));
            p.c[k] = std::move(v);
        }
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    bigint coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : bigint(0);
    }

    bool operator==(const ipoly& o) const = default;

    bigint eval(const bigint& x) const {
        bigint r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    // p(-u): negate odd coefficients
    ipoly negated_argument() const {
        ipoly r = *this;
        for (std::size_t k = 1; k < r.c.size(); k += 2) r.c[k] = -r.c[k];
        return r;
    }

    // u^d * p(1/u) for d = degree: reverses the coefficient vector
    ipoly reversed(int d) const {
        std::vector<bigint> r(d + 1, bigint(0));
        for (int k = 0; k <= degree(); ++k) {
            if (k > d && c[k] != 0) throw invalid_parameter_error("reversal degree too small");
            if (k <= d) r[d - k] = c[k];
        }
        return ipoly(std::move(r));
    }
};

inline ipoly operator+(const ipoly& a, const ipoly& b) {
    std::vector<bigint> r(std::max(a.c.size(), b.c.size()), bigint(0));
    for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
    return ipoly(std::move(r));
}

inline ipoly operator-(const ipoly& a, const ipoly& b) {
    std::vector<bigint> r(std::max(a.c.size(), b.c.size()), bigint(0));
    for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
    return ipoly(std::move(r));
}

inline ipoly operator-(const ipoly& a) {
    ipoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

inline ipoly operator*(const ipoly& a, const ipoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bigint> r(a.c.size() + b.c.size() - 1, bigint(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return ipoly(std::move(r));
}

inline ipoly pow(const ipoly& base, int e) {
    ipoly r = ipoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Exact division; throws if the remainder is nonzero or a leading-coefficient
// division does not come out exact.
inline ipoly divide_exact(const ipoly& a, const ipoly& b) {
    if (b.is_zero()) throw invalid_parameter_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw invalid_parameter_error("exact division with nonzero remainder");
    std::vector<bigint> rem = a.c;
    std::vector<bigint> quot(a.degree() - b.degree() + 1, bigint(0));
    const bigint& lead = b.c.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        bigint q, r;
        boost::multiprecision::divide_qr(rem[k + b.degree()], lead, q, r);
        if (r != 0) throw invalid_parameter_error("exact division with nonzero remainder");
        quot[k] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.c[j];
    }
    for (auto& v : rem)
        if (v != 0) throw invalid_parameter_error("exact division with nonzero remainder");
    return ipoly(std::move(quot));
}

inline bool divides(const ipoly& a, const ipoly& b) {  // a | b
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    if (b.degree() < a.degree()) return false;
    try {
        divide_exact(b, a);
        return true;
    } catch (const invalid_parameter_error&) {
        return false;
    }
}

// "1 - 2u^3 + u^6": ascending powers, explicit signs, caret exponents.
inline std::string to_human(const ipoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const bigint& v = p.c[k];
        if (v == 0) continue;
        bigint mag = v < 0 ? bigint(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (k == 0) os << mag.str();
        else {
            if (mag != 1) os << mag.str();
            os << "u";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// {"coefficients": [c0, ..., cd]} with exact decimal integers.
inline std::string to_json(const ipoly& p) {
    std::ostringstream os;
    os << "{\"coefficients\":[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) os << ',';
        os << p.c[k].str();
    }
    os << "]}";
    return os.str();
}

} // namespace sedge
