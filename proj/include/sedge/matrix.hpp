#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "sedge/errors.hpp"

namespace sedge {

// Dense row-major integer matrix. Entries stay well inside int64 for every
// use in this library (0/1 matrices, their small sums and low powers).
struct imat {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;

    imat() = default;
    imat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    static imat identity(int n) {
        imat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static imat from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rws) {
        imat m(static_cast<int>(rws.size()), rws.size() ? static_cast<int>(rws.begin()->size()) : 0);
        int i = 0;
        for (const auto& row : rws) {
            int j = 0;
            for (auto v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const imat& o) const = default;

    bool is_square() const { return rows == cols; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < cols; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (auto v : data)
            if (v != 0) return false;
        return true;
    }

    imat transposed() const {
        imat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    imat block(int r0, int c0, int r, int c) const {
        imat b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (int i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
        return t;
    }

    std::int64_t row_sum(int i) const {
        std::int64_t s = 0;
        for (int j = 0; j < cols; ++j) s += (*this)(i, j);
        return s;
    }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : data) s += v;
        return s;
    }

    std::string to_csv() const {
        std::ostringstream os;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j) os << ',';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }
};

inline imat operator+(const imat& a, const imat& b) {
    imat r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] + b.data[i];
    return r;
}

inline imat operator-(const imat& a, const imat& b) {
    imat r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] - b.data[i];
    return r;
}

inline imat operator-(const imat& a) {
    imat r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = -a.data[i];
    return r;
}

inline imat operator*(const imat& a, const imat& b) {
    imat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline imat hadamard(const imat& a, const imat& b) {
    imat r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] * b.data[i];
    return r;
}

// [[0, I], [I, 0]] in m-by-m blocks; swaps an edge label with its reverse.
inline imat swap_blocks_matrix(int m) {
    imat j(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        j(i, m + i) = 1;
        j(m + i, i) = 1;
    }
    return j;
}

} // namespace sedge
