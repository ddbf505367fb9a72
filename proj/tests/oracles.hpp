// Copyright 2026 The djsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference routines for the tests. Nothing here calls into the
// library's algorithms; only plain loops over indices and std::complex.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<C>(c)); }

inline Mat kron(const Mat& a, const Mat& b) {
    const auto ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Mat out = zeros(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return out;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat out = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Vec matvec(const Mat& a, const Vec& v) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += a[i][k] * v[k];
    return out;
}

inline Mat outer(const Vec& v) {
    Mat out = zeros(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i][j] = v[i] * std::conj(v[j]);
    return out;
}

inline C trace(const Mat& m) {
    C t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

// Bit of 1-based qubit `label` in an n-qubit MSB-first index.
inline int bit(std::size_t index, int label, int n) { return static_cast<int>((index >> (n - label)) & 1U); }

/// Partial trace by visiting every (row, col) pair of the full matrix and
/// keeping those whose traced bits agree.
inline Mat partial_trace(const Mat& rho, int n, const std::vector<int>& keep) {
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    const std::size_t k = keep.size();
    Mat out = zeros(std::size_t{1} << k, std::size_t{1} << k);
    const std::size_t dim = rho.size();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            bool agree = true;
            for (int q : traced) agree = agree && bit(r, q, n) == bit(c, q, n);
            if (!agree) continue;
            std::size_t rr = 0, cc = 0;
            for (int q : keep) {
                rr = (rr << 1) | static_cast<std::size_t>(bit(r, q, n));
                cc = (cc << 1) | static_cast<std::size_t>(bit(c, q, n));
            }
            out[rr][cc] += rho[r][c];
        }
    }
    return out;
}

/// Rank by Gaussian elimination with partial pivoting.
inline int rank(Mat m, double tol = 1e-9) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t piv = static_cast<std::size_t>(r);
        for (std::size_t i = piv + 1; i < rows; ++i)
            if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
        if (std::abs(m[piv][c]) < tol) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(r)]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r)) continue;
            const C f = m[i][c] / m[static_cast<std::size_t>(r)][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

/// Amplitudes of a pure state reshaped across a cut: rows indexed by the
/// left qubits, columns by the right qubits. Schmidt rank = rank of this.
inline Mat state_matrix(const Vec& s, int n, const std::vector<int>& left, const std::vector<int>& right) {
    Mat m = zeros(std::size_t{1} << left.size(), std::size_t{1} << right.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        std::size_t r = 0, c = 0;
        for (int q : left) r = (r << 1) | static_cast<std::size_t>(bit(x, q, n));
        for (int q : right) c = (c << 1) | static_cast<std::size_t>(bit(x, q, n));
        m[r][c] = s[x];
    }
    return m;
}

/// Operator realignment across {1..k}|{k+1..n} written directly in terms of
/// the (i,j) -> i * dr + j split of a contiguous cut.
inline Mat realign_contiguous(const Mat& u, int n, int k) {
    const std::size_t dl = std::size_t{1} << k, dr = std::size_t{1} << (n - k);
    Mat m = zeros(dl * dl, dr * dr);
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            for (std::size_t ip = 0; ip < dl; ++ip)
                for (std::size_t jp = 0; jp < dr; ++jp) m[i * dl + ip][j * dr + jp] = u[i * dr + j][ip * dr + jp];
    return m;
}

inline double frobenius_sq(const Mat& m) {
    double s = 0;
    for (const auto& row : m)
        for (auto v : row) s += std::norm(v);
    return s;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

inline Mat hadamard1() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{h, h}, {h, -h}};
}

inline Mat identity(std::size_t d) {
    Mat m = zeros(d, d);
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

inline Mat diag(const std::vector<double>& d) {
    Mat m = zeros(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

/// Truth table of an n-bit function from an integer whose bit (2^n - 1 - x)
/// is f(x), i.e. the table string read as binary.
inline std::vector<int> table_of(std::uint64_t value, int n) {
    const std::size_t len = std::size_t{1} << n;
    std::vector<int> t(len);
    for (std::size_t x = 0; x < len; ++x) t[x] = static_cast<int>((value >> (len - 1 - x)) & 1U);
    return t;
}

inline std::string table_string(const std::vector<int>& t) {
    std::string s;
    for (int v : t) s.push_back(static_cast<char>('0' + v));
    return s;
}

/// Every constant or balanced table on n bits, by filtering all 2^(2^n).
inline std::vector<std::string> promise_tables(int n) {
    const std::size_t len = std::size_t{1} << n;
    std::vector<std::string> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        const auto t = table_of(v, n);
        const auto ones = static_cast<std::size_t>(std::count(t.begin(), t.end(), 1));
        if (ones == 0 || ones == len || 2 * ones == len) out.push_back(table_string(t));
    }
    return out;
}

/// Search all 2^(n+1) affine forms; returns (a as MSB-first mask, b) or -1.
inline long long brute_affine(const std::vector<int>& t, int n) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        for (int b = 0; b < 2; ++b) {
            bool ok = true;
            for (std::size_t x = 0; x < t.size() && ok; ++x) {
                const int parity = (__builtin_popcountll(a & x) & 1) ^ b;
                ok = parity == t[x];
            }
            if (ok) return static_cast<long long>(a << 1 | static_cast<std::uint64_t>(b));
        }
    }
    return -1;
}

/// <0| H^n U_f H^n |0> = 2^-n sum_x (-1)^f(x).
inline double closed_form_amplitude(const std::vector<int>& t) {
    double s = 0;
    for (int v : t) s += v ? -1.0 : 1.0;
    return s / static_cast<double>(t.size());
}

}  // namespace oracle
