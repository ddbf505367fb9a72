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

// Boolean functions under the constant/balanced promise, phase oracles,
// Hadamard transforms and the ancilla-free Deutsch-Jozsa circuit
//
//     |0..0>  --H^n--  U_f  --H^n-->  amplitude on |0..0>
//
// where U_f |x> = (-1)^f(x) |x>.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/config.hpp"
#include "djsim/quantum_state.hpp"

namespace djsim {

/// Truth table over {0,1}^n, indexed MSB-first: table[x] = f(x) where bit
/// (n - j) of x is the input bit x_j.
class BooleanFunction {
public:
    BooleanFunction(int n_bits, std::vector<std::uint8_t> table) : n_bits_(n_bits), table_(std::move(table)) {
        if (n_bits_ < 1) {
            throw std::invalid_argument("BooleanFunction: need at least one input bit");
        }
        require_within_qubit_cap(n_bits_, "BooleanFunction");
        if (table_.size() != (std::size_t{1} << n_bits_)) {
            throw std::invalid_argument("BooleanFunction: table length must be 2^n");
        }
        for (auto& v : table_) {
            if (v > 1) {
                throw std::invalid_argument("BooleanFunction: table entries must be 0 or 1");
            }
        }
    }

    /// Parses the '0'/'1' text format; leftmost character is f(0..0).
    static BooleanFunction parse(std::string_view text) {
        if (text.empty() || !std::has_single_bit(text.size()) || text.size() < 2) {
            throw std::invalid_argument("truth table length must be a power of two >= 2, got " +
                                        std::to_string(text.size()));
        }
        std::vector<std::uint8_t> table;
        table.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument(std::string("truth table may contain only '0' and '1', got '") +
                                            c + "'");
            }
            table.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return {std::countr_zero(text.size()), std::move(table)};
    }

    /// Builds from the table read as a binary number, leftmost entry = MSB.
    static BooleanFunction from_value(int n_bits, std::uint64_t value) {
        const std::size_t len = std::size_t{1} << n_bits;
        std::vector<std::uint8_t> table(len);
        for (std::size_t x = 0; x < len; ++x) {
            table[x] = static_cast<std::uint8_t>((value >> (len - 1 - x)) & 1U);
        }
        return {n_bits, std::move(table)};
    }

    int n_bits() const { return n_bits_; }
    std::size_t size() const { return table_.size(); }
    int operator()(std::uint64_t x) const { return table_[x]; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::size_t count_ones() const {
        std::size_t ones = 0;
        for (auto v : table_) {
            ones += v;
        }
        return ones;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(table_.size());
        for (auto v : table_) {
            s.push_back(static_cast<char>('0' + v));
        }
        return s;
    }

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    int n_bits_;
    std::vector<std::uint8_t> table_;
};

enum class PromiseClass { Constant, Balanced, Neither };

inline const char* to_string(PromiseClass c) {
    switch (c) {
        case PromiseClass::Constant: return "constant";
        case PromiseClass::Balanced: return "balanced";
        case PromiseClass::Neither: return "neither";
    }
    return "?";
}

inline PromiseClass classify_function(const BooleanFunction& f) {
    const auto ones = f.count_ones();
    if (ones == 0 || ones == f.size()) {
        return PromiseClass::Constant;
    }
    if (2 * ones == f.size()) {
        return PromiseClass::Balanced;
    }
    return PromiseClass::Neither;
}

/// C(2^n, 2^(n-1)) + 2.
inline std::uint64_t promise_function_count(int n) {
    const std::uint64_t big = std::uint64_t{1} << n;
    const std::uint64_t half = big / 2;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= half; ++i) {
        c = c * (half + i) / i;
    }
    return c + 2;
}

/// All constant and balanced functions on n bits: all-zeros, all-ones, then
/// the balanced tables in increasing binary value.
inline std::vector<BooleanFunction> enumerate_promise_functions(int n) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_promise_functions: n must be positive");
    }
    if (n > enumeration_cap()) {
        throw CapExceeded("enumerate_promise_functions: n = " + std::to_string(n) +
                          " exceeds enumeration cap of " + std::to_string(enumeration_cap()));
    }
    const unsigned len = 1U << n;
    std::vector<BooleanFunction> out;
    out.reserve(promise_function_count(n));
    out.push_back(BooleanFunction::from_value(n, 0));
    out.push_back(BooleanFunction::from_value(n, (std::uint64_t{1} << len) - 1));

    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t limit = std::uint64_t{1} << len;
    std::uint64_t v = (std::uint64_t{1} << (len / 2)) - 1;
    while (v < limit) {
        out.push_back(BooleanFunction::from_value(n, v));
        const std::uint64_t low = v & (~v + 1);
        const std::uint64_t ripple = v + low;
        v = ripple | (((v ^ ripple) >> 2) / low);
    }
    return out;
}

/// Diagonal +-1 unitary with entry x equal to (-1)^f(x).
class PhaseOracle {
public:
    explicit PhaseOracle(const BooleanFunction& f) : n_qubits_(f.n_bits()), diagonal_(f.size()) {
        for (std::size_t x = 0; x < f.size(); ++x) {
            diagonal_[x] = f(x) ? -1 : 1;
        }
    }

    int n_qubits() const { return n_qubits_; }
    const std::vector<int>& diagonal() const { return diagonal_; }

    /// The truth table this oracle encodes.
    BooleanFunction function() const {
        std::vector<std::uint8_t> table(diagonal_.size());
        for (std::size_t x = 0; x < diagonal_.size(); ++x) {
            table[x] = diagonal_[x] < 0 ? 1 : 0;
        }
        return {n_qubits_, std::move(table)};
    }

    UnitaryMatrix unitary() const {
        const auto dim = static_cast<Eigen::Index>(diagonal_.size());
        CMatrix m = CMatrix::Zero(dim, dim);
        for (Eigen::Index x = 0; x < dim; ++x) {
            m(x, x) = static_cast<double>(diagonal_[static_cast<std::size_t>(x)]);
        }
        return {detail::Trusted{}, std::move(m)};
    }

    StateVector apply(const StateVector& s) const {
        if (s.dim() != static_cast<Eigen::Index>(diagonal_.size())) {
            throw std::invalid_argument("PhaseOracle::apply: dimension mismatch");
        }
        CVector out = s.amplitudes();
        for (Eigen::Index x = 0; x < out.size(); ++x) {
            out(x) *= static_cast<double>(diagonal_[static_cast<std::size_t>(x)]);
        }
        return {detail::Trusted{}, std::move(out)};
    }

private:
    int n_qubits_;
    std::vector<int> diagonal_;
};

inline PhaseOracle build_phase_oracle(const BooleanFunction& f) { return PhaseOracle(f); }

/// Normalized Walsh-Hadamard transform: entry (y, x) = 2^(-n/2) (-1)^popcount(x & y).
inline UnitaryMatrix hadamard_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("hadamard_n: n must be positive");
    }
    require_within_qubit_cap(n, "hadamard_n");
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double scale = std::pow(2.0, -0.5 * n);
    CMatrix h(dim, dim);
    for (Eigen::Index y = 0; y < dim; ++y) {
        for (Eigen::Index x = 0; x < dim; ++x) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(x & y)) & 1;
            h(y, x) = odd ? -scale : scale;
        }
    }
    return {detail::Trusted{}, std::move(h)};
}

enum class DJVerdict { Constant, Balanced, PromiseViolated };

inline const char* to_string(DJVerdict v) {
    switch (v) {
        case DJVerdict::Constant: return "Constant";
        case DJVerdict::Balanced: return "Balanced";
        case DJVerdict::PromiseViolated: return "PromiseViolated";
    }
    return "?";
}

struct DJOutcome {
    Complex amplitude_at_zero;
    DJVerdict verdict;

    double probability_at_zero() const { return std::norm(amplitude_at_zero); }
};

inline DJVerdict verdict_from_probability(double p) {
    if (p >= 1.0 - tol::kVerdict) {
        return DJVerdict::Constant;
    }
    if (p <= tol::kVerdict) {
        return DJVerdict::Balanced;
    }
    return DJVerdict::PromiseViolated;
}

/// Runs H^n, U_f, H^n on |0..0> by explicit matrix-vector products and
/// reads the amplitude left on |0..0>.
inline DJOutcome run_dj(const BooleanFunction& f) {
    const int n = f.n_bits();
    const UnitaryMatrix h = hadamard_n(n);
    const PhaseOracle oracle = build_phase_oracle(f);

    StateVector s = StateVector::basis(n, 0);
    s = apply(h, s);
    s = apply(oracle.unitary(), s);
    s = apply(h, s);

    const Complex amp = s[0];
    return {amp, verdict_from_probability(std::norm(amp))};
}

/// Deterministic classical queries needed in the worst case: 2^(n-1) + 1.
inline std::uint64_t classical_query_bound(int n) {
    if (n < 1 || n > 63) {
        throw std::invalid_argument("classical_query_bound: n out of range");
    }
    return (std::uint64_t{1} << (n - 1)) + 1;
}

/// Witness for f(x) = (a . x) xor b over GF(2). `a[j]` pairs with qubit j+1.
struct AffineForm {
    std::vector<std::uint8_t> a;
    std::uint8_t b = 0;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

inline int affine_eval(const AffineForm& form, std::uint64_t x) {
    const int n = static_cast<int>(form.a.size());
    int parity = form.b;
    for (int j = 0; j < n; ++j) {
        if (form.a[static_cast<std::size_t>(j)] && ((x >> (n - 1 - j)) & 1U)) {
            parity ^= 1;
        }
    }
    return parity;
}

/// Reads the only possible candidate off f(0) and f(e_j), then checks it on
/// every input.
inline std::optional<AffineForm> is_affine(const BooleanFunction& f) {
    const int n = f.n_bits();
    AffineForm form;
    form.b = static_cast<std::uint8_t>(f(0));
    form.a.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const std::uint64_t unit = std::uint64_t{1} << (n - 1 - j);
        form.a[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(f(unit) ^ form.b);
    }
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        if (affine_eval(form, x) != f(x)) {
            return std::nullopt;
        }
    }
    return form;
}

}  // namespace djsim
