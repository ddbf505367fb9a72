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

// Dense pure states, density matrices and unitaries over n qubits.
//
// Layout convention used everywhere in djsim: qubit 1 is the leftmost tensor
// factor and the most significant bit of a basis index. For n = 3 the index
// x = 0b110 is |1 1 0> with qubit 1 = 1, qubit 3 = 0.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "djsim/config.hpp"

namespace djsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace detail {

inline int log2_dimension(Eigen::Index dim, const char* what) {
    if (dim <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(dim) +
                                    " is not a power of two");
    }
    return std::countr_zero(static_cast<std::uint64_t>(dim));
}

// Bit position of a 1-based qubit label in an n-qubit MSB-first index.
constexpr int bit_of(int label, int n_qubits) { return n_qubits - label; }

struct Trusted {};

}  // namespace detail

class StateVector {
public:
    /// Validates power-of-two length and unit norm (within 1e-12).
    explicit StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
        n_qubits_ = detail::log2_dimension(amplitudes_.size(), "StateVector");
        require_within_qubit_cap(n_qubits_, "StateVector");
        if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kStructural) {
            throw std::invalid_argument("StateVector: amplitudes are not normalized");
        }
    }

    StateVector(detail::Trusted, CVector amplitudes)
        : n_qubits_(std::countr_zero(static_cast<std::uint64_t>(amplitudes.size()))),
          amplitudes_(std::move(amplitudes)) {}

    /// Computational basis state |index> on n qubits.
    static StateVector basis(int n_qubits, std::uint64_t index) {
        if (n_qubits < 0) {
            throw std::invalid_argument("StateVector::basis: negative qubit count");
        }
        require_within_qubit_cap(n_qubits, "StateVector::basis");
        const auto dim = std::uint64_t{1} << n_qubits;
        if (index >= dim) {
            throw std::out_of_range("StateVector::basis: index out of range");
        }
        CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(index)) = 1.0;
        return {detail::Trusted{}, std::move(v)};
    }

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const CVector& amplitudes() const { return amplitudes_; }
    Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

private:
    int n_qubits_ = 0;
    CVector amplitudes_;
};

class UnitaryMatrix {
public:
    /// Validates shape and U^dagger U = I within 1e-10 (Frobenius).
    static UnitaryMatrix from_matrix(CMatrix m, double tolerance = tol::kUnitary) {
        if (m.rows() != m.cols()) {
            throw std::invalid_argument("UnitaryMatrix: matrix is not square");
        }
        const int n = detail::log2_dimension(m.rows(), "UnitaryMatrix");
        require_within_qubit_cap(n, "UnitaryMatrix");
        const double defect =
            (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm();
        if (defect > tolerance) {
            throw std::invalid_argument("UnitaryMatrix: not unitary (defect " +
                                        std::to_string(defect) + ")");
        }
        return {detail::Trusted{}, std::move(m)};
    }

    static UnitaryMatrix identity(int n_qubits) {
        require_within_qubit_cap(n_qubits, "UnitaryMatrix::identity");
        const Eigen::Index dim = Eigen::Index{1} << n_qubits;
        return {detail::Trusted{}, CMatrix::Identity(dim, dim)};
    }

    UnitaryMatrix(detail::Trusted, CMatrix m)
        : n_qubits_(std::countr_zero(static_cast<std::uint64_t>(m.rows()))),
          matrix_(std::move(m)) {}

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix& matrix() const { return matrix_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

    UnitaryMatrix operator*(const UnitaryMatrix& rhs) const {
        if (dim() != rhs.dim()) {
            throw std::invalid_argument("UnitaryMatrix product: dimension mismatch");
        }
        return {detail::Trusted{}, matrix_ * rhs.matrix_};
    }

    UnitaryMatrix adjoint() const { return {detail::Trusted{}, matrix_.adjoint()}; }

private:
    int n_qubits_ = 0;
    CMatrix matrix_;
};

class DensityMatrix {
public:
    /// Validates hermiticity and unit trace (1e-12) and eigenvalues >= -1e-10.
    static DensityMatrix from_matrix(CMatrix m) {
        if (m.rows() != m.cols()) {
            throw std::invalid_argument("DensityMatrix: matrix is not square");
        }
        const int n = detail::log2_dimension(m.rows(), "DensityMatrix");
        require_within_qubit_cap(n, "DensityMatrix");
        if ((m - m.adjoint()).norm() > tol::kStructural) {
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        }
        if (std::abs(m.trace() - Complex{1.0, 0.0}) > tol::kStructural) {
            throw std::invalid_argument("DensityMatrix: trace is not 1");
        }
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(m, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -tol::kEigenvalue) {
            throw std::invalid_argument("DensityMatrix: not positive semidefinite");
        }
        return {detail::Trusted{}, std::move(m)};
    }

    DensityMatrix(detail::Trusted, CMatrix m)
        : n_qubits_(std::countr_zero(static_cast<std::uint64_t>(m.rows()))),
          matrix_(std::move(m)) {}

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix& matrix() const { return matrix_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

private:
    int n_qubits_ = 0;
    CMatrix matrix_;
};

/// Kronecker product, left operand on the most significant qubits.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    require_within_qubit_cap(a.n_qubits() + b.n_qubits(), "tensor");
    CVector out = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
    return {detail::Trusted{}, std::move(out)};
}

inline UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    require_within_qubit_cap(a.n_qubits() + b.n_qubits(), "tensor");
    CMatrix out = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
    return {detail::Trusted{}, std::move(out)};
}

/// Left fold of `tensor` over a non-empty list.
template <typename T>
T tensor_all(std::span<const T> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("tensor_all: empty operand list");
    }
    T acc = parts.front();
    for (const auto& p : parts.subspan(1)) {
        acc = tensor(acc, p);
    }
    return acc;
}

inline StateVector apply(const UnitaryMatrix& u, const StateVector& s) {
    if (u.dim() != s.dim()) {
        throw std::invalid_argument("apply: unitary of dimension " + std::to_string(u.dim()) +
                                    " cannot act on state of dimension " +
                                    std::to_string(s.dim()));
    }
    CVector out = u.matrix() * s.amplitudes();
    return {detail::Trusted{}, std::move(out)};
}

inline DensityMatrix to_density(const StateVector& s) {
    CMatrix rho = s.amplitudes() * s.amplitudes().adjoint();
    return {detail::Trusted{}, std::move(rho)};
}

/// Reduced density matrix on the qubits in `keep` (1-based labels). The
/// output's qubit order follows `keep`: keep[0] becomes its most significant
/// bit. Qubits not listed are traced out.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.n_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
    for (int label : keep) {
        if (label < 1 || label > n) {
            throw std::out_of_range("partial_trace: qubit label " + std::to_string(label) +
                                    " out of range 1.." + std::to_string(n));
        }
        if (kept[static_cast<std::size_t>(label)]) {
            throw std::invalid_argument("partial_trace: duplicate qubit label " +
                                        std::to_string(label));
        }
        kept[static_cast<std::size_t>(label)] = true;
    }
    std::vector<int> traced;
    for (int label = 1; label <= n; ++label) {
        if (!kept[static_cast<std::size_t>(label)]) {
            traced.push_back(label);
        }
    }

    // Scatter a k-bit local index onto the full index, local MSB = labels[0].
    auto scatter = [n](std::span<const int> labels) {
        const auto k = labels.size();
        std::vector<Eigen::Index> out(std::size_t{1} << k, 0);
        for (std::size_t local = 0; local < out.size(); ++local) {
            Eigen::Index full = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if ((local >> (k - 1 - j)) & 1U) {
                    full |= Eigen::Index{1} << detail::bit_of(labels[j], n);
                }
            }
            out[local] = full;
        }
        return out;
    };
    const auto keep_offsets = scatter(keep);
    const auto trace_offsets = scatter(traced);

    const auto out_dim = static_cast<Eigen::Index>(keep_offsets.size());
    CMatrix out = CMatrix::Zero(out_dim, out_dim);
    const CMatrix& m = rho.matrix();
    for (Eigen::Index r = 0; r < out_dim; ++r) {
        for (Eigen::Index c = 0; c < out_dim; ++c) {
            Complex sum{0.0, 0.0};
            for (auto t : trace_offsets) {
                sum += m(keep_offsets[static_cast<std::size_t>(r)] | t,
                         keep_offsets[static_cast<std::size_t>(c)] | t);
            }
            out(r, c) = sum;
        }
    }
    return {detail::Trusted{}, std::move(out)};
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

/// tr(rho^2). Computed as the squared Frobenius norm, valid for Hermitian rho.
inline double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

/// Mixedness criterion: purity below 1 - 1e-10.
inline bool is_mixed(const DensityMatrix& rho) { return purity(rho) < 1.0 - tol::kPurity; }

}  // namespace djsim
