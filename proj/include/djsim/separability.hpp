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

// Tensor factorizability of oracles and pure states.
//
// An operator U on qubits L u R is a product A (x) B across the cut iff its
// realignment
//
//     M[(i, i'), (j, j')] = U[(i, j), (i', j')]
//
// has rank one, where (i, j) splits a row index into its L and R bits. The
// singular values of M are the operator Schmidt coefficients. A state is a
// product across a cut iff the reduced density matrix on either side is pure.

#pragma once

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "djsim/dj.hpp"
#include "djsim/quantum_state.hpp"

namespace djsim {

/// Split of qubits 1..n into two non-empty, disjoint, covering label lists.
class Bipartition {
public:
    Bipartition(int n_qubits, std::vector<int> left, std::vector<int> right)
        : n_qubits_(n_qubits), left_(std::move(left)), right_(std::move(right)) {
        if (left_.empty() || right_.empty()) {
            throw std::invalid_argument("Bipartition: both sides must be non-empty");
        }
        std::vector<int> seen(static_cast<std::size_t>(n_qubits_) + 1, 0);
        for (const auto* side : {&left_, &right_}) {
            for (int label : *side) {
                if (label < 1 || label > n_qubits_) {
                    throw std::invalid_argument("Bipartition: label " + std::to_string(label) +
                                                " out of range 1.." + std::to_string(n_qubits_));
                }
                if (seen[static_cast<std::size_t>(label)]++ != 0) {
                    throw std::invalid_argument("Bipartition: label " + std::to_string(label) +
                                                " appears twice");
                }
            }
        }
        if (left_.size() + right_.size() != static_cast<std::size_t>(n_qubits_)) {
            throw std::invalid_argument("Bipartition: sides do not cover all qubits");
        }
    }

    /// {1..k} | {k+1..n}
    static Bipartition split_after(int n_qubits, int k) {
        std::vector<int> left;
        std::vector<int> right;
        for (int q = 1; q <= n_qubits; ++q) {
            (q <= k ? left : right).push_back(q);
        }
        return {n_qubits, std::move(left), std::move(right)};
    }

    int n_qubits() const { return n_qubits_; }
    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }

    std::string to_string() const {
        auto side = [](const std::vector<int>& v) {
            std::string s = "{";
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? "," : "") + std::to_string(v[i]);
            }
            return s + "}";
        };
        return side(left_) + "|" + side(right_);
    }

private:
    int n_qubits_;
    std::vector<int> left_;
    std::vector<int> right_;
};

/// Cuts {1..k}|{k+1..n} for k = 1..n-1.
inline std::vector<Bipartition> adjacent_cuts(int n) {
    std::vector<Bipartition> cuts;
    for (int k = 1; k < n; ++k) {
        cuts.push_back(Bipartition::split_after(n, k));
    }
    return cuts;
}

/// Every unordered bipartition, listed with qubit 1 on the left.
inline std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> cuts;
    if (n < 2) {
        return cuts;
    }
    // Bit q-2 of `mask` puts qubit q on the left; qubit 1 always is.
    for (unsigned mask = 0; mask + 1 < (1U << (n - 1)); ++mask) {
        std::vector<int> left{1};
        std::vector<int> right;
        for (int q = 2; q <= n; ++q) {
            ((mask >> (q - 2)) & 1U ? left : right).push_back(q);
        }
        cuts.emplace_back(n, std::move(left), std::move(right));
    }
    return cuts;
}

namespace detail {

// Local index (over `labels`, MSB first) of the bits of a full index.
inline Eigen::Index gather(Eigen::Index full, const std::vector<int>& labels, int n) {
    Eigen::Index local = 0;
    for (int label : labels) {
        local = (local << 1) | ((full >> bit_of(label, n)) & 1);
    }
    return local;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace detail

/// M[(i,i'),(j,j')] = U[(i,j),(i',j')], left indices row-major in M's rows.
inline CMatrix realign(const CMatrix& u, const Bipartition& cut) {
    const int n = cut.n_qubits();
    if (u.rows() != (Eigen::Index{1} << n) || u.cols() != u.rows()) {
        throw std::invalid_argument("realign: operator dimension " + std::to_string(u.rows()) +
                                    " inconsistent with a " + std::to_string(n) + "-qubit cut");
    }
    const Eigen::Index dl = Eigen::Index{1} << cut.left().size();
    const Eigen::Index dr = Eigen::Index{1} << cut.right().size();
    CMatrix m(dl * dl, dr * dr);
    for (Eigen::Index row = 0; row < u.rows(); ++row) {
        const auto il = detail::gather(row, cut.left(), n);
        const auto ir = detail::gather(row, cut.right(), n);
        for (Eigen::Index col = 0; col < u.cols(); ++col) {
            const auto jl = detail::gather(col, cut.left(), n);
            const auto jr = detail::gather(col, cut.right(), n);
            m(il * dl + jl, ir * dr + jr) = u(row, col);
        }
    }
    return m;
}

/// Operator Schmidt coefficients across `cut`, nonincreasing.
inline std::vector<double> operator_schmidt(const UnitaryMatrix& u, const Bipartition& cut) {
    const CMatrix m = realign(u.matrix(), cut);
    Eigen::BDCSVD<CMatrix> svd(m);
    return detail::to_std(svd.singularValues());
}

inline int schmidt_rank(const std::vector<double>& values, double threshold = tol::kSchmidtRank) {
    return static_cast<int>(std::count_if(values.begin(), values.end(),
                                          [threshold](double v) { return v > threshold; }));
}

/// Best Frobenius approximation of an operator by left (x) right across a
/// cut, read off the leading singular triple of the realignment.
struct KroneckerSplit {
    CMatrix left;
    CMatrix right;
    std::vector<double> schmidt_values;
    double residual = 0.0;  // sqrt of the discarded squared singular values
};

inline KroneckerSplit nearest_kronecker_product(const CMatrix& u, const Bipartition& cut) {
    const CMatrix m = realign(u, cut);
    Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const Eigen::Index dl = Eigen::Index{1} << cut.left().size();
    const Eigen::Index dr = Eigen::Index{1} << cut.right().size();
    const double root = std::sqrt(s(0));

    KroneckerSplit out;
    out.left.resize(dl, dl);
    out.right.resize(dr, dr);
    for (Eigen::Index i = 0; i < dl; ++i) {
        for (Eigen::Index j = 0; j < dl; ++j) {
            out.left(i, j) = root * svd.matrixU()(i * dl + j, 0);
        }
    }
    for (Eigen::Index i = 0; i < dr; ++i) {
        for (Eigen::Index j = 0; j < dr; ++j) {
            out.right(i, j) = root * std::conj(svd.matrixV()(i * dr + j, 0));
        }
    }
    out.schmidt_values = detail::to_std(s);
    out.residual = std::sqrt(std::max(0.0, s.tail(s.size() - 1).squaredNorm()));
    return out;
}

/// Peels qubits off one at a time with nearest_kronecker_product and reports
/// how well the resulting single-qubit chain reproduces the input. Exact
/// (error ~ 0) iff the operator is a full product of single-qubit factors.
struct SvdFactorization {
    std::vector<CMatrix> factors;
    double reconstruction_error = 0.0;
};

inline SvdFactorization svd_factorize(const UnitaryMatrix& u) {
    SvdFactorization out;
    CMatrix rest = u.matrix();
    for (int m = u.n_qubits(); m > 1; --m) {
        auto split = nearest_kronecker_product(rest, Bipartition::split_after(m, 1));
        out.factors.push_back(std::move(split.left));
        rest = std::move(split.right);
    }
    out.factors.push_back(rest);

    CMatrix recon = out.factors.front();
    for (std::size_t i = 1; i < out.factors.size(); ++i) {
        recon = Eigen::kroneckerProduct(recon, out.factors[i]).eval();
    }
    out.reconstruction_error = (u.matrix() - recon).norm();
    return out;
}

enum class FactorStatus { Product, Entangling };

inline const char* to_string(FactorStatus s) {
    return s == FactorStatus::Product ? "product" : "entangling";
}

struct FactorizationResult {
    FactorStatus status = FactorStatus::Entangling;
    /// One 2x2 factor per qubit, qubit 1 first. Present iff Product.
    std::optional<std::vector<UnitaryMatrix>> factors;
    /// Present iff Product.
    std::optional<Complex> global_phase;
    /// Schmidt coefficients across {1}|{2..n}. For a single qubit there is no
    /// cut and this holds the lone coefficient ||U||_F.
    std::vector<double> schmidt_values;
    /// Schmidt coefficients across each adjacent cut {1..k}|{k+1..n}.
    std::vector<std::vector<double>> cut_schmidt_values;

    /// global_phase * factor_1 (x) ... (x) factor_n. Requires Product.
    UnitaryMatrix reconstruct() const {
        if (!factors || !global_phase) {
            throw std::logic_error("FactorizationResult::reconstruct: not a product");
        }
        auto parts = std::span<const UnitaryMatrix>(*factors);
        CMatrix m = *global_phase * tensor_all(parts).matrix();
        return {detail::Trusted{}, std::move(m)};
    }
};

/// Product iff f is affine over GF(2); factors are read off the affine form
/// as diag(1, (-1)^a_j) with global phase (-1)^b. Schmidt coefficients are
/// always filled in so callers can cross-check.
inline FactorizationResult factorize_oracle(const PhaseOracle& oracle) {
    const int n = oracle.n_qubits();
    const UnitaryMatrix u = oracle.unitary();

    FactorizationResult out;
    if (n == 1) {
        out.schmidt_values = {u.matrix().norm()};
    } else {
        for (const auto& cut : adjacent_cuts(n)) {
            out.cut_schmidt_values.push_back(operator_schmidt(u, cut));
        }
        out.schmidt_values = out.cut_schmidt_values.front();
    }

    const auto form = is_affine(oracle.function());
    if (!form) {
        out.status = FactorStatus::Entangling;
        return out;
    }
    out.status = FactorStatus::Product;
    out.global_phase = Complex{form->b ? -1.0 : 1.0, 0.0};
    std::vector<UnitaryMatrix> factors;
    for (auto bit : form->a) {
        CMatrix d = CMatrix::Identity(2, 2);
        d(1, 1) = bit ? -1.0 : 1.0;
        factors.emplace_back(detail::Trusted{}, std::move(d));
    }
    out.factors = std::move(factors);
    return out;
}

struct EntanglementWitness {
    bool entangled = false;
    double purity = 1.0;
};

/// Purity of the reduced state on cut.right(); mixed means entangled.
inline EntanglementWitness state_is_entangled(const StateVector& s, const Bipartition& cut) {
    if (cut.n_qubits() != s.n_qubits()) {
        throw std::invalid_argument("state_is_entangled: cut is for " + std::to_string(cut.n_qubits()) +
                                    " qubits, state has " + std::to_string(s.n_qubits()));
    }
    const auto reduced = partial_trace(to_density(s), cut.right());
    const double p = purity(reduced);
    return {p < 1.0 - tol::kPurity, p};
}

/// Per-function outcome of the three-way factorizability check.
struct OracleRecord {
    BooleanFunction function;
    PromiseClass promise;
    FactorizationResult factorization;
    bool affine = false;                  // is_affine route
    bool schmidt_product = false;         // rank 1 on every adjacent cut
    bool svd_product = false;             // SVD peel reconstructs the oracle
    double svd_reconstruction_error = 0.0;
    double factor_reconstruction_error = 0.0;  // only meaningful for Product

    bool consistent() const {
        const bool product = factorization.status == FactorStatus::Product;
        if (product != affine || product != schmidt_product || product != svd_product) {
            return false;
        }
        return !product || factor_reconstruction_error < tol::kUnitary;
    }
};

struct OracleCensus {
    int n_qubits = 0;
    int product = 0;
    int entangling = 0;
    std::vector<OracleRecord> records;  // sorted by truth table

    bool all_consistent() const {
        return std::all_of(records.begin(), records.end(),
                           [](const OracleRecord& r) { return r.consistent(); });
    }
};

inline OracleRecord classify_oracle(const BooleanFunction& f) {
    const PhaseOracle oracle = build_phase_oracle(f);
    const UnitaryMatrix u = oracle.unitary();
    auto result = factorize_oracle(oracle);

    OracleRecord rec{f, classify_function(f), std::move(result)};
    rec.affine = is_affine(f).has_value();
    rec.schmidt_product = std::all_of(
        rec.factorization.cut_schmidt_values.begin(), rec.factorization.cut_schmidt_values.end(),
        [](const std::vector<double>& v) { return schmidt_rank(v) == 1; });
    const auto svd = svd_factorize(u);
    rec.svd_reconstruction_error = svd.reconstruction_error;
    rec.svd_product = svd.reconstruction_error < tol::kUnitary;
    if (rec.factorization.status == FactorStatus::Product) {
        rec.factor_reconstruction_error = (u.matrix() - rec.factorization.reconstruct().matrix()).norm();
    }
    return rec;
}

inline OracleCensus classify_all_oracles(int n) {
    OracleCensus census;
    census.n_qubits = n;
    for (const auto& f : enumerate_promise_functions(n)) {
        auto rec = classify_oracle(f);
        (rec.factorization.status == FactorStatus::Product ? census.product : census.entangling)++;
        census.records.push_back(std::move(rec));
    }
    std::sort(census.records.begin(), census.records.end(),
              [](const OracleRecord& a, const OracleRecord& b) {
                  return a.function.table() < b.function.table();
              });
    return census;
}

}  // namespace djsim
