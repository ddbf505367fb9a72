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

#include "djsim/separability.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace djsim;

namespace {

BooleanFunction fn(const char* table) { return BooleanFunction::parse(table); }

UnitaryMatrix diag_unitary(std::initializer_list<double> d) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double v : d) m(i, i) = v, ++i;
    return UnitaryMatrix::from_matrix(m);
}

oracle::Mat to_oracle(const CMatrix& m) {
    oracle::Mat out = oracle::zeros(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    return out;
}

double sum_squares(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0, [](double acc, double x) { return acc + x * x; });
}

StateVector dj_midpoint(const BooleanFunction& f) {
    const int n = f.n_bits();
    return apply(build_phase_oracle(f).unitary(), apply(hadamard_n(n), StateVector::basis(n, 0)));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt8 = 1.0 / std::sqrt(8.0);

}  // namespace

TEST(Bipartition, Validation) {
    EXPECT_NO_THROW(Bipartition(3, {1}, {2, 3}));
    EXPECT_NO_THROW(Bipartition(3, {3, 1}, {2}));
    EXPECT_THROW(Bipartition(3, {}, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(Bipartition(3, {1}, {2}), std::invalid_argument);
    EXPECT_THROW(Bipartition(3, {1, 2}, {2, 3}), std::invalid_argument);
    EXPECT_THROW(Bipartition(3, {0}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(Bipartition(2, {1}, {3}), std::invalid_argument);
}

TEST(Bipartition, Enumerations) {
    EXPECT_EQ(adjacent_cuts(1).size(), 0u);
    EXPECT_EQ(adjacent_cuts(3).size(), 2u);
    EXPECT_EQ(adjacent_cuts(3)[1].to_string(), "{1,2}|{3}");
    EXPECT_EQ(all_bipartitions(3).size(), 3u);
    EXPECT_EQ(all_bipartitions(4).size(), 7u);
}

TEST(OperatorSchmidt, TwoQubitHadamardIsRankOne) {
    for (const auto& cut : all_bipartitions(2)) {
        const auto s = operator_schmidt(hadamard_n(2), cut);
        EXPECT_EQ(schmidt_rank(s), 1);
        EXPECT_NEAR(s[0], 2.0, 1e-12);
    }
}

TEST(OperatorSchmidt, EntanglingThreeQubitOracle) {
    const auto u = build_phase_oracle(fn("01001110")).unitary();
    const auto s = operator_schmidt(u, Bipartition(3, {1}, {2, 3}));
    EXPECT_GT(schmidt_rank(s), 1);
}

TEST(OperatorSchmidt, ControlledZHasTwoEqualValues) {
    const auto u = diag_unitary({1, 1, 1, -1});
    const auto s = operator_schmidt(u, Bipartition(2, {1}, {2}));
    ASSERT_EQ(schmidt_rank(s), 2);
    EXPECT_NEAR(s[0], std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s[1], std::sqrt(2.0), 1e-12);

    // Independent route: rank by elimination, and sigma_1^2 + sigma_2^2 = 4
    // with sigma_1^4 + sigma_2^4 = ||M M^H||_F^2 = 8 forces both to 2.
    const auto m = oracle::realign_contiguous(to_oracle(u.matrix()), 2, 1);
    EXPECT_EQ(oracle::rank(m), 2);
    EXPECT_NEAR(oracle::frobenius_sq(m), 4.0, 1e-12);
    oracle::Mat mh = oracle::zeros(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) mh[i][j] = std::conj(m[j][i]);
    EXPECT_NEAR(oracle::frobenius_sq(oracle::matmul(m, mh)), 8.0, 1e-12);
}

TEST(OperatorSchmidt, RealignmentMatchesBruteForce) {
    const auto u = build_phase_oracle(fn("01001110")).unitary();
    for (int k = 1; k < 3; ++k) {
        const auto got = to_oracle(realign(u.matrix(), Bipartition::split_after(3, k)));
        EXPECT_LT(oracle::max_abs_diff(got, oracle::realign_contiguous(to_oracle(u.matrix()), 3, k)), 1e-15);
        EXPECT_EQ(schmidt_rank(operator_schmidt(u, Bipartition::split_after(3, k))),
                  oracle::rank(oracle::realign_contiguous(to_oracle(u.matrix()), 3, k)));
    }
}

TEST(OperatorSchmidt, RejectsInconsistentDimensions) {
    EXPECT_THROW(operator_schmidt(hadamard_n(2), Bipartition(3, {1}, {2, 3})), std::invalid_argument);
}

TEST(OperatorSchmidt, FrobeniusNormConservation) {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& cut : all_bipartitions(n)) {
            EXPECT_NEAR(sum_squares(operator_schmidt(hadamard_n(n), cut)), std::pow(2.0, n), 1e-9);
            for (const auto& f : enumerate_promise_functions(n))
                EXPECT_NEAR(sum_squares(operator_schmidt(build_phase_oracle(f).unitary(), cut)), std::pow(2.0, n), 1e-9);
        }
    }
}

TEST(NearestKronecker, RecoversProductFactors) {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> normal;
    auto random_matrix = [&](int d) {
        CMatrix m(d, d);
        for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = {normal(rng), normal(rng)};
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = random_matrix(2);
        const CMatrix b = random_matrix(4);
        const CMatrix u = Eigen::kroneckerProduct(a, b).eval();
        const auto split = nearest_kronecker_product(u, Bipartition::split_after(3, 1));
        EXPECT_LT(split.residual, 1e-10);
        EXPECT_LT((CMatrix(Eigen::kroneckerProduct(split.left, split.right)) - u).norm(), 1e-10);
    }
}

TEST(FactorizeOracle, TwoBitFactorizations) {
    const auto r2 = factorize_oracle(build_phase_oracle(fn("0101")));
    ASSERT_EQ(r2.status, FactorStatus::Product);
    EXPECT_EQ(*r2.global_phase, Complex(1.0));
    EXPECT_EQ((*r2.factors)[0].matrix(), CMatrix::Identity(2, 2));
    EXPECT_EQ((*r2.factors)[1].matrix(), diag_unitary({1, -1}).matrix());

    const auto r4 = factorize_oracle(build_phase_oracle(fn("0110")));
    ASSERT_EQ(r4.status, FactorStatus::Product);
    EXPECT_EQ((*r4.factors)[0].matrix(), diag_unitary({1, -1}).matrix());
    EXPECT_EQ((*r4.factors)[1].matrix(), diag_unitary({1, -1}).matrix());
}

TEST(FactorizeOracle, ThreeBitEntanglingExample) {
    const auto r = factorize_oracle(build_phase_oracle(fn("01001110")));
    EXPECT_EQ(r.status, FactorStatus::Entangling);
    EXPECT_FALSE(r.factors);
    EXPECT_FALSE(r.global_phase);
    EXPECT_GT(schmidt_rank(r.schmidt_values), 1);
    EXPECT_THROW(r.reconstruct(), std::logic_error);
}

TEST(FactorizeOracle, SingleQubitHasNoCut) {
    const auto r = factorize_oracle(build_phase_oracle(fn("10")));
    EXPECT_EQ(r.status, FactorStatus::Product);
    ASSERT_EQ(r.schmidt_values.size(), 1u);
    EXPECT_NEAR(r.schmidt_values[0], std::sqrt(2.0), 1e-15);
    EXPECT_EQ(*r.global_phase, Complex(-1.0));
}

TEST(FactorizeOracle, ThreeWayAgreementAndReconstruction) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& f : enumerate_promise_functions(n)) {
            const auto rec = classify_oracle(f);
            EXPECT_TRUE(rec.consistent()) << f.to_string();
            const bool product = rec.factorization.status == FactorStatus::Product;
            EXPECT_EQ(product, oracle::brute_affine(oracle::table_of(std::stoull(f.to_string(), nullptr, 2), n), n) >= 0);
            if (product) {
                EXPECT_LT(rec.factor_reconstruction_error, 1e-10);
                const Complex phase = *rec.factorization.global_phase;
                EXPECT_TRUE(phase == Complex(1.0) || phase == Complex(-1.0));
            }
        }
    }
}

TEST(StateIsEntangled, Examples) {
    const CVector sample = (CVector(8) << 1, 1, -1, 1, -1, -1, -1, 1).finished() * kInvSqrt8;
    const auto w = state_is_entangled(StateVector(sample), Bipartition(3, {1}, {2, 3}));
    EXPECT_TRUE(w.entangled);
    EXPECT_NEAR(w.purity, 0.5, 1e-12);

    const auto product = tensor(StateVector((CVector(2) << kInvSqrt2, kInvSqrt2).finished()), StateVector::basis(1, 1));
    const auto p = state_is_entangled(product, Bipartition(2, {1}, {2}));
    EXPECT_FALSE(p.entangled);
    EXPECT_NEAR(p.purity, 1.0, 1e-12);

    const auto bell = StateVector((CVector(4) << kInvSqrt2, 0, 0, kInvSqrt2).finished());
    const auto b = state_is_entangled(bell, Bipartition(2, {1}, {2}));
    EXPECT_TRUE(b.entangled);
    EXPECT_NEAR(b.purity, 0.5, 1e-12);
}

TEST(StateIsEntangled, RejectsMismatchedCut) {
    EXPECT_THROW(state_is_entangled(StateVector::basis(2, 0), Bipartition(3, {1}, {2, 3})), std::invalid_argument);
}

TEST(StateIsEntangled, EntanglingOraclesEntangleTheUniformState) {
    for (const auto& f : enumerate_promise_functions(3)) {
        const auto s = dj_midpoint(f);
        const bool product = factorize_oracle(build_phase_oracle(f)).status == FactorStatus::Product;
        bool any = false;
        for (const auto& cut : all_bipartitions(3)) any = any || state_is_entangled(s, cut).entangled;
        EXPECT_EQ(any, !product) << f.to_string();
    }
}

TEST(ClassifyAllOracles, Counts) {
    const auto c1 = classify_all_oracles(1);
    EXPECT_EQ(c1.product, 4);
    EXPECT_EQ(c1.entangling, 0);
    const auto c2 = classify_all_oracles(2);
    EXPECT_EQ(c2.product, 8);
    EXPECT_EQ(c2.entangling, 0);
    const auto c3 = classify_all_oracles(3);
    EXPECT_EQ(c3.product, 16);
    EXPECT_EQ(c3.entangling, 56);
    EXPECT_TRUE(c3.all_consistent());

    int brute_product = 0;
    for (const auto& t : oracle::promise_tables(3))
        brute_product += oracle::brute_affine(oracle::table_of(std::stoull(t, nullptr, 2), 3), 3) >= 0;
    EXPECT_EQ(brute_product, 16);
}

TEST(ClassifyAllOracles, RecordsSortedByTable) {
    const auto c = classify_all_oracles(3);
    for (std::size_t i = 1; i < c.records.size(); ++i)
        EXPECT_LT(c.records[i - 1].function.to_string(), c.records[i].function.to_string());
}

TEST(ClassifyAllOracles, FourQubitsStaysConsistent) {
    const auto c = classify_all_oracles(4);
    EXPECT_EQ(c.product + c.entangling, 12872);
    EXPECT_EQ(c.product, 32);  // 2^5 - 2 balanced affine + 2 constants
    EXPECT_TRUE(c.all_consistent());
}
