// Copyright 2026 The greedyprep Authors
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

#include "greedyprep/linalg.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace greedyprep;

namespace {

HermitianMatrix random_hermitian(std::mt19937_64 &rng, size_t dim, double scale) {
    std::normal_distribution<double> n(0, scale);
    Matrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        m(r, r) = n(rng);
        for (size_t c = r + 1; c < dim; c++) {
            cplx v(n(rng), n(rng));
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return HermitianMatrix(m);
}

// Independent reference: scaled Taylor series of exp(-iHt), squared back up.
Matrix taylor_expm(const HermitianMatrix &h, double t) {
    size_t dim = h.dim();
    int squarings = 10;
    Matrix a = h.matrix() * cplx(0, -t / std::pow(2.0, squarings));
    Matrix term = Matrix::identity(dim);
    Matrix sum = Matrix::identity(dim);
    for (int k = 1; k < 30; k++) {
        term = term * a * cplx(1.0 / k, 0);
        sum = sum + term;
    }
    for (int k = 0; k < squarings; k++) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace

TEST(linalg, state_vector_validation) {
    ASSERT_THROW(StateVector({1, 1}), std::invalid_argument);
    ASSERT_THROW(StateVector({1, 0, 0}), std::invalid_argument);
    ASSERT_THROW(StateVector({1}), std::invalid_argument);
    ASSERT_NO_THROW(StateVector({0, 1}));
    ASSERT_THROW(StateVector::basis(2, 2), std::invalid_argument);

    std::array<cplx, 2> raw{3, cplx(0, 4)};
    auto s = StateVector::normalized(raw);
    ASSERT_NEAR(s[0].real(), 0.6, 1e-15);
    ASSERT_NEAR(s[1].imag(), 0.8, 1e-15);
    std::array<cplx, 2> zero{0, 0};
    ASSERT_THROW(StateVector::normalized(zero), std::invalid_argument);
}

TEST(linalg, hermitian_validation) {
    Matrix m(2, {0, 1, 0, 0});
    ASSERT_THROW(HermitianMatrix{m}, std::invalid_argument);
    ASSERT_NO_THROW(HermitianMatrix(pauli::y()));
    ASSERT_THROW(expm_hermitian(HermitianMatrix(pauli::x()), -1), std::invalid_argument);
}

TEST(linalg, expm_closed_forms) {
    // exp(-i sigma_z pi/2) = diag(-i, i).
    auto uz = expm_hermitian(HermitianMatrix(pauli::z()), std::numbers::pi / 2);
    ASSERT_LT(std::abs(uz(0, 0) - cplx(0, -1)), 1e-15);
    ASSERT_LT(std::abs(uz(1, 1) - cplx(0, 1)), 1e-15);
    ASSERT_LT(std::abs(uz(0, 1)), 1e-15);

    double t = std::numbers::pi / 5;
    auto ux = expm_hermitian(HermitianMatrix(pauli::x()), t);
    ASSERT_LT(std::abs(ux(0, 0) - std::cos(t)), 1e-15);
    ASSERT_LT(std::abs(ux(0, 1) - cplx(0, -std::sin(t))), 1e-15);

    auto u0 = expm_hermitian(HermitianMatrix::zero(4), 3.0);
    ASSERT_LT(u0.matrix().max_abs_diff(Matrix::identity(4)), 1e-15);
}

TEST(linalg, expm_matches_taylor_reference) {
    std::mt19937_64 rng(11);
    for (size_t dim : {2, 4}) {
        for (int k = 0; k < 50; k++) {
            auto h = random_hermitian(rng, dim, 1.5);
            double t = 0.1 + 0.05 * k;
            ASSERT_LT(expm_hermitian(h, t).matrix().max_abs_diff(taylor_expm(h, t)), 1e-10) << h.matrix().str();
        }
    }
}

TEST(linalg, expm_is_unitary) {
    std::mt19937_64 rng(12);
    for (size_t dim : {2, 4}) {
        for (int k = 0; k < 200; k++) {
            auto u = expm_hermitian(random_hermitian(rng, dim, 2.0), 0.7);
            ASSERT_LT(u.unitarity_error(), 1e-12);
        }
    }
}

TEST(linalg, expm_composes) {
    std::mt19937_64 rng(13);
    for (size_t dim : {2, 4}) {
        for (int k = 0; k < 20; k++) {
            auto h = random_hermitian(rng, dim, 1.0);
            auto whole = expm_hermitian(h, 1.3);
            auto split = expm_hermitian(h, 0.5) * expm_hermitian(h, 0.8);
            ASSERT_LT(whole.matrix().max_abs_diff(split.matrix()), 1e-10);
        }
    }
}

TEST(linalg, degenerate_spectrum) {
    // sigma_z (x) I has doubly degenerate eigenvalues.
    auto h = HermitianMatrix(pauli::z().kron(pauli::i2()));
    double t = 0.9;
    auto u = expm_hermitian(h, t);
    ASSERT_LT(u.matrix().max_abs_diff(taylor_expm(h, t)), 1e-12);
    ASSERT_LT(u.unitarity_error(), 1e-12);
}

TEST(linalg, fidelity_properties) {
    std::mt19937_64 rng(14);
    std::normal_distribution<double> n;
    for (size_t dim : {2, 4}) {
        for (int k = 0; k < 20; k++) {
            std::array<cplx, 4> a{}, b{};
            for (size_t i = 0; i < dim; i++) {
                a[i] = {n(rng), n(rng)};
                b[i] = {n(rng), n(rng)};
            }
            auto sa = StateVector::normalized({a.data(), dim});
            auto sb = StateVector::normalized({b.data(), dim});
            double f = fidelity(sa, sb);
            ASSERT_GE(f, 0);
            ASSERT_LE(f, 1 + 1e-15);
            ASSERT_NEAR(f, fidelity(sb, sa), 1e-15);
            ASSERT_NEAR(fidelity(sa, sa), 1, 1e-14);

            std::array<cplx, 4> rotated{};
            cplx phase = std::polar(1.0, 0.37 * k);
            for (size_t i = 0; i < dim; i++) {
                rotated[i] = b[i] * phase;
            }
            ASSERT_NEAR(fidelity(sa, StateVector::normalized({rotated.data(), dim})), f, 1e-14);
        }
    }
    ASSERT_EQ(fidelity(StateVector::basis(2, 0), StateVector::basis(2, 1)), 0);
    ASSERT_THROW(fidelity(StateVector::basis(2, 0), StateVector::basis(4, 0)), std::invalid_argument);
}

TEST(linalg, apply_dimension_mismatch) {
    auto u = UnitaryMatrix::identity(4);
    ASSERT_THROW(u.apply(StateVector::basis(2, 0)), std::invalid_argument);
    ASSERT_EQ(u.apply(StateVector::basis(4, 3)), StateVector::basis(4, 3));
}

TEST(linalg, kron_layout) {
    // |1> (x) |0> = |10> = index 2 when the left factor is most significant.
    Matrix flip = pauli::x().kron(pauli::i2());
    ASSERT_EQ(flip(2, 0), cplx(1));
    ASSERT_EQ(flip(0, 2), cplx(1));
    ASSERT_THROW(pauli::x().kron(Matrix::identity(4)), std::invalid_argument);
}
