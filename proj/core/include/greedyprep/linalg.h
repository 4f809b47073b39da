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

#ifndef GREEDYPREP_LINALG_H
#define GREEDYPREP_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace greedyprep {

using cplx = std::complex<double>;

/// Largest Hilbert-space dimension handled by the kernel (two qubits).
inline constexpr size_t kMaxDim = 4;

/// Tolerance on |1 - <s|s>| accepted when constructing a StateVector.
inline constexpr double kNormTolerance = 1e-10;

/// Tolerance on max|H_ij - conj(H_ji)| accepted when constructing a HermitianMatrix.
inline constexpr double kHermitianTolerance = 1e-12;

/// A normalized pure state over the computational basis, dimension 2 or 4.
class StateVector {
   public:
    /// Throws std::invalid_argument on bad dimension or norm.
    explicit StateVector(std::span<const cplx> amplitudes);
    StateVector(std::initializer_list<cplx> amplitudes);

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static StateVector normalized(std::span<const cplx> amplitudes);
    /// The computational basis state |k> of the given dimension.
    static StateVector basis(size_t dim, size_t k);

    size_t dim() const {
        return dim_;
    }
    const cplx &operator[](size_t k) const {
        return amp_[k];
    }
    std::span<const cplx> amplitudes() const {
        return {amp_.data(), dim_};
    }
    double norm_squared() const;

    bool operator==(const StateVector &other) const;
    std::string str() const;

   private:
    friend class UnitaryMatrix;
    StateVector() = default;

    size_t dim_ = 0;
    std::array<cplx, kMaxDim> amp_{};
};

/// Dense square complex matrix of dimension <= kMaxDim, row-major.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::initializer_list<cplx> row_major);

    static Matrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    cplx &operator()(size_t r, size_t c) {
        return a_[r * kMaxDim + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return a_[r * kMaxDim + c];
    }

    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator*(cplx s) const;
    Matrix adjoint() const;
    /// Kronecker product; dimensions must multiply to <= kMaxDim.
    Matrix kron(const Matrix &rhs) const;

    /// max_{ij} |a_ij - b_ij|.
    double max_abs_diff(const Matrix &other) const;
    std::string str() const;

   private:
    size_t dim_ = 0;
    std::array<cplx, kMaxDim * kMaxDim> a_{};
};

/// Pauli matrices and ladder operators (2x2).
namespace pauli {
Matrix i2();
Matrix x();
Matrix y();
Matrix z();
/// sigma^+ = (sigma_x + i sigma_y) / 2 = |0><1|.
Matrix raise();
/// sigma^- = (sigma_x - i sigma_y) / 2 = |1><0|.
Matrix lower();
}  // namespace pauli

/// A matrix checked to be Hermitian at construction (energy units, hbar = 1).
class HermitianMatrix {
   public:
    /// Throws std::invalid_argument if the input deviates from Hermitian by more than kHermitianTolerance.
    explicit HermitianMatrix(const Matrix &m);

    static HermitianMatrix zero(size_t dim);

    size_t dim() const {
        return m_.dim();
    }
    const Matrix &matrix() const {
        return m_;
    }
    const cplx &operator()(size_t r, size_t c) const {
        return m_(r, c);
    }

   private:
    Matrix m_;
};

/// A propagator. Only produced by expm_hermitian or identity, so it is unitary by construction.
class UnitaryMatrix {
   public:
    static UnitaryMatrix identity(size_t dim);

    size_t dim() const {
        return m_.dim();
    }
    const Matrix &matrix() const {
        return m_;
    }
    const cplx &operator()(size_t r, size_t c) const {
        return m_(r, c);
    }

    /// Throws std::invalid_argument on dimension mismatch.
    StateVector apply(const StateVector &s) const;
    UnitaryMatrix operator*(const UnitaryMatrix &rhs) const;

    /// max-norm of U U^dagger - I.
    double unitarity_error() const;

   private:
    friend UnitaryMatrix expm_hermitian(const HermitianMatrix &h, double t);
    explicit UnitaryMatrix(const Matrix &m) : m_(m) {
    }
    Matrix m_;
};

/// exp(-i H t). 2x2 uses the closed-form Pauli decomposition; 4x4 uses a Hermitian eigendecomposition.
/// Throws std::invalid_argument for t < 0 or non-finite t.
UnitaryMatrix expm_hermitian(const HermitianMatrix &h, double t);

/// U s. Throws std::invalid_argument on dimension mismatch.
inline StateVector apply(const UnitaryMatrix &u, const StateVector &s) {
    return u.apply(s);
}

/// <a|b>.
cplx inner(const StateVector &a, const StateVector &b);

/// |<target|current>|^2. Throws std::invalid_argument on dimension mismatch.
double fidelity(const StateVector &target, const StateVector &current);

}  // namespace greedyprep

#endif
