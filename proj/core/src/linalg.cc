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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace greedyprep {

namespace {

void check_dim(size_t dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

std::string format_cplx(cplx z) {
    std::ostringstream out;
    out.precision(6);
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

}  // namespace

StateVector::StateVector(std::span<const cplx> amplitudes) {
    check_dim(amplitudes.size());
    dim_ = amplitudes.size();
    for (size_t k = 0; k < dim_; k++) {
        amp_[k] = amplitudes[k];
    }
    double n = norm_squared();
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("state vector is not normalized (norm^2 = " + std::to_string(n) + ")");
    }
}

StateVector::StateVector(std::initializer_list<cplx> amplitudes)
    : StateVector(std::span<const cplx>(amplitudes.begin(), amplitudes.size())) {
}

StateVector StateVector::normalized(std::span<const cplx> amplitudes) {
    check_dim(amplitudes.size());
    double n = 0;
    for (const auto &a : amplitudes) {
        n += std::norm(a);
    }
    if (!(n > 0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite amplitude vector");
    }
    double scale = 1.0 / std::sqrt(n);
    StateVector s;
    s.dim_ = amplitudes.size();
    for (size_t k = 0; k < s.dim_; k++) {
        s.amp_[k] = amplitudes[k] * scale;
    }
    return s;
}

StateVector StateVector::basis(size_t dim, size_t k) {
    check_dim(dim);
    if (k >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
    }
    StateVector s;
    s.dim_ = dim;
    s.amp_[k] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double n = 0;
    for (size_t k = 0; k < dim_; k++) {
        n += std::norm(amp_[k]);
    }
    return n;
}

bool StateVector::operator==(const StateVector &other) const {
    if (dim_ != other.dim_) {
        return false;
    }
    for (size_t k = 0; k < dim_; k++) {
        if (amp_[k] != other.amp_[k]) {
            return false;
        }
    }
    return true;
}

std::string StateVector::str() const {
    std::string out = "[";
    for (size_t k = 0; k < dim_; k++) {
        if (k) {
            out += ", ";
        }
        out += format_cplx(amp_[k]);
    }
    return out + "]";
}

Matrix::Matrix(size_t dim) : dim_(dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw std::invalid_argument("matrix dimension out of range: " + std::to_string(dim));
    }
}

Matrix::Matrix(size_t dim, std::initializer_list<cplx> row_major) : Matrix(dim) {
    if (row_major.size() != dim * dim) {
        throw std::invalid_argument("matrix initializer has wrong number of entries");
    }
    size_t k = 0;
    for (const auto &v : row_major) {
        (*this)(k / dim, k % dim) = v;
        k++;
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            cplx acc = 0;
            for (size_t k = 0; k < dim_; k++) {
                acc += (*this)(r, k) * rhs(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix sum dimension mismatch");
    }
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(r, c) = (*this)(r, c) + rhs(r, c);
        }
    }
    return out;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(r, c) = (*this)(r, c) * s;
        }
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(r, c) = std::conj((*this)(c, r));
        }
    }
    return out;
}

Matrix Matrix::kron(const Matrix &rhs) const {
    size_t d = dim_ * rhs.dim_;
    Matrix out(d);
    for (size_t r1 = 0; r1 < dim_; r1++) {
        for (size_t c1 = 0; c1 < dim_; c1++) {
            for (size_t r2 = 0; r2 < rhs.dim_; r2++) {
                for (size_t c2 = 0; c2 < rhs.dim_; c2++) {
                    out(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = (*this)(r1, c1) * rhs(r2, c2);
                }
            }
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix comparison dimension mismatch");
    }
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - other(r, c)));
        }
    }
    return worst;
}

std::string Matrix::str() const {
    std::string out;
    for (size_t r = 0; r < dim_; r++) {
        out += r ? "\n[" : "[";
        for (size_t c = 0; c < dim_; c++) {
            if (c) {
                out += ", ";
            }
            out += format_cplx((*this)(r, c));
        }
        out += "]";
    }
    return out;
}

namespace pauli {
Matrix i2() {
    return Matrix::identity(2);
}
Matrix x() {
    return Matrix(2, {0, 1, 1, 0});
}
Matrix y() {
    return Matrix(2, {0, cplx(0, -1), cplx(0, 1), 0});
}
Matrix z() {
    return Matrix(2, {1, 0, 0, -1});
}
Matrix raise() {
    return Matrix(2, {0, 1, 0, 0});
}
Matrix lower() {
    return Matrix(2, {0, 0, 1, 0});
}
}  // namespace pauli

HermitianMatrix::HermitianMatrix(const Matrix &m) : m_(m) {
    check_dim(m.dim());
    double asym = m.max_abs_diff(m.adjoint());
    if (!(asym <= kHermitianTolerance)) {
        throw std::invalid_argument("matrix is not Hermitian (max asymmetry " + std::to_string(asym) + ")");
    }
}

HermitianMatrix HermitianMatrix::zero(size_t dim) {
    return HermitianMatrix(Matrix(dim));
}

UnitaryMatrix UnitaryMatrix::identity(size_t dim) {
    check_dim(dim);
    return UnitaryMatrix(Matrix::identity(dim));
}

StateVector UnitaryMatrix::apply(const StateVector &s) const {
    size_t d = m_.dim();
    if (d != s.dim()) {
        throw std::invalid_argument("cannot apply a " + std::to_string(d) + "x" + std::to_string(d) +
                                    " propagator to a state of dimension " + std::to_string(s.dim()));
    }
    StateVector out;
    out.dim_ = d;
    for (size_t r = 0; r < d; r++) {
        cplx acc = 0;
        for (size_t c = 0; c < d; c++) {
            acc += m_(r, c) * s.amp_[c];
        }
        out.amp_[r] = acc;
    }
    return out;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &rhs) const {
    return UnitaryMatrix(m_ * rhs.m_);
}

double UnitaryMatrix::unitarity_error() const {
    return (m_ * m_.adjoint()).max_abs_diff(Matrix::identity(m_.dim()));
}

namespace {

// H = c0 I + c . sigma  =>  exp(-iHt) = e^{-i c0 t} (cos(|c|t) I - i sin(|c|t) (c/|c|) . sigma).
Matrix expm_pauli(const Matrix &h, double t) {
    double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    double cz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    double cx = 0.5 * (h(1, 0).real() + h(0, 1).real());
    double cy = 0.5 * (h(1, 0).imag() - h(0, 1).imag());
    double c = std::sqrt(cx * cx + cy * cy + cz * cz);
    double cs = std::cos(c * t);
    // sin(|c|t)/|c|, finite as |c| -> 0.
    double sinc = c > 0 ? std::sin(c * t) / c : t;
    cplx phase = std::polar(1.0, -c0 * t);
    const cplx i(0, 1);
    Matrix u(2);
    u(0, 0) = phase * (cs - i * sinc * cz);
    u(1, 1) = phase * (cs + i * sinc * cz);
    u(0, 1) = phase * (-i * sinc * cplx(cx, -cy));
    u(1, 0) = phase * (-i * sinc * cplx(cx, cy));
    return u;
}

Matrix expm_eigen(const Matrix &h, double t) {
    size_t d = h.dim();
    using SmallMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;
    SmallMatrix hm(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            hm(r, c) = h(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<SmallMatrix> solver(hm);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    const auto &vecs = solver.eigenvectors();
    const auto &vals = solver.eigenvalues();
    Matrix u(d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            cplx acc = 0;
            for (size_t k = 0; k < d; k++) {
                acc += vecs(r, k) * std::polar(1.0, -vals(k) * t) * std::conj(vecs(c, k));
            }
            u(r, c) = acc;
        }
    }
    return u;
}

}  // namespace

UnitaryMatrix expm_hermitian(const HermitianMatrix &h, double t) {
    if (!(t >= 0) || !std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite and non-negative");
    }
    if (h.dim() == 2) {
        return UnitaryMatrix(expm_pauli(h.matrix(), t));
    }
    return UnitaryMatrix(expm_eigen(h.matrix(), t));
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner product dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    }
    cplx acc = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double fidelity(const StateVector &target, const StateVector &current) {
    return std::norm(inner(target, current));
}

}  // namespace greedyprep
