// Copyright 2026 The wirecut Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

#include <Eigen/Dense>

// Small dense-algebra helpers used by the oracles and simulators. Everything is
// templated on the real scalar; the library itself instantiates with double.
// Basis convention: qubit 1 is the leftmost tensor factor, i.e. the most
// significant bit of a computational-basis index.

namespace wirecut {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <typename Real = double>
CVectorT<Real> basis_ket(std::size_t dim, std::size_t index) {
    CVectorT<Real> v = CVectorT<Real>::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1;
    return v;
}

template <typename Derived>
auto projector(const Eigen::MatrixBase<Derived>& ket) {
    return (ket * ket.adjoint()).eval();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = 1e-10) {
    if (u.rows() != u.cols()) return false;
    auto id = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(u.rows(), u.cols());
    return ((u.adjoint() * u).eval() - id).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 1e-10) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Smallest eigenvalue of a Hermitian matrix.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    Eigen::SelfAdjointEigenSolver<CMatrixT<Real>> es(m.eval(), Eigen::EigenvaluesOnly);
    return static_cast<double>(es.eigenvalues().minCoeff());
}

template <typename Real = double>
CMatrixT<Real> matrix_from(std::size_t rows, std::size_t cols, std::initializer_list<std::complex<Real>> entries) {
    CMatrixT<Real> m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    auto it = entries.begin();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = *it++;
    return m;
}

namespace gates {

template <typename Real = double>
CMatrixT<Real> hadamard() {
    const Real s = Real(1) / std::sqrt(Real(2));
    return matrix_from<Real>(2, 2, {s, s, s, -s});
}

template <typename Real = double>
CMatrixT<Real> phase_s() {
    return matrix_from<Real>(2, 2, {1, 0, 0, std::complex<Real>(0, 1)});
}

template <typename Real = double>
CMatrixT<Real> phase_sdg() {
    return matrix_from<Real>(2, 2, {1, 0, 0, std::complex<Real>(0, -1)});
}

template <typename Real = double>
CMatrixT<Real> pauli_x() {
    return matrix_from<Real>(2, 2, {0, 1, 1, 0});
}

template <typename Real = double>
CMatrixT<Real> pauli_y() {
    return matrix_from<Real>(2, 2, {0, std::complex<Real>(0, -1), std::complex<Real>(0, 1), 0});
}

template <typename Real = double>
CMatrixT<Real> pauli_z() {
    return matrix_from<Real>(2, 2, {1, 0, 0, -1});
}

/// Controlled-X with the first (most significant) qubit as control.
template <typename Real = double>
CMatrixT<Real> cx() {
    return matrix_from<Real>(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

template <typename Real = double>
CMatrixT<Real> cz() {
    return matrix_from<Real>(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

}  // namespace gates

}  // namespace wirecut
