// Copyright 2026 The qbcap Authors
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

#ifndef QBCAP_MATOPS_H
#define QBCAP_MATOPS_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbcap {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The carrier for states, unitaries
/// and Hamiltonians alike.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept {
        return dim_;
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    std::vector<double> real_diagonal() const;
    double max_abs() const;
    bool all_finite() const;

    /// max |M - M^dagger|.
    double hermiticity_defect() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tensor product, first factor most significant.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

namespace pauli {
ComplexMatrix identity2();
ComplexMatrix sigma1();
ComplexMatrix sigma2();
ComplexMatrix sigma3();
}  // namespace pauli

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; column i of `eigenvectors` pairs with eigenvalue i.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi. The input is symmetrized as (M + M^dagger)/2 first.
/// Throws Error{NotHermitian} when max |M - M^dagger| > 1e-10 and
/// Error{NoConvergence} after kJacobiMaxSweeps sweeps.
HermitianSpectrum eig_hermitian(const ComplexMatrix &m);

/// Trace out every qubit not listed in `keep`. Qubits are numbered 1..n with
/// qubit 1 the most significant bit of the basis index; `keep` must be
/// strictly ascending.
ComplexMatrix partial_trace(const ComplexMatrix &rho, int n, std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix &rho, int n, std::initializer_list<int> keep);

/// Bijection on basis indices 0..dim-1; image()[i] is where basis state i is
/// sent.
class Permutation {
   public:
    Permutation() = default;
    /// Throws Error{BadPermutation} if `image` is not a bijection.
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t dim);
    /// Exchange of basis states i and j (0-based).
    static Permutation transposition(std::size_t dim, std::size_t i, std::size_t j);

    std::size_t size() const noexcept {
        return image_.size();
    }
    std::size_t operator[](std::size_t i) const {
        return image_[i];
    }
    const std::vector<std::size_t> &image() const noexcept {
        return image_;
    }
    bool is_identity() const;

    /// The permutation matrix P with P|i> = |image[i]>.
    ComplexMatrix matrix() const;

    auto operator<=>(const Permutation &) const = default;

   private:
    std::vector<std::size_t> image_;
};

/// P rho P^dagger, i.e. out(pi(i), pi(j)) = rho(i, j).
ComplexMatrix conjugate_by_permutation(const ComplexMatrix &rho, const Permutation &pi);

/// x is majorized by y: after sorting both descending, every prefix sum of x
/// is at most that of y (+tol) and the totals agree within tol.
/// Throws Error{LengthMismatch}.
bool is_majorized(std::span<const double> x, std::span<const double> y, double tol);

/// Row-major |u_ij|^2. Doubly stochastic whenever u is unitary.
std::vector<double> squared_moduli(const ComplexMatrix &u);

}  // namespace qbcap

#endif  // QBCAP_MATOPS_H
