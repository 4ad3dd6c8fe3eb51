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

#include "qbcap/matops.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qbcap/error.h"

namespace qbcap {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
        }
        std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
    std::vector<double> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        d[i] = (*this)(i, i).real();
    }
    return d;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::hermiticity_defect() const {
    double defect = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return defect;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum of different dimensions");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of different dimensions");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product of different dimensions");
    }
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "max_abs_diff of different dimensions");
    }
    double m = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        m = std::max(m, std::abs(ea[k] - eb[k]));
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const Complex s = a(ra, ca);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

namespace pauli {
ComplexMatrix identity2() {
    return ComplexMatrix::identity(2);
}
ComplexMatrix sigma1() {
    return {{0.0, 1.0}, {1.0, 0.0}};
}
ComplexMatrix sigma2() {
    return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}
ComplexMatrix sigma3() {
    return {{1.0, 0.0}, {0.0, -1.0}};
}
}  // namespace pauli

namespace {

double max_off_diagonal(const ComplexMatrix &a) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = r + 1; c < a.dim(); ++c) {
            m = std::max(m, std::abs(a(r, c)));
        }
    }
    return m;
}

// Zeroes a(p, q) with U = diag-phase * real rotation acting on columns p, q:
//   U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}
// where a(p, q) = |a(p, q)| e^{i phi}. a <- U^dagger a U, v <- v U.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r;  // e^{i phi}
    const Complex phase_conj = std::conj(phase);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * r);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) {
        t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex u_qp = -s * phase_conj;
    const Complex u_qq = c * phase_conj;
    const std::size_t d = a.dim();

    for (std::size_t k = 0; k < d; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * c + akq * u_qp;
        a(k, q) = akp * s + akq * u_qq;
    }
    for (std::size_t k = 0; k < d; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(u_qp) * aqk;
        a(q, k) = s * apk + std::conj(u_qq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < d; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * c + vkq * u_qp;
        v(k, q) = vkp * s + vkq * u_qq;
    }
}

}  // namespace

HermitianSpectrum eig_hermitian(const ComplexMatrix &m) {
    if (!m.all_finite()) {
        throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
    }
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTolerance) {
        throw Error(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(defect));
    }
    const std::size_t d = m.dim();
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(d);

    // Absolute threshold for O(1) inputs; scaled for larger norms so that
    // roundoff in the rotations cannot stall convergence.
    const double threshold = kJacobiOffDiagonalThreshold * std::max(1.0, a.max_abs());
    int sweep = 0;
    while (max_off_diagonal(a) >= threshold) {
        if (sweep == kJacobiMaxSweeps) {
            throw Error(ErrorKind::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
        ++sweep;
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianSpectrum out{std::vector<double>(d), ComplexMatrix(d)};
    for (std::size_t k = 0; k < d; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < d; ++r) {
            out.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, int n, std::span<const int> keep) {
    if (n < 1 || n > 20 || rho.dim() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "partial_trace: dimension " + std::to_string(rho.dim()) + " is not 2^" + std::to_string(n));
    }
    if (keep.empty()) {
        throw Error(ErrorKind::BadIndex, "partial_trace: keep set is empty");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 1 || keep[k] > n) {
            throw Error(ErrorKind::BadIndex, "partial_trace: qubit index " + std::to_string(keep[k]) + " out of range");
        }
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw Error(ErrorKind::BadIndex, "partial_trace: keep must be strictly ascending (duplicate or unordered " +
                                                 std::to_string(keep[k]) + ")");
        }
    }

    // Bit position (from the least significant end) of qubit q is n - q.
    std::vector<int> kept_bits;
    std::vector<int> traced_bits;
    {
        std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
        for (int q : keep) {
            kept[static_cast<std::size_t>(q)] = true;
        }
        for (int q = 1; q <= n; ++q) {
            (kept[static_cast<std::size_t>(q)] ? kept_bits : traced_bits).push_back(n - q);
        }
    }
    auto scatter = [](std::size_t packed, const std::vector<int> &bits) {
        // bits are listed most significant first.
        std::size_t full = 0;
        const std::size_t m = bits.size();
        for (std::size_t k = 0; k < m; ++k) {
            if ((packed >> (m - 1 - k)) & 1U) {
                full |= std::size_t{1} << bits[k];
            }
        }
        return full;
    };

    const std::size_t kept_dim = std::size_t{1} << kept_bits.size();
    const std::size_t traced_dim = std::size_t{1} << traced_bits.size();
    std::vector<std::size_t> kept_index(kept_dim);
    std::vector<std::size_t> traced_index(traced_dim);
    for (std::size_t i = 0; i < kept_dim; ++i) {
        kept_index[i] = scatter(i, kept_bits);
    }
    for (std::size_t t = 0; t < traced_dim; ++t) {
        traced_index[t] = scatter(t, traced_bits);
    }

    ComplexMatrix out(kept_dim);
    for (std::size_t r = 0; r < kept_dim; ++r) {
        for (std::size_t c = 0; c < kept_dim; ++c) {
            Complex sum = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                sum += rho(kept_index[r] | traced_index[t], kept_index[c] | traced_index[t]);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, int n, std::initializer_list<int> keep) {
    return partial_trace(rho, n, std::span<const int>(keep.begin(), keep.size()));
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        const std::size_t target = image_[i];
        if (target >= image_.size() || seen[target]) {
            throw Error(ErrorKind::BadPermutation,
                        "image[" + std::to_string(i) + "] = " + std::to_string(target) + " breaks bijectivity");
        }
        seen[target] = true;
    }
}

Permutation Permutation::identity(std::size_t dim) {
    std::vector<std::size_t> image(dim);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim) {
        throw Error(ErrorKind::BadPermutation, "transposition index out of range");
    }
    std::vector<std::size_t> image(dim);
    std::iota(image.begin(), image.end(), 0);
    std::swap(image[i], image[j]);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) {
            return false;
        }
    }
    return true;
}

ComplexMatrix Permutation::matrix() const {
    ComplexMatrix p(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        p(image_[i], i) = 1.0;
    }
    return p;
}

ComplexMatrix conjugate_by_permutation(const ComplexMatrix &rho, const Permutation &pi) {
    if (pi.size() != rho.dim()) {
        throw Error(ErrorKind::BadPermutation, "permutation size " + std::to_string(pi.size()) +
                                                   " does not match dimension " + std::to_string(rho.dim()));
    }
    ComplexMatrix out(rho.dim());
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            out(pi[r], pi[c]) = rho(r, c);
        }
    }
    return out;
}

bool is_majorized(std::span<const double> x, std::span<const double> y, double tol) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "is_majorized: lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    double px = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px > py + tol) {
            return false;
        }
    }
    return std::abs(px - py) <= tol;
}

std::vector<double> squared_moduli(const ComplexMatrix &u) {
    std::vector<double> out(u.dim() * u.dim());
    auto e = u.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        out[k] = std::norm(e[k]);
    }
    return out;
}

}  // namespace qbcap
