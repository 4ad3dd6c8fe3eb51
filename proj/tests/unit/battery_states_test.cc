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

#include "qbcap/battery_states.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gtest/gtest.h"
#include "qbcap/error.h"
#include "qbcap/random.h"

using namespace qbcap;

namespace {

template <typename F>
ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no qbcap::Error thrown";
    return ErrorKind::BadIndex;
}

void expect_vectors_near(const std::vector<double> &a, const std::vector<double> &b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_NEAR(a[k], b[k], tol) << "index " << k;
    }
}

}  // namespace

TEST(battery_states, maximally_mixed_qubit) {
    const auto x = make_x_state(1, {0.5, 0.5}, {0.0});
    EXPECT_EQ(to_dense(x).matrix(), 0.5 * ComplexMatrix::identity(2));
}

TEST(battery_states, incoherent_two_qubit_state_is_valid) {
    const auto x = make_x_state(2, {8.0 / 18, 7.0 / 18, 2.0 / 18, 1.0 / 18}, {0.0, 0.0});
    EXPECT_TRUE(x.is_incoherent());
}

TEST(battery_states, constructor_errors_name_the_invariant) {
    EXPECT_EQ(kind_of([] { make_x_state(2, {0.5, 0, 0, 0.5}, {0.6, 0.0}); }), ErrorKind::BlockNotPSD);
    EXPECT_EQ(kind_of([] { make_x_state(2, {0.5, 0.5, 0.5, 0.5}, {0.0, 0.0}); }), ErrorKind::BadTrace);
    EXPECT_EQ(kind_of([] { make_x_state(2, {0.6, -0.1, 0.25, 0.25}, {0.0, 0.0}); }), ErrorKind::NegativeDiagonal);
    EXPECT_EQ(kind_of([] { make_x_state(2, {0.5, 0.5}, {0.0, 0.0}); }), ErrorKind::BadLength);
    EXPECT_EQ(kind_of([] { make_x_state(2, {0.25, 0.25, 0.25, 0.25}, {0.0}); }), ErrorKind::BadLength);
    try {
        make_x_state(2, {0.5, 0, 0, 0.5}, {0.6, 0.0});
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("block 0"), std::string::npos);
    }
}

TEST(battery_states, tolerates_rounding_below_zero) {
    EXPECT_NO_THROW(make_x_state(1, {1.0 + 5e-13, -5e-13}, {0.0}));
}

TEST(battery_states, bell_diagonal_identity_case) {
    const auto x = bell_diagonal(0, 0, 0);
    EXPECT_EQ(to_dense(x).matrix(), 0.25 * ComplexMatrix::identity(4));
}

TEST(battery_states, bell_diagonal_matches_pauli_expansion) {
    const double a1 = 0.5, a2 = 0.3, a3 = 0.1;
    ComplexMatrix expected = ComplexMatrix::identity(4);
    expected += a1 * kron(pauli::sigma1(), pauli::sigma1());
    expected += a2 * kron(pauli::sigma2(), pauli::sigma2());
    expected += a3 * kron(pauli::sigma3(), pauli::sigma3());
    expected *= 0.25;
    EXPECT_LT(max_abs_diff(to_dense(bell_diagonal(a1, a2, a3)).matrix(), expected), 1e-15);
}

TEST(battery_states, bell_diagonal_spectrum) {
    const double a1 = 0.5, a2 = 0.3, a3 = 0.1;
    std::vector<double> expected{(1 - a1 - a2 - a3) / 4, (1 - a1 + a2 + a3) / 4, (1 + a1 - a2 + a3) / 4,
                                 (1 + a1 + a2 - a3) / 4};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    expect_vectors_near(x_state_spectrum(bell_diagonal(a1, a2, a3)), expected, 1e-15);
}

TEST(battery_states, bell_state_is_pure) {
    expect_vectors_near(x_state_spectrum(bell_diagonal(1, -1, 1)), {1, 0, 0, 0}, 1e-15);
}

TEST(battery_states, bell_diagonal_rejects_non_states) {
    EXPECT_EQ(kind_of([] { bell_diagonal(1, 1, 1); }), ErrorKind::NotAState);
}

TEST(battery_states, ghz_noise_limits) {
    for (int n = 2; n <= 4; ++n) {
        const std::size_t d = std::size_t{1} << n;
        EXPECT_LT(max_abs_diff(to_dense(ghz_white_noise(n, 0.0)).matrix(),
                               (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d)),
                  1e-16);
        std::vector<double> pure(d, 0.0);
        pure[0] = 1.0;
        expect_vectors_near(x_state_spectrum(ghz_white_noise(n, 1.0)), pure, 1e-15);
    }
}

TEST(battery_states, ghz_noise_spectrum_on_beta_grid) {
    for (int n = 2; n <= 5; ++n) {
        const std::size_t d = std::size_t{1} << n;
        for (int k = 0; k <= 100; ++k) {
            const double beta = k / 100.0;
            std::vector<double> expected(d, (1 - beta) / static_cast<double>(d));
            expected[0] += beta;
            expect_vectors_near(x_state_spectrum(ghz_white_noise(n, beta)), expected, 1e-15);
        }
    }
}

TEST(battery_states, ghz_noise_errors) {
    EXPECT_EQ(kind_of([] { ghz_white_noise(3, 1.5); }), ErrorKind::BadBeta);
    EXPECT_EQ(kind_of([] { ghz_white_noise(3, -0.1); }), ErrorKind::BadBeta);
    EXPECT_EQ(kind_of([] { ghz_white_noise(1, 0.5); }), ErrorKind::BadArity);
}

TEST(battery_states, dephase_examples) {
    const auto incoherent = incoherent_state(2, {0.4, 0.3, 0.2, 0.1});
    EXPECT_EQ(dephase(incoherent), incoherent);

    const auto tau = dephase(bell_diagonal(0.5, 0.3, 0.1));
    EXPECT_TRUE(tau.is_incoherent());
    expect_vectors_near({tau.diag().begin(), tau.diag().end()}, {1.1 / 4, 0.9 / 4, 0.9 / 4, 1.1 / 4}, 1e-16);
}

TEST(battery_states, dephase_properties_on_random_x_states) {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 3;
        const auto x = random_x_state(rng, n);
        const auto tau = dephase(x);
        EXPECT_EQ(dephase(tau), tau);
        const auto rho = to_dense(x).matrix();
        const auto rho_tau = to_dense(tau).matrix();
        EXPECT_NEAR(rho_tau.trace().real(), 1.0, 1e-12);
        // Dephasing commutes with every single-qubit partial trace.
        for (int q = 1; q <= n; ++q) {
            const int keep[1] = {q};
            ASSERT_LE(max_abs_diff(partial_trace(rho, n, keep), partial_trace(rho_tau, n, keep)), 1e-12);
        }
        // Also with the dense dephasing route.
        EXPECT_EQ(dephase(to_dense(x)), tau);
    }
}

TEST(battery_states, two_qubit_spectrum_closed_form) {
    const double r11 = 0.4, r22 = 0.25, r33 = 0.15, r44 = 0.2;
    const Complex r14(0.1, 0.1), r23(0.05, 0.0);
    const auto x = make_x_state(2, {r11, r22, r33, r44}, {r14, r23});
    std::vector<double> expected{
        0.5 * (r11 + r44 - std::sqrt((r11 - r44) * (r11 - r44) + 4 * std::norm(r14))),
        0.5 * (r11 + r44 + std::sqrt((r11 - r44) * (r11 - r44) + 4 * std::norm(r14))),
        0.5 * (r22 + r33 - std::sqrt((r22 - r33) * (r22 - r33) + 4 * std::norm(r23))),
        0.5 * (r22 + r33 + std::sqrt((r22 - r33) * (r22 - r33) + 4 * std::norm(r23))),
    };
    std::sort(expected.begin(), expected.end(), std::greater<>());
    expect_vectors_near(x_state_spectrum(x), expected, 1e-15);
}

TEST(battery_states, incoherent_spectrum_is_sorted_diagonal) {
    expect_vectors_near(x_state_spectrum(incoherent_state(2, {0.1, 0.4, 0.2, 0.3})), {0.4, 0.3, 0.2, 0.1}, 0.0);
}

TEST(battery_states, closed_form_spectrum_matches_eigensolver) {
    Rng rng(41);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto x = random_x_state(rng, n);
            const auto closed = x_state_spectrum(x);
            const auto dense = eig_hermitian(to_dense(x).matrix()).eigenvalues;
            for (std::size_t k = 0; k < closed.size(); ++k) {
                ASSERT_NEAR(closed[k], dense[k], 1e-10);
            }
        }
    }
}

TEST(battery_states, generated_states_are_density_matrices) {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_x_state(rng, 2 + trial % 3);
        EXPECT_NO_THROW(DensityMatrix(x.n(), to_dense(x).matrix()));
    }
    EXPECT_NO_THROW(DensityMatrix(2, to_dense(bell_diagonal(0.5, 0.3, 0.1)).matrix()));
    EXPECT_NO_THROW(DensityMatrix(4, to_dense(ghz_white_noise(4, 0.7)).matrix()));
}

TEST(battery_states, dense_round_trip_reads_back_the_x_entries) {
    const std::vector<double> diag{0.4, 0.3, 0.2, 0.1};
    const std::vector<Complex> anti{Complex(0.1, -0.05), Complex(0.0, 0.2)};
    const auto x = make_x_state(2, diag, anti);
    const auto m = to_dense(x).matrix();
    std::vector<double> read_diag = m.real_diagonal();
    std::vector<Complex> read_anti{m(0, 3), m(1, 2)};
    EXPECT_EQ(make_x_state(2, read_diag, read_anti), x);
    EXPECT_EQ(m(3, 0), std::conj(anti[0]));
}

TEST(battery_states, first_counterexample_state_is_diagonal) {
    const std::vector<double> weights{8, 7, 2, 1, 4, 3, 6, 5};
    std::vector<double> diag;
    for (double w : weights) {
        diag.push_back(w / 36);
    }
    const auto m = to_dense(incoherent_state(3, diag)).matrix();
    EXPECT_EQ(m, ComplexMatrix::diagonal(diag));
}

TEST(battery_states, density_matrix_validation) {
    EXPECT_EQ(kind_of([] { DensityMatrix(1, ComplexMatrix{{0.5, 0.1}, {0.3, 0.5}}); }), ErrorKind::NotHermitian);
    EXPECT_EQ(kind_of([] { DensityMatrix(1, ComplexMatrix{{0.6, 0.0}, {0.0, 0.6}}); }), ErrorKind::BadTrace);
    EXPECT_EQ(kind_of([] { DensityMatrix(1, ComplexMatrix{{1.2, 0.0}, {0.0, -0.2}}); }), ErrorKind::NotPSD);
    EXPECT_EQ(kind_of([] { DensityMatrix(2, ComplexMatrix::identity(2)); }), ErrorKind::DimensionMismatch);
}
