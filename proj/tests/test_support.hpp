// Copyright 2026 The qle-classify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qle/linalg.hpp"
#include "qle/matrix.hpp"

namespace qle::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    ComplexMatrix m(rows, cols);
    for (auto& x : m.entries()) x = cplx(g(rng), g(rng));
    return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0) {
    ComplexMatrix a = random_matrix(rng, n, n, scale);
    return cplx(0.5, 0.0) * (a + adjoint(a));
}

inline ComplexMatrix random_anti_hermitian(Rng& rng, std::size_t n, double scale = 1.0) {
    ComplexMatrix a = random_matrix(rng, n, n, scale);
    return cplx(0.5, 0.0) * (a - adjoint(a));
}

inline ComplexMatrix random_unitary(Rng& rng, std::size_t n, double spread = 1.0) {
    return matrix_exp(random_anti_hermitian(rng, n, spread));
}

inline ComplexMatrix random_diagonal_unimodular(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = std::polar(1.0, u(rng));
    return d;
}

inline ComplexMatrix random_normal_matrix(Rng& rng, std::size_t n, double scale = 1.0) {
    ComplexMatrix u = random_unitary(rng, n);
    ComplexMatrix d(n, n);
    std::normal_distribution<double> g(0.0, scale);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = cplx(g(rng), g(rng));
    return u * d * adjoint(u);
}

/// Commuting family built by conjugating random diagonals by one unitary;
/// closed under adjoints by construction when `append_adjoints` is set.
inline std::vector<ComplexMatrix> random_commuting_family(Rng& rng, std::size_t n, std::size_t count,
                                                          bool append_adjoints = true) {
    ComplexMatrix u = random_unitary(rng, n);
    std::vector<ComplexMatrix> fam;
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t k = 0; k < count; ++k) {
        ComplexMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = cplx(g(rng), g(rng));
        fam.push_back(u * d * adjoint(u));
    }
    if (append_adjoints) {
        const std::size_t m = fam.size();
        for (std::size_t k = 0; k < m; ++k) fam.push_back(adjoint(fam[k]));
    }
    return fam;
}

inline ComplexMatrix random_symmetric_unitary(Rng& rng, std::size_t n) {
    ComplexMatrix q = random_unitary(rng, n);
    ComplexMatrix d = random_diagonal_unimodular(rng, n);
    return transpose(q) * d * q;
}

inline ComplexMatrix sigma_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix sigma_y() { return ComplexMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
inline ComplexMatrix sigma_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace qle::testing
