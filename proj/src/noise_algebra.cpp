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

#include "qle/noise_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qle/linalg.hpp"

namespace qle {

std::vector<ComplexMatrix> generators(const ComplexMatrix& S, std::size_t n, std::size_t d) {
    if (S.rows() != n * d || S.cols() != n * d) throw DimensionError("generators: S must be (n*d) x (n*d)");
    std::vector<ComplexMatrix> gens;
    gens.reserve(2 * n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) gens.push_back(weighted_partial_trace(S, k, l, n, d));
    const ComplexMatrix Sadj = adjoint(S);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) gens.push_back(weighted_partial_trace(Sadj, k, l, n, d));
    return gens;
}

bool is_commutative(const std::vector<ComplexMatrix>& gens, const Tolerance& tol) {
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const double thresh =
                tol.abs_eps + tol.rel_eps * std::max(1.0, frobenius_norm(gens[a]) * frobenius_norm(gens[b]));
            if (frobenius_norm(commutator(gens[a], gens[b])) > thresh) return false;
        }
    return true;
}

std::vector<ComplexMatrix> commutant(const ComplexMatrix& S, std::size_t n, std::size_t d,
                                     const Tolerance& tol) {
    if (S.rows() != n * d || S.cols() != n * d) throw DimensionError("commutant: S must be (n*d) x (n*d)");
    if (d == 0) return {};
    const std::size_t nd = n * d;

    // Linear map Y -> ([I(x)Y, S], [I(x)Y, S*]) in coordinates Y = E_{ab}.
    // I(x)Y has scalar blocks Y(a,b) I_n at grid slot (a,b).
    const ComplexMatrix Sadj = adjoint(S);
    ComplexMatrix A(2 * nd * nd, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            ComplexMatrix Eab(d, d);
            Eab(a, b) = 1.0;
            ComplexMatrix big = kron(Eab, ComplexMatrix::identity(n));
            ComplexMatrix c1 = big * S - S * big;
            ComplexMatrix c2 = big * Sadj - Sadj * big;
            const std::size_t col = a * d + b;
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t j = 0; j < nd; ++j) {
                    A(i * nd + j, col) = c1(i, j);
                    A(nd * nd + i * nd + j, col) = c2(i, j);
                }
        }

    ComplexMatrix ns = nullspace(A, tol);
    std::vector<ComplexMatrix> basis;
    basis.reserve(ns.cols());
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        ComplexMatrix Y(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) Y(a, b) = ns(a * d + b, k);
        basis.push_back(Y);
    }
    return basis;
}

double wiener_threshold(std::size_t n, const Tolerance& tol) {
    return std::max(tol.abs_eps, tol.rel_eps) * std::sqrt(static_cast<double>(n));
}

EnvAlgebraReport diagonalize_environment(const QleCoefficients& c, const Tolerance& tol) {
    EnvAlgebraReport rep;
    const std::size_t n = c.n(), d = c.d();
    if (d == 0) {
        rep.commutative = true;
        rep.W_diag = NoiseChange{ComplexMatrix(0, 0)};
        return rep;
    }
    rep.generators = generators(c.S(), n, d);
    rep.commutant_basis = commutant(c.S(), n, d, tol);
    rep.commutative = is_commutative(rep.generators, tol);
    if (!rep.commutative) return rep;

    // Generators are closed under adjoints: (S^{kl})* = (S*)^{lk}.
    ComplexMatrix W0 = simultaneous_diagonalize(rep.generators, tol);
    QleCoefficients moved = apply_noise_change(c, NoiseChange{W0}, Tolerance{10 * tol.abs_eps, 10 * tol.rel_eps});

    std::vector<ComplexMatrix> blocks(d);
    std::vector<bool> wiener(d);
    const double wthresh = wiener_threshold(n, tol);
    for (std::size_t i = 0; i < d; ++i) {
        blocks[i] = get_block(moved.S(), i, i, n);
        wiener[i] = frobenius_distance(blocks[i], ComplexMatrix::identity(n)) <= wthresh;
    }

    // Wiener-first ordering; within each group sort by the diagonal values of
    // the conjugated generators for reproducibility.
    const double quantum = std::max({tol.abs_eps, tol.rel_eps, 1e-12});
    std::vector<std::vector<cplx>> keys(d);
    for (const auto& g : rep.generators) {
        ComplexMatrix gc = adjoint(W0) * g * W0;
        for (std::size_t i = 0; i < d; ++i) keys[i].push_back(gc(i, i));
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) -> bool {
        if (wiener[a] != wiener[b]) return wiener[a];
        for (std::size_t t = 0; t < keys[a].size(); ++t) {
            if (eigenvalue_less(keys[a][t], keys[b][t], quantum)) return true;
            if (eigenvalue_less(keys[b][t], keys[a][t], quantum)) return false;
        }
        return false;
    });

    ComplexMatrix W(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) W(i, j) = W0(i, order[j]);
    rep.W_diag = NoiseChange{W};
    rep.directions.reserve(d);
    for (std::size_t j = 0; j < d; ++j) rep.directions.push_back(NoiseDirection{blocks[order[j]], wiener[order[j]]});
    return rep;
}

}  // namespace qle
