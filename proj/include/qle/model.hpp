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

#include <vector>

#include "qle/matrix.hpp"

namespace qle {

/// Unitary change of basis of the noise space K (new basis f_i = W e_i).
struct NoiseChange {
    ComplexMatrix W;
};

/// Canonical data (H, L0, S) of a unitary quantum Langevin equation.
///
/// n is the system dimension, d the noise multiplicity. S is the gauge block
/// operator on H (x) K, stored as a d x d grid of n x n blocks with grid slot
/// (i, j) holding the operator S^j_i; this matches the block-matrix notation
/// in which the family transforms as W* S W under a change of noise, and
/// weighted_partial_trace reads the environment-algebra generators straight
/// off the storage.
class QleCoefficients {
public:
    QleCoefficients(ComplexMatrix H, std::vector<ComplexMatrix> L0, ComplexMatrix S, const Tolerance& tol = {});

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const ComplexMatrix& H() const { return H_; }
    const std::vector<ComplexMatrix>& L0() const { return L0_; }
    const ComplexMatrix& L0(std::size_t i) const { return L0_[i]; }
    const ComplexMatrix& S() const { return S_; }

    /// The operator S^i_j (stored at grid slot (j, i)).
    ComplexMatrix S_op(std::size_t i, std::size_t j) const { return get_block(S_, j, i, n_); }

private:
    std::size_t n_, d_;
    ComplexMatrix H_;
    std::vector<ComplexMatrix> L0_;
    ComplexMatrix S_;
};

/// The full coefficient family L^i_j of the equation.
struct FullCoefficients {
    std::size_t n = 0, d = 0;
    ComplexMatrix L00;                  // time coefficient
    std::vector<ComplexMatrix> L0_col;  // creation coefficients L^0_i
    std::vector<ComplexMatrix> L0_row;  // annihilation coefficients L^i_0
    ComplexMatrix Lmat;                 // gauge block matrix LL with grid slot (i,j) = L^j_i
};

/// L^0_0 = -iH - 1/2 sum_k (L^0_k)* L^0_k,  L^i_0 = -sum_j (L^0_j)* S^i_j,
/// L^i_j = S^i_j - delta_ij I.
FullCoefficients derive_full(const QleCoefficients& c);

/// Inverse direction: recognizes a unitary scheme in an arbitrary family,
/// reconstructing S = LL + I and H = i (L00 + 1/2 sum (L^0_k)* L^0_k).
/// Throws NotUnitarySchemeError naming the first violated condition.
QleCoefficients validate(const FullCoefficients& full, const Tolerance& tol = {});

/// Coefficients in the basis f_i = W e_i:  L~0 = W* L0 (column of operators),
/// S~ = W* S W (scalar blocks), H unchanged. Sequential application composes
/// as apply(apply(c, Wa), Wb) == apply(c, Wa * Wb).
QleCoefficients apply_noise_change(const QleCoefficients& c, const NoiseChange& w, const Tolerance& tol = {});

/// Compression of the family to the subspace spanned by the columns of the
/// isometry (d x m). For an S-stable subspace the result is again a unitary
/// scheme; H is replaced by `H_restricted`.
QleCoefficients restrict_to_subspace(const QleCoefficients& c, const ComplexMatrix& isometry,
                                     const ComplexMatrix& H_restricted, const Tolerance& tol = {});

/// Scalar-block conjugation A |-> (W (x) I_n)* A (W (x) I_n) used by noise
/// changes and restrictions; `W` may be a rectangular isometry.
ComplexMatrix conjugate_scalar_blocks(const ComplexMatrix& A, const ComplexMatrix& W, std::size_t n);

}  // namespace qle
