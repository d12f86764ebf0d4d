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

struct EigResult {
    std::vector<cplx> eigenvalues;  // sorted by (re, im) with rounded tie rule
    ComplexMatrix U;                // unitary, columns are eigenvectors
};

/// Spectral decomposition of a normal matrix: A = U diag(eigenvalues) U*.
/// Eigenvalues are ordered by real part then imaginary part (rounded against
/// the tolerance so that reports are reproducible); each eigenvector's first
/// significant component is made real positive.
EigResult eig_normal(const ComplexMatrix& A, const Tolerance& tol = {});

/// Common orthonormal eigenbasis of a pairwise-commuting family that is
/// closed under adjoints. Deterministic: a fixed-seed random real combination
/// of the Hermitian parts is diagonalized and degenerate clusters are refined
/// recursively; stalled refinements raise DegeneracyUnresolved.
ComplexMatrix simultaneous_diagonalize(const std::vector<ComplexMatrix>& family, const Tolerance& tol = {});

struct SvdResult {
    ComplexMatrix U;                     // rows x rows unitary
    std::vector<double> singular_values; // min(rows, cols), descending
    ComplexMatrix V;                     // cols x cols unitary; A = U diag(s) V*
};

SvdResult svd(const ComplexMatrix& A);

struct PolarResult {
    ComplexMatrix unitary;   // Q with A = Q P
    ComplexMatrix positive;  // P positive semidefinite
};

PolarResult polar(const ComplexMatrix& A);

/// Orthonormal basis of {v : A v ~ 0}, returned as columns; the zero matrix
/// yields the full identity basis.
ComplexMatrix nullspace(const ComplexMatrix& A, const Tolerance& tol = {});

/// Matrix exponential by Pade-13 scaling and squaring.
ComplexMatrix matrix_exp(const ComplexMatrix& A);

/// For symmetric unitary A returns unitary V with A = V^t V.
/// Route: SVD-based Autonne-Takagi with a spectral square root whose branch
/// cut is placed in the largest gap of the phase spectrum; the residual is
/// always verified before returning.
ComplexMatrix takagi_symmetric_unitary(const ComplexMatrix& A, const Tolerance& tol = {});

/// For M on H (x) K stored as a d x d grid of n x n blocks with grid slot
/// (i,j) holding S^j_i, returns the d x d matrix with entries
/// result(i,j) = block(i,j)[f_index][g_index].
ComplexMatrix weighted_partial_trace(const ComplexMatrix& M, std::size_t f_index, std::size_t g_index,
                                     std::size_t n, std::size_t d);

/// Ordering key used everywhere eigenvalues or report columns need a
/// reproducible order: lexicographic on (round(re/q), round(im/q)).
bool eigenvalue_less(const cplx& a, const cplx& b, double quantum);

/// Minimum-norm least-squares solution of A x = b via the pseudoinverse.
ComplexMatrix lstsq_min_norm(const ComplexMatrix& A, const ComplexMatrix& b, const Tolerance& tol = {});

}  // namespace qle
