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

#include <optional>
#include <vector>

#include "qle/model.hpp"

namespace qle {

struct NoiseDirection {
    ComplexMatrix S;  // the n x n gauge block of this direction
    bool is_wiener = false;
};

/// Finite description of the environment algebra of the gauge operator.
struct EnvAlgebraReport {
    std::vector<ComplexMatrix> generators;   // all S^{kl} then all (S*)^{kl}
    bool commutative = false;
    std::optional<NoiseChange> W_diag;       // present iff commutative
    std::vector<NoiseDirection> directions;  // per final basis direction, Wiener first
    std::vector<ComplexMatrix> commutant_basis;
};

/// The 2n^2 generators S^{kl} and (S*)^{kl} over the canonical basis of H,
/// each read off the block storage by weighted_partial_trace.
std::vector<ComplexMatrix> generators(const ComplexMatrix& S, std::size_t n, std::size_t d);

/// True iff all pairwise commutators vanish within tol * max(1, |A||B|).
bool is_commutative(const std::vector<ComplexMatrix>& gens, const Tolerance& tol = {});

/// Orthonormal (Hilbert-Schmidt) basis of {Y : [I (x) Y, S] = [I (x) Y, S*] = 0},
/// computed as the nullspace of the stacked commutation map.
std::vector<ComplexMatrix> commutant(const ComplexMatrix& S, std::size_t n, std::size_t d,
                                     const Tolerance& tol = {});

/// Wiener membership threshold ||S_i - I||_F <= eps * sqrt(n).
double wiener_threshold(std::size_t n, const Tolerance& tol);

/// Decides commutativity of the environment algebra; when commutative,
/// produces the diagonalizing change of noise with Wiener directions first
/// and the per-direction gauge blocks.
EnvAlgebraReport diagonalize_environment(const QleCoefficients& c, const Tolerance& tol = {});

}  // namespace qle
