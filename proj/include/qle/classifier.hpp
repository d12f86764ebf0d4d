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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qle/model.hpp"
#include "qle/noise_algebra.hpp"

namespace qle {

struct BrownianEntry {
    std::size_t index;  // position in the final noise basis
    ComplexMatrix A;
};

struct PoissonEntry {
    std::size_t index;
    ComplexMatrix B;    // B = rho (S - I)
    double rho;         // modulus of lambda
    double jump;        // 1 / rho
    double intensity;   // rho^2
    ComplexMatrix S;    // unitary gauge block of the direction
};

struct GaugeOnlyEntry {
    std::size_t index;  // lambda = 0 direction: deterministic law, no dynamics
    ComplexMatrix S;
};

/// The explicit classical stochastic form
///   dU = A0 U dt + sum A_i U dW^i + sum B_i U dX^i,
/// with X^i compensated Poisson of intensity rho_i^2 and jumps 1/rho_i.
struct ClassicalForm {
    std::size_t n = 0, d = 0;
    ComplexMatrix A0;
    std::vector<BrownianEntry> brownian;
    std::vector<PoissonEntry> poisson;
    std::vector<GaugeOnlyEntry> gauge_only;
    NoiseChange noise_change;  // total W: original noises -> classical basis
};

enum class NotClassicalReason { GaugeNotCommutative, WienerGramMismatch, PoissonRayMismatch };

const char* to_string(NotClassicalReason r);

struct NotClassicalInfo {
    NotClassicalReason reason;
    std::vector<std::size_t> indices;  // offending directions in the diagonal basis
    double residual = 0.0;
};

struct ClassificationResult {
    std::optional<ClassicalForm> form;
    std::optional<NotClassicalInfo> failure;
    std::map<std::string, double> residuals;
    bool classical() const { return form.has_value(); }
};

struct GramVectors {
    ComplexMatrix U_cols;  // m x n^2, column (k,l) = u(k,l) = ((L^0_i)^{kl})_i
    ComplexMatrix V_cols;  // m x n^2, column (k,l) = v(k,l) = (conj((L^0_i)^{lk}))_i
};

GramVectors gram_vectors(const std::vector<ComplexMatrix>& L0_wiener);

/// Gram equality test and construction of the symmetric unitary W with
/// V_cols = W U_cols. Returns nothing on Gram mismatch; throws
/// SymmetricCompletionFailedError when the rank-deficient completion cannot
/// be verified.
std::optional<ComplexMatrix> wiener_condition(const std::vector<ComplexMatrix>& L0_wiener,
                                              const Tolerance& tol = {});

/// Ray test L = lambda (S_i - I); lambda extracted at the largest-modulus
/// entry of S_i - I and verified globally. Returns 0 for vanishing L.
std::optional<cplx> poisson_condition(const ComplexMatrix& L, const ComplexMatrix& S_i,
                                      const Tolerance& tol = {});

struct D1Verdict {
    enum class Kind { Brownian, Poisson, Quantum } kind;
    double theta = 0.0;        // Brownian: L* = e^{i theta} L
    cplx lambda{0.0, 0.0};     // Poisson: L = lambda (S - I)
};

/// The d = 1 dichotomy: Brownian iff S = I and L* = e^{i theta} L,
/// Poisson iff L = lambda (S - I), Quantum otherwise.
D1Verdict classify_d1(const ComplexMatrix& H, const ComplexMatrix& L, const ComplexMatrix& S,
                      const Tolerance& tol = {});

/// Full classification pipeline: diagonalize the environment, resolve the
/// Wiener sector through the symmetric unitary and its Takagi factor, check
/// Poisson rays, absorb phases, and assemble the classical form.
ClassificationResult to_classical_form(const QleCoefficients& c, const Tolerance& tol = {});

/// Coefficients in the classical basis: Wiener index k gets L^0_k = A_k and
/// gauge block I; Poisson gets rho_k (S_k - I) and block S_k; gauge-only gets
/// 0 and block S_k.
QleCoefficients rebuild(const ClassicalForm& cf, const ComplexMatrix& H, const Tolerance& tol = {});

}  // namespace qle
