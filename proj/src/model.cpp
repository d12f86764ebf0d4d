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

#include "qle/model.hpp"

#include <cmath>
#include <utility>

namespace qle {

QleCoefficients::QleCoefficients(ComplexMatrix H, std::vector<ComplexMatrix> L0, ComplexMatrix S,
                                 const Tolerance& tol)
    : H_(std::move(H)), L0_(std::move(L0)), S_(std::move(S)) {
    if (!H_.square()) throw DimensionError("QleCoefficients: H must be square");
    n_ = H_.rows();
    d_ = L0_.size();
    if (n_ == 0) throw DimensionError("QleCoefficients: system dimension must be positive");
    for (const auto& l : L0_)
        if (l.rows() != n_ || l.cols() != n_) throw DimensionError("QleCoefficients: L0 entries must be n x n");
    if (S_.rows() != n_ * d_ || S_.cols() != n_ * d_)
        throw DimensionError("QleCoefficients: S must be (n*d) x (n*d)");
    if (!all_finite(H_) || !all_finite(S_)) throw PreconditionError("QleCoefficients: non-finite entries");
    for (const auto& l : L0_)
        if (!all_finite(l)) throw PreconditionError("QleCoefficients: non-finite entries in L0");

    const double rh = residual_hermitian(H_);
    if (rh > tol.threshold(frobenius_norm(H_)))
        throw NotUnitarySchemeError("H self-adjoint", rh);
    if (d_ > 0) {
        const double ru = residual_unitary(S_);
        if (ru > tol.threshold(std::sqrt(static_cast<double>(n_ * d_))))
            throw NotUnitarySchemeError("S unitary", ru);
    }
}

FullCoefficients derive_full(const QleCoefficients& c) {
    const std::size_t n = c.n(), d = c.d();
    FullCoefficients f;
    f.n = n;
    f.d = d;

    ComplexMatrix acc(n, n);
    for (std::size_t k = 0; k < d; ++k) acc += adjoint(c.L0(k)) * c.L0(k);
    f.L00 = cplx(0.0, -1.0) * c.H() - cplx(0.5, 0.0) * acc;

    f.L0_col = c.L0();
    f.L0_row.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix row(n, n);
        for (std::size_t j = 0; j < d; ++j) row += adjoint(c.L0(j)) * c.S_op(i, j);
        f.L0_row.push_back(-row);
    }
    if (d > 0)
        f.Lmat = c.S() - ComplexMatrix::identity(n * d);
    else
        f.Lmat = ComplexMatrix(0, 0);
    return f;
}

QleCoefficients validate(const FullCoefficients& full, const Tolerance& tol) {
    const std::size_t n = full.n, d = full.d;
    if (full.L00.rows() != n || full.L00.cols() != n) throw DimensionError("validate: L00 must be n x n");
    if (full.L0_col.size() != d || full.L0_row.size() != d)
        throw DimensionError("validate: coefficient lists must have length d");
    if (d > 0 && (full.Lmat.rows() != n * d || full.Lmat.cols() != n * d))
        throw DimensionError("validate: Lmat must be (n*d) x (n*d)");

    ComplexMatrix S = d > 0 ? full.Lmat + ComplexMatrix::identity(n * d) : ComplexMatrix(0, 0);
    if (d > 0) {
        const double ru = residual_unitary(S);
        if (ru > tol.threshold(std::sqrt(static_cast<double>(n * d))))
            throw NotUnitarySchemeError("gauge block S = LL + I unitary", ru);
    }

    ComplexMatrix acc(n, n);
    for (std::size_t k = 0; k < d; ++k) acc += adjoint(full.L0_col[k]) * full.L0_col[k];
    ComplexMatrix H = cplx(0.0, 1.0) * (full.L00 + cplx(0.5, 0.0) * acc);
    const double rh = residual_hermitian(H);
    if (rh > tol.threshold(std::max(1.0, frobenius_norm(H))))
        throw NotUnitarySchemeError("drift coefficient yields self-adjoint H", rh);
    H = cplx(0.5, 0.0) * (H + adjoint(H));  // exact self-adjointness for the carrier

    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix expect(n, n);
        for (std::size_t j = 0; j < d; ++j) expect += adjoint(full.L0_col[j]) * get_block(S, j, i, n);
        const double rr = frobenius_distance(full.L0_row[i], -expect);
        if (rr > tol.threshold(std::max(1.0, frobenius_norm(expect))))
            throw NotUnitarySchemeError("row coefficient relation L^i_0 = -sum_j (L^0_j)* S^i_j at i=" +
                                            std::to_string(i),
                                        rr);
    }
    return QleCoefficients(H, full.L0_col, S, tol);
}

ComplexMatrix conjugate_scalar_blocks(const ComplexMatrix& A, const ComplexMatrix& W, std::size_t n) {
    const std::size_t d = W.rows(), m = W.cols();
    if (A.rows() != n * d || A.cols() != n * d) throw DimensionError("conjugate_scalar_blocks: shape mismatch");
    ComplexMatrix out(n * m, n * m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
            ComplexMatrix blk(n, n);
            for (std::size_t i = 0; i < d; ++i) {
                if (W(i, k) == cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    const cplx w = std::conj(W(i, k)) * W(j, l);
                    if (w == cplx(0.0, 0.0)) continue;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) blk(r, s) += w * A(i * n + r, j * n + s);
                }
            }
            set_block(out, k, l, blk);
        }
    return out;
}

QleCoefficients apply_noise_change(const QleCoefficients& c, const NoiseChange& w, const Tolerance& tol) {
    const std::size_t d = c.d();
    if (w.W.rows() != d || w.W.cols() != d) throw DimensionError("apply_noise_change: W must be d x d");
    const double ru = d > 0 ? residual_unitary(w.W) : 0.0;
    if (ru > tol.threshold(std::sqrt(static_cast<double>(std::max<std::size_t>(d, 1)))))
        throw NotUnitaryError("apply_noise_change: W is not unitary (residual " + std::to_string(ru) + ")");

    std::vector<ComplexMatrix> L0;
    L0.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix li(c.n(), c.n());
        for (std::size_t j = 0; j < d; ++j) li += std::conj(w.W(j, i)) * c.L0(j);
        L0.push_back(li);
    }
    ComplexMatrix S = d > 0 ? conjugate_scalar_blocks(c.S(), w.W, c.n()) : c.S();
    return QleCoefficients(c.H(), std::move(L0), std::move(S), tol);
}

QleCoefficients restrict_to_subspace(const QleCoefficients& c, const ComplexMatrix& isometry,
                                     const ComplexMatrix& H_restricted, const Tolerance& tol) {
    const std::size_t d = c.d(), m = isometry.cols();
    if (isometry.rows() != d) throw DimensionError("restrict_to_subspace: isometry must have d rows");
    const double ro = frobenius_distance(adjoint(isometry) * isometry, ComplexMatrix::identity(m));
    if (ro > tol.threshold(std::sqrt(static_cast<double>(std::max<std::size_t>(m, 1)))))
        throw PreconditionError("restrict_to_subspace: basis not orthonormal (residual " + std::to_string(ro) + ")");

    std::vector<ComplexMatrix> L0;
    L0.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        ComplexMatrix lk(c.n(), c.n());
        for (std::size_t i = 0; i < d; ++i) lk += std::conj(isometry(i, k)) * c.L0(i);
        L0.push_back(lk);
    }
    ComplexMatrix S = m > 0 ? conjugate_scalar_blocks(c.S(), isometry, c.n()) : ComplexMatrix(0, 0);
    return QleCoefficients(H_restricted, std::move(L0), std::move(S), tol);
}

}  // namespace qle
