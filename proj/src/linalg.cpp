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

#include "qle/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qle {

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const ComplexMatrix& a) {
    EMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

ComplexMatrix from_eigen(const EMat& m) {
    ComplexMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return a;
}

// Deterministic 64-bit generator for the fixed-seed combinations below.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

// Make the first significant component of each column real positive.
void fix_column_phases(EMat& U) {
    for (Eigen::Index j = 0; j < U.cols(); ++j) {
        double colmax = 0.0;
        for (Eigen::Index i = 0; i < U.rows(); ++i) colmax = std::max(colmax, std::abs(U(i, j)));
        if (colmax == 0.0) continue;
        for (Eigen::Index i = 0; i < U.rows(); ++i) {
            if (std::abs(U(i, j)) > 1e-8 * colmax) {
                cplx phase = std::conj(U(i, j)) / std::abs(U(i, j));
                U.col(j) *= phase;
                break;
            }
        }
    }
}

double offdiag_mass(const EMat& m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

bool eigenvalue_less(const cplx& a, const cplx& b, double quantum) {
    const double q = quantum > 0.0 ? quantum : 1e-12;
    const long long ra = std::llround(a.real() / q);
    const long long rb = std::llround(b.real() / q);
    if (ra != rb) return ra < rb;
    return std::llround(a.imag() / q) < std::llround(b.imag() / q);
}

EigResult eig_normal(const ComplexMatrix& A, const Tolerance& tol) {
    if (!A.square()) throw DimensionError("eig_normal: matrix not square");
    const std::size_t n = A.rows();
    const double nrm = frobenius_norm(A);
    const double normality = frobenius_distance(A * adjoint(A), adjoint(A) * A);
    if (normality > tol.abs_eps + tol.rel_eps * nrm * nrm)
        throw NotNormalError("eig_normal: ||AA*-A*A|| = " + std::to_string(normality));

    EMat ea = to_eigen(A);
    Eigen::ComplexSchur<EMat> schur(ea, /*computeU=*/true);
    EMat U = schur.matrixU();
    EMat T = schur.matrixT();

    std::vector<cplx> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));

    const double quantum = std::max({tol.abs_eps, tol.rel_eps * std::max(1.0, nrm), 1e-12});
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return eigenvalue_less(vals[a], vals[b], quantum); });

    EMat Us(n, n);
    std::vector<cplx> sorted(n);
    for (std::size_t j = 0; j < n; ++j) {
        Us.col(static_cast<Eigen::Index>(j)) = U.col(static_cast<Eigen::Index>(perm[j]));
        sorted[j] = vals[perm[j]];
    }
    fix_column_phases(Us);

    EigResult res{std::move(sorted), from_eigen(Us)};

    // Reconstruction check; Schur of a normal matrix leaves T diagonal, so a
    // large residual means the precondition was only marginally met.
    ComplexMatrix D(n, n);
    for (std::size_t i = 0; i < n; ++i) D(i, i) = res.eigenvalues[i];
    const double rec = frobenius_distance(A, res.U * D * adjoint(res.U));
    if (rec > 100.0 * (tol.abs_eps + tol.rel_eps * std::max(1.0, nrm)))
        throw NotNormalError("eig_normal: reconstruction residual " + std::to_string(rec));
    return res;
}

namespace {

// Recursive refinement for simultaneous_diagonalize. `basis` is d x k, the
// current invariant subspace; `herm` are the Hermitian pieces of the family.
void refine_block(const std::vector<EMat>& herm, EMat basis, double tol_scale, SplitMix& rng, int depth,
                  std::vector<EMat>& out_columns) {
    const Eigen::Index k = basis.cols();
    if (k == 1) {
        out_columns.push_back(basis);
        return;
    }

    // All pieces scalar on this subspace: any orthonormal basis diagonalizes.
    bool all_scalar = true;
    std::vector<EMat> compressed;
    compressed.reserve(herm.size());
    for (const auto& h : herm) {
        EMat hb = basis.adjoint() * h * basis;
        compressed.push_back(hb);
        EMat dev = hb - (hb.trace() / static_cast<double>(k)) * EMat::Identity(k, k);
        if (dev.norm() > tol_scale) all_scalar = false;
    }
    if (all_scalar) {
        for (Eigen::Index j = 0; j < k; ++j) out_columns.push_back(basis.col(j));
        return;
    }
    if (depth > 64) throw DegeneracyUnresolvedError("simultaneous_diagonalize: refinement recursion too deep");

    for (int attempt = 0; attempt < 3; ++attempt) {
        EMat combo = EMat::Zero(k, k);
        for (const auto& hb : compressed) combo += rng.symmetric() * hb;
        combo = 0.5 * (combo + combo.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<EMat> es(combo);
        if (es.info() != Eigen::Success) continue;

        // Cluster eigenvalues; distinct clusters split the subspace.
        const auto& ev = es.eigenvalues();
        const double scale = std::max(1.0, std::abs(ev(k - 1)) + std::abs(ev(0)));
        const double gap = std::max(tol_scale, 1e-10 * scale);
        std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
        Eigen::Index start = 0;
        for (Eigen::Index i = 1; i <= k; ++i) {
            if (i == k || ev(i) - ev(i - 1) > gap) {
                clusters.emplace_back(start, i);
                start = i;
            }
        }
        if (clusters.size() <= 1) continue;  // no progress; re-randomize

        for (const auto& [lo, hi] : clusters) {
            EMat sub = basis * es.eigenvectors().middleCols(lo, hi - lo);
            refine_block(herm, sub, tol_scale, rng, depth + 1, out_columns);
        }
        return;
    }
    throw DegeneracyUnresolvedError("simultaneous_diagonalize: refinement stalled after 3 re-randomizations");
}

}  // namespace

ComplexMatrix simultaneous_diagonalize(const std::vector<ComplexMatrix>& family, const Tolerance& tol) {
    if (family.empty()) throw PreconditionError("simultaneous_diagonalize: empty family");
    const std::size_t d = family.front().rows();
    double scale = 1.0;
    for (const auto& m : family) {
        if (!m.square() || m.rows() != d)
            throw DimensionError("simultaneous_diagonalize: family members must be square of equal dimension");
        scale = std::max(scale, frobenius_norm(m));
    }
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            const double c = frobenius_norm(commutator(family[a], family[b]));
            if (c > tol.abs_eps + tol.rel_eps * std::max(1.0, frobenius_norm(family[a]) * frobenius_norm(family[b])))
                throw NotCommutingError("simultaneous_diagonalize: members " + std::to_string(a) + "," +
                                        std::to_string(b) + " do not commute (residual " + std::to_string(c) + ")");
        }

    std::vector<EMat> herm;
    herm.reserve(2 * family.size());
    for (const auto& m : family) {
        EMat e = to_eigen(m);
        herm.push_back(0.5 * (e + e.adjoint().eval()));
        herm.push_back(cplx(0.0, -0.5) * (e - e.adjoint().eval()));
    }

    SplitMix rng(0x51d5e1edULL);
    const double tol_scale = 10.0 * (tol.abs_eps + tol.rel_eps * scale) * std::sqrt(static_cast<double>(d));
    std::vector<EMat> columns;
    refine_block(herm, EMat::Identity(d, d), tol_scale, rng, 0, columns);

    EMat U(d, d);
    for (std::size_t j = 0; j < d; ++j) U.col(static_cast<Eigen::Index>(j)) = columns[j];
    fix_column_phases(U);

    // Deterministic column order: lexicographic in the family's diagonal values.
    const double quantum = std::max({tol.abs_eps, tol.rel_eps * std::max(1.0, scale), 1e-12});
    std::vector<std::vector<cplx>> keys(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (const auto& m : family) {
            EMat col = U.col(static_cast<Eigen::Index>(j));
            EMat me = to_eigen(m);
            keys[j].push_back((col.adjoint() * me * col)(0, 0));
        }
    }
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        for (std::size_t t = 0; t < keys[a].size(); ++t) {
            if (eigenvalue_less(keys[a][t], keys[b][t], quantum)) return true;
            if (eigenvalue_less(keys[b][t], keys[a][t], quantum)) return false;
        }
        return false;
    });
    EMat Us(d, d);
    for (std::size_t j = 0; j < d; ++j) Us.col(static_cast<Eigen::Index>(j)) = U.col(static_cast<Eigen::Index>(perm[j]));

    // Verify every member is diagonal in the computed basis.
    for (const auto& m : family) {
        EMat conj = Us.adjoint() * to_eigen(m) * Us;
        if (offdiag_mass(conj) > tol_scale * static_cast<double>(d))
            throw DegeneracyUnresolvedError("simultaneous_diagonalize: residual off-diagonal mass " +
                                            std::to_string(offdiag_mass(conj)));
    }
    return from_eigen(Us);
}

SvdResult svd(const ComplexMatrix& A) {
    EMat ea = to_eigen(A);
    Eigen::JacobiSVD<EMat> s(ea, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult r;
    r.U = from_eigen(s.matrixU());
    r.V = from_eigen(s.matrixV());
    r.singular_values.assign(s.singularValues().data(), s.singularValues().data() + s.singularValues().size());
    return r;
}

PolarResult polar(const ComplexMatrix& A) {
    if (!A.square()) throw DimensionError("polar: matrix not square");
    SvdResult s = svd(A);
    ComplexMatrix D(A.rows(), A.cols());
    for (std::size_t i = 0; i < s.singular_values.size(); ++i) D(i, i) = s.singular_values[i];
    PolarResult r;
    r.unitary = s.U * adjoint(s.V);
    r.positive = s.V * D * adjoint(s.V);
    return r;
}

ComplexMatrix nullspace(const ComplexMatrix& A, const Tolerance& tol) {
    if (A.rows() == 0 || A.cols() == 0) return ComplexMatrix::identity(A.cols());
    SvdResult s = svd(A);
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    const double thresh = tol.abs_eps + tol.rel_eps * smax * static_cast<double>(std::max(A.rows(), A.cols()));
    std::size_t rank = 0;
    for (double sv : s.singular_values)
        if (sv > thresh) ++rank;
    const std::size_t k = A.cols() - rank;
    ComplexMatrix basis(A.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < A.cols(); ++i) basis(i, j) = s.V(i, rank + j);
    return basis;
}

ComplexMatrix matrix_exp(const ComplexMatrix& A) {
    if (!A.square()) throw DimensionError("matrix_exp: matrix not square");
    const Eigen::Index n = static_cast<Eigen::Index>(A.rows());
    if (n == 0) return A;
    EMat a = to_eigen(A);

    // Pade-13 scaling and squaring (Higham 2005).
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const double theta13 = 5.371920351148152;
    const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
    int squarings = 0;
    if (nrm > theta13) squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / theta13))));
    EMat as = a / std::pow(2.0, squarings);

    EMat id = EMat::Identity(n, n);
    EMat a2 = as * as;
    EMat a4 = a2 * a2;
    EMat a6 = a4 * a2;
    EMat u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    EMat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    EMat r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return from_eigen(r);
}

ComplexMatrix takagi_symmetric_unitary(const ComplexMatrix& A, const Tolerance& tol) {
    if (!A.square()) throw DimensionError("takagi_symmetric_unitary: matrix not square");
    const std::size_t n = A.rows();
    const double scale = std::max(1.0, frobenius_norm(A));
    const double rs = residual_symmetric(A);
    if (rs > tol.abs_eps + tol.rel_eps * scale)
        throw NotSymmetricError("takagi_symmetric_unitary: ||A - A^t|| = " + std::to_string(rs));
    const double ru = residual_unitary(A);
    if (ru > tol.abs_eps + tol.rel_eps * scale)
        throw NotUnitaryError("takagi_symmetric_unitary: ||A*A - I|| = " + std::to_string(ru));

    SvdResult s = svd(A);
    // Z = U* conj(V) is unitary and symmetric when A is; A = conj(V) U^t then
    // gives A = V^t V with V = (U Z^{1/2})^t.
    ComplexMatrix Z = adjoint(s.U) * conjugate(s.V);

    EigResult ez = eig_normal(Z, Tolerance{1e-8, 1e-8});

    // Branch cut for the square root: middle of the largest angular gap.
    std::vector<double> angles;
    angles.reserve(n);
    for (const auto& ev : ez.eigenvalues) angles.push_back(std::arg(ev));
    std::sort(angles.begin(), angles.end());
    double cut = M_PI;  // default branch
    if (!angles.empty()) {
        double best_gap = 2.0 * M_PI - (angles.back() - angles.front());
        cut = 0.5 * (angles.back() + angles.front() + 2.0 * M_PI);
        for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
            const double gap = angles[i + 1] - angles[i];
            if (gap > best_gap) {
                best_gap = gap;
                cut = 0.5 * (angles[i] + angles[i + 1]);
            }
        }
        while (cut > M_PI) cut -= 2.0 * M_PI;
    }

    ComplexMatrix sqrtD(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double phi = std::arg(ez.eigenvalues[i]);
        // choose phi in (cut, cut + 2*pi]
        while (phi <= cut) phi += 2.0 * M_PI;
        while (phi > cut + 2.0 * M_PI) phi -= 2.0 * M_PI;
        sqrtD(i, i) = std::polar(1.0, 0.5 * phi);
    }
    ComplexMatrix sqrtZ = ez.U * sqrtD * adjoint(ez.U);
    ComplexMatrix V = transpose(s.U * sqrtZ);

    const double rec = frobenius_distance(A, transpose(V) * V);
    const double vu = residual_unitary(V);
    if (rec > 10.0 * (tol.abs_eps + tol.rel_eps) * static_cast<double>(n) + 1e-10 || vu > 1e-8)
        throw Error("takagi_symmetric_unitary: unverified factor (residual " + std::to_string(rec) + ")");
    return V;
}

ComplexMatrix lstsq_min_norm(const ComplexMatrix& A, const ComplexMatrix& b, const Tolerance& tol) {
    if (A.rows() != b.rows()) throw DimensionError("lstsq_min_norm: row mismatch");
    SvdResult s = svd(A);
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    const double thresh = tol.abs_eps + tol.rel_eps * smax * static_cast<double>(std::max(A.rows(), A.cols()));
    ComplexMatrix ub = adjoint(s.U) * b;
    ComplexMatrix y(A.cols(), b.cols());
    for (std::size_t i = 0; i < s.singular_values.size(); ++i) {
        if (s.singular_values[i] <= thresh) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) y(i, j) = ub(i, j) / s.singular_values[i];
    }
    return s.V * y;
}

ComplexMatrix weighted_partial_trace(const ComplexMatrix& M, std::size_t f_index, std::size_t g_index,
                                     std::size_t n, std::size_t d) {
    if (M.rows() != n * d || M.cols() != n * d)
        throw DimensionError("weighted_partial_trace: expected a (n*d) x (n*d) matrix");
    if (f_index >= n || g_index >= n) throw DimensionError("weighted_partial_trace: basis index out of range");
    ComplexMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = M(i * n + f_index, j * n + g_index);
    return r;
}

}  // namespace qle
