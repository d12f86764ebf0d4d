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

#include "qle/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qle {

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (!a.same_shape(b))
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
}
}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r += b;
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r -= b;
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= cplx(-1.0, 0.0);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("operator*: inner dimension mismatch " + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()));
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= s;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, cplx s) { return s * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (auto& x : r.entries()) x = std::conj(x);
    return r;
}

cplx trace(const ComplexMatrix& a) {
    if (!a.square()) throw DimensionError("trace: matrix not square");
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& x : a.entries()) s += std::norm(x);
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.entries()[i] - b.entries()[i]);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& x : a.entries()) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(const ComplexMatrix& a) {
    for (const auto& x : a.entries())
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionError("commutator: operands must be square of equal dimension");
    return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

ComplexMatrix get_block(const ComplexMatrix& m, std::size_t block_row, std::size_t block_col, std::size_t n) {
    if ((block_row + 1) * n > m.rows() || (block_col + 1) * n > m.cols())
        throw DimensionError("get_block: block index out of range");
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = m(block_row * n + i, block_col * n + j);
    return r;
}

void set_block(ComplexMatrix& m, std::size_t block_row, std::size_t block_col, const ComplexMatrix& block) {
    const std::size_t n = block.rows();
    if (!block.square()) throw DimensionError("set_block: block not square");
    if ((block_row + 1) * n > m.rows() || (block_col + 1) * n > m.cols())
        throw DimensionError("set_block: block index out of range");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(block_row * n + i, block_col * n + j) = block(i, j);
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "hs_inner");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a.entries()[i]) * b.entries()[i];
    return s;
}

double residual_hermitian(const ComplexMatrix& a) { return frobenius_distance(a, adjoint(a)); }

double residual_unitary(const ComplexMatrix& a) {
    if (!a.square()) throw DimensionError("residual_unitary: matrix not square");
    const ComplexMatrix id = ComplexMatrix::identity(a.rows());
    return std::max(frobenius_distance(adjoint(a) * a, id), frobenius_distance(a * adjoint(a), id));
}

double residual_symmetric(const ComplexMatrix& a) { return frobenius_distance(a, transpose(a)); }

}  // namespace qle
