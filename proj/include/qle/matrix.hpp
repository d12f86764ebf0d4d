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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qle {

using cplx = std::complex<double>;

/// Absolute/relative tolerance pair used by every numerical predicate.
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    /// Threshold for a residual measured against a problem scale.
    double threshold(double scale) const { return abs_eps + rel_eps * scale; }
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

class NotNormalError : public Error {
public:
    explicit NotNormalError(const std::string& msg) : Error(msg) {}
};

class NotCommutingError : public Error {
public:
    explicit NotCommutingError(const std::string& msg) : Error(msg) {}
};

class DegeneracyUnresolvedError : public Error {
public:
    explicit DegeneracyUnresolvedError(const std::string& msg) : Error(msg) {}
};

class NotSymmetricError : public Error {
public:
    explicit NotSymmetricError(const std::string& msg) : Error(msg) {}
};

class NotUnitaryError : public Error {
public:
    explicit NotUnitaryError(const std::string& msg) : Error(msg) {}
};

class SymmetricCompletionFailedError : public Error {
public:
    explicit SymmetricCompletionFailedError(const std::string& msg) : Error(msg) {}
};

/// Thrown by validate() naming the first violated unitarity condition.
class NotUnitarySchemeError : public Error {
public:
    NotUnitarySchemeError(const std::string& condition, double residual)
        : Error("coefficient family is not a unitary scheme: " + condition +
                " (residual " + std::to_string(residual) + ")"),
          condition_(condition),
          residual_(residual) {}

    const std::string& condition() const { return condition_; }
    double residual() const { return residual_; }

private:
    std::string condition_;
    double residual_;
};

/// Dense complex matrix, row-major storage. Immutable use is the norm:
/// operations return fresh values and never alias their inputs.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged initializer for ComplexMatrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return data_; }
    std::vector<cplx>& entries() { return data_; }

    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, cplx s);

/// Conjugate transpose; realizes the * operation on operators.
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

/// AB - BA for square matrices of equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, row-major convention: (kron(A,B))[(i*p+k)][(j*q+l)] = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block access for matrices laid out as a grid of n x n blocks.
ComplexMatrix get_block(const ComplexMatrix& m, std::size_t block_row, std::size_t block_col, std::size_t n);
void set_block(ComplexMatrix& m, std::size_t block_row, std::size_t block_col, const ComplexMatrix& block);

/// Hilbert-Schmidt inner product tr(A* B).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double residual_hermitian(const ComplexMatrix& a);   // ||A - A*||_F
double residual_unitary(const ComplexMatrix& a);     // max(||A*A - I||_F, ||AA* - I||_F)
double residual_symmetric(const ComplexMatrix& a);   // ||A - A^t||_F

}  // namespace qle
