#pragma once

// Dense row-major matrices over an exact coefficient domain: Integer, Rational
// or CycElement at a fixed conductor. Each matrix carries a zero prototype so
// that cyclotomic entries know their field even when the matrix is empty.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cyclowed/arith.hpp"
#include "cyclowed/cyclotomic.hpp"

namespace cyclowed {

template <class T>
struct Scalar;

template <>
struct Scalar<Integer> {
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
};

template <>
struct Scalar<Rational> {
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational inverse(const Rational& a)
    {
        if (a == 0)
            throw DomainError("division by zero");
        return 1 / a;
    }
};

template <>
struct Scalar<CycElement> {
    static CycElement zero_like(const CycElement& a) { return CycElement::zero(a.conductor()); }
    static CycElement one_like(const CycElement& a) { return CycElement::one(a.conductor()); }
    static bool is_zero(const CycElement& a) { return a.is_zero(); }
    static CycElement inverse(const CycElement& a) { return a.inverse(); }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(Scalar<T>::zero_like(zero)), data_(rows * cols, zero_)
    {
    }
    /// Builds from nested rows; all rows must have equal length.
    Matrix(const std::vector<std::vector<T>>& rows, const T& zero)
        : Matrix(rows.size(), rows.empty() ? 0 : rows.front().size(), zero)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_)
                throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = rows[i][j];
        }
    }

    static Matrix identity(std::size_t n, const T& zero)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Scalar<T>::one_like(zero);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c.push_back((*this)(i, j));
        return c;
    }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !Scalar<T>::is_zero((*this)(i, j)))
                    return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using CycMatrix = Matrix<CycElement>;
using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    Matrix<T> r(a.cols(), a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(j, i) = a(i, j);
    return r;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matmul: dimension mismatch");
    Matrix<T> r(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (Scalar<T>::is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!Scalar<T>::is_zero(b(k, j)))
                    r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <class T>
Matrix<T> matadd(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matadd: dimension mismatch");
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) += b(i, j);
    return r;
}

template <class T>
Matrix<T> matsub(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matsub: dimension mismatch");
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) -= b(i, j);
    return r;
}

template <class T, class S>
Matrix<T> scale(const Matrix<T>& a, const S& s)
{
    Matrix<T> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = r(i, j) * s;
    return r;
}

template <class T>
Matrix<T> identity_like(const Matrix<T>& a)
{
    return Matrix<T>::identity(a.rows(), a.zero());
}

/// Determinant by Gaussian elimination over the fraction field.
template <class T>
T determinant(Matrix<T> a)
{
    if (!a.is_square())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T det = Scalar<T>::one_like(a.zero());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && Scalar<T>::is_zero(a(piv, k)))
            ++piv;
        if (piv == n)
            return Scalar<T>::zero_like(a.zero());
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        const T inv = Scalar<T>::inverse(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (Scalar<T>::is_zero(a(i, k)))
                continue;
            const T f = a(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!Scalar<T>::is_zero(a(k, j)))
                    a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Inverse over the fraction field by Gauss-Jordan elimination.
template <class T>
Matrix<T> inverse(Matrix<T> a)
{
    if (!a.is_square())
        throw DomainError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> r = Matrix<T>::identity(n, a.zero());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && Scalar<T>::is_zero(a(piv, k)))
            ++piv;
        if (piv == n)
            throw DomainError("singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(r(k, j), r(piv, j));
            }
        const T inv = Scalar<T>::inverse(a(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) * inv;
            r(k, j) = r(k, j) * inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || Scalar<T>::is_zero(a(i, k)))
                continue;
            const T f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!Scalar<T>::is_zero(a(k, j)))
                    a(i, j) -= f * a(k, j);
                if (!Scalar<T>::is_zero(r(k, j)))
                    r(i, j) -= f * r(k, j);
            }
        }
    }
    return r;
}

/// x with x * A = y.
template <class T>
std::vector<T> solve_left(const Matrix<T>& a, const std::vector<T>& y)
{
    if (!a.is_square() || y.size() != a.rows())
        throw DomainError("solve_left: dimension mismatch");
    const std::size_t n = a.rows();
    // Transpose the system: A^T x^T = y^T, then eliminate on the augmented matrix.
    Matrix<T> aug(n, n + 1, a.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(j, i);
        aug(i, n) = y[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && Scalar<T>::is_zero(aug(piv, k)))
            ++piv;
        if (piv == n)
            throw DomainError("singular matrix");
        if (piv != k)
            for (std::size_t j = k; j <= n; ++j)
                std::swap(aug(k, j), aug(piv, j));
        const T inv = Scalar<T>::inverse(aug(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (Scalar<T>::is_zero(aug(i, k)))
                continue;
            const T f = aug(i, k) * inv;
            for (std::size_t j = k + 1; j <= n; ++j)
                if (!Scalar<T>::is_zero(aug(k, j)))
                    aug(i, j) -= f * aug(k, j);
        }
    }
    std::vector<T> x(n, a.zero());
    for (std::size_t k = n; k-- > 0;) {
        T acc = aug(k, n);
        for (std::size_t j = k + 1; j < n; ++j)
            if (!Scalar<T>::is_zero(aug(k, j)))
                acc -= aug(k, j) * x[j];
        x[k] = acc * Scalar<T>::inverse(aug(k, k));
    }
    return x;
}

/// Row vector times matrix.
template <class T>
std::vector<T> vecmat(const std::vector<T>& x, const Matrix<T>& a)
{
    if (x.size() != a.rows())
        throw DomainError("vecmat: dimension mismatch");
    std::vector<T> r(a.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (Scalar<T>::is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[j] += x[i] * a(i, j);
    }
    return r;
}

RationalMatrix to_rational(const IntMatrix& a);

} // namespace cyclowed
