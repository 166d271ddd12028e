#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fineint {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A halfspace intersection that is nonempty but not bounded.
class UnboundedError : public Error {
public:
    using Error::Error;
};

template <class T>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : c_(n) {}
    Vec(std::initializer_list<T> xs) : c_(xs) {}
    explicit Vec(std::vector<T> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    T& operator[](std::size_t i) { return c_[i]; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<T>& coords() const { return c_; }
    void push_back(const T& x) { c_.push_back(x); }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const T& x) { return sgn(x) == 0; });
    }

    Vec& operator+=(const Vec& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(const T& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const T& s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b)
    {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    void check(const Vec& o) const
    {
        if (o.size() != size()) throw DimensionError("vector dimension mismatch");
    }
    std::vector<T> c_;
};

using ZVec = Vec<Integer>;  // lattice vector
using QVec = Vec<Rational>; // rational vector

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows)
    {
        return from_rows(rows, rows.empty() ? 0 : rows[0].size());
    }
    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows)
    {
        return from_rows(cols, rows).transpose();
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<T> row(std::size_t i) const
    {
        Vec<T> v(c_);
        for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void swap_rows(std::size_t i, std::size_t k)
    {
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k)
    {
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw DimensionError("matrix product dimension mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }
    friend Vec<T> operator*(const Matrix& a, const Vec<T>& x)
    {
        if (a.c_ != x.size()) throw DimensionError("matrix-vector dimension mismatch");
        Vec<T> y(a.r_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t j = 0; j < a.c_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

QVec to_rational(const ZVec& v);
QMatrix to_rational(const ZMatrix& m);
bool is_integral(const QVec& v);
// Throws if some coordinate is not an integer.
ZVec to_integer(const QVec& v);
ZMatrix to_integer(const QMatrix& m);

Integer dot(const ZVec& a, const ZVec& b);
Rational dot(const QVec& a, const ZVec& b);
Rational pairing(const QVec& x, const QVec& n);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
std::string to_string(const ZVec& v);
std::string to_string(const QVec& v);
Rational parse_rational(const std::string& s);

std::ostream& operator<<(std::ostream& os, const ZVec& v);
std::ostream& operator<<(std::ostream& os, const QVec& v);

template <class T>
std::vector<T> sorted_unique(std::vector<T> xs)
{
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace fineint
