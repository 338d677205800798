#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "delsolve/scalar.hpp"

namespace delsolve {

namespace detail {
inline void check(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

template <typename S>
class Vec;

/// Dense row-major matrix over an exact-rational or f64 scalar. All
/// operations are pure; values are safe to share once constructed.
template <typename S>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {
        detail::check(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    }
    Mat(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        entries_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            detail::check(static_cast<int>(r.size()) == cols_, "ragged matrix initializer");
            for (const auto& v : r) entries_.push_back(v);
        }
    }

    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat zero(int n) { return Mat(n, n); }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        const S z = scalar_traits<S>::zero();
        for (const S& v : entries_)
            if (v != z) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "matrix addition");
        Mat r = *this;
        for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
        return r;
    }
    Mat& operator+=(const Mat& o) {
        require_same_shape(o, "matrix addition");
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o, "matrix subtraction");
        Mat r = *this;
        for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (S& v : r.entries_) v = -v;
        return r;
    }

    Mat operator*(const Mat& o) const {
        detail::check(cols_ == o.rows_, "matrix product dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const S& a = (*this)(i, k);
                if (a == scalar_traits<S>::zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Vec<S> operator*(const Vec<S>& v) const;

    Mat operator*(const S& c) const {
        Mat r = *this;
        for (S& v : r.entries_) v *= c;
        return r;
    }
    friend Mat operator*(const S& c, const Mat& m) { return m * c; }

    /// *this += m * c without materializing the scaled copy; the workhorse of
    /// the trig double sums.
    Mat& add_scaled(const Mat& m, const S& c) {
        require_same_shape(m, "matrix axpy");
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += m.entries_[k] * c;
        return *this;
    }

    /// k-fold product by repeated multiplication, k >= 0; pow(0) = I.
    /// Square matrices only. Used as the independent route for the
    /// noncommutative binomial checks, so it must stay naive.
    Mat pow(int k) const {
        detail::check(rows_ == cols_, "matrix power requires a square matrix");
        detail::check(k >= 0, "matrix power requires a nonnegative exponent");
        Mat acc = identity(rows_);
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    /// Induced 1-norm: max column sum of absolute values. Exact over
    /// rationals and submultiplicative, which the determining-matrix bounds
    /// rely on.
    S norm_one() const {
        S best = scalar_traits<S>::zero();
        for (int j = 0; j < cols_; ++j) {
            S col = scalar_traits<S>::zero();
            for (int i = 0; i < rows_; ++i) col += scalar_traits<S>::abs((*this)(i, j));
            if (col > best) best = col;
        }
        return best;
    }

    /// Induced infinity-norm: max row sum of absolute values.
    S norm_inf() const {
        S best = scalar_traits<S>::zero();
        for (int i = 0; i < rows_; ++i) {
            S row = scalar_traits<S>::zero();
            for (int j = 0; j < cols_; ++j) row += scalar_traits<S>::abs((*this)(i, j));
            if (row > best) best = row;
        }
        return best;
    }

private:
    void require_same_shape(const Mat& o, const char* op) const {
        detail::check(rows_ == o.rows_ && cols_ == o.cols_, std::string(op) + " dimension mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<S> entries_;
};

template <typename S>
class Vec {
public:
    Vec() = default;
    explicit Vec(int dim) : entries_(static_cast<size_t>(dim), scalar_traits<S>::zero()) {
        detail::check(dim >= 0, "vector dimension must be nonnegative");
    }
    Vec(std::initializer_list<S> vals) : entries_(vals) {}

    static Vec zero(int dim) { return Vec(dim); }

    int dim() const { return static_cast<int>(entries_.size()); }
    S& operator[](int i) { return entries_[static_cast<size_t>(i)]; }
    const S& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    bool operator==(const Vec& o) const { return entries_ == o.entries_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

    Vec operator+(const Vec& o) const {
        require_same_dim(o);
        Vec r = *this;
        for (int i = 0; i < dim(); ++i) r[i] += o[i];
        return r;
    }
    Vec& operator+=(const Vec& o) {
        require_same_dim(o);
        for (int i = 0; i < dim(); ++i) entries_[i] += o[i];
        return *this;
    }
    Vec operator-(const Vec& o) const {
        require_same_dim(o);
        Vec r = *this;
        for (int i = 0; i < dim(); ++i) r[i] -= o[i];
        return r;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(o);
        for (int i = 0; i < dim(); ++i) entries_[i] -= o[i];
        return *this;
    }
    Vec operator-() const {
        Vec r = *this;
        for (S& v : r.entries_) v = -v;
        return r;
    }
    Vec operator*(const S& c) const {
        Vec r = *this;
        for (S& v : r.entries_) v *= c;
        return r;
    }
    friend Vec operator*(const S& c, const Vec& v) { return v * c; }

    bool is_zero() const {
        const S z = scalar_traits<S>::zero();
        for (const S& v : entries_)
            if (v != z) return false;
        return true;
    }

    /// Vector 1-norm, the vector norm compatible with the induced matrix
    /// 1-norm.
    S norm_one() const {
        S sum = scalar_traits<S>::zero();
        for (const S& v : entries_) sum += scalar_traits<S>::abs(v);
        return sum;
    }

private:
    void require_same_dim(const Vec& o) const {
        detail::check(dim() == o.dim(), "vector dimension mismatch");
    }

    std::vector<S> entries_;
};

template <typename S>
Vec<S> Mat<S>::operator*(const Vec<S>& v) const {
    detail::check(cols_ == v.dim(), "matrix-vector dimension mismatch");
    Vec<S> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

}  // namespace delsolve
