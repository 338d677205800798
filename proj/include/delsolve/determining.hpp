#pragma once

#include <utility>
#include <vector>

#include "delsolve/combinatorics.hpp"
#include "delsolve/matrix.hpp"

namespace delsolve {

/// Memoized determining matrices Q(t;s) for a fixed pair (A, B):
///
///   Q(t+1;s) = A*Q(t;s) + B*Q(t;s-1),   Q(1;0) = I,   Q(0;s) = 0,
///
/// with Q(t;s) = 0 outside 0 <= s <= t-1. Q(t;s) is the sum of all ordered
/// words in A, B of length t-1 containing s copies of B, which is what the
/// noncommutative binomial identity and the trig series are built on.
///
/// Rows grow on demand and are kept for the lifetime of the table; growth is
/// single-writer (no internal locking), reads after build_to() are const-safe.
template <typename S>
class DeterminingTable {
public:
    DeterminingTable(Mat<S> A, Mat<S> B)
        : a_(std::move(A)), b_(std::move(B)), zero_(Mat<S>::zero(a_.rows(), a_.cols())) {
        detail::check(a_.rows() == a_.cols(), "determining table: A must be square");
        detail::check(b_.rows() == a_.rows() && b_.cols() == a_.cols(),
                      "determining table: B must match A's shape");
        norm_a_ = a_.norm_one();
        norm_b_ = b_.norm_one();
        rows_.push_back({});                       // t = 0: empty support
        rows_.push_back({Mat<S>::identity(dim())});  // t = 1: Q(1;0) = I
    }

    int dim() const { return a_.rows(); }
    const Mat<S>& coefficient_a() const { return a_; }
    const Mat<S>& coefficient_b() const { return b_; }
    int rows_built() const { return static_cast<int>(rows_.size()) - 1; }

    /// Materializes every row up to t_max.
    void build_to(int t_max) {
        while (rows_built() < t_max) {
            const auto& prev = rows_.back();
            const int t = rows_built();  // building row t+1, support s = 0..t
            std::vector<Mat<S>> next;
            next.reserve(static_cast<size_t>(t) + 1);
            for (int s = 0; s <= t; ++s) {
                Mat<S> q = a_ * row_entry(prev, s);
                if (s >= 1) q += b_ * row_entry(prev, s - 1);
                next.push_back(std::move(q));
            }
            rows_.push_back(std::move(next));
        }
    }

    /// Q(t;s); out-of-support arguments return the zero matrix. t >= 0.
    const Mat<S>& eval(int t, int s) {
        detail::check(t >= 0, "determining table: t must be nonnegative");
        if (s < 0 || s >= t) return zero_;
        build_to(t);
        return rows_[static_cast<size_t>(t)][static_cast<size_t>(s)];
    }

    /// Row sum  sum_{i=0}^{t} Q(t+1;i), which equals (A+B)^t — the binomial
    /// formula for noncommuting matrices.
    Mat<S> binomial_power(int t) {
        detail::check(t >= 0, "binomial_power: t must be nonnegative");
        build_to(t + 1);
        Mat<S> acc = Mat<S>::zero(dim(), dim());
        for (int i = 0; i <= t; ++i) acc += eval(t + 1, i);
        return acc;
    }

    /// binom(l,i) * ||A||^(l-i) * ||B||^i in the induced 1-norm; majorizes
    /// ||Q(l+1;i)|| since Q(l+1;i) is a sum of binom(l,i) words of that shape.
    S norm_bound(int l, int i) const {
        if (l < 0 || i < 0 || i > l) return scalar_traits<S>::zero();
        S c = scalar_traits<S>::from_bigint(binomial(l, i));
        return c * scalar_pow(norm_a_, l - i) * scalar_pow(norm_b_, i);
    }

    const S& norm_a() const { return norm_a_; }
    const S& norm_b() const { return norm_b_; }

private:
    const Mat<S>& row_entry(const std::vector<Mat<S>>& row, int s) const {
        if (s < 0 || s >= static_cast<int>(row.size())) return zero_;
        return row[static_cast<size_t>(s)];
    }

    Mat<S> a_, b_, zero_;
    S norm_a_, norm_b_;
    std::vector<std::vector<Mat<S>>> rows_;  // rows_[t][s], support s = 0..t-1
};

/// Closed form for commuting pairs: Q(t+1;j) = binom(t,j) * A^(t-j) * B^j for
/// 0 <= j <= t, zero otherwise. Rejects pairs with AB != BA (checked exactly
/// in rational mode).
template <typename S>
Mat<S> commuting_determining_matrix(const Mat<S>& A, const Mat<S>& B, int t, int j) {
    detail::check(A.rows() == A.cols() && B.rows() == A.rows() && B.cols() == A.cols(),
                  "commuting_determining_matrix: A, B must be square with equal shape");
    detail::check(t >= 0, "commuting_determining_matrix: t must be nonnegative");
    if (A * B != B * A)
        throw std::invalid_argument("commuting_determining_matrix requires AB == BA");
    const int d = A.rows();
    if (j < 0 || j > t) return Mat<S>::zero(d);  // binom or step factor vanishes
    S c = scalar_traits<S>::from_bigint(binomial(t, j));
    return (A.pow(t - j) * B.pow(j)) * c;
}

}  // namespace delsolve
