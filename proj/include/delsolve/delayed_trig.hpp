#pragma once

#include <unordered_map>
#include <utility>

#include "delsolve/determining.hpp"

namespace delsolve {

/// Delayed discrete matrix sine/cosine for a two-matrix pair (A, B) and a
/// pure delay m >= 1:
///
///   Sin(t) = sum_l sum_{0<=i<=l} (-1)^l binom(t-i*m, 2l+1) Q(l+1;i)
///   Cos(t) = sum_l sum_{0<=i<=l} (-1)^l binom(t-i*m, 2l)   Q(l+1;i)
///
/// The sums are formally infinite; the vanishing-binomial convention kills
/// every term with 2l+1 > t-i*m (resp. 2l > t-i*m) or t-i*m < 0, so the
/// loops below stop at l <= (t-1)/2 (sine) and l <= t/2 (cosine) with
/// i <= (t-2l-1)/m (resp. (t-2l)/m) and lose nothing. Negative arguments
/// give the zero matrix, which is exactly the extension the solution
/// formula's history term needs.
///
/// These sequences are the fundamental solutions of
/// Delta^2 y(t) + A y(t) + B y(t-m) = 0: DeltaSin = Cos and
/// DeltaCos(t) = -A Sin(t) - B Sin(t-m).
///
/// Values are cached per t; the Q-table is owned here and shared by every
/// evaluation. Cache growth is single-writer, reads after warm-up are pure.
template <typename S>
class TrigEvaluator {
public:
    TrigEvaluator(Mat<S> A, Mat<S> B, int delay)
        : table_(std::move(A), std::move(B)), m_(delay), zero_(Mat<S>::zero(table_.dim())) {
        detail::check(delay >= 1, "trig evaluator: delay m must be >= 1");
    }

    int delay() const { return m_; }
    int dim() const { return table_.dim(); }
    DeterminingTable<S>& table() { return table_; }

    /// Sin^{A,B}(t). Zero matrix for all t <= 0; Sin(1) = I.
    const Mat<S>& sine(int t) {
        if (t <= 0) return zero_;
        if (auto it = sin_cache_.find(t); it != sin_cache_.end()) return it->second;
        Mat<S> acc = Mat<S>::zero(dim());
        for (int l = 0; 2 * l + 1 <= t; ++l) {
            const int i_max = std::min(l, (t - 2 * l - 1) / m_);
            for (int i = 0; i <= i_max; ++i)
                accumulate_term(acc, t - i * m_, 2 * l + 1, l, i);
        }
        return sin_cache_.emplace(t, std::move(acc)).first->second;
    }

    /// Cos^{A,B}(t). Zero matrix for t < 0; Cos(0) = Cos(1) = I.
    const Mat<S>& cosine(int t) {
        if (t < 0) return zero_;
        if (auto it = cos_cache_.find(t); it != cos_cache_.end()) return it->second;
        Mat<S> acc = Mat<S>::zero(dim());
        for (int l = 0; 2 * l <= t; ++l) {
            const int i_max = std::min(l, (t - 2 * l) / m_);
            for (int i = 0; i <= i_max; ++i)
                accumulate_term(acc, t - i * m_, 2 * l, l, i);
        }
        return cos_cache_.emplace(t, std::move(acc)).first->second;
    }

    /// Norm majorant for Sin(t): the same double sum with Q(l+1;i) replaced
    /// by binom(l,i) ||A||^(l-i) ||B||^i and all signs dropped.
    S sine_bound(int t) {
        S acc = scalar_traits<S>::zero();
        if (t <= 0) return acc;
        for (int l = 0; 2 * l + 1 <= t; ++l) {
            const int i_max = std::min(l, (t - 2 * l - 1) / m_);
            for (int i = 0; i <= i_max; ++i) {
                S c = scalar_traits<S>::from_bigint(binomial(t - i * m_, 2 * l + 1));
                acc += c * table_.norm_bound(l, i);
            }
        }
        return acc;
    }

    /// Norm majorant for Cos(t).
    S cosine_bound(int t) {
        S acc = scalar_traits<S>::zero();
        if (t < 0) return acc;
        for (int l = 0; 2 * l <= t; ++l) {
            const int i_max = std::min(l, (t - 2 * l) / m_);
            for (int i = 0; i <= i_max; ++i) {
                S c = scalar_traits<S>::from_bigint(binomial(t - i * m_, 2 * l));
                acc += c * table_.norm_bound(l, i);
            }
        }
        return acc;
    }

private:
    void accumulate_term(Mat<S>& acc, int binom_top, int binom_bottom, int l, int i) {
        BigInt c = binomial(binom_top, binom_bottom);
        if (c == 0) return;
        if (l % 2 != 0) c = -c;
        acc.add_scaled(table_.eval(l + 1, i), scalar_traits<S>::from_bigint(c));
    }

    DeterminingTable<S> table_;
    int m_;
    Mat<S> zero_;
    std::unordered_map<int, Mat<S>> sin_cache_, cos_cache_;
};

/// Pure-delay delayed cosine M_c(t, B, m): zero for t <= -m-1, I on
/// [-m, 1], and on the branch t in [(l-1)(m+2)+2, l(m+2)+1] the alternating
/// polynomial I - B binom(t,2) + B^2 binom(t-m,4) - ... +
/// (-1)^l B^l binom(t-(l-1)m, 2l). The loop bound (t+m)/(m+2) equals the
/// branch index l for every t in that branch, so this evaluates the
/// piecewise definition verbatim.
template <typename S>
Mat<S> pure_delay_cosine(const Mat<S>& B, int m, int t) {
    detail::check(B.rows() == B.cols(), "pure_delay_cosine: B must be square");
    detail::check(m >= 1, "pure_delay_cosine: delay m must be >= 1");
    const int d = B.rows();
    Mat<S> acc = Mat<S>::zero(d);
    if (t + m < 0) return acc;
    const int j_max = (t + m) / (m + 2);
    Mat<S> power = Mat<S>::identity(d);  // B^j
    for (int j = 0; j <= j_max; ++j) {
        BigInt c = binomial(t - (j - 1) * m, 2 * j);
        if (j % 2 != 0) c = -c;
        if (c != 0) acc.add_scaled(power, scalar_traits<S>::from_bigint(c));
        if (j < j_max) power = power * B;
    }
    return acc;
}

/// Pure-delay delayed sine M_s(t, B, m): zero for t <= -m, (t+m) I on
/// [-m+1, 2], then I binom(t+m,1) - B binom(t,3) + B^2 binom(t-m,5) - ...
template <typename S>
Mat<S> pure_delay_sine(const Mat<S>& B, int m, int t) {
    detail::check(B.rows() == B.cols(), "pure_delay_sine: B must be square");
    detail::check(m >= 1, "pure_delay_sine: delay m must be >= 1");
    const int d = B.rows();
    Mat<S> acc = Mat<S>::zero(d);
    if (t + m - 1 < 0) return acc;
    const int j_max = (t + m - 1) / (m + 2);
    Mat<S> power = Mat<S>::identity(d);
    for (int j = 0; j <= j_max; ++j) {
        BigInt c = binomial(t - (j - 1) * m, 2 * j + 1);
        if (j % 2 != 0) c = -c;
        if (c != 0) acc.add_scaled(power, scalar_traits<S>::from_bigint(c));
        if (j < j_max) power = power * B;
    }
    return acc;
}

}  // namespace delsolve
