#pragma once

#include <initializer_list>
#include <vector>

#include "cambpop/fraction.hpp"

namespace cambpop {

// Dense rational matrix.  Row-major; maps act on column vectors, so a
// matrix representing f: V -> W has rows(W) x cols(V).
class QMat {
public:
    QMat() : r_(0), c_(0) {}
    QMat(int r, int c) : r_(r), c_(c), a_(std::size_t(r) * c) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMat zero(int r, int c) { return QMat(r, c); }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Frac& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const Frac& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    friend QMat operator*(const QMat& a, const QMat& b) {
        require(a.c_ == b.r_, "QMat: shape mismatch in product");
        QMat out(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.c_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }
    friend QMat operator+(const QMat& a, const QMat& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, "QMat: shape mismatch in sum");
        QMat out(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
        return out;
    }
    friend QMat operator-(const QMat& a, const QMat& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, "QMat: shape mismatch in diff");
        QMat out(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }
    QMat operator*(const Frac& s) const {
        QMat out(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
        return out;
    }
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (auto& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    // In-place Gauss-Jordan; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int p = -1;
            for (int i = row; i < r_; ++i)
                if (!(*this)(i, col).is_zero()) { p = i; break; }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            Frac inv = Frac(1) / (*this)(row, col);
            for (int j = 0; j < c_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                Frac f = (*this)(i, col);
                for (int j = 0; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        QMat tmp = *this;
        return int(tmp.rref().size());
    }

    // Basis of the null space, one column vector per basis element.
    QMat kernel() const {
        QMat tmp = *this;
        std::vector<int> piv = tmp.rref();
        std::vector<bool> is_piv(c_, false);
        for (int p : piv) is_piv[p] = true;
        int k = c_ - int(piv.size());
        QMat ker(c_, k);
        int idx = 0;
        for (int col = 0; col < c_; ++col) {
            if (is_piv[col]) continue;
            ker(col, idx) = 1;
            for (std::size_t pr = 0; pr < piv.size(); ++pr)
                ker(piv[pr], idx) = -tmp(int(pr), col);
            ++idx;
        }
        return ker;
    }

    // Column space basis (as columns of the result).
    QMat column_space() const {
        QMat tmp = *this;
        std::vector<int> piv = tmp.rref();
        QMat out(r_, int(piv.size()));
        for (std::size_t j = 0; j < piv.size(); ++j)
            for (int i = 0; i < r_; ++i) out(i, int(j)) = (*this)(i, piv[j]);
        return out;
    }

    // Solve A x = b exactly; returns false if inconsistent.
    bool solve(const QMat& b, QMat& x) const {
        require(b.rows() == r_, "QMat::solve shape");
        QMat aug(r_, c_ + b.cols());
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            for (int j = 0; j < b.cols(); ++j) aug(i, c_ + j) = b(i, j);
        }
        std::vector<int> piv = aug.rref();
        for (int p : piv)
            if (p >= c_) return false;
        x = QMat(c_, b.cols());
        for (std::size_t pr = 0; pr < piv.size(); ++pr)
            for (int j = 0; j < b.cols(); ++j)
                x(piv[pr], j) = aug(int(pr), c_ + j);
        return true;
    }

    QMat transpose() const {
        QMat out(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    // Horizontal / vertical stacking.
    static QMat hstack(const QMat& a, const QMat& b) {
        require(a.r_ == b.r_, "hstack");
        QMat out(a.r_, a.c_ + b.c_);
        for (int i = 0; i < a.r_; ++i) {
            for (int j = 0; j < a.c_; ++j) out(i, j) = a(i, j);
            for (int j = 0; j < b.c_; ++j) out(i, a.c_ + j) = b(i, j);
        }
        return out;
    }
    static QMat vstack(const QMat& a, const QMat& b) {
        require(a.c_ == b.c_, "vstack");
        QMat out(a.r_ + b.r_, a.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) out(i, j) = a(i, j);
        for (int i = 0; i < b.r_; ++i)
            for (int j = 0; j < a.c_; ++j) out(a.r_ + i, j) = b(i, j);
        return out;
    }

private:
    int r_, c_;
    std::vector<Frac> a_;
};

// Projection onto the cokernel of the column space of `f` (rows of the
// result span a complement of im f): pi * f == 0 and pi has full row rank.
// Also produces a section sigma with pi * sigma == identity.
inline void coker_projection(const QMat& f, QMat& pi, QMat& sigma) {
    const int d = f.rows();
    QMat basis = f.column_space();
    const int r = basis.cols();
    // Complete the image basis to a basis of K^d greedily with unit vectors.
    QMat full = basis;
    std::vector<int> added;
    for (int e = 0; e < d && full.cols() < d; ++e) {
        QMat cand(d, full.cols() + 1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < full.cols(); ++j) cand(i, j) = full(i, j);
        cand(e, full.cols()) = 1;
        if (cand.rank() == full.cols() + 1) {
            full = cand;
            added.push_back(e);
        }
    }
    require(full.cols() == d, "coker_projection: completion failed");
    // Invert `full` and keep the last d-r rows.
    QMat inv;
    bool ok = full.solve(QMat::identity(d), inv);
    require(ok, "coker_projection: inversion failed");
    pi = QMat(d - r, d);
    for (int i = 0; i < d - r; ++i)
        for (int j = 0; j < d; ++j) pi(i, j) = inv(r + i, j);
    sigma = QMat(d, d - r);
    for (int i = 0; i < d - r; ++i) sigma(added[std::size_t(i)], i) = 1;
}

} // namespace cambpop
