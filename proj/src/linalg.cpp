#include "snt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snt {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    assert(c_ == o.r_);
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            cplx v = (*this)(i, k);
            if (v == cplx(0)) continue;
            for (int j = 0; j < o.c_; ++j) out(i, j) += v * o(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Mat Mat::scaled(cplx s) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

Mat Mat::adjoint() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double Mat::max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Mat::frobenius() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<cplx> lu_solve(Mat a, std::vector<cplx> b, double pivot_tol) {
    const int n = a.rows();
    assert(a.cols() == n && (int)b.size() == n);
    double scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0) throw std::runtime_error("singular matrix");
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) < pivot_tol * scale)
            throw std::runtime_error("singular matrix (pivot below tolerance)");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            std::swap(b[p], b[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            cplx f = a(i, k) / a(k, k);
            a(i, k) = 0;
            if (f == cplx(0)) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        cplx s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
        b[i] = s / a(i, i);
    }
    return b;
}

Mat inverse(const Mat& a, double pivot_tol) {
    const int n = a.rows();
    Mat out(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> e(n);
        e[j] = 1.0;
        auto x = lu_solve(a, std::move(e), pivot_tol);
        for (int i = 0; i < n; ++i) out(i, j) = x[i];
    }
    return out;
}

Mat column_space(const Mat& a, double tol) {
    const int m = a.rows(), n = a.cols();
    double biggest = 0;
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += std::norm(a(i, j));
        biggest = std::max(biggest, std::sqrt(s));
    }
    const double thresh = tol * (biggest > 0 ? biggest : 1.0);

    std::vector<std::vector<cplx>> basis;
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> v(m);
        for (int i = 0; i < m; ++i) v[i] = a(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                cplx dot = 0;
                for (int i = 0; i < m; ++i) dot += std::conj(q[i]) * v[i];
                for (int i = 0; i < m; ++i) v[i] -= dot * q[i];
            }
        }
        double nrm = 0;
        for (int i = 0; i < m; ++i) nrm += std::norm(v[i]);
        nrm = std::sqrt(nrm);
        if (nrm > thresh) {
            for (int i = 0; i < m; ++i) v[i] /= nrm;
            basis.push_back(std::move(v));
        }
    }
    Mat q(m, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j)
        for (int i = 0; i < m; ++i) q(i, j) = basis[j][i];
    return q;
}

int rank(const Mat& a, double tol) { return column_space(a, tol).cols(); }

} // namespace snt
