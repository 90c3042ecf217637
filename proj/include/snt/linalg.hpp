#pragma once

#include <complex>
#include <vector>
#include <cassert>
#include <cstddef>

namespace snt {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Everything here is desk-scale
/// (dimensions in the tens), so plain O(n^3) routines are fine.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }

    cplx& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(cplx s) const;
    Mat adjoint() const;

    double max_abs() const;
    double frobenius() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<cplx> a_;
};

/// Solve A x = b by partial-pivot LU. Throws std::runtime_error when a pivot
/// falls below `pivot_tol` times the largest initial pivot.
std::vector<cplx> lu_solve(Mat a, std::vector<cplx> b, double pivot_tol = 1e-12);

/// Matrix inverse via LU on each unit vector.
Mat inverse(const Mat& a, double pivot_tol = 1e-12);

/// Orthonormal basis of the column span of `a`, rank decided at
/// `tol * largest column norm`. Modified Gram-Schmidt with one
/// re-orthogonalization pass; column order is deterministic.
Mat column_space(const Mat& a, double tol);

int rank(const Mat& a, double tol);

} // namespace snt
