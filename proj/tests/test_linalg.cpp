#include <doctest.h>

#include "snt/linalg.hpp"

using namespace snt;

TEST_SUITE("linalg") {

TEST_CASE("lu solve round trip") {
    Mat a(3, 3);
    a(0, 0) = {2, 1}; a(0, 1) = 1; a(0, 2) = 0;
    a(1, 0) = 0; a(1, 1) = {0, -1}; a(1, 2) = 3;
    a(2, 0) = 1; a(2, 1) = 1; a(2, 2) = 1;
    std::vector<cplx> x{1.0, {0, 2.0}, -1.0};
    std::vector<cplx> b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i] += a(i, j) * x[j];
    auto got = lu_solve(a, b);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(got[i] - x[i]) < 1e-12);
}

TEST_CASE("singular matrix throws") {
    Mat a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 2; a(1, 1) = 4;
    CHECK_THROWS(lu_solve(a, {1.0, 1.0}));
}

TEST_CASE("inverse and rank") {
    Mat a(2, 2);
    a(0, 0) = {0, 1}; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = 1;
    auto inv = inverse(a);
    auto prod = a * inv;
    CHECK((prod - Mat::identity(2)).max_abs() < 1e-12);

    Mat b(3, 2);
    b(0, 0) = 1; b(1, 0) = 1; b(2, 0) = 0;
    b(0, 1) = 2; b(1, 1) = 2; b(2, 1) = 0;
    CHECK(rank(b, 1e-10) == 1);
}

TEST_CASE("column space orthonormal") {
    Mat b(3, 3);
    b(0, 0) = 1; b(1, 0) = 1;
    b(0, 1) = 1; b(1, 1) = -1;
    b(0, 2) = 2; b(1, 2) = 0;  // dependent on the other two
    auto q = column_space(b, 1e-10);
    CHECK(q.cols() == 2);
    auto g = q.adjoint() * q;
    CHECK((g - Mat::identity(2)).max_abs() < 1e-12);
}

}
