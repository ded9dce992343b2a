#include <doctest.h>

#include <cmath>
#include <limits>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/error.hpp"
#include "test_oracles.hpp"

using kmf::DenseMatrix;

TEST_CASE("matmul") {
    const DenseMatrix a{{1, 2}, {3, 4}};
    CHECK(matmul(DenseMatrix::identity(2), a) == a);
    CHECK(matmul(a, DenseMatrix(2, 2)) == DenseMatrix(2, 2));
    CHECK(matmul(DenseMatrix{{1, 2}}, DenseMatrix{{3}, {5}}) == DenseMatrix{{13}});

    SUBCASE("mismatch reports both shapes") {
        try {
            matmul(DenseMatrix(2, 3), DenseMatrix(2, 3));
            FAIL("expected DimensionMismatch");
        } catch (const kmf::DimensionMismatch& e) {
            const std::string what = e.what();
            CHECK(what.find("2x3 by 2x3") != std::string::npos);
        }
    }
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(DenseMatrix{{1, 2}, {3, 4}}) == 30.0);
    CHECK(frobenius_norm_sq(DenseMatrix(3, 5)) == 0.0);
    CHECK(frobenius_norm_sq(DenseMatrix::identity(3)) == 3.0);
}

TEST_CASE("trace") {
    CHECK(trace(DenseMatrix::identity(4)) == 4.0);
    CHECK(trace(DenseMatrix{{2, 9}, {7, 5}}) == 7.0);
    CHECK(trace(DenseMatrix{{0}}) == 0.0);
    CHECK_THROWS_AS(trace(DenseMatrix(2, 3)), kmf::DimensionMismatch);
}

TEST_CASE("transpose") {
    CHECK(transpose(DenseMatrix{{1, 2}, {3, 4}}) == DenseMatrix{{1, 3}, {2, 4}});
    CHECK(transpose(DenseMatrix{{1}, {2}, {3}}) == DenseMatrix{{1, 2, 3}});
    kmf::Rng rng(3);
    const auto a = kmf::testing::random_matrix(4, 7, rng);
    CHECK(transpose(transpose(a)) == a);
}

TEST_CASE("sub") {
    kmf::Rng rng(4);
    const auto a = kmf::testing::random_matrix(3, 2, rng);
    CHECK(sub(a, a) == DenseMatrix(3, 2));
    CHECK(sub(a, DenseMatrix(3, 2)) == a);
    CHECK(sub(DenseMatrix{{3}}, DenseMatrix{{1}}) == DenseMatrix{{2}});
    CHECK_THROWS_AS(sub(DenseMatrix(3, 2), DenseMatrix(2, 3)), kmf::DimensionMismatch);
}

TEST_CASE("construction rejects bad input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(DenseMatrix(1, 2, {1.0, nan}), kmf::DomainError);
    CHECK_THROWS_AS(DenseMatrix(1, 1, {inf}), kmf::DomainError);
    CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), kmf::DimensionMismatch);
    CHECK_THROWS_AS(DenseMatrix(0, 2), kmf::DimensionMismatch);
    CHECK_THROWS_AS((DenseMatrix{{1, 2}, {3}}), kmf::DimensionMismatch);
}

TEST_CASE("norm equals trace of Gram matrix") {
    kmf::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = kmf::testing::random_matrix(1 + rng.uniform_index(7), 1 + rng.uniform_index(7), rng);
        const double norm = frobenius_norm_sq(a);
        CHECK(std::abs(norm - trace(matmul(transpose(a), a))) <= 1e-12 * (1.0 + norm));
    }
}

TEST_CASE("trace is invariant under cyclic permutation") {
    kmf::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t p = 1 + rng.uniform_index(6), q = 1 + rng.uniform_index(6),
                          r = 1 + rng.uniform_index(6);
        const auto a = kmf::testing::random_matrix(p, q, rng);
        const auto b = kmf::testing::random_matrix(q, r, rng);
        const auto c = kmf::testing::random_matrix(r, p, rng);
        const double abc = trace(matmul(a, matmul(b, c)));
        CHECK(kmf::testing::rel(abc, trace(matmul(c, matmul(a, b)))) <= 1e-10);
        CHECK(kmf::testing::rel(abc, trace(matmul(b, matmul(c, a)))) <= 1e-10);
    }
}

TEST_CASE("matmul is associative") {
    kmf::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t p = 1 + rng.uniform_index(5), q = 1 + rng.uniform_index(5),
                          r = 1 + rng.uniform_index(5), s = 1 + rng.uniform_index(5);
        const auto a = kmf::testing::random_matrix(p, q, rng);
        const auto b = kmf::testing::random_matrix(q, r, rng);
        const auto c = kmf::testing::random_matrix(r, s, rng);
        const auto left = matmul(matmul(a, b), c);
        const auto right = matmul(a, matmul(b, c));
        for (std::size_t e = 0; e < left.entries().size(); ++e) {
            CHECK(kmf::testing::rel(left.entries()[e], right.entries()[e]) <= 1e-10);
        }
    }
}
