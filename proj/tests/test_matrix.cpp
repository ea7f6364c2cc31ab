#include <doctest.h>

#include "support.hpp"

using namespace ddtest;

TEST_SUITE("matrix") {
    TEST_CASE("rank-nullity and nullspace correctness (seeded)") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
            Matrix A = random_matrix(rng, r, c, trial % 2 ? 4 : 1, 2);
            // force some dependency
            if (r > 1) A.set_block(r - 1, 0, A.block(0, 0, 1, c).scaled(CycScalar(3)));
            const Matrix N = linalg::nullspace(A);
            CHECK(linalg::rank(A) + N.cols() == c);
            CHECK((A * N).is_zero());
            CHECK(linalg::rank(N) == N.cols());
        }
    }

    TEST_CASE("inverse, solve and try_inverse") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const size_t n = 1 + rng() % 5;
            Matrix A = random_matrix(rng, n, n, 3, 3);
            if (linalg::rank(A) != n) {
                CHECK_FALSE(linalg::try_inverse(A).has_value());
                CHECK_THROWS_AS(linalg::inverse(A), InternalInconsistency);
                continue;
            }
            const Matrix Ai = linalg::inverse(A);
            CHECK(A * Ai == Matrix::identity(n));
            CHECK(Ai * A == Matrix::identity(n));
            Matrix B = random_matrix(rng, n, 2, 3, 3);
            auto X = linalg::solve(A, B);
            REQUIRE(X.has_value());
            CHECK(A * *X == B);
        }
        // inconsistent system
        Matrix Z(2, 2);
        Z(0, 0) = CycScalar(1);
        Matrix b(2, 1);
        b(1, 0) = CycScalar(1);
        CHECK_FALSE(linalg::solve(Z, b).has_value());
    }

    TEST_CASE("rref is reduced and pivots are sorted") {
        std::mt19937_64 rng(3);
        Matrix A = random_matrix(rng, 4, 6, 1, 4);
        const auto E = linalg::rref(A);
        for (size_t k = 0; k < E.pivots.size(); ++k) {
            CHECK(E.rref(k, E.pivots[k]).is_one());
            for (size_t i = 0; i < E.rref.rows(); ++i)
                if (i != k) CHECK(E.rref(i, E.pivots[k]).is_zero());
            if (k) CHECK(E.pivots[k] > E.pivots[k - 1]);
        }
    }

    TEST_CASE("intersection, complement and span membership") {
        // U = span(e0, e1), V = span(e1, e2) in Q^3
        Matrix U(3, 2), V(3, 2);
        U(0, 0) = 1; U(1, 1) = 1;
        V(1, 0) = 1; V(2, 1) = 1;
        const Matrix I = linalg::intersect(U, V);
        REQUIRE(I.cols() == 1);
        CHECK(I(0, 0).is_zero());
        CHECK(I(2, 0).is_zero());
        CHECK_FALSE(I(1, 0).is_zero());
        const auto comp = linalg::complement_indices(U);
        REQUIRE(comp.size() == 1);
        CHECK(comp[0] == 2);
        CHECK(linalg::in_span(U, Vec{CycScalar(2), CycScalar(5), CycScalar(0)}));
        CHECK_FALSE(linalg::in_span(U, Vec{CycScalar(0), CycScalar(0), CycScalar(1)}));
        CHECK(linalg::column_basis(Matrix::hcat(U, U)).cols() == 2);
    }

    TEST_CASE("row reducer agrees with batch elimination (seeded)") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 15; ++trial) {
            Matrix A = random_matrix(rng, 5, 6, 4, 1);
            linalg::RowReducer rr(6);
            for (size_t i = 0; i < A.rows(); ++i) {
                Vec row(6);
                for (size_t j = 0; j < 6; ++j) row[j] = A(i, j);
                rr.add_row(row);
            }
            CHECK(rr.rank() == linalg::rank(A));
            const Matrix N = rr.nullspace();
            CHECK(N.cols() == linalg::nullspace(A).cols());
            CHECK((A * N).is_zero());
        }
    }

    TEST_CASE("block operations and traces") {
        std::mt19937_64 rng(9);
        Matrix A = random_matrix(rng, 3, 3), B = random_matrix(rng, 3, 3);
        CHECK(trace_of_product(A, B) == trace(A * B));
        CHECK(Matrix::hcat(A, B).block(0, 3, 3, 3) == B);
        CHECK(Matrix::vcat(A, B).block(3, 0, 3, 3) == B);
        const Matrix D = Matrix::block_diag({A, B});
        CHECK(D.block(0, 3, 3, 3).is_zero());
        CHECK(A.pow(0) == Matrix::identity(3));
        CHECK(A.pow(3) == A * A * A);
        CHECK(A.transpose().transpose() == A);
        CHECK(A.select_columns({2, 0}).column(0) == A.column(2));
        CHECK_THROWS_AS(A * Matrix(2, 2), SizeMismatch);
    }
}
