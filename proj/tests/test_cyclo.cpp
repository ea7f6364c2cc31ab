#include <doctest.h>

#include "support.hpp"

using namespace ddtest;

TEST_SUITE("cyclo") {
    TEST_CASE("roots of unity satisfy their defining relations") {
        CHECK(root_of_unity(4, 2) == CycScalar(-1));
        CHECK(root_of_unity(4, 1) * root_of_unity(4, 3) == CycScalar(1));
        CHECK(root_of_unity(2, 1) == CycScalar(-1));
        for (int N : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
            CHECK(root_of_unity(N, N).is_one());
            CHECK(root_of_unity(N, 1).pow(N).is_one());
            // 1 + z + ... + z^{N-1} = 0 for N > 1
            CycScalar s(0);
            for (int k = 0; k < N; ++k) s += root_of_unity(N, k);
            CHECK(s == CycScalar(N == 1 ? 1 : 0));
        }
        CHECK(root_of_unity(6, -1) == root_of_unity(6, 5));
    }

    TEST_CASE("euler phi and cyclotomic polynomials") {
        CHECK(euler_phi(1) == 1);
        CHECK(euler_phi(9) == 6);
        CHECK(euler_phi(12) == 4);
        CHECK(cyclotomic_poly(4) == std::vector<long>{1, 0, 1});
        CHECK(cyclotomic_poly(6) == std::vector<long>{1, -1, 1});
        CHECK(cyclotomic_poly(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
    }

    TEST_CASE("field axioms on random elements (seeded)") {
        std::mt19937_64 rng(20261016);
        for (int N : {3, 4, 9, 12}) {
            for (int trial = 0; trial < 25; ++trial) {
                CycScalar a = random_scalar(rng, N), b = random_scalar(rng, N), c = random_scalar(rng, N);
                CHECK((a + b) * c == a * c + b * c);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * b == b * a);
                CHECK(a - a == CycScalar(0));
                if (!a.is_zero()) {
                    CHECK(a * a.inverse() == CycScalar(1));
                    CHECK((b / a) * a == b);
                }
                CycScalar acc = a;
                acc.add_product(b, c);
                CHECK(acc == a + b * c);
            }
        }
    }

    TEST_CASE("coercion between fields preserves values") {
        CycScalar i = root_of_unity(4, 1);
        CHECK(i.coerce(12) == root_of_unity(12, 3));
        CHECK(i.coerce(12) * i.coerce(12) == CycScalar(-1));
        CHECK(root_of_unity(3, 1).coerce(9) == root_of_unity(9, 3));
        // mixed-order arithmetic lifts to the common field
        CHECK(root_of_unity(4, 1) * root_of_unity(3, 1) == root_of_unity(12, 7));
    }

    TEST_CASE("q-numbers and q-factorials") {
        const CycScalar q = root_of_unity(3, 1);
        CHECK(q_number(0, q) == CycScalar(0));
        CHECK(q_number(1, q) == CycScalar(1));
        CHECK(q_number(2, q) == CycScalar(1) + q);
        CHECK(q_number(3, q) == CycScalar(0));
        CHECK(q_factorial(0, q) == CycScalar(1));
        CHECK(q_factorial(2, q) == CycScalar(1) + q);
        CHECK(q_factorial(3, q).is_zero());
        CHECK(q_number(4, CycScalar(1)) == CycScalar(4));
    }

    TEST_CASE("exact rationals and division by zero") {
        CycScalar half(Rational(1, 2));
        CHECK(half + half == CycScalar(1));
        CHECK(half.is_rational());
        CHECK_FALSE(root_of_unity(4, 1).is_rational());
        CHECK_THROWS_AS(CycScalar(0).inverse(), DivisionByZero);
        CHECK_THROWS_AS(CycScalar(1) / CycScalar(0), DivisionByZero);
    }

    TEST_CASE("from_poly reduces modulo the cyclotomic polynomial") {
        // z^2 over Q(zeta_4) is -1
        CHECK(CycScalar::from_poly(4, {0, 0, 1}) == CycScalar(-1));
        // z^3 + z over Q(zeta_4) is 0
        CHECK(CycScalar::from_poly(4, {0, 1, 0, 1}).is_zero());
        CHECK(CycScalar(7).to_string() == "7");
    }
}
