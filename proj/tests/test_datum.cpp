#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace ddtest;

TEST_SUITE("datum") {
    TEST_CASE("derived parameters of the test datums") {
        auto A = datum_A(), B = datum_B(), C = datum_C();
        CHECK(A->kind == Kind::Nilpotent);
        CHECK(A->n == 2);
        CHECK(A->m == 1);
        CHECK(B->kind == Kind::Nilpotent);
        CHECK(B->n == 2);
        CHECK(B->m == 2);
        CHECK(C->kind == Kind::NonNilpotent);
        CHECK(C->n == 2);
        CHECK(C->m == 2);
        CHECK(C->rho == CycScalar(-1));
        auto E = datum_n3();
        CHECK(E->kind == Kind::NonNilpotent);
        CHECK(E->n == 3);
        CHECK(E->m == 3);
        auto F = datum_n3_nil();
        CHECK(F->n == 3);
        CHECK(F->m == 1);
    }

    TEST_CASE("non-nilpotent alpha is normalized to one") {
        auto D = make_datum(FinAbGroup{{4}}, GroupChar{{2}}, {1}, CycScalar(5));
        CHECK(D->kind == Kind::NonNilpotent);
        CHECK(D->alpha == CycScalar(1));
    }

    TEST_CASE("invalid datums report both witnesses") {
        try {
            make_datum(FinAbGroup{{4, 4}}, GroupChar{{2, 1}}, {1, 0}, CycScalar(1));
            FAIL("expected DatumError");
        } catch (const DatumError& e) {
            CHECK(e.chi_to_n == std::vector<int>{0, 2});
            CHECK(e.a_to_n == GroupElem{2, 0});
        }
        // chi(a) = 1 gives n = 1
        CHECK_THROWS_AS(make_datum(FinAbGroup{{2}}, GroupChar{{0}}, {1}, CycScalar(0)), ParameterError);
        // shape errors
        CHECK_THROWS(make_datum(FinAbGroup{{2}}, GroupChar{{1, 1}}, {1}, CycScalar(0)));
    }

    TEST_CASE("weight classes match the defining equation") {
        struct Raw {
            std::vector<int> orders, chi, a;
            long alpha;
        };
        for (const Raw& r : {Raw{{2}, {1}, {1}, 0}, Raw{{4}, {2}, {1}, 0}, Raw{{4}, {2}, {1}, 1}, Raw{{9}, {3}, {1}, 1},
                             Raw{{3}, {1}, {1}, 0}, Raw{{2, 4}, {1, 1}, {1, 1}, 0}, Raw{{6}, {1}, {1}, 0}}) {
            auto D = make_datum(FinAbGroup{r.orders}, GroupChar{r.chi}, r.a, CycScalar(r.alpha));
            const auto ws = enumerate_weights(*D);
            CHECK(static_cast<long>(ws.size()) == D->group.size() * D->group.size());
            for (const auto& wc : ws) CHECK(wc.l == oracle_l(r.orders, r.chi, r.a, wc.weight));
        }
    }

    TEST_CASE("simple counts: |K| per dimension below n and |G|^2 - (n-1)|K| at n") {
        // oracle counts are computed from the defining equation only
        auto count = [](const std::vector<int>& orders, const std::vector<int>& chi, const std::vector<int>& a, const DatumPtr& D) {
            std::map<int, long> c;
            for (const auto& wc : enumerate_weights(*D)) c[oracle_l(orders, chi, a, wc.weight)]++;
            return c;
        };
        CHECK(simple_counts(*datum_A()) == std::map<int, long>{{1, 2}, {2, 2}});
        CHECK(simple_counts(*datum_B()) == std::map<int, long>{{1, 4}, {2, 12}});
        CHECK(simple_counts(*datum_C()) == count({4}, {2}, {1}, datum_C()));
        CHECK(simple_counts(*datum_n3()) == count({9}, {3}, {1}, datum_n3()));
        CHECK(kernel_K(*datum_B()).size() == 4);
    }

    TEST_CASE("sigma maps I_l to I_{n-l}, tau has order m on the exceptional set") {
        for (auto D : {datum_A(), datum_B(), datum_C(), datum_n3(), datum_n3_nil()}) {
            for (const auto& wc : proper_weights(*D)) {
                const Weight s = sigma(*D, wc.weight), si = sigma_inv(*D, wc.weight);
                CHECK(classify_weight(*D, s).l == D->n - wc.l);
                CHECK(classify_weight(*D, si).l == D->n - wc.l);
                CHECK(sigma_inv(*D, s) == wc.weight);
                CHECK(sigma(*D, si) == wc.weight);
                CHECK(tau(*D, wc.weight, D->m) == wc.weight);
                int order = 1;
                while (!(tau(*D, wc.weight, order) == wc.weight)) ++order;
                CHECK(order == D->m);
                CHECK(tau(*D, tau(*D, wc.weight, 1), -1) == wc.weight);
                CHECK(tau_orbit_rep(*D, tau(*D, wc.weight)) == tau_orbit_rep(*D, wc.weight));
            }
        }
    }

    TEST_CASE("sigma on datum B is multiplication by phi for l = 1") {
        auto D = datum_B();
        for (const auto& wc : proper_weights(*D)) {
            CHECK(wc.l == 1);
            CHECK(sigma(*D, wc.weight) == weight_mul(*D, wc.weight, phi(*D)));
        }
    }

    TEST_CASE("alpha coefficients vanish exactly at i = l on I_l") {
        for (auto D : {datum_B(), datum_C(), datum_n3(), datum_n3_nil()}) {
            for (const auto& wc : enumerate_weights(*D)) {
                for (int i = 1; i < D->n; ++i) {
                    const bool zero = alpha_raw(*D, i, wc.weight).is_zero();
                    CHECK(zero == (i == wc.l));
                }
            }
        }
    }

    TEST_CASE("linkage blocks partition the simples into tau-sigma orbits") {
        for (auto D : {datum_A(), datum_B(), datum_C(), datum_n3()}) {
            std::set<SimpleLabel> all;
            size_t total = 0;
            for (const auto& b : linkage_blocks(*D)) {
                total += b.size();
                all.insert(b.begin(), b.end());
                if (b.size() > 1) CHECK(static_cast<int>(b.size()) == 2 * D->m);
            }
            CHECK(total == all.size());
            CHECK(static_cast<long>(total) == D->group.size() * D->group.size());
        }
    }

    TEST_CASE("weight algebra") {
        auto D = datum_B();
        const Weight ph = phi(*D);
        CHECK(weight_order(*D, ph) == 4);
        CHECK(weight_pow(*D, ph, 4) == trivial_weight(*D));
        CHECK(weight_mul(*D, ph, weight_pow(*D, ph, -1)) == trivial_weight(*D));
        CHECK(weight_to_string(Weight{{1}, {2}}) == "(1|2)");
        CHECK(kind_name(Kind::NonNilpotent) == "non-nilpotent");
    }
}
