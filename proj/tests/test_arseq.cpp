#include <doctest.h>

#include "support.hpp"

using namespace ddtest;

TEST_SUITE("arseq") {
    TEST_CASE("sequences built from a simple module") {
        for (auto D : {datum_A(), datum_B(), datum_C(), datum_n3_nil()}) {
            for (const auto& wc : proper_weights(*D)) {
                const SesInstance s = simple_ar_sequence(D, wc.l, wc.weight, 3);
                const SesReport r = ar_candidate_check(s.A, s.B, s.C, s.f, s.g, 3);
                CHECK(r.exact);
                CHECK_FALSE(r.split);
                CHECK(r.ar_candidate());
                CHECK(s.B.dim() == static_cast<size_t>(2 * (D->n - wc.l) + 2 * D->n));
            }
        }
    }

    TEST_CASE("syzygy and cosyzygy sequences for t <= 1") {
        for (auto D : abc()) {
            for (const auto& wc : proper_weights(*D)) {
                for (int t = 0; t <= 1; ++t) {
                    for (bool co : {false, true}) {
                        const SesInstance s = syzygy_ar_sequence(D, wc.l, wc.weight, t, co, 7);
                        const SesReport r = ar_candidate_check(s.A, s.B, s.C, s.f, s.g, 7);
                        CHECK(r.ar_candidate());
                    }
                }
            }
        }
    }

    TEST_CASE("canonical chain maps are module maps with the right shape") {
        auto B = datum_B();
        const Weight lam{{0}, {0}};
        for (Family f : {Family::Tt, Family::Ttbar, Family::Mt}) {
            const ChainMaps cm = chain_maps(B, f, 1, lam, eta(2), 2);
            CHECK(linalg::rank(cm.inclusion) == cm.small.dim());
            CHECK(linalg::rank(cm.quotient) == cm.quotient_target.dim());
            CHECK(cm.large.dim() - cm.small.dim() == cm.large.dim() - cm.quotient_target.dim());
        }
        CHECK_THROWS_AS(chain_maps(B, Family::P, 1, lam, eta(1), 1), ParameterError);
    }

    TEST_CASE("chain sequences for every family and eta") {
        struct Case {
            DatumPtr D;
            Family f;
            EtaParam e;
        };
        std::vector<Case> cases;
        for (auto D : {datum_B(), datum_C()})
            for (Family f : {Family::Tt, Family::Ttbar}) cases.push_back({D, f, eta(1)});
        for (auto D : {datum_B(), datum_C()})
            for (long e : {1L, -1L, 2L}) cases.push_back({D, Family::Mt, eta(e)});
        for (const EtaParam& e : {eta(1), eta(-1), eta(2), eta(0), EtaParam::inf()}) cases.push_back({datum_A(), Family::Wt, e});
        for (const auto& c : cases) {
            for (const auto& wc : proper_weights(*c.D)) {
                for (const SesInstance& s : chain_ar_sequences(c.D, c.f, wc.l, wc.weight, c.e, 2)) {
                    const SesReport r = ar_candidate_check(s.A, s.B, s.C, s.f, s.g, 1);
                    CHECK_MESSAGE(r.ar_candidate(), s.name);
                }
            }
        }
    }

    TEST_CASE("ses_check recognizes split and non-exact sequences") {
        auto B = datum_B();
        ModuleRep X = simple(B, 1, Weight{{0}, {0}});
        ModuleRep Y = string_tt(B, 1, Weight{{0}, {0}}, 1);
        ModuleRep S = direct_sum({X, Y});
        Matrix f = Matrix::vcat(Matrix::identity(X.dim()), Matrix(Y.dim(), X.dim()));
        Matrix g = Matrix::hcat(Matrix(Y.dim(), X.dim()), Matrix::identity(Y.dim()));
        const SesReport split = ses_check(X, S, Y, f, g);
        CHECK(split.exact);
        CHECK(split.split);
        REQUIRE(split.section.has_value());
        CHECK(g * *split.section == Matrix::identity(Y.dim()));
        CHECK_FALSE(split.ar_candidate());
        const SesReport zero = ses_check(X, S, Y, f, Matrix(Y.dim(), S.dim()));
        CHECK_FALSE(zero.exact);
        CHECK_FALSE(zero.g_surjective);
        Matrix not_module_map = f;
        not_module_map(1, 0) = CycScalar(1);
        CHECK_FALSE(ses_check(X, S, Y, not_module_map, g).maps_are_intertwiners);
    }
}
