#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "ddrep/arseq.hpp"
#include "ddrep/classify.hpp"
#include "ddrep/io.hpp"

namespace ddtest {

using namespace ddrep;

// Z_2, chi(a) = -1, alpha = 0: nilpotent, n = 2, m = 1.
inline DatumPtr datum_A() { return make_datum(FinAbGroup{{2}}, GroupChar{{1}}, {1}, CycScalar(0)); }
// Z_4, chi(a) = -1, alpha = 0: nilpotent, n = 2, m = 2.
inline DatumPtr datum_B() { return make_datum(FinAbGroup{{4}}, GroupChar{{2}}, {1}, CycScalar(0)); }
// Z_4, chi(a) = -1, alpha = 1: non-nilpotent, n = 2, m = 2.
inline DatumPtr datum_C() { return make_datum(FinAbGroup{{4}}, GroupChar{{2}}, {1}, CycScalar(1)); }
// Z_9, chi(a) = zeta_3, alpha = 1: non-nilpotent with n = 3.
inline DatumPtr datum_n3() { return make_datum(FinAbGroup{{9}}, GroupChar{{3}}, {1}, CycScalar(1)); }
// Z_3, chi(a) = zeta_3, alpha = 0: nilpotent with n = 3, m = 1.
inline DatumPtr datum_n3_nil() { return make_datum(FinAbGroup{{3}}, GroupChar{{1}}, {1}, CycScalar(0)); }

inline std::vector<DatumPtr> abc() { return {datum_A(), datum_B(), datum_C()}; }

// Weights in I_l for 1 <= l <= n-1.
inline std::vector<WeightClass> proper_weights(const GroupDatum& D) {
    std::vector<WeightClass> out;
    for (const auto& wc : enumerate_weights(D))
        if (wc.l < D.n) out.push_back(wc);
    return out;
}

// Independent evaluation of lambda(a chi^{-1}) as an exponent of zeta_N, using only the raw datum.
inline long oracle_a_chi_inv_exp(const std::vector<int>& orders, const std::vector<int>& chi, const std::vector<int>& a,
                                 const Weight& w, int N) {
    long e = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        const long scale = N / orders[i];
        e += scale * (static_cast<long>(w.gpart[i]) * a[i]);  // lambda(a)
        e -= scale * (static_cast<long>(chi[i]) * w.h[i]);    // lambda(chi)
    }
    return ((e % N) + N) % N;
}

// l such that lambda in I_l, from the defining equation lambda(a chi^{-1}) = rho^{l-1}.
inline int oracle_l(const std::vector<int>& orders, const std::vector<int>& chi, const std::vector<int>& a, const Weight& w) {
    int N = 1;
    for (int d : orders) N = std::lcm(N, d);
    long rho = 0;
    for (size_t i = 0; i < orders.size(); ++i) rho += static_cast<long>(N / orders[i]) * chi[i] * a[i];
    rho %= N;
    const int n = static_cast<int>(N / std::gcd<long, long>(N, rho));
    const long v = oracle_a_chi_inv_exp(orders, chi, a, w, N);
    for (int s = 0; s <= n - 2; ++s)
        if ((static_cast<long>(s) * rho) % N == v) return s + 1;
    return n;
}

// Random element of Q(zeta_N) with small integer coefficients.
inline CycScalar random_scalar(std::mt19937_64& rng, int N, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> c(static_cast<size_t>(euler_phi(N)));
    for (auto& x : c) x = d(rng);
    return CycScalar::from_poly(N, c);
}

inline Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, int N = 1, int range = 3) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, N, range);
    return m;
}

inline bool is_yes(const IsoVerdict& v) { return v.outcome == IsoOutcome::Yes && v.witness.has_value(); }
inline bool is_no(const IsoVerdict& v) { return v.outcome == IsoOutcome::No; }

inline EtaParam eta(long v) { return EtaParam::finite(CycScalar(v)); }

}  // namespace ddtest
