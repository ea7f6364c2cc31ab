#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ddrep {

using Rational = mpq_class;

int euler_phi(int n);

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, reduced mod Phi_N.
class CycScalar {
public:
    CycScalar();  // zero, order 1
    CycScalar(long v);  // NOLINT(google-explicit-constructor): integers embed in every field
    explicit CycScalar(const Rational& r, int order = 1);

    // Reduces an arbitrary-length coefficient list mod Phi_N.
    static CycScalar from_poly(int order, const std::vector<Rational>& poly);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    // Same element written over Q(zeta_M); requires order() | M.
    CycScalar coerce(int new_order) const;

    CycScalar inverse() const;
    CycScalar pow(long k) const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& b);
    CycScalar& operator-=(const CycScalar& b);
    CycScalar& operator*=(const CycScalar& b);
    CycScalar& operator/=(const CycScalar& b);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // a += b * c without temporaries when orders agree.
    void add_product(const CycScalar& b, const CycScalar& c);

    std::string to_string() const;

private:
    int order_ = 1;
    std::vector<Rational> c_;

    void reduce_in_place(std::vector<Rational>& poly) const;
};

// zeta_N^k.
CycScalar root_of_unity(int n, long k);

// (i)_q = 1 + q + ... + q^{i-1}, (0)_q = 0.
CycScalar q_number(int i, const CycScalar& q);
// (i)!_q = (i)_q (i-1)_q ... (1)_q, (0)!_q = 1.
CycScalar q_factorial(int i, const CycScalar& q);

// Integer coefficients of Phi_n, constant term first.
const std::vector<long>& cyclotomic_poly(int n);

int lcm_int(int a, int b);

}  // namespace ddrep
