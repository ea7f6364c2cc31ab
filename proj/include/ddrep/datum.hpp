#pragma once

#include <map>
#include <string>
#include <vector>

#include "ddrep/cyclo.hpp"
#include "ddrep/errors.hpp"

namespace ddrep {

using GroupElem = std::vector<int>;

struct FinAbGroup {
    std::vector<int> orders;

    size_t rank() const { return orders.size(); }
    int exponent() const;
    long size() const;
    GroupElem identity() const { return GroupElem(orders.size(), 0); }
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem scale(const GroupElem& a, long k) const;
    bool is_identity(const GroupElem& a) const;
    int element_order(const GroupElem& a) const;
    bool contains(const GroupElem& a) const;
    // Elements in mixed-radix order (first coordinate varies slowest).
    std::vector<GroupElem> elements() const;
};

// Character of G given by its exponent vector; value at e is prod zeta_{d_i}^{c_i e_i}.
struct GroupChar {
    std::vector<int> exps;
    bool operator==(const GroupChar&) const = default;
};

// Character of G x Gamma: gpart on G, and gamma -> gamma(h) on Gamma.
struct Weight {
    std::vector<int> gpart;
    GroupElem h;
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

enum class Kind { Nilpotent, NonNilpotent };

struct GroupDatum {
    FinAbGroup group;
    GroupChar chi;
    GroupElem a;
    CycScalar alpha;
    // derived
    int field_order = 1;  // N: every scalar lives in Q(zeta_N)
    int rho_exp = 0;      // rho = zeta_N^rho_exp
    CycScalar rho;
    int n = 1;
    Kind kind = Kind::Nilpotent;
    int m = 1;

    bool operator==(const GroupDatum& o) const {
        return group.orders == o.group.orders && chi == o.chi && a == o.a && alpha == o.alpha;
    }
};

struct DatumError : std::invalid_argument {
    DatumError(const std::string& msg, std::vector<int> chi_pow_n, GroupElem a_pow_n)
        : std::invalid_argument(msg), chi_to_n(std::move(chi_pow_n)), a_to_n(std::move(a_pow_n)) {}
    std::vector<int> chi_to_n;  // exponent vector of chi^n (nontrivial)
    GroupElem a_to_n;           // a^n (not the identity)
};

GroupDatum validate_datum(const FinAbGroup& g, const GroupChar& chi, const GroupElem& a, const CycScalar& alpha);

// Exponent k with value = zeta_N^k, N = D.field_order.
int char_exp(const GroupDatum& D, const std::vector<int>& c, const GroupElem& e);
CycScalar char_value(const GroupDatum& D, const std::vector<int>& c, const GroupElem& e);

Weight trivial_weight(const GroupDatum& D);
Weight phi(const GroupDatum& D);
Weight weight_mul(const GroupDatum& D, const Weight& u, const Weight& v);
Weight weight_pow(const GroupDatum& D, const Weight& u, long k);
int weight_order(const GroupDatum& D, const Weight& u);

// lambda(a) = gpart(a) and lambda(chi) = chi(h), as exponents of zeta_N and as scalars.
int weight_at_a_exp(const GroupDatum& D, const Weight& w);
int weight_at_chi_exp(const GroupDatum& D, const Weight& w);
CycScalar weight_at_a(const GroupDatum& D, const Weight& w);
CycScalar weight_at_chi(const GroupDatum& D, const Weight& w);
// Eigenvalue exponents of the cyclic generators (as zeta_{d_i}-exponents).
// Group generator i acts by zeta_{d_i}^{gpart_i}; Gamma generator j by zeta_{d_j}^{h_j}.

enum class TopSubclass { None, Prime, DoublePrime };

struct WeightClass {
    Weight weight;
    int d = -1;  // -1 means lambda lies outside the exceptional set (l = n)
    int l = 1;
    TopSubclass sub = TopSubclass::None;
};

WeightClass classify_weight(const GroupDatum& D, const Weight& w);
bool in_exceptional(const GroupDatum& D, const Weight& w);  // d(lambda) >= 0

Weight sigma(const GroupDatum& D, const Weight& w);
Weight sigma_inv(const GroupDatum& D, const Weight& w);
Weight tau(const GroupDatum& D, const Weight& w, long k = 1);

std::vector<WeightClass> enumerate_weights(const GroupDatum& D);
std::map<int, long> simple_counts(const GroupDatum& D);
std::vector<Weight> kernel_K(const GroupDatum& D);

// Simple-module label (l, lambda).
struct SimpleLabel {
    int l = 1;
    Weight lambda;
    bool operator==(const SimpleLabel&) const = default;
    auto operator<=>(const SimpleLabel&) const = default;
};

std::vector<std::vector<SimpleLabel>> linkage_blocks(const GroupDatum& D);

// alpha_i(l, lambda) = (i)_rho (lambda(chi) - lambda(a) rho^{1-i}); checked: lambda in I_l.
CycScalar alpha_coeff(const GroupDatum& D, int i, int l, const Weight& w);
// The same expression without the membership check (used for Verma modules).
CycScalar alpha_raw(const GroupDatum& D, int i, const Weight& w);
CycScalar beta_coeff(const GroupDatum& D, int l, const Weight& w);

struct YZ {
    CycScalar y, z;
};
YZ yz_coeff(const GroupDatum& D, int l, const Weight& w);

// Smallest weight of the tau-orbit (canonical orbit representative).
Weight tau_orbit_rep(const GroupDatum& D, const Weight& w);

std::string weight_to_string(const Weight& w);
std::string kind_name(Kind k);

}  // namespace ddrep
