#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ddrep/datum.hpp"
#include "ddrep/repmod.hpp"

namespace ddrep {

using DatumPtr = std::shared_ptr<const GroupDatum>;

DatumPtr make_datum(const FinAbGroup& g, const GroupChar& chi, const GroupElem& a, const CycScalar& alpha);

// A scalar or the point at infinity; infinity is never used in arithmetic.
struct EtaParam {
    bool infinite = false;
    CycScalar value;

    static EtaParam inf() { return EtaParam{true, CycScalar()}; }
    static EtaParam finite(const CycScalar& v) { return EtaParam{false, v}; }
    bool is_zero() const { return !infinite && value.is_zero(); }
    EtaParam negated() const { return infinite ? *this : finite(-value); }
    bool operator==(const EtaParam& o) const { return infinite == o.infinite && (infinite || value == o.value); }
    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

enum class Family { Z, V, P, T1, T1bar, Tt, Ttbar, M1, Mt, W1, Wt, OmegaPower };
enum class BasisKind { Natural, Standard };

std::string family_name(Family f);
Family family_from_name(const std::string& s);  // throws ParameterError

struct FamilyTag {
    Family family = Family::V;
    int l = 1;
    Weight lambda;
    int t = 1;
    int s = 0;
    EtaParam eta = EtaParam::finite(CycScalar(1));
    BasisKind basis = BasisKind::Natural;
    std::string to_string() const;
};

// Z(lambda): basis v_i = x^i 1_lambda.
ModuleRep verma(const DatumPtr& D, const Weight& lambda);

// V(l, lambda) in the natural or the standard basis.
ModuleRep simple(const DatumPtr& D, int l, const Weight& lambda, BasisKind basis = BasisKind::Natural);
// Change of basis S with natural = S * standard coordinates (diagonal).
Matrix simple_standard_to_natural(const GroupDatum& D, int l, const Weight& lambda);

// How the non-nilpotent x v_{n-1} and x u_{n-1} rows are read: with y_{l,lambda}, z_{l,lambda}
// (consistent) or with the index n-1 substituted for l (kept as a failing control).
enum class TableReading { Consistent, LiteralIndex };

// P(l, lambda), 1 <= l <= n-1, basis v_0..v_{n-1}, u_0..u_{n-1}.
ModuleRep projective(const DatumPtr& D, int l, const Weight& lambda, TableReading reading = TableReading::Consistent);
// Same matrices without the relation check (used to exhibit failures).
ModuleRep projective_unchecked(const DatumPtr& D, int l, const Weight& lambda, TableReading reading);

ModuleRep t1(const DatumPtr& D, int l, const Weight& lambda);
ModuleRep t1bar(const DatumPtr& D, int l, const Weight& lambda);

// M_1(l, lambda, eta) transcribed directly in the basis x_j^k, (k, j)-lexicographic.
ModuleRep band_m1(const DatumPtr& D, int l, const Weight& lambda, const CycScalar& eta);

// Chained constructions inside a direct sum of projectives.
ModuleRep band_mt(const DatumPtr& D, int l, const Weight& lambda, const CycScalar& eta, int t);
ModuleRep string_tt(const DatumPtr& D, int l, const Weight& lambda, int t);
ModuleRep string_ttbar(const DatumPtr& D, int l, const Weight& lambda, int t);
ModuleRep w1(const DatumPtr& D, int l, const Weight& lambda, const EtaParam& eta);
ModuleRep w_t(const DatumPtr& D, int l, const Weight& lambda, const EtaParam& eta, int t);

// Omega^s V(l, lambda) (cosyzygies for s < 0).
ModuleRep omega_power(const DatumPtr& D, int l, const Weight& lambda, int s);

ModuleRep build_family(const DatumPtr& D, const FamilyTag& tag);

}  // namespace ddrep
