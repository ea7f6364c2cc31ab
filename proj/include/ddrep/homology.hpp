#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddrep/constructors.hpp"

namespace ddrep {

// Basis of Hom(M, N); each element is a dim(N) x dim(M) intertwiner.
std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N);
size_t hom_dim(const ModuleRep& M, const ModuleRep& N);

// dim End(M) / J(End(M)), with J the radical of the trace form.
size_t end_local_dim(const ModuleRep& M);

// The simple V(l_mu, mu) with l_mu determined by mu; cached per datum.
const ModuleRep& simple_of_weight(const DatumPtr& D, const Weight& mu);
// P(l_mu, mu), or V(n, mu) when mu lies in I_n; cached per datum.
const ModuleRep& indecomposable_projective(const DatumPtr& D, const Weight& mu);

using Multiplicities = std::map<SimpleLabel, int>;

Submodule socle(const ModuleRep& M);
Submodule radical(const ModuleRep& M);
Quotient head(const ModuleRep& M);
Multiplicities socle_constituents(const ModuleRep& M);
Multiplicities head_constituents(const ModuleRep& M);

struct LoewyType {
    size_t s = 0;   // head length
    size_t t = 0;   // socle length
    size_t rl = 0;  // radical length
    bool operator==(const LoewyType&) const = default;
};
LoewyType loewy_type(const ModuleRep& M);
Multiplicities composition_factors(const ModuleRep& M);
size_t composition_length(const Multiplicities& f);

struct CoverMap {
    ModuleRep module;                   // the projective (injective) module
    Matrix map;                         // cover -> M, or M -> hull
    std::vector<SimpleLabel> summands;  // tops (socles) of the indecomposable summands
};
CoverMap projective_cover_map(const ModuleRep& M);
CoverMap injective_hull_map(const ModuleRep& M);

ModuleRep syzygy(const ModuleRep& M);
ModuleRep cosyzygy(const ModuleRep& M);
ModuleRep syzygy_power(const ModuleRep& M, int s);  // s < 0: cosyzygies

// Conjugacy data of the composite of link maps around a band (see holonomy.cpp).
struct Holonomy {
    bool applicable = false;
    bool inverted = false;          // B^{-1}A was singular-free only in the A^{-1}B direction
    std::vector<CycScalar> charpoly;  // monic, constant term first
    bool operator==(const Holonomy& o) const {
        return applicable == o.applicable && (!applicable || (inverted == o.inverted && charpoly == o.charpoly));
    }
    std::string to_string() const;
};
Holonomy holonomy_invariant(const ModuleRep& M);

struct IsoInvariants {
    size_t dim = 0;
    std::vector<std::pair<Weight, size_t>> weights;
    LoewyType type;
    Multiplicities factors;
    Multiplicities socle, head;
    size_t x_fixed = 0, xi_fixed = 0;
    // dim of ker x and ker xi on each weight space
    std::vector<size_t> x_kernel_profile, xi_kernel_profile;
    // dim (x M_mu + xi M_mu) on each weight space
    std::vector<size_t> joint_image_profile;
    size_t end_dim = 0, end_local = 0;
    Holonomy holonomy;
};
IsoInvariants iso_invariants(const ModuleRep& M);
// Name of the first differing invariant, if any.
std::optional<std::string> invariant_mismatch(const IsoInvariants& a, const IsoInvariants& b);

enum class IsoOutcome { Yes, No, Undecided };
struct IsoVerdict {
    IsoOutcome outcome = IsoOutcome::Undecided;
    std::string reason;           // certifying invariant for No, search summary otherwise
    std::optional<Matrix> witness;  // invertible intertwiner M -> N for Yes
    size_t trials = 0;
};
std::string outcome_name(IsoOutcome o);

IsoVerdict is_isomorphic(const ModuleRep& M, const ModuleRep& N, std::uint64_t seed = 1);
IsoVerdict is_isomorphic(const ModuleRep& M, const IsoInvariants& im, const ModuleRep& N, const IsoInvariants& in,
                         std::uint64_t seed = 1);

struct SesReport {
    bool composable = false;
    bool maps_are_intertwiners = false;
    bool f_injective = false, g_surjective = false, middle_exact = false;
    bool exact = false;
    bool split = false;
    std::optional<Matrix> section;  // s : C -> B with g s = id when split
    size_t end_local_a = 0, end_local_c = 0;
    std::optional<IsoVerdict> translate;  // A vs Omega^2 C
    bool ar_candidate() const;
};

SesReport ses_check(const ModuleRep& A, const ModuleRep& B, const ModuleRep& C, const Matrix& f, const Matrix& g);
SesReport ar_candidate_check(const ModuleRep& A, const ModuleRep& B, const ModuleRep& C, const Matrix& f, const Matrix& g,
                             std::uint64_t seed = 1);

}  // namespace ddrep
