#include "ddrep/arseq.hpp"

#include <random>

namespace ddrep {

namespace {

Matrix inverse_of_witness(const IsoVerdict& v, const std::string& what) {
    if (v.outcome != IsoOutcome::Yes) throw InternalInconsistency(what + ": expected isomorphism not certified (" + v.reason + ")");
    return linalg::inverse(*v.witness);
}

}  // namespace

SesInstance simple_ar_sequence(const DatumPtr& D, int l, const Weight& lambda, std::uint64_t seed) {
    const GroupDatum& d = *D;
    ModuleRep P = projective(D, l, lambda);
    Submodule R = radical(P);
    Submodule S = socle(P);
    // soc P inside rad P, in rad P coordinates
    Matrix soc_in_rad = *linalg::solve(R.inclusion, S.inclusion);
    Quotient RS = quotient_module(R.module, soc_in_rad);
    Quotient PS = quotient_module(P, S.inclusion);

    ModuleRep V1 = simple(D, d.n - l, sigma(d, lambda));
    ModuleRep V2 = simple(D, d.n - l, sigma_inv(d, lambda));
    ModuleRep VV = direct_sum({V1, V2});
    IsoVerdict iso = is_isomorphic(VV, RS.module, seed);
    Matrix to_vv = inverse_of_witness(iso, "rad P / soc P vs V + V");  // RS -> VV
    const Matrix& phi = *iso.witness;                                  // VV -> RS

    ModuleRep B = direct_sum({V1, V2, P});
    Matrix f = Matrix::vcat(to_vv * RS.projection, R.inclusion);
    Matrix j = PS.projection * R.inclusion * RS.lift;  // RS -> P / soc P
    Matrix g = Matrix::hcat(j * phi, PS.projection.scaled(CycScalar(-1)));
    return SesInstance{"0 -> Omega V -> V(n-l,sigma) + V(n-l,sigma^-1) + P -> Omega^-1 V -> 0", R.module, B, PS.module, f, g};
}

SesInstance syzygy_ar_sequence(const DatumPtr& D, int l, const Weight& lambda, int t, bool cosyzygy, std::uint64_t seed) {
    const GroupDatum& d = *D;
    if (t < 0) throw ParameterError("t must be non-negative");
    const int sgn = cosyzygy ? -1 : 1;
    ModuleRep A = omega_power(D, l, lambda, cosyzygy ? -t : t + 2);
    ModuleRep C = omega_power(D, l, lambda, cosyzygy ? -(t + 2) : t);
    ModuleRep E1 = omega_power(D, d.n - l, sigma(d, lambda), sgn * (t + 1));
    ModuleRep E2 = omega_power(D, d.n - l, sigma_inv(d, lambda), sgn * (t + 1));
    ModuleRep B = direct_sum({E1, E2});
    std::vector<Matrix> H = hom_space(B, C);
    if (H.empty()) throw InternalInconsistency("no maps from the middle term to the right term");
    const IsoInvariants ia = iso_invariants(A);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    constexpr int kAttempts = 32;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Matrix g(C.dim(), B.dim());
        for (const auto& h : H) {
            const int c = coeff(rng);
            if (c) g = g + h.scaled(CycScalar(c));
        }
        if (linalg::rank(g) != C.dim()) continue;
        Submodule K = restrict_to_subspace(B, linalg::nullspace(g));
        IsoVerdict iso = is_isomorphic(A, ia, K.module, iso_invariants(K.module), seed + static_cast<std::uint64_t>(attempt));
        if (iso.outcome != IsoOutcome::Yes) continue;
        Matrix f = K.inclusion * *iso.witness;
        auto om = [](int k, const char* v) {
            return k == 0 ? std::string(v) : (k == 1 ? "Omega " : "Omega^" + std::to_string(k) + " ") + v;
        };
        const std::string name = "0 -> " + om(sgn * (cosyzygy ? t : t + 2), "V") + " -> " + om(sgn * (t + 1), "V'") + " + " +
                                 om(sgn * (t + 1), "V''") + " -> " + om(sgn * (cosyzygy ? t + 2 : t), "V") + " -> 0";
        return SesInstance{name, A, B, C, f, g};
    }
    throw InternalInconsistency("no surjection with the expected kernel found");
}

// ---------------------------------------------------------------- chained families

namespace {

ModuleRep chain_member(const DatumPtr& D, Family family, int l, const Weight& lambda, const EtaParam& eta, int t) {
    switch (family) {
        case Family::Tt: return string_tt(D, l, lambda, t);
        case Family::Ttbar: return string_ttbar(D, l, lambda, t);
        case Family::Mt:
            if (eta.infinite) throw ParameterError("M-family requires a finite nonzero eta");
            return band_mt(D, l, lambda, eta.value, t);
        case Family::Wt: return w_t(D, l, lambda, eta, t);
        default: throw ParameterError("AR sequences are defined here for Tt, Ttbar, Mt, Wt only");
    }
}

// Parameter of the quotient family member X'.
Weight quotient_lambda(const GroupDatum& D, Family family, const Weight& lambda) {
    if (family == Family::Tt) return tau(D, lambda, -1);
    if (family == Family::Ttbar) return tau(D, lambda, 1);
    return lambda;
}

// Copies per layer: m for bands, 1 otherwise.
size_t layer(const GroupDatum& D, Family family) { return family == Family::Mt ? static_cast<size_t>(D.m) : 1; }

}  // namespace

ChainMaps chain_maps(const DatumPtr& D, Family family, int l, const Weight& lambda, const EtaParam& eta, int t) {
    const GroupDatum& d = *D;
    ChainMaps cm;
    cm.small = chain_member(D, family, l, lambda, eta, t);
    cm.large = chain_member(D, family, l, lambda, eta, t + 1);
    cm.quotient_target = chain_member(D, family, l, quotient_lambda(d, family, lambda), eta, t);
    const size_t n = static_cast<size_t>(d.n);
    const size_t L = layer(d, family);
    const size_t small_copies = cm.small.dim() / n, large_copies = cm.large.dim() / n;
    cm.inclusion = Matrix(cm.large.dim(), cm.small.dim());
    cm.quotient = Matrix(cm.quotient_target.dim(), cm.large.dim());
    // T shifts the small chain up by one copy; the quotient of T drops the last copy,
    // the others drop the first layer.
    const size_t inc_shift = family == Family::Tt ? 1 : 0;
    for (size_t c = 0; c < small_copies; ++c)
        for (size_t p = 0; p < n; ++p) cm.inclusion((c + inc_shift) * n + p, c * n + p) = CycScalar(1);
    for (size_t c = 0; c < large_copies; ++c) {
        size_t target;
        if (family == Family::Tt) {
            if (c + 1 == large_copies) continue;
            target = c;
        } else {
            if (c < L) continue;
            target = c - L;
        }
        for (size_t p = 0; p < n; ++p) cm.quotient(target * n + p, c * n + p) = CycScalar(1);
    }
    cm.inclusion.coerce_all(d.field_order);
    cm.quotient.coerce_all(d.field_order);
    if (!is_intertwiner(cm.small, cm.large, cm.inclusion)) throw InternalInconsistency("canonical chain inclusion is not a module map");
    if (!is_intertwiner(cm.large, cm.quotient_target, cm.quotient)) throw InternalInconsistency("canonical chain quotient is not a module map");
    return cm;
}

std::vector<SesInstance> chain_ar_sequences(const DatumPtr& D, Family family, int l, const Weight& lambda, const EtaParam& eta,
                                            int max_t) {
    const GroupDatum& d = *D;
    std::vector<SesInstance> out;
    if (max_t < 1) return out;
    const std::string fam = family_name(family);
    const Weight lam_q = quotient_lambda(d, family, lambda);
    ChainMaps first = chain_maps(D, family, l, lambda, eta, 1);
    out.push_back(SesInstance{"0 -> " + fam + "_1 -> " + fam + "_2 -> " + fam + "'_1 -> 0", first.small, first.large,
                              first.quotient_target, first.inclusion, first.quotient});
    for (int t = 2; t <= max_t; ++t) {
        ChainMaps here = chain_maps(D, family, l, lambda, eta, t);         // X_t -> X_{t+1} -> X'_t
        ChainMaps below = chain_maps(D, family, l, lambda, eta, t - 1);    // X_{t-1} -> X_t -> X'_{t-1}
        ChainMaps primed = chain_maps(D, family, l, lam_q, eta, t - 1);    // X'_{t-1} -> X'_t
        ModuleRep B = direct_sum({below.quotient_target, here.large});
        Matrix f = Matrix::vcat(below.quotient, here.inclusion);
        Matrix g = Matrix::hcat(primed.inclusion, here.quotient.scaled(CycScalar(-1)));
        out.push_back(SesInstance{"0 -> " + fam + "_" + std::to_string(t) + " -> " + fam + "'_" + std::to_string(t - 1) + " + " + fam + "_" +
                                      std::to_string(t + 1) + " -> " + fam + "'_" + std::to_string(t) + " -> 0",
                                  here.small, B, here.quotient_target, f, g});
    }
    return out;
}

}  // namespace ddrep
