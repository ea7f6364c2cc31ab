#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddrep/homology.hpp"

namespace ddrep {

struct SesInstance {
    std::string name;
    ModuleRep A, B, C;
    Matrix f, g;  // f : A -> B, g : B -> C
};

// 0 -> Omega V -> V(n-l, sigma lambda) + V(n-l, sigma^{-1} lambda) + P(l, lambda) -> Omega^{-1} V -> 0,
// built from rad P -> rad P / soc P + P -> P / soc P.
SesInstance simple_ar_sequence(const DatumPtr& D, int l, const Weight& lambda, std::uint64_t seed = 1);

// 0 -> Omega^{t+2} V(l) -> Omega^{t+1} V(n-l, sigma) + Omega^{t+1} V(n-l, sigma^{-1}) -> Omega^t V(l) -> 0
// (cosyzygy = true gives the mirrored sequence with negative powers). The right-hand map is
// found by a seeded search over Hom(B, C) for a surjection whose kernel is isomorphic to A.
SesInstance syzygy_ar_sequence(const DatumPtr& D, int l, const Weight& lambda, int t, bool cosyzygy, std::uint64_t seed = 1);

// Sequences 0 -> X_1 -> X_2 -> X'_1 -> 0 and 0 -> X_t -> X'_{t-1} + X_{t+1} -> X'_t -> 0 for the
// chained families Tt, Ttbar, Mt, Wt, using the canonical inclusion and quotient maps.
std::vector<SesInstance> chain_ar_sequences(const DatumPtr& D, Family family, int l, const Weight& lambda, const EtaParam& eta,
                                            int max_t);

// Canonical maps between chained modules (exposed for tests).
struct ChainMaps {
    ModuleRep small, large, quotient_target;
    Matrix inclusion;  // X_t -> X_{t+1}
    Matrix quotient;   // X_{t+1} -> X'_t
};
ChainMaps chain_maps(const DatumPtr& D, Family family, int l, const Weight& lambda, const EtaParam& eta, int t);

}  // namespace ddrep
