#include "ddrep/homology.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <random>

namespace ddrep {

// ---------------------------------------------------------------- Hom

namespace {

struct HomSystem {
    size_t unknowns = 0;
    // var_of[i][k]: unknown for entry (i, k) of the weight-basis matrix, or npos
    std::vector<std::vector<size_t>> var_of;
    std::vector<std::pair<size_t, size_t>> entry_of_var;
    linalg::RowReducer reducer{0};
};

constexpr size_t kNone = static_cast<size_t>(-1);

HomSystem build_hom_system(const ModuleRep& M, const ModuleRep& N) {
    if (!(M.datum() == N.datum())) throw ParameterError("Hom between modules over different data");
    const auto& wm = M.weights();
    const auto& wn = N.weights();
    const size_t dm = M.dim(), dn = N.dim();
    HomSystem S;
    S.var_of.assign(dn, std::vector<size_t>(dm, kNone));
    for (size_t bn = 0; bn < wn.weights.size(); ++bn) {
        auto bm = wm.find(wn.weights[bn]);
        if (!bm) continue;
        for (size_t i = 0; i < wn.block_dim[bn]; ++i)
            for (size_t k = 0; k < wm.block_dim[*bm]; ++k) {
                const size_t r = wn.block_start[bn] + i, c = wm.block_start[*bm] + k;
                S.var_of[r][c] = S.unknowns++;
                S.entry_of_var.emplace_back(r, c);
            }
    }
    S.reducer = linalg::RowReducer(S.unknowns);
    if (S.unknowns == 0) return S;
    // F' XM - XN F' = 0 for XM, XN the weight-basis matrices of x and of xi.
    const Matrix* pairs[2][2] = {{&wm.x_w, &wn.x_w}, {&wm.xi_w, &wn.xi_w}};
    for (auto& pr : pairs) {
        const Matrix& XM = *pr[0];
        const Matrix& XN = *pr[1];
        for (size_t i = 0; i < dn; ++i) {
            for (size_t j = 0; j < dm; ++j) {
                Vec row(S.unknowns);
                bool any = false;
                for (size_t k = 0; k < dm; ++k) {
                    const size_t v = S.var_of[i][k];
                    if (v == kNone || XM(k, j).is_zero()) continue;
                    row[v] += XM(k, j);
                    any = true;
                }
                for (size_t k = 0; k < dn; ++k) {
                    const size_t v = S.var_of[k][j];
                    if (v == kNone || XN(i, k).is_zero()) continue;
                    row[v] -= XN(i, k);
                    any = true;
                }
                if (any) S.reducer.add_row(std::move(row));
            }
        }
    }
    return S;
}

std::vector<Matrix> hom_weight_basis(const ModuleRep& M, const ModuleRep& N) {
    HomSystem S = build_hom_system(M, N);
    std::vector<Matrix> out;
    if (S.unknowns == 0) return out;
    Matrix ns = S.reducer.nullspace();
    for (size_t c = 0; c < ns.cols(); ++c) {
        Matrix F(N.dim(), M.dim());
        for (size_t v = 0; v < S.unknowns; ++v) {
            const auto [r, k] = S.entry_of_var[v];
            F(r, k) = ns(v, c);
        }
        out.push_back(std::move(F));
    }
    return out;
}

}  // namespace

std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N) {
    std::vector<Matrix> out = hom_weight_basis(M, N);
    const auto& wm = M.weights();
    const auto& wn = N.weights();
    for (auto& F : out) F = wn.basis * F * wm.basis_inv;
    return out;
}

size_t hom_dim(const ModuleRep& M, const ModuleRep& N) {
    HomSystem S = build_hom_system(M, N);
    return S.unknowns - S.reducer.rank();
}

size_t end_local_dim(const ModuleRep& M) {
    if (M.dim() == 0) throw ParameterError("end_local_dim of the zero module");
    // The trace form is conjugation invariant, so the weight basis suffices.
    std::vector<Matrix> E = hom_weight_basis(M, M);
    const size_t d = E.size();
    Matrix G(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            G(i, j) = trace_of_product(E[i], E[j]);
            G(j, i) = G(i, j);
        }
    return d - linalg::nullspace(G).cols();
}

// ---------------------------------------------------------------- cached simples / projectives

namespace {

struct DatumCache {
    DatumPtr datum;
    std::map<Weight, ModuleRep> simples, projectives;
};

std::mutex g_cache_mutex;
std::list<DatumCache> g_caches;

DatumCache& cache_for(const DatumPtr& D) {
    for (auto& c : g_caches)
        if (c.datum == D || *c.datum == *D) return c;
    g_caches.push_back(DatumCache{D, {}, {}});
    return g_caches.back();
}

}  // namespace

const ModuleRep& simple_of_weight(const DatumPtr& D, const Weight& mu) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto& c = cache_for(D);
        auto it = c.simples.find(mu);
        if (it != c.simples.end()) return it->second;
    }
    ModuleRep V = simple(D, classify_weight(*D, mu).l, mu);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache_for(D).simples.emplace(mu, std::move(V)).first->second;
}

const ModuleRep& indecomposable_projective(const DatumPtr& D, const Weight& mu) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto& c = cache_for(D);
        auto it = c.projectives.find(mu);
        if (it != c.projectives.end()) return it->second;
    }
    const int l = classify_weight(*D, mu).l;
    ModuleRep P = l == D->n ? simple(D, l, mu) : projective(D, l, mu);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache_for(D).projectives.emplace(mu, std::move(P)).first->second;
}

// ---------------------------------------------------------------- socle / radical

namespace {

SimpleLabel label_of(const GroupDatum& D, const Weight& mu) { return SimpleLabel{classify_weight(D, mu).l, mu}; }

}  // namespace

Submodule socle(const ModuleRep& M) {
    if (M.dim() == 0) return Submodule{M, Matrix(0, 0)};
    std::vector<Vec> cols;
    for (const auto& mu : M.weights().weights)
        for (const auto& F : hom_space(simple_of_weight(M.datum_ptr(), mu), M))
            for (size_t c = 0; c < F.cols(); ++c) cols.push_back(F.column(c));
    Matrix B = linalg::column_basis(Matrix::from_columns(cols, M.dim()));
    return restrict_to_subspace(M, B);
}

Submodule radical(const ModuleRep& M) {
    if (M.dim() == 0) return Submodule{M, Matrix(0, 0)};
    Matrix stacked(0, M.dim());
    for (const auto& mu : M.weights().weights)
        for (const auto& F : hom_space(M, simple_of_weight(M.datum_ptr(), mu))) stacked = Matrix::vcat(stacked, F);
    return restrict_to_subspace(M, linalg::nullspace(stacked));
}

Quotient head(const ModuleRep& M) { return quotient_module(M, radical(M).inclusion); }

Multiplicities socle_constituents(const ModuleRep& M) {
    Multiplicities out;
    if (M.dim() == 0) return out;
    for (const auto& mu : M.weights().weights) {
        const size_t d = hom_dim(simple_of_weight(M.datum_ptr(), mu), M);
        if (d) out[label_of(M.datum(), mu)] += static_cast<int>(d);
    }
    return out;
}

Multiplicities head_constituents(const ModuleRep& M) {
    Multiplicities out;
    if (M.dim() == 0) return out;
    for (const auto& mu : M.weights().weights) {
        const size_t d = hom_dim(M, simple_of_weight(M.datum_ptr(), mu));
        if (d) out[label_of(M.datum(), mu)] += static_cast<int>(d);
    }
    return out;
}

size_t composition_length(const Multiplicities& f) {
    size_t s = 0;
    for (const auto& [k, v] : f) s += static_cast<size_t>(v);
    return s;
}

LoewyType loewy_type(const ModuleRep& M) {
    LoewyType t;
    t.s = composition_length(head_constituents(M));
    t.t = composition_length(socle_constituents(M));
    ModuleRep cur = M;
    while (cur.dim() > 0) {
        cur = radical(cur).module;
        ++t.rl;
        if (t.rl > 3) throw InternalInconsistency("radical length exceeds 3");
    }
    return t;
}

Multiplicities composition_factors(const ModuleRep& M) {
    Multiplicities out;
    ModuleRep cur = M;
    while (cur.dim() > 0) {
        for (const auto& [k, v] : socle_constituents(cur)) out[k] += v;
        cur = quotient_module(cur, socle(cur).inclusion).module;
    }
    return out;
}

// ---------------------------------------------------------------- covers and hulls

CoverMap projective_cover_map(const ModuleRep& M) {
    const DatumPtr& D = M.datum_ptr();
    if (M.dim() == 0) return CoverMap{zero_module(D), Matrix(0, 0), {}};
    const Quotient H = head(M);
    std::vector<ModuleRep> parts;
    std::vector<SimpleLabel> labels;
    Matrix f(M.dim(), 0);
    Matrix head_image(H.module.dim(), 0);
    for (const auto& [lab, mult] : head_constituents(M)) {
        const ModuleRep& P = indecomposable_projective(D, lab.lambda);
        int chosen = 0;
        for (const auto& F : hom_space(P, M)) {
            if (chosen == mult) break;
            Matrix trial = Matrix::hcat(head_image, H.projection * F);
            if (linalg::rank(trial) != linalg::rank(head_image) + static_cast<size_t>(lab.l)) continue;
            head_image = std::move(trial);
            f = Matrix::hcat(f, F);
            parts.push_back(P);
            labels.push_back(lab);
            ++chosen;
        }
        if (chosen != mult) throw InternalInconsistency("projective cover: head maps could not be selected");
    }
    ModuleRep cover = direct_sum(parts);
    if (linalg::rank(f) != M.dim()) throw InternalInconsistency("projective cover map is not surjective");
    Matrix ker = linalg::nullspace(f);
    if (ker.cols() && !(head(cover).projection * ker).is_zero()) throw InternalInconsistency("projective cover kernel not in the radical");
    return CoverMap{std::move(cover), std::move(f), std::move(labels)};
}

CoverMap injective_hull_map(const ModuleRep& M) {
    const DatumPtr& D = M.datum_ptr();
    if (M.dim() == 0) return CoverMap{zero_module(D), Matrix(0, 0), {}};
    const Submodule S = socle(M);
    std::vector<ModuleRep> parts;
    std::vector<SimpleLabel> labels;
    Matrix f(0, M.dim());
    Matrix socle_image(0, S.module.dim());
    for (const auto& [lab, mult] : socle_constituents(M)) {
        const ModuleRep& I = indecomposable_projective(D, lab.lambda);
        int chosen = 0;
        for (const auto& G : hom_space(M, I)) {
            if (chosen == mult) break;
            Matrix trial = Matrix::vcat(socle_image, G * S.inclusion);
            if (linalg::rank(trial) != linalg::rank(socle_image) + static_cast<size_t>(lab.l)) continue;
            socle_image = std::move(trial);
            f = Matrix::vcat(f, G);
            parts.push_back(I);
            labels.push_back(lab);
            ++chosen;
        }
        if (chosen != mult) throw InternalInconsistency("injective hull: socle maps could not be selected");
    }
    ModuleRep hull = direct_sum(parts);
    if (linalg::rank(f) != M.dim()) throw InternalInconsistency("injective hull map is not injective");
    return CoverMap{std::move(hull), std::move(f), std::move(labels)};
}

ModuleRep syzygy(const ModuleRep& M) {
    if (M.dim() == 0) return M;
    CoverMap c = projective_cover_map(M);
    Matrix K = linalg::nullspace(c.map);
    if (K.cols() == 0) return zero_module(M.datum_ptr());
    return restrict_to_subspace(c.module, K).module;
}

ModuleRep cosyzygy(const ModuleRep& M) {
    if (M.dim() == 0) return M;
    CoverMap c = injective_hull_map(M);
    return quotient_module(c.module, linalg::column_basis(c.map)).module;
}

ModuleRep syzygy_power(const ModuleRep& M, int s) {
    ModuleRep cur = M;
    for (int i = 0; i < s; ++i) cur = syzygy(cur);
    for (int i = 0; i < -s; ++i) cur = cosyzygy(cur);
    return cur;
}

ModuleRep omega_power(const DatumPtr& D, int l, const Weight& lambda, int s) {
    if (l < 1 || l >= D->n) throw ParameterError("Omega^s V(l, lambda) needs 1 <= l <= n-1");
    ModuleRep M = syzygy_power(simple(D, l, lambda), s);
    if (s != 0) {
        const size_t a = static_cast<size_t>(s > 0 ? s : -s);
        LoewyType t = loewy_type(M);
        const LoewyType want = s > 0 ? LoewyType{a + 1, a, 2} : LoewyType{a, a + 1, 2};
        if (!(t == want)) throw InternalInconsistency("Omega^s V(l, lambda) has an unexpected (s, t)-type");
    }
    return M;
}

// ---------------------------------------------------------------- isomorphism

IsoInvariants iso_invariants(const ModuleRep& M) {
    IsoInvariants iv;
    iv.dim = M.dim();
    if (M.dim() == 0) return iv;
    const auto& wd = M.weights();
    for (size_t k = 0; k < wd.weights.size(); ++k) iv.weights.emplace_back(wd.weights[k], wd.block_dim[k]);
    iv.type = loewy_type(M);
    iv.factors = composition_factors(M);
    iv.socle = socle_constituents(M);
    iv.head = head_constituents(M);
    iv.x_fixed = x_kernel(M).cols();
    iv.xi_fixed = xi_kernel(M).cols();
    for (size_t k = 0; k < wd.weights.size(); ++k) {
        const size_t rows = M.dim(), start = wd.block_start[k], d = wd.block_dim[k];
        iv.x_kernel_profile.push_back(d - linalg::rank(wd.x_w.block(0, start, rows, d)));
        iv.xi_kernel_profile.push_back(d - linalg::rank(wd.xi_w.block(0, start, rows, d)));
        iv.joint_image_profile.push_back(linalg::rank(Matrix::hcat(wd.x_w.block(0, start, rows, d), wd.xi_w.block(0, start, rows, d))));
    }
    iv.end_dim = hom_dim(M, M);
    iv.end_local = end_local_dim(M);
    iv.holonomy = holonomy_invariant(M);
    return iv;
}

std::optional<std::string> invariant_mismatch(const IsoInvariants& a, const IsoInvariants& b) {
    if (a.dim != b.dim) return "dimension";
    if (a.weights != b.weights) return "weight multiset";
    if (!(a.type == b.type)) return "Loewy type";
    if (a.factors != b.factors) return "composition factors";
    if (a.socle != b.socle) return "socle constituents";
    if (a.head != b.head) return "head constituents";
    if (a.x_fixed != b.x_fixed) return "dim M^x";
    if (a.xi_fixed != b.xi_fixed) return "dim M^xi";
    if (a.x_kernel_profile != b.x_kernel_profile) return "dim M^x per weight";
    if (a.xi_kernel_profile != b.xi_kernel_profile) return "dim M^xi per weight";
    if (a.joint_image_profile != b.joint_image_profile) return "dim (xM + xiM) per weight";
    if (a.end_dim != b.end_dim) return "dim End";
    if (a.end_local != b.end_local) return "dim End/J(End)";
    if (!(a.holonomy == b.holonomy)) return "holonomy";
    return std::nullopt;
}

std::string outcome_name(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::Yes: return "yes";
        case IsoOutcome::No: return "no";
        case IsoOutcome::Undecided: return "undecided";
    }
    return "?";
}

IsoVerdict is_isomorphic(const ModuleRep& M, const ModuleRep& N, std::uint64_t seed) {
    return is_isomorphic(M, iso_invariants(M), N, iso_invariants(N), seed);
}

IsoVerdict is_isomorphic(const ModuleRep& M, const IsoInvariants& im, const ModuleRep& N, const IsoInvariants& in,
                         std::uint64_t seed) {
    IsoVerdict v;
    if (auto why = invariant_mismatch(im, in)) {
        v.outcome = IsoOutcome::No;
        v.reason = *why;
        return v;
    }
    if (M.dim() == 0) {
        v.outcome = IsoOutcome::Yes;
        v.witness = Matrix(0, 0);
        v.reason = "zero modules";
        return v;
    }
    std::vector<Matrix> H = hom_space(M, N);
    if (H.size() != im.end_dim) {
        v.outcome = IsoOutcome::No;
        v.reason = "dim Hom(M,N) != dim End(M)";
        return v;
    }
    if (hom_dim(N, M) != in.end_dim) {
        v.outcome = IsoOutcome::No;
        v.reason = "dim Hom(N,M) != dim End(N)";
        return v;
    }
    auto accept = [&](const Matrix& F) {
        if (linalg::rank(F) != M.dim() || !is_intertwiner(M, N, F)) return false;
        v.outcome = IsoOutcome::Yes;
        v.witness = F;
        return true;
    };
    for (const auto& F : H) {
        ++v.trials;
        if (accept(F)) {
            v.reason = "Hom basis element";
            return v;
        }
    }
    if (H.empty()) {
        v.outcome = IsoOutcome::No;
        v.reason = "Hom(M,N) = 0";
        return v;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    constexpr size_t kTrials = 64;
    for (size_t t = 0; t < kTrials; ++t) {
        ++v.trials;
        Matrix F(N.dim(), M.dim());
        for (const auto& B : H) {
            const int c = coeff(rng);
            if (c) F = F + B.scaled(CycScalar(c));
        }
        if (accept(F)) {
            v.reason = "random combination of Hom basis";
            return v;
        }
    }
    v.outcome = IsoOutcome::Undecided;
    v.reason = "no invertible intertwiner found";
    return v;
}

// ---------------------------------------------------------------- short exact sequences

bool SesReport::ar_candidate() const {
    return exact && !split && end_local_a == 1 && end_local_c == 1 && translate && translate->outcome == IsoOutcome::Yes;
}

SesReport ses_check(const ModuleRep& A, const ModuleRep& B, const ModuleRep& C, const Matrix& f, const Matrix& g) {
    SesReport r;
    r.composable = f.rows() == B.dim() && f.cols() == A.dim() && g.rows() == C.dim() && g.cols() == B.dim();
    if (!r.composable) throw SizeMismatch("ses_check: maps are not composable");
    r.maps_are_intertwiners = is_intertwiner(A, B, f) && is_intertwiner(B, C, g);
    r.f_injective = linalg::rank(f) == A.dim();
    r.g_surjective = linalg::rank(g) == C.dim();
    r.middle_exact = (g * f).is_zero() && B.dim() == A.dim() + C.dim();
    r.exact = r.maps_are_intertwiners && r.f_injective && r.g_surjective && r.middle_exact;
    if (!r.exact) return r;
    // split iff some s in Hom(C, B) has g s = id_C
    std::vector<Matrix> S = hom_space(C, B);
    const size_t dc = C.dim();
    Matrix sys(dc * dc, S.size()), rhs(dc * dc, 1);
    for (size_t k = 0; k < S.size(); ++k) {
        Matrix gs = g * S[k];
        for (size_t i = 0; i < dc; ++i)
            for (size_t j = 0; j < dc; ++j) sys(i * dc + j, k) = gs(i, j);
    }
    for (size_t i = 0; i < dc; ++i) rhs(i * dc + i, 0) = CycScalar(1);
    if (auto sol = linalg::solve(sys, rhs)) {
        r.split = true;
        Matrix s(B.dim(), dc);
        for (size_t k = 0; k < S.size(); ++k)
            if (!(*sol)(k, 0).is_zero()) s = s + S[k].scaled((*sol)(k, 0));
        r.section = std::move(s);
    }
    return r;
}

SesReport ar_candidate_check(const ModuleRep& A, const ModuleRep& B, const ModuleRep& C, const Matrix& f, const Matrix& g,
                             std::uint64_t seed) {
    SesReport r = ses_check(A, B, C, f, g);
    if (A.dim()) r.end_local_a = end_local_dim(A);
    if (C.dim()) r.end_local_c = end_local_dim(C);
    r.translate = is_isomorphic(A, syzygy(syzygy(C)), seed);
    return r;
}

}  // namespace ddrep
