#include "ddrep/constructors.hpp"

#include "ddrep/homology.hpp"

namespace ddrep {

DatumPtr make_datum(const FinAbGroup& g, const GroupChar& chi, const GroupElem& a, const CycScalar& alpha) {
    return std::make_shared<const GroupDatum>(validate_datum(g, chi, a, alpha));
}

namespace {

const char* const kFamilyNames[] = {"Z", "V", "P", "T1", "T1bar", "Tt", "Ttbar", "M1", "Mt", "W1", "Wt", "OmegaPower"};

CycScalar one() { return CycScalar(1); }

// Diagonal group and Gamma matrices for a basis of weight vectors.
void diagonal_action(const GroupDatum& D, const std::vector<Weight>& ws, std::vector<Matrix>& group, std::vector<Matrix>& gamma) {
    const size_t r = D.group.rank(), dim = ws.size();
    const int N = D.field_order;
    group.assign(r, Matrix(dim, dim));
    gamma.assign(r, Matrix(dim, dim));
    for (size_t i = 0; i < r; ++i) {
        const long step = N / D.group.orders[i];
        for (size_t b = 0; b < dim; ++b) {
            group[i](b, b) = root_of_unity(N, ws[b].gpart[i] * step);
            gamma[i](b, b) = root_of_unity(N, ws[b].h[i] * step);
        }
    }
}

ModuleRep assemble(const DatumPtr& D, const std::vector<Weight>& ws, std::vector<std::string> labels, Matrix x, Matrix xi) {
    std::vector<Matrix> group, gamma;
    diagonal_action(*D, ws, group, gamma);
    return ModuleRep(D, std::move(labels), std::move(group), std::move(gamma), std::move(x), std::move(xi));
}

Weight phi_pow_times(const GroupDatum& D, long k, const Weight& w) { return weight_mul(D, weight_pow(D, phi(D), k), w); }

void require_class(const GroupDatum& D, int l, const Weight& w, bool allow_top) {
    if (l < 1 || l > D.n || (!allow_top && l == D.n)) throw ParameterError("l out of range for this family");
    if (classify_weight(D, w).l != l) throw ParameterError("lambda " + weight_to_string(w) + " is not in I_" + std::to_string(l));
}

// lambda(a)^n - 1 times alpha: the wrap-around coefficient of x on the top basis vector.
CycScalar wrap_coeff(const GroupDatum& D, const Weight& w) {
    return D.alpha * (weight_at_a(D, w).pow(D.n) - one());
}

std::vector<std::string> indexed(const std::string& base, size_t count) {
    std::vector<std::string> out;
    for (size_t i = 0; i < count; ++i) out.push_back(base + std::to_string(i));
    return out;
}

}  // namespace

std::string family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_name(const std::string& s) {
    for (int i = 0; i < 12; ++i)
        if (s == kFamilyNames[i]) return static_cast<Family>(i);
    throw ParameterError("unknown family '" + s + "'");
}

std::string FamilyTag::to_string() const {
    std::string out = family_name(family) + "(l=" + std::to_string(l) + ", lambda=" + weight_to_string(lambda);
    switch (family) {
        case Family::Tt:
        case Family::Ttbar: out += ", t=" + std::to_string(t); break;
        case Family::Mt:
        case Family::Wt: out += ", t=" + std::to_string(t) + ", eta=" + eta.to_string(); break;
        case Family::M1:
        case Family::W1: out += ", eta=" + eta.to_string(); break;
        case Family::OmegaPower: out += ", s=" + std::to_string(s); break;
        default: break;
    }
    return out + ")";
}

// ---------------------------------------------------------------- Verma and simples

ModuleRep verma(const DatumPtr& Dp, const Weight& lambda) {
    const GroupDatum& D = *Dp;
    const size_t n = static_cast<size_t>(D.n);
    std::vector<Weight> ws;
    for (size_t i = 0; i < n; ++i) ws.push_back(phi_pow_times(D, static_cast<long>(i), lambda));
    Matrix x(n, n), xi(n, n);
    for (size_t i = 0; i + 1 < n; ++i) x(i + 1, i) = one();
    x(0, n - 1) = wrap_coeff(D, lambda);
    for (size_t i = 1; i < n; ++i) xi(i - 1, i) = alpha_raw(D, static_cast<int>(i), lambda);
    ModuleRep M = assemble(Dp, ws, indexed("v", n), std::move(x), std::move(xi));
    require_relations(M, "Z(lambda)");
    return M;
}

Matrix simple_standard_to_natural(const GroupDatum& D, int l, const Weight& lambda) {
    // m_i = alpha_{i+1} ... alpha_{l-1} v_i
    Matrix S(static_cast<size_t>(l), static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
        CycScalar c = one();
        for (int k = i + 1; k <= l - 1; ++k) c *= alpha_coeff(D, k, l, lambda);
        S(static_cast<size_t>(i), static_cast<size_t>(i)) = c;
    }
    S.coerce_all(D.field_order);
    return S;
}

namespace {

ModuleRep simple_in(const DatumPtr& Dp, int l, const Weight& lambda, BasisKind basis) {
    const GroupDatum& D = *Dp;
    const size_t L = static_cast<size_t>(l);
    std::vector<Weight> ws;
    for (size_t i = 0; i < L; ++i) ws.push_back(phi_pow_times(D, static_cast<long>(i), lambda));
    Matrix x(L, L), xi(L, L);
    if (basis == BasisKind::Natural) {
        for (size_t i = 0; i + 1 < L; ++i) x(i + 1, i) = one();
        for (size_t i = 1; i < L; ++i) xi(i - 1, i) = alpha_coeff(D, static_cast<int>(i), l, lambda);
        if (l == D.n) x(0, L - 1) = wrap_coeff(D, lambda);
        return assemble(Dp, ws, indexed("v", L), std::move(x), std::move(xi));
    }
    for (size_t i = 0; i + 1 < L; ++i) x(i + 1, i) = alpha_coeff(D, static_cast<int>(i + 1), l, lambda);
    for (size_t i = 1; i < L; ++i) xi(i - 1, i) = one();
    if (l == D.n) x(0, L - 1) = wrap_coeff(D, lambda) / beta_coeff(D, l, lambda);
    return assemble(Dp, ws, indexed("m", L), std::move(x), std::move(xi));
}

}  // namespace

ModuleRep simple(const DatumPtr& Dp, int l, const Weight& lambda, BasisKind basis) {
    require_class(*Dp, l, lambda, true);
    ModuleRep nat = simple_in(Dp, l, lambda, BasisKind::Natural);
    ModuleRep std_ = simple_in(Dp, l, lambda, BasisKind::Standard);
    if (!is_intertwiner(std_, nat, simple_standard_to_natural(*Dp, l, lambda)))
        throw InternalInconsistency("natural and standard bases of V(l, lambda) are not related by the diagonal change");
    ModuleRep out = basis == BasisKind::Natural ? nat : std_;
    require_relations(out, "V(l, lambda)");
    return out;
}

// ---------------------------------------------------------------- projectives

ModuleRep projective_unchecked(const DatumPtr& Dp, int l, const Weight& lambda, TableReading reading) {
    const GroupDatum& D = *Dp;
    require_class(D, l, lambda, false);
    const int n = D.n;
    const size_t dim = static_cast<size_t>(2 * n);
    auto v = [](int i) { return static_cast<size_t>(i); };
    auto u = [n](int i) { return static_cast<size_t>(n + i); };
    const Weight sl = sigma(D, lambda), sil = sigma_inv(D, lambda);
    std::vector<Weight> ws(dim);
    Matrix x(dim, dim), xi(dim, dim);

    if (D.kind == Kind::Nilpotent) {
        for (int i = 0; i < n; ++i) {
            ws[v(i)] = phi_pow_times(D, i, lambda);
            ws[u(i)] = phi_pow_times(D, i - n + l, lambda);
        }
        for (int i = 0; i + 1 < n; ++i) {
            x(v(i + 1), v(i)) = one();
            x(u(i + 1), u(i)) = one();
        }
        xi(u(n - l - 1), v(0)) = one();
        for (int i = 1; i <= l - 1; ++i) {
            xi(v(i - 1), v(i)) = alpha_coeff(D, i, l, lambda);
            xi(u(n - l + i - 1), v(i)) = one();
        }
        xi(u(n - 1), v(l)) = one();
        for (int i = l + 1; i <= n - 1; ++i) xi(v(i - 1), v(i)) = alpha_coeff(D, i - l, n - l, sl);
        for (int i = 1; i <= n - l - 1; ++i) xi(u(i - 1), u(i)) = alpha_coeff(D, i, n - l, sil);
        for (int i = n - l + 1; i <= n - 1; ++i) xi(u(i - 1), u(i)) = alpha_coeff(D, i - n + l, l, lambda);
    } else {
        for (int i = 0; i < n; ++i) {
            ws[v(i)] = phi_pow_times(D, i - n + l, lambda);
            ws[u(i)] = phi_pow_times(D, i, lambda);
        }
        YZ yz = yz_coeff(D, l, lambda);
        if (reading == TableReading::LiteralIndex) {
            // y and z with the row index n-1 in place of l
            const int N = D.field_order;
            const long ae = weight_at_a_exp(D, lambda), ce = weight_at_chi_exp(D, lambda);
            const int li = n - 1;
            yz.y = (root_of_unity(N, ae + static_cast<long>(1 - li) * D.rho_exp) - root_of_unity(N, ce + static_cast<long>(li) * D.rho_exp)) /
                   q_factorial(n - 1, D.rho);
            yz.z = (root_of_unity(N, ae + D.rho_exp) - weight_at_chi(D, lambda)) / q_factorial(n - 1, D.rho);
        }
        for (int i = 0; i <= n - l - 2; ++i) x(v(i + 1), v(i)) = alpha_coeff(D, i + 1, n - l, sil);
        x(u(0), v(n - l - 1)) = one();
        for (int i = n - l; i <= n - 2; ++i) {
            x(v(i + 1), v(i)) = alpha_coeff(D, i + 1 - n + l, l, lambda);
            x(u(i + 1 - n + l), v(i)) = one();
        }
        x(v(0), v(n - 1)) = yz.y;
        x(u(l), v(n - 1)) += one();
        for (int i = 0; i <= l - 2; ++i) x(u(i + 1), u(i)) = alpha_coeff(D, i + 1, l, lambda);
        for (int i = l; i <= n - 2; ++i) x(u(i + 1), u(i)) = alpha_coeff(D, i + 1 - l, n - l, sl);
        x(u(0), u(n - 1)) = yz.z;
        for (int i = 1; i < n; ++i) {
            xi(v(i - 1), v(i)) = one();
            xi(u(i - 1), u(i)) = one();
        }
    }
    std::vector<std::string> labels = indexed("v", static_cast<size_t>(n));
    for (auto& s : indexed("u", static_cast<size_t>(n))) labels.push_back(s);
    return assemble(Dp, ws, std::move(labels), std::move(x), std::move(xi));
}

ModuleRep projective(const DatumPtr& Dp, int l, const Weight& lambda, TableReading reading) {
    ModuleRep P = projective_unchecked(Dp, l, lambda, reading);
    require_relations(P, "P(l, lambda)");
    return P;
}

namespace {

Matrix unit_columns(size_t dim, const std::vector<size_t>& idx) {
    Matrix B(dim, idx.size());
    for (size_t j = 0; j < idx.size(); ++j) B(idx[j], j) = CycScalar(1);
    return B;
}

ModuleRep span_in_projective(const ModuleRep& P, const Matrix& B, std::vector<std::string> labels, const std::string& what) {
    Submodule S = restrict_to_subspace(P, B, std::move(labels));
    require_relations(S.module, what);
    return S.module;
}

}  // namespace

ModuleRep t1(const DatumPtr& Dp, int l, const Weight& lambda) {
    const GroupDatum& D = *Dp;
    ModuleRep P = projective(Dp, l, lambda);
    const size_t n = static_cast<size_t>(D.n), L = static_cast<size_t>(l);
    std::vector<size_t> idx;
    if (D.kind == Kind::Nilpotent) {
        for (size_t i = L; i < n; ++i) idx.push_back(i);
        for (size_t i = n - L; i < n; ++i) idx.push_back(n + i);
    } else {
        for (size_t i = 0; i < n; ++i) idx.push_back(n + i);
    }
    std::vector<std::string> labels;
    for (size_t i : idx) labels.push_back(P.labels()[i]);
    return span_in_projective(P, unit_columns(2 * n, idx), labels, "T_1(l, lambda)");
}

ModuleRep t1bar(const DatumPtr& Dp, int l, const Weight& lambda) {
    const GroupDatum& D = *Dp;
    ModuleRep P = projective(Dp, l, lambda);
    const size_t n = static_cast<size_t>(D.n), L = static_cast<size_t>(l);
    std::vector<size_t> idx;
    if (D.kind == Kind::Nilpotent) {
        for (size_t i = 0; i < n; ++i) idx.push_back(n + i);
    } else {
        for (size_t i = 0; i < n - L; ++i) idx.push_back(i);
        for (size_t i = 0; i < L; ++i) idx.push_back(n + i);
    }
    std::vector<std::string> labels;
    for (size_t i : idx) labels.push_back(P.labels()[i]);
    return span_in_projective(P, unit_columns(2 * n, idx), labels, "T1bar(l, lambda)");
}

ModuleRep w1(const DatumPtr& Dp, int l, const Weight& lambda, const EtaParam& eta) {
    const GroupDatum& D = *Dp;
    if (D.m != 1) throw ParameterError("W-family modules require m = 1");
    ModuleRep P = projective(Dp, l, lambda);
    const size_t n = static_cast<size_t>(D.n), L = static_cast<size_t>(l);
    Matrix B(2 * n, n);
    std::vector<std::string> labels;
    if (eta.infinite) {
        for (size_t j = 0; j < n - L; ++j) {
            B(L + j, j) = one();
            labels.push_back("v" + std::to_string(L + j));
        }
    } else {
        for (size_t j = 0; j < n - L; ++j) {
            B(n + j, j) = one();
            B(L + j, j) = eta.value;
            labels.push_back("u" + std::to_string(j) + "+eta*v" + std::to_string(L + j));
        }
    }
    for (size_t i = 0; i < L; ++i) {
        B(n + n - L + i, n - L + i) = one();
        labels.push_back("u" + std::to_string(n - L + i));
    }
    B.coerce_all(D.field_order);
    return span_in_projective(P, B, labels, "W_1(l, lambda, eta)");
}

// ---------------------------------------------------------------- M_1 table

ModuleRep band_m1(const DatumPtr& Dp, int l, const Weight& lambda, const CycScalar& eta) {
    const GroupDatum& D = *Dp;
    if (D.m < 2) throw ParameterError("M-family modules require m > 1 (use W for m = 1)");
    require_class(D, l, lambda, false);
    if (eta.is_zero()) throw ParameterError("M_1 requires a nonzero eta");
    const int n = D.n, m = D.m;
    const size_t dim = static_cast<size_t>(m * n);
    auto X = [n](int j, int k) { return static_cast<size_t>(k * n + j); };
    const Weight sl = sigma(D, lambda);
    std::vector<Weight> ws(dim);
    std::vector<std::string> labels(dim);
    Matrix x(dim, dim), xi(dim, dim);
    CycScalar e = eta;
    for (int k = 0; k < m; ++k) {
        const Weight tk = tau(D, lambda, k);
        for (int j = 0; j < n; ++j) labels[X(j, k)] = "x" + std::to_string(j) + "^" + std::to_string(k);
        const int knext = (k + 1) % m;
        const CycScalar link = k == m - 1 ? e : one();
        if (D.kind == Kind::Nilpotent) {
            for (int j = 0; j < n; ++j) ws[X(j, k)] = phi_pow_times(D, j < n - l ? j + l : j - n + l, tk);
            for (int j = 0; j <= n - l - 2; ++j) x(X(j + 1, k), X(j, k)) = one();
            x(X(n - l, knext), X(n - l - 1, k)) = link;
            for (int j = n - l; j <= n - 2; ++j) x(X(j + 1, k), X(j, k)) = one();
            xi(X(n - 1, k), X(0, k)) = one();
            for (int j = 1; j <= n - l - 1; ++j) xi(X(j - 1, k), X(j, k)) = alpha_coeff(D, j, n - l, sl);
            for (int j = n - l + 1; j <= n - 1; ++j) xi(X(j - 1, k), X(j, k)) = alpha_coeff(D, j - n + l, l, lambda);
        } else {
            const CycScalar z = yz_coeff(D, l, lambda).z;
            for (int j = 0; j < n; ++j) ws[X(j, k)] = phi_pow_times(D, j, tk);
            for (int j = 0; j <= l - 2; ++j) x(X(j + 1, k), X(j, k)) = alpha_coeff(D, j + 1, l, lambda);
            for (int j = l; j <= n - 2; ++j) x(X(j + 1, k), X(j, k)) = alpha_coeff(D, j + 1 - l, n - l, sl);
            x(X(0, k), X(n - 1, k)) += z;
            x(X(0, knext), X(n - 1, k)) += link;
            for (int j = 1; j < n; ++j) xi(X(j - 1, k), X(j, k)) = one();
        }
    }
    ModuleRep M = assemble(Dp, ws, std::move(labels), std::move(x), std::move(xi));
    require_relations(M, "M_1(l, lambda, eta)");
    return M;
}

// ---------------------------------------------------------------- chained constructions

namespace {

// Term of a head basis vector: coeff times the sigma or sigma^{-1} segment of a copy.
struct HeadTerm {
    size_t copy;
    bool sigma_segment;
    CycScalar coeff;
};

struct ChainSpec {
    std::vector<Weight> mu;                    // weight parameter of each projective copy
    std::vector<std::vector<HeadTerm>> head;  // head-piece terms of each copy
};

// Each copy contributes n basis vectors (in the index order of P) to a submodule of the
// direct sum of P(l, mu_c): n - l head pieces built from segments and l socle vectors.
ModuleRep build_chain(const DatumPtr& Dp, int l, const ChainSpec& spec, const std::string& what) {
    const GroupDatum& D = *Dp;
    const size_t n = static_cast<size_t>(D.n), L = static_cast<size_t>(l), copies = spec.mu.size();
    std::vector<ModuleRep> parts;
    for (const auto& mu : spec.mu) parts.push_back(projective(Dp, l, mu));
    ModuleRep amb = direct_sum(parts);
    const bool nil = D.kind == Kind::Nilpotent;
    auto vidx = [n](size_t c, size_t j) { return c * 2 * n + j; };
    auto uidx = [n](size_t c, size_t j) { return c * 2 * n + n + j; };
    // ambient index of segment position j' (0 <= j' < n-l)
    auto seg = [&](size_t c, bool sig, size_t jp) {
        if (nil) return sig ? vidx(c, L + jp) : uidx(c, jp);
        return sig ? uidx(c, L + jp) : vidx(c, jp);
    };
    auto soc = [&](size_t c, size_t i) { return nil ? uidx(c, n - L + i) : uidx(c, i); };

    Matrix B(copies * 2 * n, copies * n);
    std::vector<std::string> labels(copies * n);
    for (size_t c = 0; c < copies; ++c) {
        for (size_t p = 0; p < n; ++p) {
            const size_t col = c * n + p;
            labels[col] = "x" + std::to_string(p) + "^" + std::to_string(c);
            const bool head_piece = nil ? p < n - L : p >= L;
            if (!head_piece) {
                B(soc(c, nil ? p - (n - L) : p), col) = one();
                continue;
            }
            const size_t jp = nil ? p : p - L;
            for (const auto& term : spec.head[c]) B(seg(term.copy, term.sigma_segment, jp), col) += term.coeff;
        }
    }
    B.coerce_all(D.field_order);
    Submodule S = restrict_to_subspace(amb, B, labels);
    require_relations(S.module, what);
    return S.module;
}

void check_chain_params(const GroupDatum& D, int l, const Weight& lambda, int t) {
    require_class(D, l, lambda, false);
    if (t < 1) throw ParameterError("t must be at least 1");
}

}  // namespace

ModuleRep string_tt(const DatumPtr& Dp, int l, const Weight& lambda, int t) {
    const GroupDatum& D = *Dp;
    check_chain_params(D, l, lambda, t);
    ChainSpec spec;
    const size_t T = static_cast<size_t>(t);
    for (size_t c = 0; c < T; ++c) {
        spec.mu.push_back(tau(D, lambda, static_cast<long>(c) - t + 1));
        std::vector<HeadTerm> h{{c, true, one()}};
        if (c + 1 < T) h.push_back({c + 1, false, one()});
        spec.head.push_back(std::move(h));
    }
    return build_chain(Dp, l, spec, "T_t(l, lambda)");
}

ModuleRep string_ttbar(const DatumPtr& Dp, int l, const Weight& lambda, int t) {
    const GroupDatum& D = *Dp;
    check_chain_params(D, l, lambda, t);
    ChainSpec spec;
    for (size_t c = 0; c < static_cast<size_t>(t); ++c) {
        spec.mu.push_back(tau(D, lambda, static_cast<long>(c)));
        std::vector<HeadTerm> h{{c, false, one()}};
        if (c >= 1) h.push_back({c - 1, true, one()});
        spec.head.push_back(std::move(h));
    }
    return build_chain(Dp, l, spec, "T1bar_t(l, lambda)");
}

ModuleRep band_mt(const DatumPtr& Dp, int l, const Weight& lambda, const CycScalar& eta, int t) {
    const GroupDatum& D = *Dp;
    if (D.m < 2) throw ParameterError("M-family modules require m > 1 (use W for m = 1)");
    check_chain_params(D, l, lambda, t);
    if (eta.is_zero()) throw ParameterError("M_t requires a nonzero eta");
    const size_t m = static_cast<size_t>(D.m);
    ChainSpec spec;
    // copy (r, k) sits at index r*m + k; the last copy of each layer closes with eta and
    // couples to the first copy of the previous layer (a Jordan block of size t).
    for (size_t r = 0; r < static_cast<size_t>(t); ++r) {
        for (size_t k = 0; k < m; ++k) {
            const size_t c = r * m + k;
            spec.mu.push_back(tau(D, lambda, static_cast<long>(k)));
            std::vector<HeadTerm> h{{c, true, one()}};
            if (k + 1 < m) {
                h.push_back({c + 1, false, one()});
            } else {
                h.push_back({r * m, false, eta});
                if (r >= 1) h.push_back({(r - 1) * m, false, one()});
            }
            spec.head.push_back(std::move(h));
        }
    }
    return build_chain(Dp, l, spec, "M_t(l, lambda, eta)");
}

ModuleRep w_t(const DatumPtr& Dp, int l, const Weight& lambda, const EtaParam& eta, int t) {
    const GroupDatum& D = *Dp;
    if (D.m != 1) throw ParameterError("W-family modules require m = 1");
    check_chain_params(D, l, lambda, t);
    ChainSpec spec;
    for (size_t r = 0; r < static_cast<size_t>(t); ++r) {
        spec.mu.push_back(lambda);
        std::vector<HeadTerm> h;
        if (eta.infinite) {
            h.push_back({r, true, one()});
            if (r >= 1) h.push_back({r - 1, false, one()});
        } else {
            h.push_back({r, false, one()});
            if (!eta.value.is_zero()) h.push_back({r, true, eta.value});
            if (r >= 1) h.push_back({r - 1, true, one()});
        }
        spec.head.push_back(std::move(h));
    }
    return build_chain(Dp, l, spec, "W_t(l, lambda, eta)");
}

ModuleRep build_family(const DatumPtr& Dp, const FamilyTag& tag) {
    switch (tag.family) {
        case Family::Z: return verma(Dp, tag.lambda);
        case Family::V: return simple(Dp, tag.l, tag.lambda, tag.basis);
        case Family::P: return projective(Dp, tag.l, tag.lambda);
        case Family::T1: return t1(Dp, tag.l, tag.lambda);
        case Family::T1bar: return t1bar(Dp, tag.l, tag.lambda);
        case Family::Tt: return string_tt(Dp, tag.l, tag.lambda, tag.t);
        case Family::Ttbar: return string_ttbar(Dp, tag.l, tag.lambda, tag.t);
        case Family::M1:
        case Family::Mt:
            if (tag.eta.infinite) throw ParameterError("M-family requires a finite nonzero eta");
            return tag.family == Family::M1 ? band_m1(Dp, tag.l, tag.lambda, tag.eta.value)
                                            : band_mt(Dp, tag.l, tag.lambda, tag.eta.value, tag.t);
        case Family::W1: return w1(Dp, tag.l, tag.lambda, tag.eta);
        case Family::Wt: return w_t(Dp, tag.l, tag.lambda, tag.eta, tag.t);
        case Family::OmegaPower: return omega_power(Dp, tag.l, tag.lambda, tag.s);
    }
    throw ParameterError("unknown family");
}

}  // namespace ddrep
