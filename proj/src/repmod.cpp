#include "ddrep/repmod.hpp"

#include <algorithm>
#include <map>

namespace ddrep {

namespace {

void coerce_matrix(Matrix& m, int order) { m.coerce_all(order); }

CycScalar zeta_pow(const GroupDatum& D, int d, long e) {
    // zeta_d^e inside Q(zeta_N)
    return root_of_unity(D.field_order, e * (D.field_order / d));
}

}  // namespace

ModuleRep::ModuleRep(std::shared_ptr<const GroupDatum> D, std::vector<std::string> labels, std::vector<Matrix> group,
                     std::vector<Matrix> gamma, Matrix x, Matrix xi) {
    auto p = std::make_shared<Impl>();
    const size_t dim = x.rows();
    const size_t r = D->group.rank();
    if (group.size() != r || gamma.size() != r) throw SizeMismatch("module needs one matrix per cyclic generator of G and of Gamma");
    auto check = [dim](const Matrix& m) {
        if (m.rows() != dim || m.cols() != dim) throw SizeMismatch("module generator matrices must be square of equal size");
    };
    for (auto& m : group) check(m);
    for (auto& m : gamma) check(m);
    check(x);
    check(xi);
    if (labels.empty())
        for (size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != dim) throw SizeMismatch("label count differs from dimension");
    const int N = D->field_order;
    for (auto& m : group) coerce_matrix(m, N);
    for (auto& m : gamma) coerce_matrix(m, N);
    coerce_matrix(x, N);
    coerce_matrix(xi, N);
    p->datum = std::move(D);
    p->dim = dim;
    p->labels = std::move(labels);
    p->group = std::move(group);
    p->gamma = std::move(gamma);
    p->x = std::move(x);
    p->xi = std::move(xi);
    p_ = std::move(p);
}

ModuleRep zero_module(std::shared_ptr<const GroupDatum> D) {
    const size_t r = D->group.rank();
    return ModuleRep(std::move(D), {}, std::vector<Matrix>(r, Matrix(0, 0)), std::vector<Matrix>(r, Matrix(0, 0)), Matrix(0, 0),
                     Matrix(0, 0));
}

std::vector<const Matrix*> ModuleRep::generators() const {
    std::vector<const Matrix*> out;
    for (const auto& m : p_->group) out.push_back(&m);
    for (const auto& m : p_->gamma) out.push_back(&m);
    out.push_back(&p_->x);
    out.push_back(&p_->xi);
    return out;
}

Matrix ModuleRep::group_element_matrix(const GroupElem& g) const {
    Matrix r = Matrix::identity(dim());
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) r = r * p_->group[i].pow(static_cast<unsigned>(g[i]));
    return r;
}

Matrix ModuleRep::gamma_element_matrix(const std::vector<int>& exps) const {
    Matrix r = Matrix::identity(dim());
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) r = r * p_->gamma[i].pow(static_cast<unsigned>(exps[i]));
    return r;
}

// ---------------------------------------------------------------- relations

bool RelationReport::all_hold() const {
    return std::all_of(items.begin(), items.end(), [](const RelationVerdict& v) { return v.holds; });
}

std::vector<std::string> RelationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& v : items)
        if (!v.holds) out.push_back(v.name);
    return out;
}

namespace {

RelationVerdict compare(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    RelationVerdict v;
    v.name = name;
    Matrix d = lhs - rhs;
    for (size_t j = 0; j < d.cols(); ++j) {
        for (size_t i = 0; i < d.rows(); ++i) {
            if (!d(i, j).is_zero()) {
                v.holds = false;
                v.witness_index = j;
                v.witness = d.column(j);
                return v;
            }
        }
    }
    return v;
}

}  // namespace

RelationReport verify_relations(const ModuleRep& M) {
    const GroupDatum& D = M.datum();
    const size_t dim = M.dim();
    const size_t r = D.group.rank();
    const Matrix I = Matrix::identity(dim);
    const Matrix& X = M.x();
    const Matrix& Xi = M.xi();
    RelationReport rep;
    auto idx = [](const char* base, size_t i) { return std::string(base) + "[" + std::to_string(i) + "]"; };

    for (size_t i = 0; i < r; ++i)
        rep.items.push_back(compare(idx("group_order", i), M.group_mats()[i].pow(static_cast<unsigned>(D.group.orders[i])), I));
    for (size_t i = 0; i < r; ++i)
        rep.items.push_back(compare(idx("gamma_order", i), M.gamma_mats()[i].pow(static_cast<unsigned>(D.group.orders[i])), I));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            rep.items.push_back(compare("group_commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                        M.group_mats()[i] * M.group_mats()[j], M.group_mats()[j] * M.group_mats()[i]));
            rep.items.push_back(compare("gamma_commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                        M.gamma_mats()[i] * M.gamma_mats()[j], M.gamma_mats()[j] * M.gamma_mats()[i]));
        }

    const Matrix A = M.group_element_matrix(D.a);
    const Matrix C = M.gamma_element_matrix(D.chi.exps);
    const unsigned n = static_cast<unsigned>(D.n);

    rep.items.push_back(compare("x_power", X.pow(n), (A.pow(n) - I).scaled(D.alpha)));
    rep.items.push_back(compare("xi_power", Xi.pow(n), Matrix(dim, dim)));

    for (size_t i = 0; i < r; ++i) {
        const Matrix& g = M.group_mats()[i];
        CycScalar chi_g = zeta_pow(D, D.group.orders[i], D.chi.exps[i]);
        rep.items.push_back(compare(idx("x_group", i), X * g, (g * X).scaled(chi_g)));
        rep.items.push_back(compare(idx("xi_group", i), Xi * g, (g * Xi).scaled(chi_g.inverse())));
    }
    for (size_t j = 0; j < r; ++j) {
        const Matrix& gm = M.gamma_mats()[j];
        CycScalar gamma_a = zeta_pow(D, D.group.orders[j], D.a[j]);
        rep.items.push_back(compare(idx("xi_gamma", j), Xi * gm, (gm * Xi).scaled(gamma_a)));
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            rep.items.push_back(compare("group_gamma[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                        M.group_mats()[i] * M.gamma_mats()[j], M.gamma_mats()[j] * M.group_mats()[i]));

    rep.items.push_back(compare("commutator", X * Xi - Xi * X, A - C));

    Matrix xi_top;
    if (D.kind == Kind::NonNilpotent) xi_top = (A.scaled(D.rho) - C) * Xi.pow(n - 1);
    const CycScalar nfact = q_factorial(D.n - 1, D.rho);
    for (size_t j = 0; j < r; ++j) {
        const Matrix& gm = M.gamma_mats()[j];
        CycScalar gamma_a = zeta_pow(D, D.group.orders[j], D.a[j]);
        Matrix lhs = (X * gm).scaled(gamma_a);
        Matrix rhs = gm * X;
        if (D.kind == Kind::NonNilpotent) {
            CycScalar coef = (gamma_a.pow(D.n) - CycScalar(1)) / nfact;
            rhs = rhs + (gm * xi_top).scaled(coef);
        }
        rep.items.push_back(compare(idx("x_gamma", j), lhs, rhs));
    }
    return rep;
}

void require_relations(const ModuleRep& M, const std::string& what) {
    RelationReport rep = verify_relations(M);
    if (rep.all_hold()) return;
    std::string msg = what + ": defining relations fail:";
    for (const auto& f : rep.failures()) msg += " " + f;
    throw InternalInconsistency(msg);
}

// ---------------------------------------------------------------- weights

std::optional<size_t> WeightDecomposition::find(const Weight& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w);
    if (it == weights.end() || !(*it == w)) return std::nullopt;
    return static_cast<size_t>(it - weights.begin());
}

Matrix WeightDecomposition::space(const Weight& w) const {
    auto k = find(w);
    if (!k) return Matrix(basis.rows(), 0);
    return basis.block(0, block_start[*k], basis.rows(), block_dim[*k]);
}

namespace {

bool is_diagonal(const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

// Exponent e with s = zeta_d^e, or -1.
int root_exponent(const GroupDatum& D, int d, const CycScalar& s) {
    for (int e = 0; e < d; ++e)
        if (zeta_pow(D, d, e) == s) return e;
    return -1;
}

std::unique_ptr<WeightDecomposition> decompose(const ModuleRep& M) {
    const GroupDatum& D = M.datum();
    const size_t dim = M.dim();
    const size_t r = D.group.rank();
    auto wd = std::make_unique<WeightDecomposition>();

    std::vector<const Matrix*> mats;
    std::vector<int> ords;
    for (size_t i = 0; i < r; ++i) {
        mats.push_back(&M.group_mats()[i]);
        ords.push_back(D.group.orders[i]);
    }
    for (size_t i = 0; i < r; ++i) {
        mats.push_back(&M.gamma_mats()[i]);
        ords.push_back(D.group.orders[i]);
    }

    // (eigen-exponents, basis of the joint eigenspace)
    std::vector<std::pair<std::vector<int>, Matrix>> parts;
    bool diagonal = std::all_of(mats.begin(), mats.end(), [](const Matrix* m) { return is_diagonal(*m); });
    if (diagonal) {
        std::map<std::vector<int>, std::vector<size_t>> groups;
        for (size_t i = 0; i < dim; ++i) {
            std::vector<int> key;
            for (size_t k = 0; k < mats.size(); ++k) {
                int e = root_exponent(D, ords[k], (*mats[k])(i, i));
                if (e < 0) throw InternalInconsistency("group action eigenvalue is not a root of unity of the right order");
                key.push_back(e);
            }
            groups[key].push_back(i);
        }
        for (auto& [key, idx] : groups) {
            Matrix b(dim, idx.size());
            for (size_t j = 0; j < idx.size(); ++j) b(idx[j], j) = CycScalar(1);
            parts.emplace_back(key, std::move(b));
        }
    } else {
        parts.emplace_back(std::vector<int>{}, Matrix::identity(dim));
        for (size_t k = 0; k < mats.size(); ++k) {
            const int d = ords[k];
            std::vector<Matrix> powers{Matrix::identity(dim)};
            for (int e = 1; e < d; ++e) powers.push_back(powers.back() * *mats[k]);
            std::vector<std::pair<std::vector<int>, Matrix>> next;
            for (auto& [key, B] : parts) {
                size_t covered = 0;
                for (int c = 0; c < d; ++c) {
                    Matrix P(dim, dim);
                    for (int e = 0; e < d; ++e) P = P + powers[static_cast<size_t>(e)].scaled(zeta_pow(D, d, -static_cast<long>(c) * e));
                    Matrix S = linalg::column_basis(P * B);
                    if (S.cols() == 0) continue;
                    covered += S.cols();
                    auto k2 = key;
                    k2.push_back(c);
                    next.emplace_back(std::move(k2), std::move(S));
                }
                if (covered != B.cols()) throw InternalInconsistency("group action is not diagonalizable");
            }
            parts = std::move(next);
        }
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    // key = (gpart exps..., h exps...), which is exactly the Weight encoding.
    std::vector<std::pair<Weight, Matrix>> ws;
    for (auto& [key, B] : parts) {
        Weight w;
        w.gpart.assign(key.begin(), key.begin() + static_cast<long>(r));
        w.h.assign(key.begin() + static_cast<long>(r), key.end());
        ws.emplace_back(std::move(w), std::move(B));
    }
    std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    wd->basis = Matrix(dim, dim);
    size_t col = 0;
    for (auto& [w, B] : ws) {
        wd->weights.push_back(w);
        wd->block_start.push_back(col);
        wd->block_dim.push_back(B.cols());
        wd->basis.set_block(0, col, B);
        for (size_t j = 0; j < B.cols(); ++j) wd->weight_of_col.push_back(wd->weights.size() - 1);
        col += B.cols();
    }
    if (col != dim) throw InternalInconsistency("weight spaces do not span the module");
    wd->diagonal = diagonal;
    if (diagonal) {
        // basis is a permutation matrix
        wd->basis_inv = wd->basis.transpose();
    } else {
        wd->basis_inv = linalg::inverse(wd->basis);
    }
    wd->x_w = wd->basis_inv * M.x() * wd->basis;
    wd->xi_w = wd->basis_inv * M.xi() * wd->basis;

    // Weight shifts: x raises by phi (nilpotent), xi lowers by phi (both kinds).
    const Weight ph = phi(D);
    const Weight ph_inv = weight_pow(D, ph, -1);
    for (size_t c = 0; c < dim; ++c) {
        const Weight& wc = wd->weights[wd->weight_of_col[c]];
        const Weight up = weight_mul(D, wc, ph), down = weight_mul(D, wc, ph_inv);
        for (size_t rr = 0; rr < dim; ++rr) {
            const Weight& wr = wd->weights[wd->weight_of_col[rr]];
            if (D.kind == Kind::Nilpotent && !wd->x_w(rr, c).is_zero() && !(wr == up))
                throw InternalInconsistency("x does not map M_lambda into M_{lambda phi}");
            if (!wd->xi_w(rr, c).is_zero() && !(wr == down))
                throw InternalInconsistency("xi does not map M_lambda into M_{lambda phi^{-1}}");
        }
    }
    return wd;
}

}  // namespace

const WeightDecomposition& ModuleRep::weights() const {
    std::call_once(p_->weights_once, [this] { p_->weights = decompose(*this); });
    return *p_->weights;
}

std::vector<std::pair<Weight, Matrix>> weight_spaces(const ModuleRep& M) {
    const auto& wd = M.weights();
    std::vector<std::pair<Weight, Matrix>> out;
    for (size_t k = 0; k < wd.weights.size(); ++k)
        out.emplace_back(wd.weights[k], wd.basis.block(0, wd.block_start[k], M.dim(), wd.block_dim[k]));
    return out;
}

Vec apply_word(const ModuleRep& M, const std::vector<WordLetter>& word, const Vec& v) {
    if (v.size() != M.dim()) throw SizeMismatch("apply_word: vector length differs from module dimension");
    Vec cur = v;
    for (const auto& L : word) {
        const Matrix* m = nullptr;
        switch (L.kind) {
            case Letter::Group: m = &M.group_mats().at(L.index); break;
            case Letter::Gamma: m = &M.gamma_mats().at(L.index); break;
            case Letter::X: m = &M.x(); break;
            case Letter::Xi: m = &M.xi(); break;
        }
        for (unsigned p = 0; p < L.power; ++p) cur = m->apply(cur);
    }
    return cur;
}

// ---------------------------------------------------------------- sub / quotient

Submodule restrict_to_subspace(const ModuleRep& M, const Matrix& basis, std::vector<std::string> labels) {
    const size_t k = basis.cols();
    if (basis.rows() != M.dim()) throw SizeMismatch("restrict_to_subspace: basis rows differ from module dimension");
    if (k == 0) return Submodule{zero_module(M.datum_ptr()), Matrix(M.dim(), 0)};
    linalg::Echelon e = linalg::rref(basis.transpose());
    if (e.pivots.size() != k) throw ParameterError("restrict_to_subspace: basis vectors are dependent");
    const Matrix Bp_inv = linalg::inverse(basis.select_rows(e.pivots));
    auto restrict = [&](const Matrix& G) {
        Matrix GB = G * basis;
        Matrix R = Bp_inv * GB.select_rows(e.pivots);
        if (basis * R != GB) throw ParameterError("subspace is not invariant under the module action");
        return R;
    };
    std::vector<Matrix> group, gamma;
    for (const auto& g : M.group_mats()) group.push_back(restrict(g));
    for (const auto& g : M.gamma_mats()) gamma.push_back(restrict(g));
    Matrix x = restrict(M.x());
    Matrix xi = restrict(M.xi());
    if (labels.empty())
        for (size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
    return Submodule{ModuleRep(M.datum_ptr(), std::move(labels), std::move(group), std::move(gamma), std::move(x), std::move(xi)),
                     basis};
}

Submodule spin_submodule(const ModuleRep& M, const std::vector<Vec>& S) {
    linalg::RowReducer red(M.dim());
    std::vector<Vec> basis;
    std::vector<Vec> queue(S.begin(), S.end());
    const auto gens = M.generators();
    for (size_t q = 0; q < queue.size(); ++q) {
        Vec v = queue[q];
        if (!red.add_row(v)) continue;
        basis.push_back(v);
        for (const Matrix* g : gens) queue.push_back(g->apply(v));
    }
    Matrix B = Matrix::from_columns(basis, M.dim());
    return restrict_to_subspace(M, B);
}

Quotient quotient_module(const ModuleRep& M, const Matrix& sub_basis) {
    const size_t dim = M.dim();
    Matrix S = sub_basis.cols() ? linalg::column_basis(sub_basis) : Matrix(dim, 0);
    std::vector<size_t> comp = linalg::complement_indices(S);
    Matrix lift(dim, comp.size());
    for (size_t j = 0; j < comp.size(); ++j) lift(comp[j], j) = CycScalar(1);
    Matrix T = Matrix::hcat(S, lift);
    Matrix Tinv = linalg::inverse(T);
    Matrix proj = Tinv.block(S.cols(), 0, comp.size(), dim);
    auto induce = [&](const Matrix& G) {
        if (S.cols() && !(proj * (G * S)).is_zero()) throw ParameterError("quotient by a non-invariant subspace");
        return proj * G * lift;
    };
    std::vector<Matrix> group, gamma;
    for (const auto& g : M.group_mats()) group.push_back(induce(g));
    for (const auto& g : M.gamma_mats()) gamma.push_back(induce(g));
    Matrix x = induce(M.x());
    Matrix xi = induce(M.xi());
    std::vector<std::string> labels;
    for (size_t j = 0; j < comp.size(); ++j) labels.push_back("[" + M.labels()[comp[j]] + "]");
    ModuleRep Q(M.datum_ptr(), std::move(labels), std::move(group), std::move(gamma), std::move(x), std::move(xi));
    return Quotient{std::move(Q), std::move(proj), std::move(lift)};
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
    if (parts.empty()) throw ParameterError("direct_sum of nothing");
    const size_t r = parts[0].datum().group.rank();
    std::vector<Matrix> group, gamma;
    for (size_t i = 0; i < r; ++i) {
        std::vector<Matrix> g, c;
        for (const auto& P : parts) {
            g.push_back(P.group_mats()[i]);
            c.push_back(P.gamma_mats()[i]);
        }
        group.push_back(Matrix::block_diag(g));
        gamma.push_back(Matrix::block_diag(c));
    }
    std::vector<Matrix> xs, xis;
    std::vector<std::string> labels;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (!(parts[k].datum() == parts[0].datum())) throw ParameterError("direct_sum: modules over different data");
        xs.push_back(parts[k].x());
        xis.push_back(parts[k].xi());
        for (const auto& l : parts[k].labels()) labels.push_back(std::to_string(k) + ":" + l);
    }
    return ModuleRep(parts[0].datum_ptr(), std::move(labels), std::move(group), std::move(gamma), Matrix::block_diag(xs),
                     Matrix::block_diag(xis));
}

Matrix x_kernel(const ModuleRep& M) { return linalg::nullspace(M.x()); }
Matrix xi_kernel(const ModuleRep& M) { return linalg::nullspace(M.xi()); }

bool is_intertwiner(const ModuleRep& M, const ModuleRep& N, const Matrix& F) {
    if (F.rows() != N.dim() || F.cols() != M.dim()) return false;
    const auto gm = M.generators();
    const auto gn = N.generators();
    for (size_t i = 0; i < gm.size(); ++i)
        if (F * *gm[i] != *gn[i] * F) return false;
    return true;
}

}  // namespace ddrep
