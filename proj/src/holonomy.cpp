// Band holonomy: walk once around the tau-orbit of the socle weight, composing the
// link map A_k : L_k -> T_k (through the head piece of copy k) with the inverse of the
// inner map B_{k+1} : L_{k+1} -> T_k. The conjugacy class of the composite is an
// isomorphism invariant; it recovers eta on M-type bands and 1/eta on W-type strings.

#include "ddrep/homology.hpp"

namespace ddrep {

namespace {

// Characteristic polynomial by Faddeev-LeVerrier (characteristic zero), constant term first.
std::vector<CycScalar> charpoly(const Matrix& A) {
    const size_t n = A.rows();
    std::vector<CycScalar> c(n + 1);
    c[n] = CycScalar(1);
    Matrix Mk(n, n);
    const Matrix I = Matrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        Mk = A * Mk + I.scaled(c[n - k + 1]);
        c[n - k] = -trace(A * Mk) / CycScalar(static_cast<long>(k));
    }
    return c;
}

Matrix block_of(const WeightDecomposition& wd, const Matrix& op, size_t row_block, size_t col_block) {
    return op.block(wd.block_start[row_block], wd.block_start[col_block], wd.block_dim[row_block], wd.block_dim[col_block]);
}

}  // namespace

std::string Holonomy::to_string() const {
    if (!applicable) return "inapplicable";
    std::string s = inverted ? "inverse charpoly [" : "charpoly [";
    for (size_t i = 0; i < charpoly.size(); ++i) s += (i ? ", " : "") + charpoly[i].to_string();
    return s + "]";
}

Holonomy holonomy_invariant(const ModuleRep& M) {
    Holonomy h;
    if (M.dim() == 0) return h;
    const GroupDatum& D = M.datum();
    const Multiplicities soc = socle_constituents(M);
    const int l = soc.begin()->first.l;
    if (l >= D.n) return h;
    const Weight rep = tau_orbit_rep(D, soc.begin()->first.lambda);
    for (const auto& [lab, mult] : soc)
        if (lab.l != l || !(tau_orbit_rep(D, lab.lambda) == rep)) return h;

    const auto& wd = M.weights();
    const int m = D.m, n = D.n;
    const bool nil = D.kind == Kind::Nilpotent;
    const Weight ph = phi(D);
    const Matrix A_op = nil ? wd.x_w.pow(static_cast<unsigned>(n - 1)) : wd.x_w;
    const Matrix B_op = nil ? wd.xi_w : wd.xi_w.pow(static_cast<unsigned>(n - 1));

    std::vector<Weight> mu;
    for (int k = 0; k <= m; ++k) mu.push_back(tau(D, rep, k));
    auto line = [&](int k) { return nil ? sigma(D, mu[static_cast<size_t>(k)]) : weight_mul(D, weight_pow(D, ph, n - 1), mu[static_cast<size_t>(k)]); };
    auto target = [&](int k) { return nil ? weight_mul(D, weight_pow(D, ph, n - 1), sigma(D, mu[static_cast<size_t>(k)])) : mu[static_cast<size_t>(k) + 1]; };

    std::vector<Matrix> A, B;
    size_t d = 0;
    for (int k = 0; k < m; ++k) {
        auto bl = wd.find(line(k)), bl1 = wd.find(line(k + 1)), bt = wd.find(target(k));
        if (!bl || !bl1 || !bt) return h;
        if (k == 0) d = wd.block_dim[*bl];
        if (d == 0 || wd.block_dim[*bl] != d || wd.block_dim[*bl1] != d || wd.block_dim[*bt] != d) return h;
        A.push_back(block_of(wd, A_op, *bt, *bl));
        B.push_back(block_of(wd, B_op, *bt, *bl1));
    }

    auto all_invertible = [](const std::vector<Matrix>& v) {
        for (const auto& x : v)
            if (linalg::rank(x) != x.rows()) return false;
        return true;
    };
    Matrix H = Matrix::identity(d);
    if (all_invertible(B)) {
        for (int k = 0; k < m; ++k) H = linalg::inverse(B[static_cast<size_t>(k)]) * A[static_cast<size_t>(k)] * H;
    } else if (all_invertible(A)) {
        h.inverted = true;
        for (int k = m - 1; k >= 0; --k) H = linalg::inverse(A[static_cast<size_t>(k)]) * B[static_cast<size_t>(k)] * H;
    } else {
        return h;
    }
    h.applicable = true;
    h.charpoly = charpoly(H);
    return h;
}

}  // namespace ddrep
