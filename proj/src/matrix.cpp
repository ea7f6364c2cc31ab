#include "ddrep/matrix.hpp"

#include "ddrep/errors.hpp"

namespace ddrep {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw SizeMismatch("from_columns: column length");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(size_t j) const {
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(size_t j, const Vec& v) {
    if (v.size() != r_) throw SizeMismatch("set_column: length");
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i] != o.d_[i]) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw SizeMismatch("matrix product: inner dimensions differ");
    Matrix p(r_, o.c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t k = 0; k < c_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                const CycScalar& b = o(k, j);
                if (b.is_zero()) continue;
                p(i, j).add_product(a, b);
            }
        }
    }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch("matrix sum: shapes differ");
    Matrix s = *this;
    for (size_t i = 0; i < d_.size(); ++i)
        if (!o.d_[i].is_zero()) s.d_[i] += o.d_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch("matrix difference: shapes differ");
    Matrix s = *this;
    for (size_t i = 0; i < d_.size(); ++i)
        if (!o.d_[i].is_zero()) s.d_[i] -= o.d_[i];
    return s;
}

Matrix Matrix::scaled(const CycScalar& s) const {
    Matrix m = *this;
    for (auto& x : m.d_)
        if (!x.is_zero()) x *= s;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != c_) throw SizeMismatch("matrix-vector product: length");
    Vec out(r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero() || v[k].is_zero()) continue;
            out[i].add_product(a, v[k]);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::pow(unsigned k) const {
    if (r_ != c_) throw SizeMismatch("matrix power of non-square matrix");
    Matrix result = identity(r_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < r_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
    Matrix m(idx.size(), c_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw SizeMismatch("hcat: row counts differ");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw SizeMismatch("vcat: column counts differ");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

void Matrix::coerce_all(int order) {
    for (auto& x : d_) x = x.coerce(order);
}

CycScalar trace(const Matrix& a) {
    CycScalar t;
    for (size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

CycScalar trace_of_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw SizeMismatch("trace_of_product: shapes");
    CycScalar t;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
            t.add_product(a(i, k), b(k, i));
        }
    return t;
}

namespace linalg {

Echelon rref(const Matrix& a) {
    Echelon e{a, {}};
    Matrix& m = e.rref;
    const size_t R = m.rows(), C = m.cols();
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t p = row;
        while (p < R && m(p, col).is_zero()) ++p;
        if (p == R) continue;
        if (p != row)
            for (size_t j = 0; j < C; ++j) std::swap(m(p, j), m(row, j));
        CycScalar inv = m(row, col).inverse();
        for (size_t j = col; j < C; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            CycScalar f = m(i, col);
            for (size_t j = col; j < C; ++j) {
                if (m(row, j).is_zero()) continue;
                m(i, j) -= f * m(row, j);
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

size_t rank(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return rref(a).pivots.size();
}

Matrix nullspace(const Matrix& a) {
    const size_t C = a.cols();
    Echelon e = rref(a);
    std::vector<bool> is_pivot(C, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v(C);
        v[f] = CycScalar(1);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.rref(r, f).is_zero()) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, C);
}

Matrix column_basis(const Matrix& a) {
    if (a.cols() == 0) return Matrix(a.rows(), 0);
    Echelon e = rref(a);
    return a.select_columns(e.pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw SizeMismatch("solve: row counts differ");
    const size_t n = a.cols();
    Echelon e = rref(Matrix::hcat(a, b));
    Matrix x(n, b.cols());
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        size_t p = e.pivots[r];
        if (p >= n) return std::nullopt;  // inconsistent
        for (size_t j = 0; j < b.cols(); ++j) x(p, j) = e.rref(r, n + j);
    }
    return x;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const size_t n = a.rows();
    Echelon e = rref(Matrix::hcat(a, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.rref.block(0, n, n, n);
}

Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw InternalInconsistency("matrix is not invertible");
    return *inv;
}

Matrix intersect(const Matrix& u, const Matrix& v) {
    // [u | -v] (a; b) = 0  =>  u a lies in both spaces
    if (u.cols() == 0 || v.cols() == 0) return Matrix(u.rows(), 0);
    Matrix uv = Matrix::hcat(u, v.scaled(CycScalar(-1)));
    Matrix ns = nullspace(uv);
    Matrix a = ns.block(0, 0, u.cols(), ns.cols());
    return column_basis(u * a);
}

std::vector<size_t> complement_indices(const Matrix& u) {
    const size_t n = u.rows();
    std::vector<bool> taken(n, false);
    if (u.cols() > 0) {
        Echelon e = rref(u.transpose());
        for (size_t p : e.pivots) taken[p] = true;
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
        if (!taken[i]) out.push_back(i);
    return out;
}

bool in_span(const Matrix& basis, const Vec& v) {
    Matrix b(v.size(), 1);
    b.set_column(0, v);
    if (basis.cols() == 0) return b.is_zero();
    return solve(basis, b).has_value();
}

bool RowReducer::add_row(Vec row) {
    if (row.size() != n_) throw SizeMismatch("RowReducer: row length");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t p = pivots_[r];
        if (row[p].is_zero()) continue;
        CycScalar f = row[p];
        const Vec& pr = rows_[r];
        for (size_t j = 0; j < n_; ++j)
            if (!pr[j].is_zero()) row[j] -= f * pr[j];
    }
    size_t q = 0;
    while (q < n_ && row[q].is_zero()) ++q;
    if (q == n_) return false;
    CycScalar inv = row[q].inverse();
    for (size_t j = q; j < n_; ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    for (auto& pr : rows_) {
        if (pr[q].is_zero()) continue;
        CycScalar f = pr[q];
        for (size_t j = 0; j < n_; ++j)
            if (!row[j].is_zero()) pr[j] -= f * row[j];
    }
    pivots_.push_back(q);
    rows_.push_back(std::move(row));
    return true;
}

Matrix RowReducer::nullspace() const {
    std::vector<bool> is_pivot(n_, false);
    for (size_t p : pivots_) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n_);
        v[f] = CycScalar(1);
        for (size_t r = 0; r < rows_.size(); ++r)
            if (!rows_[r][f].is_zero()) v[pivots_[r]] = -rows_[r][f];
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, n_);
}

}  // namespace linalg

}  // namespace ddrep
