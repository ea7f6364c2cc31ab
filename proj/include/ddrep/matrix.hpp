#pragma once

#include <optional>
#include <vector>

#include "ddrep/cyclo.hpp"

namespace ddrep {

using Vec = std::vector<CycScalar>;

// Dense row-major matrix over the cyclotomic field.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, size_t rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    CycScalar& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const CycScalar& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Vec column(size_t j) const;
    void set_column(size_t j, const Vec& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const CycScalar& s) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix pow(unsigned k) const;

    // Submatrix of the given columns, in the given order.
    Matrix select_columns(const std::vector<size_t>& idx) const;
    Matrix select_rows(const std::vector<size_t>& idx) const;
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Matrix& b);

    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const std::vector<Matrix>& blocks);

    // Re-express every entry over Q(zeta_N).
    void coerce_all(int order);

private:
    size_t r_ = 0, c_ = 0;
    std::vector<CycScalar> d_;
};

CycScalar trace(const Matrix& a);
// trace(a * b) without forming the product
CycScalar trace_of_product(const Matrix& a, const Matrix& b);

namespace linalg {

struct Echelon {
    Matrix rref;                // fully reduced row echelon form
    std::vector<size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(const Matrix& a);
size_t rank(const Matrix& a);

// Columns form a basis of {v : a v = 0}; one basis vector per free column with a 1 there.
Matrix nullspace(const Matrix& a);

// Basis of the column space, taken as the pivot columns of a itself.
Matrix column_basis(const Matrix& a);

// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Throws InternalInconsistency if singular.
Matrix inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);

// Intersection of two column spaces, as a basis matrix.
Matrix intersect(const Matrix& u, const Matrix& v);

// Indices of standard basis vectors completing the column space of u to the whole space,
// chosen as the non-pivot columns of the echelon form of u^T.
std::vector<size_t> complement_indices(const Matrix& u);

bool in_span(const Matrix& basis, const Vec& v);

// Incremental elimination used for large homogeneous systems.
class RowReducer {
public:
    explicit RowReducer(size_t ncols) : n_(ncols) {}
    // Returns true if the row was independent of those already added.
    bool add_row(Vec row);
    size_t rank() const { return rows_.size(); }
    // Basis of the solution space of all rows added so far.
    Matrix nullspace() const;

private:
    size_t n_;
    std::vector<size_t> pivots_;
    std::vector<Vec> rows_;
};

}  // namespace linalg

}  // namespace ddrep
