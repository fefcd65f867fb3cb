#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "adr/field.hpp"

namespace adr {

// Dense matrix over F_p, row-major. All elimination routines use a fixed
// pivot scan order (first nonzero entry in reading order) so that echelon
// forms, kernels and solutions are deterministic.
class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static Matrix identity(PrimeField f, int n);
    static Matrix from_rows(PrimeField f, std::initializer_list<std::initializer_list<int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return f_; }

    uint32_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    uint32_t& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix mul(const Matrix& rhs) const;
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scale(uint32_t c) const;
    Matrix transpose() const;

    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;  // matrix * column
    std::vector<uint32_t> col(int j) const;
    void set_col(int j, const std::vector<uint32_t>& v);

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_cols(PrimeField f, int rows, const std::vector<std::vector<uint32_t>>& cols);

private:
    PrimeField f_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint32_t> e_;
};

// Row rank by Gaussian elimination.
int rank(const Matrix& m);

// Reduced row echelon form; pivot columns reported in scan order.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right null space {x : m x = 0}, returned as the columns of a
// matrix in reduced column-echelon form (one leading 1 per free coordinate).
Matrix kernel_basis(const Matrix& m);

// One particular solution of m x = b with free variables set to zero, or
// nullopt when inconsistent. Throws DimensionMismatch when sizes disagree.
std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b);

// Simultaneous solve for every column of B; nullopt if any column fails.
std::optional<Matrix> solve_all(const Matrix& m, const Matrix& b);

bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace given by a reduced column-echelon basis: each basis column has
// a leading 1 in its pivot row and zeros in the pivot rows of the others.
struct ColSpace {
    Matrix basis;                 // ambient_dim x k
    std::vector<int> pivot_rows;  // ascending, one per column
    int dim() const { return basis.cols(); }
    int ambient() const { return basis.rows(); }
};

ColSpace col_echelon(const Matrix& columns);
ColSpace colspace_zero(PrimeField f, int ambient);

// Precomputed coordinate solver for a fixed full-column-rank matrix F:
// coords(v) returns c with F c = v (callers guarantee v lies in the column
// space; verify() re-checks).
struct CoordSolver {
    Matrix F;
    Matrix E;  // d x N row-operation block: coords = E v
    std::vector<uint32_t> coords(const std::vector<uint32_t>& v) const { return E.apply(v); }
    bool verify(const std::vector<uint32_t>& c, const std::vector<uint32_t>& v) const;
};
CoordSolver make_coord_solver(const Matrix& full_col_rank);

// Reduce v against the echelon basis; the residue is zero iff v lies in the span.
std::vector<uint32_t> reduce_against(const ColSpace& s, std::vector<uint32_t> v);
bool in_span(const ColSpace& s, const std::vector<uint32_t>& v);

// Extend the echelon basis by v if it enlarges the span. Returns true if grown.
bool extend_span(ColSpace& s, const std::vector<uint32_t>& v);

ColSpace span_sum(const ColSpace& a, const ColSpace& b);

}  // namespace adr
