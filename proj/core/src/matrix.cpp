#include "adr/matrix.hpp"

#include <algorithm>

namespace adr {

Matrix Matrix::identity(PrimeField f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField f, std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(f, r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = f.reduce(v);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x == 0; });
}

Matrix Matrix::mul(const Matrix& rhs) const {
    Matrix out(f_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                uint32_t& o = out.at(i, j);
                o = f_.add(o, f_.mul(a, rhs.at(k, j)));
            }
        }
    return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
    Matrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = f_.add(e_[i], rhs.e_[i]);
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
    Matrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = f_.sub(e_[i], rhs.e_[i]);
    return out;
}

Matrix Matrix::scale(uint32_t c) const {
    Matrix out = *this;
    for (auto& x : out.e_) x = f_.mul(x, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<uint32_t> Matrix::apply(const std::vector<uint32_t>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("matrix/vector size mismatch");
    std::vector<uint32_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += static_cast<uint64_t>(at(i, j)) * v[j];
        out[i] = static_cast<uint32_t>(acc % f_.p);
    }
    return out;
}

std::vector<uint32_t> Matrix::col(int j) const {
    std::vector<uint32_t> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const std::vector<uint32_t>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

Matrix Matrix::from_cols(PrimeField f, int rows, const std::vector<std::vector<uint32_t>>& cols) {
    Matrix out(f, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < out.cols(); ++j) out.set_col(j, cols[j]);
    return out;
}

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
    Matrix a = m;
    const PrimeField f = m.field();
    int r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        uint32_t ic = f.inv(a.at(r, c));
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), ic);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            uint32_t x = a.at(i, c);
            if (!x) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(x, a.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return a;
}

int rank(const Matrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Matrix kernel_basis(const Matrix& m) {
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    const PrimeField f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> cols;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = f.neg(r.at(static_cast<int>(k), free));
        cols.push_back(std::move(v));
    }
    return Matrix::from_cols(f, m.cols(), cols);
}

std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DimensionMismatch("solve: rhs length != rows");
    Matrix aug = Matrix::hstack(m, Matrix::from_cols(m.field(), m.rows(), {b}));
    std::vector<int> piv;
    Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<uint32_t> x(m.cols(), 0);
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(static_cast<int>(k), m.cols());
    return x;
}

std::optional<Matrix> solve_all(const Matrix& m, const Matrix& b) {
    Matrix out(m.field(), m.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto x = solve(m, b.col(j));
        if (!x) return std::nullopt;
        out.set_col(j, *x);
    }
    return out;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
    std::vector<int> piv;
    Matrix r = rref(aug, &piv);
    if (static_cast<int>(piv.size()) != m.rows()) return std::nullopt;
    Matrix inv(m.field(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = r.at(i, m.rows() + j);
    return inv;
}

ColSpace colspace_zero(PrimeField f, int ambient) {
    return ColSpace{Matrix(f, ambient, 0), {}};
}

CoordSolver make_coord_solver(const Matrix& m) {
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
    std::vector<int> piv;
    Matrix r = rref(aug, &piv);
    int d = m.cols();
    Matrix e(m.field(), d, m.rows());
    for (int i = 0; i < d && i < static_cast<int>(piv.size()); ++i)
        for (int j = 0; j < m.rows(); ++j) e.at(i, j) = r.at(i, d + j);
    return CoordSolver{m, e};
}

bool CoordSolver::verify(const std::vector<uint32_t>& c, const std::vector<uint32_t>& v) const {
    return F.apply(c) == v;
}

ColSpace col_echelon(const Matrix& columns) {
    // Column echelon via rref of the transpose.
    std::vector<int> piv;
    Matrix r = rref(columns.transpose(), &piv);
    Matrix basis(columns.field(), columns.rows(), static_cast<int>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < columns.rows(); ++i) basis.at(i, static_cast<int>(k)) = r.at(static_cast<int>(k), i);
    return ColSpace{basis, piv};
}

std::vector<uint32_t> reduce_against(const ColSpace& s, std::vector<uint32_t> v) {
    const PrimeField f = s.basis.field();
    for (int k = 0; k < s.dim(); ++k) {
        uint32_t c = v[s.pivot_rows[k]];
        if (!c) continue;
        for (int i = 0; i < s.ambient(); ++i) v[i] = f.sub(v[i], f.mul(c, s.basis.at(i, k)));
    }
    return v;
}

bool in_span(const ColSpace& s, const std::vector<uint32_t>& v) {
    auto r = reduce_against(s, v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool extend_span(ColSpace& s, const std::vector<uint32_t>& v) {
    auto r = reduce_against(s, v);
    int lead = -1;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i]) { lead = static_cast<int>(i); break; }
    if (lead < 0) return false;
    const PrimeField f = s.basis.field();
    uint32_t ic = f.inv(r[lead]);
    for (auto& x : r) x = f.mul(x, ic);
    // Clear the new pivot row from existing columns, then insert keeping pivots sorted.
    Matrix nb(f, s.ambient(), s.dim() + 1);
    std::vector<int> npiv;
    int pos = 0;
    while (pos < s.dim() && s.pivot_rows[pos] < lead) ++pos;
    for (int k = 0; k < s.dim() + 1; ++k) {
        std::vector<uint32_t> colv;
        if (k == pos) {
            colv = r;
            npiv.push_back(lead);
        } else {
            int src = k < pos ? k : k - 1;
            colv = s.basis.col(src);
            uint32_t c = colv[lead];
            if (c)
                for (int i = 0; i < s.ambient(); ++i) colv[i] = f.sub(colv[i], f.mul(c, r[i]));
            npiv.push_back(s.pivot_rows[src]);
        }
        nb.set_col(k, colv);
    }
    s.basis = nb;
    s.pivot_rows = npiv;
    return true;
}

ColSpace span_sum(const ColSpace& a, const ColSpace& b) {
    ColSpace s = a;
    for (int j = 0; j < b.dim(); ++j) extend_span(s, b.basis.col(j));
    // Re-echelonize for canonical (reduced) form.
    return col_echelon(s.basis);
}

}  // namespace adr
