#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adr/matrix.hpp"

using namespace adr;

namespace {

const PrimeField F101(101);

// Independent oracle: rank by exhaustive minor enumeration (k x k determinants
// by permutation expansion), for matrices small enough to brute force.
uint32_t det_perm(const PrimeField& f, const Matrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    int n = static_cast<int>(rows.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint32_t det = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        uint32_t term = 1;
        for (int i = 0; i < n; ++i) term = f.mul(term, m.at(rows[i], cols[perm[i]]));
        det = inv % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

int rank_by_minors(const Matrix& m) {
    const PrimeField& f = m.field();
    int best = 0;
    int maxk = std::min(m.rows(), m.cols());
    for (int k = 1; k <= maxk; ++k) {
        bool found = false;
        std::vector<int> rows(k), cols(k);
        std::function<void(int, int)> pick_rows = [&](int from, int at) {
            if (found) return;
            if (at == k) {
                std::function<void(int, int)> pick_cols = [&](int cfrom, int cat) {
                    if (found) return;
                    if (cat == k) {
                        if (det_perm(f, m, rows, cols) != 0) found = true;
                        return;
                    }
                    for (int c = cfrom; c < m.cols(); ++c) {
                        cols[cat] = c;
                        pick_cols(c + 1, cat + 1);
                    }
                };
                pick_cols(0, 0);
                return;
            }
            for (int r = from; r < m.rows(); ++r) {
                rows[at] = r;
                pick_rows(r + 1, at + 1);
            }
        };
        pick_rows(0, 0);
        if (found)
            best = k;
        else
            break;
    }
    return best;
}

Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
    Matrix m(F101, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % 101);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(F101, 3)) == 3);
    CHECK(rank(Matrix(F101, 2, 5)) == 0);
    // row 2 = 2 * row 1: all 2x2 minors vanish
    Matrix m = Matrix::from_rows(F101, {{1, 2}, {2, 4}});
    CHECK(rank_by_minors(m) == 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("rank matches the minor oracle on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 4);
        Matrix m = random_matrix(rng, r, c);
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Matrix::identity(F101, 4)).cols() == 0);
    Matrix z(F101, 2, 3);
    Matrix k = kernel_basis(z);
    CHECK(k.cols() == 3);
    CHECK(k == Matrix::identity(F101, 3));

    // brute force over F_101^2: solutions of x + 100 y = 0 are x = y
    Matrix m = Matrix::from_rows(F101, {{1, 100}});
    int solutions = 0;
    for (uint32_t x = 0; x < 101; ++x)
        for (uint32_t y = 0; y < 101; ++y)
            if (F101.add(x, F101.mul(100, y)) == 0) ++solutions;
    CHECK(solutions == 101);  // a line
    Matrix kb = kernel_basis(m);
    REQUIRE(kb.cols() == 1);
    CHECK(kb.at(0, 0) == 1);
    CHECK(kb.at(1, 0) == 1);
}

TEST_CASE("solve basics") {
    Matrix id = Matrix::identity(F101, 3);
    std::vector<uint32_t> b{5, 7, 9};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    // free variable zeroed
    Matrix m = Matrix::from_rows(F101, {{1, 1}});
    auto y = solve(m, {0});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<uint32_t>{0, 0});

    // modular inverse oracle: 2 * z = 1 mod 101 has the unique solution 51
    uint32_t expect = 0;
    for (uint32_t z = 0; z < 101; ++z)
        if (F101.mul(2, z) == 1) expect = z;
    CHECK(expect == 51);
    auto s = solve(Matrix::from_rows(F101, {{2}}), {1});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 51);

    CHECK(!solve(Matrix(F101, 2, 2), {1, 0}).has_value());
    CHECK_THROWS_AS((void)solve(id, {1, 2}), DimensionMismatch);
}

TEST_CASE("invertibility") {
    CHECK(is_invertible(Matrix::identity(F101, 2)));
    CHECK(!is_invertible(Matrix(F101, 2, 3)));
    CHECK(!is_invertible(Matrix::from_rows(F101, {{1, 2}, {2, 4}})));
    Matrix m = Matrix::from_rows(F101, {{3, 1}, {5, 2}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m.mul(*inv) == Matrix::identity(F101, 2));
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        Matrix m = random_matrix(rng, r, c);
        CHECK(rank(m) + kernel_basis(m).cols() == c);

        std::vector<uint32_t> x0(c);
        for (auto& v : x0) v = static_cast<uint32_t>(rng() % 101);
        std::vector<uint32_t> b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("rank is invariant under row permutation") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        int r = 2 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 5);
        Matrix m = random_matrix(rng, r, c);
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix p(F101, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) p.at(i, j) = m.at(perm[i], j);
        CHECK(rank(m) == rank(p));
    }
}

TEST_CASE("column echelon spans and membership") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        Matrix cols = random_matrix(rng, n, 1 + static_cast<int>(rng() % 4));
        ColSpace s = col_echelon(cols);
        for (int j = 0; j < cols.cols(); ++j) CHECK(in_span(s, cols.col(j)));
        CHECK(s.dim() == rank(cols));
        CoordSolver solver = make_coord_solver(s.basis);
        if (s.dim() > 0) {
            auto v = s.basis.col(0);
            auto c = solver.coords(v);
            CHECK(solver.verify(c, v));
        }
    }
}
