#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <numeric>
#include <sstream>

#include "adr/module.hpp"

using namespace adr;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(ADRKIT_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation ex22() { return Presentation::parse(read_data("example22.alg")); }
Presentation loop_pres() { return Presentation::parse(read_data("loop.alg")); }

std::vector<int> dims_of(const Rep& r) { return r.dims; }

// Independent oracle: assemble the intertwiner equations directly and row
// reduce with a self-contained elimination, bypassing hom_basis entirely.
int hom_dim_oracle(const Presentation& pres, const Rep& x, const Rep& y) {
    const uint32_t p = pres.field().p;
    int nv = pres.num_vertices();
    std::vector<int> off(nv, 0);
    int nvar = 0;
    for (int s = 0; s < nv; ++s) {
        off[s] = nvar;
        nvar += x.dims[s] * y.dims[s];
    }
    std::vector<std::vector<uint32_t>> rows;
    for (int a = 0; a < pres.num_arrows(); ++a) {
        int u = pres.quiver().arrows[a].src, v = pres.quiver().arrows[a].tgt;
        for (int i = 0; i < y.dims[v]; ++i)
            for (int j = 0; j < x.dims[u]; ++j) {
                std::vector<uint32_t> row(nvar, 0);
                for (int g = 0; g < x.dims[v]; ++g)
                    row[off[v] + i * x.dims[v] + g] =
                        (row[off[v] + i * x.dims[v] + g] + x.act[a].at(g, j)) % p;
                for (int d = 0; d < y.dims[u]; ++d)
                    row[off[u] + d * x.dims[u] + j] =
                        (row[off[u] + d * x.dims[u] + j] + p - y.act[a].at(i, d) % p) % p;
                rows.push_back(std::move(row));
            }
    }
    // self-contained Gaussian elimination for the rank
    int rank = 0;
    for (int c = 0; c < nvar && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c]) { piv = static_cast<int>(r); break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        // normalize
        uint32_t lead = rows[rank][c], inv = 1;
        for (uint32_t k = 1; k < p; ++k)
            if (lead * k % p == 1) inv = k;
        for (auto& e : rows[rank]) e = e * inv % p;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || !rows[r][c]) continue;
            uint32_t f = rows[r][c];
            for (int k = 0; k < nvar; ++k)
                rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
        }
        ++rank;
    }
    return nvar - rank;
}

}  // namespace

TEST_CASE("projective representations of Example 2.2") {
    Presentation pres = ex22();
    CHECK(dims_of(projective_rep(pres, 0)) == std::vector<int>{1, 1, 1, 1});
    CHECK(dims_of(projective_rep(pres, 1)) == std::vector<int>{0, 1, 1, 1});
    CHECK(dims_of(projective_rep(pres, 2)) == std::vector<int>{0, 0, 1, 0});
    // dim A = sum of dim P(i)
    int total = 0;
    for (int v = 0; v < 4; ++v) total += projective_rep(pres, v).total_dim();
    CHECK(total == pres.dim());
}

TEST_CASE("projectives over a quiver with no arrows are simple") {
    Presentation pres = Presentation::parse("quiver\nvertices: 1 2\n");
    Ops ops = algebra_ops(pres);
    for (int v = 0; v < 2; ++v)
        CHECK(is_isomorphic(ops, projective_rep(pres, v), simple_rep(pres, v)));
}

TEST_CASE("simples and tops") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    CHECK(dims_of(simple_rep(pres, 2)) == std::vector<int>{0, 0, 1, 0});
    for (int v = 0; v < 4; ++v) {
        Rep p = projective_rep(pres, v);
        CHECK(is_isomorphic(ops, top(ops, p).rep, simple_rep(pres, v)));
    }
    CHECK(hom_basis(ops, simple_rep(pres, 0), simple_rep(pres, 1)).empty());
}

TEST_CASE("radical submodules") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep s = simple_rep(pres, 0);
    CHECK(radical_sub(ops, s).total_dim() == 0);
    Rep p1 = projective_rep(pres, 0);
    SubRep rad = materialize(ops, p1, radical_sub(ops, p1));
    CHECK(dims_of(rad.rep) == std::vector<int>{0, 1, 1, 1});

    Presentation lp = loop_pres();
    Ops lops = algebra_ops(lp);
    Rep lp1 = projective_rep(lp, 0);
    CHECK(lp1.total_dim() == 4);
    SubRep lrad = materialize(lops, lp1, radical_sub(lops, lp1));
    CHECK(dims_of(lrad.rep) == std::vector<int>{2, 1});
}

TEST_CASE("loewy lengths") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    CHECK(loewy_length(ops, simple_rep(pres, 3)) == 1);
    Rep p1 = projective_rep(pres, 0);
    CHECK(loewy_length(ops, p1) == 3);
    // ll(M/MJ^j) = min(j, ll M)
    for (int j = 0; j <= 4; ++j) {
        Rep q = quotient(ops, p1, radical_power_sub(ops, p1, j)).rep;
        CHECK(loewy_length(ops, q) == std::min(j, 3));
    }
}

TEST_CASE("quotients") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep p1 = projective_rep(pres, 0);
    CHECK(is_isomorphic(ops, quotient(ops, p1, zero_sub(ops, p1)).rep, p1));
    CHECK(is_isomorphic(ops, quotient(ops, p1, radical_sub(ops, p1)).rep, simple_rep(pres, 0)));

    Presentation lp = loop_pres();
    Ops lops = algebra_ops(lp);
    Rep lp1 = projective_rep(lp, 0);
    SubSpaces soc = socle_sub(lops, lp1);
    CHECK(soc.total_dim() == 2);
    Rep q = quotient(lops, lp1, soc).rep;
    CHECK(dims_of(q) == std::vector<int>{2, 0});

    // a subspace that is not a submodule
    SubSpaces bad = zero_sub(lops, lp1);
    std::vector<uint32_t> v(lp1.dims[0], 0);
    v[0] = 1;  // the generator e1 alone is not arrow-closed
    extend_span(bad.slot[0], v);
    CHECK_THROWS_AS((void)quotient(lops, lp1, bad), NotASubmodule);
}

TEST_CASE("hom spaces satisfy Yoneda") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    std::vector<Rep> mods;
    for (int v = 0; v < 4; ++v) mods.push_back(projective_rep(pres, v));
    mods.push_back(local_from_generators(pres, 0, {parse_path_expr(pres, "a*b")}));
    for (int v = 0; v < 4; ++v) {
        Rep p = projective_rep(pres, v);
        for (const Rep& m : mods)
            CHECK(static_cast<int>(hom_basis(ops, p, m).size()) == m.dims[v]);
    }
    for (int v = 0; v < 4; ++v)
        CHECK(hom_basis(ops, simple_rep(pres, v), simple_rep(pres, v)).size() == 1);
}

TEST_CASE("hom dimension agrees with the equation-level oracle") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep x = local_from_generators(pres, 0, {parse_path_expr(pres, "a*b")});   // P(1)/S(3)
    Rep y = local_from_generators(pres, 0, {parse_path_expr(pres, "a*c")});   // P(1)/S(4)
    CHECK(hom_dim_oracle(pres, x, y) == 1);
    CHECK(hom_basis(ops, x, y).size() == 1);

    Presentation lp = loop_pres();
    Ops lops = algebra_ops(lp);
    Rep lp1 = projective_rep(lp, 0);
    CHECK(hom_dim_oracle(lp, lp1, lp1) == static_cast<int>(hom_basis(lops, lp1, lp1).size()));
}

TEST_CASE("local tops and radical endomorphisms") {
    Presentation lp = loop_pres();
    Ops ops = algebra_ops(lp);
    Rep p1 = projective_rep(lp, 0);
    CHECK(is_local(ops, p1));
    LocalTop t = local_top(ops, p1);
    CHECK(t.slot == 0);
    // End(P(1)) in the loop example is 2-dimensional with 1-dimensional radical
    auto endo = hom_basis(ops, p1, p1);
    CHECK(endo.size() == 2);
    int singular = 0;
    for (const MapTo& f : endo)
        if (top_scalar(ops, p1, t, p1, t, f) == 0) ++singular;
    CHECK(singular >= 1);  // echelon basis contains at least one radical element

    Rep s = simple_rep(lp, 0);
    LocalTop ts = local_top(ops, s);
    auto es = hom_basis(ops, s, s);
    REQUIRE(es.size() == 1);
    CHECK(top_scalar(ops, s, ts, s, ts, es[0]) != 0);  // J(S, S) = 0

    Rep ss = direct_sum(ops, {&s, &s});
    CHECK(!is_local(ops, ss));
    CHECK_THROWS_AS((void)local_top(ops, ss), NotLocal);
}

TEST_CASE("isomorphism testing") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep x = local_from_generators(pres, 0, {parse_path_expr(pres, "a*b")});
    Rep y = local_from_generators(pres, 0, {parse_path_expr(pres, "a*c")});
    CHECK(is_isomorphic(ops, x, x));
    CHECK(!is_isomorphic(ops, simple_rep(pres, 0), simple_rep(pres, 1)));
    CHECK(dims_of(x) == std::vector<int>{1, 1, 1, 0});
    CHECK(dims_of(y) == std::vector<int>{1, 1, 0, 1});
    CHECK(!is_isomorphic(ops, x, y));
}

TEST_CASE("splitting local summands") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep s1 = simple_rep(pres, 0), s2 = simple_rep(pres, 1);
    Rep sum = direct_sum(ops, {&s1, &s2});
    auto c = split_local_summand(ops, sum, s1);
    REQUIRE(c.has_value());
    CHECK(is_isomorphic(ops, *c, s2));

    // dimension obstruction
    Rep p1 = projective_rep(pres, 0);
    CHECK(!split_local_summand(ops, s2, p1).has_value());

    // complement dimensions add up and re-splitting works
    auto c2 = split_local_summand(ops, sum, s2);
    REQUIRE(c2.has_value());
    Rep resum = direct_sum(ops, {&*c2, &s2});
    CHECK(split_local_summand(ops, resum, s2).has_value());
}

TEST_CASE("rad P(1) of Example 2.2 is P(2), and J(A) decomposes") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep p1 = projective_rep(pres, 0);
    Rep p2 = projective_rep(pres, 1);
    Rep rad1 = materialize(ops, p1, radical_sub(ops, p1)).rep;
    CHECK(is_isomorphic(ops, rad1, p2));

    // J(A) = (+) rad P(i); catalog = all radical-power quotients of projectives
    std::vector<Rep> rads, catalog;
    for (int v = 0; v < 4; ++v) {
        Rep p = projective_rep(pres, v);
        rads.push_back(materialize(ops, p, radical_sub(ops, p)).rep);
        int ll = loewy_length(ops, p);
        for (int k = 1; k <= ll; ++k) {
            Rep q = quotient(ops, p, radical_power_sub(ops, p, k)).rep;
            bool dup = false;
            for (const Rep& kept : catalog)
                if (is_isomorphic(ops, kept, q)) dup = true;
            if (!dup) catalog.push_back(q);
        }
    }
    std::vector<const Rep*> radp, catp;
    for (const Rep& r : rads) radp.push_back(&r);
    for (const Rep& r : catalog) catp.push_back(&r);
    Rep ja = direct_sum(ops, radp);
    DecomposeResult dec = decompose_into(ops, ja, catp);
    REQUIRE(dec.ok);
    // J(A) = P(2) (+) S(3) (+) S(4): one 3-dim local and two simples
    int total = 0, summands = 0;
    for (size_t k = 0; k < catalog.size(); ++k) {
        total += dec.counts[k] * catalog[k].total_dim();
        summands += dec.counts[k];
    }
    CHECK(total == ja.total_dim());
    CHECK(summands == 3);
    // the dim-3 summand is rad P(1) = P(2)
    for (size_t k = 0; k < catalog.size(); ++k)
        if (dec.counts[k] && catalog[k].total_dim() == 3)
            CHECK(is_isomorphic(ops, catalog[k], p2));
}

TEST_CASE("decompose_into edge cases") {
    Presentation pres = ex22();
    Ops ops = algebra_ops(pres);
    Rep z = zero_rep(ops);
    Rep s1 = simple_rep(pres, 0);
    std::vector<const Rep*> cat{&s1};
    DecomposeResult d0 = decompose_into(ops, z, cat);
    CHECK(d0.ok);
    CHECK(std::accumulate(d0.counts.begin(), d0.counts.end(), 0) == 0);

    // K[x]/(x^3): J = (x) is isomorphic to A/(x^2)
    Presentation kx3 = Presentation::parse(read_data("kx3.alg"));
    Ops kops = algebra_ops(kx3);
    Rep a = projective_rep(kx3, 0);
    Rep ax2 = quotient(kops, a, radical_power_sub(kops, a, 2)).rep;
    Rep ax1 = quotient(kops, a, radical_power_sub(kops, a, 1)).rep;
    Rep j = materialize(kops, a, radical_sub(kops, a)).rep;
    std::vector<const Rep*> kcat{&a, &ax2, &ax1};
    DecomposeResult dj = decompose_into(kops, j, kcat);
    REQUIRE(dj.ok);
    CHECK(dj.counts == std::vector<int>{0, 1, 0});

    // a stuck remainder carries its dimension
    Presentation da = Presentation::parse(read_data("doublearrow.alg"));
    Ops dops = algebra_ops(da);
    Rep dp1 = projective_rep(da, 0);
    Rep ds1 = simple_rep(da, 0);
    std::vector<const Rep*> dcat{&ds1};
    DecomposeResult dd = decompose_into(dops, dp1, dcat);
    CHECK(!dd.ok);
    CHECK(dd.remainder.total_dim() == dp1.total_dim());
}

TEST_CASE("top and socle") {
    Presentation lp = loop_pres();
    Ops ops = algebra_ops(lp);
    Rep p1 = projective_rep(lp, 0);
    SubRep soc = materialize(ops, p1, socle_sub(ops, p1));
    CHECK(dims_of(soc.rep) == std::vector<int>{1, 1});  // span(alpha^2, beta)

    Rep s1 = simple_rep(lp, 0), s2 = simple_rep(lp, 1);
    Rep semi = direct_sum(ops, {&s1, &s2});
    CHECK(socle_sub(ops, semi).total_dim() == semi.total_dim());
}

TEST_CASE("constructed modules satisfy the relations") {
    Presentation lp = loop_pres();
    for (int v = 0; v < 2; ++v) CHECK_NOTHROW(check_relations(lp, projective_rep(lp, v)));
    // a representation that violates alpha*beta = 0
    Rep bad;
    bad.dims = {1, 1};
    Matrix aact(lp.field(), 1, 1), bact(lp.field(), 1, 1);
    aact.at(0, 0) = 1;
    bact.at(0, 0) = 1;
    bad.act = {aact, bact};
    CHECK_THROWS_AS(check_relations(lp, bad), InvariantViolation);
}

TEST_CASE("module description files") {
    Presentation pres = ex22();
    ModuleFile mf = parse_module_file(pres, read_data("example22.mod"));
    CHECK(mf.locals.size() == 4);
    auto locals = mf.resolve("M");
    CHECK(locals.size() == 4);
    CHECK(locals[0].name == "P(1)");
    CHECK(locals[1].rep.dims == std::vector<int>{1, 1, 0, 1});
    CHECK_THROWS_AS((void)mf.resolve("nope"), ParseError);
    CHECK_THROWS_AS((void)parse_module_file(pres, "local X = P 9\n"), ParseError);
    CHECK_THROWS_AS((void)parse_module_file(pres, "bogus line\n"), ParseError);
}
