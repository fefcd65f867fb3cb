#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "adr/report.hpp"

using namespace adr;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(ADRKIT_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AdrModule regular_adr(const Presentation& pres) {
    std::vector<NamedRep> locals;
    for (int v = 0; v < pres.num_vertices(); ++v)
        locals.push_back({projective_rep(pres, v), "P(" + pres.quiver().vertices[v] + ")"});
    return AdrModule(pres, std::move(locals));
}

std::string star_alg(int n) {
    std::ostringstream out;
    out << "quiver\nvertices:";
    for (int v = 1; v <= n; ++v) out << " " << v;
    out << "\n";
    for (int v = 2; v <= n; ++v) out << "arrow a" << v << ": 1 -> " << v << "\n";
    return out.str();
}

std::vector<NamedRep> star_factors(const Presentation& pres, int n) {
    std::vector<NamedRep> out;
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<LinComb> gens;
        for (int k = 0; k < n - 1; ++k)
            if (mask & (1u << k))
                gens.push_back(parse_path_expr(pres, "a" + std::to_string(k + 2)));
        out.push_back({local_from_generators(pres, 0, gens), "Q" + std::to_string(mask)});
    }
    return out;
}

}  // namespace

TEST_CASE("End of A (+) A/(x) for K[x]/(x^2) has dimension 5") {
    Presentation pres = Presentation::parse(read_data("kx2.alg"));
    AdrModule adr = regular_adr(pres);
    BasicAlgebra b = endomorphism_algebra(adr);
    CHECK(b.dim() == 5);
    CHECK(b.idempotents() == 2);
    int pa = b.label_index("P(1)");
    int ps = b.label_index("S(1)");
    REQUIRE(pa >= 0);
    REQUIRE(ps >= 0);
    CHECK(projective_B(b, pa).total_dim() == 3);
    CHECK(projective_B(b, ps).total_dim() == 2);
    GlobalDimension g = global_dimension(b, 4);
    CHECK(g.value == 2);
}

TEST_CASE("semisimple algebras have semisimple ADR algebras") {
    Presentation pres = Presentation::parse("quiver\nvertices: 1 2 3\n");
    AdrModule adr = regular_adr(pres);
    BasicAlgebra b = endomorphism_algebra(adr);
    CHECK(b.dim() == 3);
    CHECK(radical_nilpotency_degree(b) == 1);
    CHECK(ext_quiver(b).is_zero());
    CHECK(global_dimension(b, 1).value == 0);
}

TEST_CASE("Example 2.2: dim B matches the independent rewriting computation") {
    Presentation pres = Presentation::parse(read_data("example22.alg"));
    ModuleFile mf = parse_module_file(pres, read_data("example22.mod"));
    AdrModule adr(pres, mf.resolve(""));
    BasicAlgebra b = endomorphism_algebra(adr);
    CHECK(adr.size() == 7);
    Presentation bq = Presentation::parse(read_data("example22_B.alg"));
    CHECK(b.dim() == bq.dim());
    CHECK(ext_quiver_total(b) == 8);
    CHECK(bq.num_arrows() == 8);
}

TEST_CASE("the loop example's ADR quiver has five vertices and six arrows") {
    Presentation pres = Presentation::parse(read_data("loop.alg"));
    ModuleFile mf = parse_module_file(pres, read_data("loop.mod"));
    AdrModule adr(pres, mf.resolve(""));
    BasicAlgebra b = endomorphism_algebra(adr);
    CHECK(b.idempotents() == 5);
    CHECK(ext_quiver_total(b) == 6);
}

TEST_CASE("projective dimensions and resolutions") {
    Presentation pres = Presentation::parse(read_data("kx2.alg"));
    AdrModule adr = regular_adr(pres);
    BasicAlgebra b = endomorphism_algebra(adr);
    for (int x = 0; x < b.idempotents(); ++x)
        CHECK(projective_dimension(b, projective_B(b, x), 3) == 0);
    // cap smaller than the projective dimension trips the tripwire
    bool pd2_seen = false;
    for (int x = 0; x < b.idempotents(); ++x)
        if (projective_dimension(b, simple_B(b, x), 3) == 2) {
            pd2_seen = true;
            CHECK_THROWS_AS((void)projective_dimension(b, simple_B(b, x), 1), CapExceeded);
        }
    CHECK(pd2_seen);
}

TEST_CASE("star family global dimensions") {
    // M = all factor modules of P(1): gl B = n - 1 for every n >= 2
    for (int n = 2; n <= 5; ++n) {
        Presentation pres = Presentation::parse(star_alg(n));
        AdrModule adr(pres, star_factors(pres, n));
        StratTable t = stratify(adr);
        BasicAlgebra b = endomorphism_algebra(adr);
        GlobalDimension g = global_dimension(b, t.n_M);
        CHECK(t.n_M == n);
        CHECK(g.value == n - 1);
        CHECK(g.value <= t.n_M);
        if (t.n_M >= 2) CHECK(g.value <= 2 * (t.n_M - 1));
    }
    // M = A: the original ADR algebra has gl B = 2 for every n >= 2
    for (int n = 2; n <= 4; ++n) {
        Presentation pres = Presentation::parse(star_alg(n));
        AdrModule adr = regular_adr(pres);
        StratTable t = stratify(adr);
        BasicAlgebra b = endomorphism_algebra(adr);
        CHECK(global_dimension(b, t.n_M).value == 2);
    }
}

TEST_CASE("opposite algebra") {
    Presentation pres = Presentation::parse(read_data("example22.alg"));
    ModuleFile mf = parse_module_file(pres, read_data("example22.mod"));
    AdrModule adr(pres, mf.resolve(""));
    BasicAlgebra b = endomorphism_algebra(adr);
    BasicAlgebra bop = opposite_algebra(b);
    BasicAlgebra bopop = opposite_algebra(bop);
    CHECK(bopop.table == b.table);
    CHECK(ext_quiver(bop) == ext_quiver(b).transpose());
    StratTable t = stratify(adr);
    CHECK(global_dimension(b, t.n_M).value == global_dimension(bop, t.n_M).value);
}

TEST_CASE("duality") {
    Presentation pres = Presentation::parse(read_data("kx3.alg"));
    AdrModule adr = regular_adr(pres);
    BasicAlgebra b = endomorphism_algebra(adr);
    BasicAlgebra bop = opposite_algebra(b);
    for (int x = 0; x < b.idempotents(); ++x) {
        Rep s = simple_B(b, x);
        Rep ds = dual_rep(b, bop, s);
        CHECK(ds.total_dim() == 1);
        CHECK(is_isomorphic(bop.ops, ds, simple_B(bop, x)));
        Rep dds = dual_rep(bop, b, ds);
        CHECK(is_isomorphic(b.ops, dds, s));
        Rep p = projective_B(b, x);
        CHECK(dual_rep(b, bop, p).total_dim() == p.total_dim());
        Rep dd = dual_rep(bop, b, dual_rep(b, bop, p));
        CHECK(is_isomorphic(b.ops, dd, p));
        // soc E(x) = S_x
        Rep e = injective_B(b, bop, x);
        SubRep soc = materialize(b.ops, e, socle_sub(b.ops, e));
        CHECK(is_isomorphic(b.ops, soc.rep, s));
    }
}

TEST_CASE("projectives respect the multiplication table") {
    Presentation pres = Presentation::parse(read_data("loop.alg"));
    ModuleFile mf = parse_module_file(pres, read_data("loop.mod"));
    AdrModule adr(pres, mf.resolve(""));
    BasicAlgebra b = endomorphism_algebra(adr);
    for (int x = 0; x < b.idempotents(); ++x) {
        CHECK(respects_table(b, projective_B(b, x)));
        CHECK(respects_table(b, simple_B(b, x)));
    }
    CHECK(radical_nilpotency_degree(b) <= b.dim());
}

TEST_CASE("the pd-2 witness accompanies every gl B = 2 instance") {
    for (const char* file : {"kx2.alg", "kx3.alg", "kx4.alg", "example22.alg"}) {
        Presentation pres = Presentation::parse(read_data(file));
        AdrModule adr = regular_adr(pres);
        StratTable t = stratify(adr);
        BasicAlgebra b = endomorphism_algebra(adr);
        GlobalDimension g = global_dimension(b, t.n_M);
        REQUIRE(g.value == 2);
        // Hom(~A, S)/J(~A, S) is the simple at the catalog class of S; for some
        // simple A-module S it has projective dimension exactly two
        bool witness = false;
        for (int v = 0; v < pres.num_vertices(); ++v) {
            int cls = adr.class_of(simple_rep(pres, v));
            REQUIRE(cls >= 0);
            if (g.pd_of_simple[cls] == 2) witness = true;
        }
        CHECK(witness);
    }
}

TEST_CASE("Hom-dimension table rows give projective dimensions") {
    Presentation pres = Presentation::parse(read_data("example22.alg"));
    ModuleFile mf = parse_module_file(pres, read_data("example22.mod"));
    AdrModule adr(pres, mf.resolve(""));
    BasicAlgebra b = endomorphism_algebra(adr);
    for (int x = 0; x < b.idempotents(); ++x) {
        int row = 0;
        for (int y = 0; y < b.idempotents(); ++y) row += adr.hom(y, x).dim();
        CHECK(projective_B(b, x).total_dim() == row);
        CHECK(simple_B(b, x).total_dim() == 1);
    }
}

TEST_CASE("algebra dump is well formed JSON") {
    Presentation pres = Presentation::parse(read_data("kx2.alg"));
    AdrModule adr = regular_adr(pres);
    BasicAlgebra b = endomorphism_algebra(adr);
    Json j = dump_basic_algebra(b);
    CHECK(j["dim"] == 5);
    CHECK(j["idempotents"].size() == 2);
    Json reparsed = Json::parse(j.dump());
    CHECK(reparsed == j);
}
