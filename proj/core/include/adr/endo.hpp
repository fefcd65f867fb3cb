#pragma once

#include <map>
#include <string>
#include <vector>

#include "adr/adr.hpp"

namespace adr {

// B = End_A(~M) as a based algebra: one primitive idempotent per catalog
// member, a basis refining the Hom-space decomposition with identities split
// off from the local endomorphism rings, and a sparse multiplication table.
// Right B-modules reuse the representation machinery with the radical basis
// elements as operators (a basis element b, as an A-map src -> tgt, acts
// M e_tgt -> M e_src).
class BasicAlgebra {
public:
    struct Elem {
        int src = 0;  // A-map direction between catalog members
        int tgt = 0;
        bool is_id = false;
    };

    PrimeField field;
    std::vector<std::string> labels;
    std::vector<Elem> basis;  // basis[x] = e_x for x < labels.size()
    // table[i][j] = sparse expansion of basis[i] . basis[j] (composition:
    // basis[j] acts first); empty unless src(i) == tgt(j).
    std::vector<std::vector<std::vector<std::pair<int, uint32_t>>>> table;
    Ops ops;                       // edges for the radical basis elements
    std::vector<int> op_to_basis;  // edge -> basis index
    std::vector<int> basis_to_op;  // basis index -> edge or -1
    std::vector<std::vector<std::vector<int>>> pair_elems;  // [src][tgt] -> basis indices

    int idempotents() const { return static_cast<int>(labels.size()); }
    int dim() const { return static_cast<int>(basis.size()); }
    int label_index(const std::string& name) const;

    // sparse product of two basis elements through the table
    const std::vector<std::pair<int, uint32_t>>& product(int i, int j) const { return table[i][j]; }
};

// Builds B with deterministic basis order and exhaustively checks
// associativity of the table. Throws NonSplitEndomorphism if some local
// endomorphism ring has residue dimension > 1 (unreachable for quiver-algebra
// representations, kept as a tripwire).
BasicAlgebra endomorphism_algebra(const AdrModule& adr);

BasicAlgebra opposite_algebra(const BasicAlgebra& b);

// Nilpotency degree of rad B (smallest k with rad^k = 0); throws
// InvariantViolation if powering does not reach zero within dim B steps.
int radical_nilpotency_degree(const BasicAlgebra& b);

// Arrow-count matrix of the Ext-quiver: entry (x, y) counts arrows x -> y,
// i.e. dim of J(x, y) / J^2(x, y).
Matrix ext_quiver(const BasicAlgebra& b);
int ext_quiver_total(const BasicAlgebra& b);

Rep simple_B(const BasicAlgebra& b, int x);
Rep projective_B(const BasicAlgebra& b, int x);

// Spot-check that a representation's operators respect the multiplication
// table (all pairs for small algebras, a seeded sample otherwise).
bool respects_table(const BasicAlgebra& b, const Rep& m);

// Vector-space dual: a right module over b becomes a right module over
// opposite_algebra(b). Basis indices correspond 1:1.
Rep dual_rep(const BasicAlgebra& b, const BasicAlgebra& bop, const Rep& m);

// E(x) = D(B e_x), computed as the dual of the opposite projective.
Rep injective_B(const BasicAlgebra& b, const BasicAlgebra& bop, int x);

struct Resolution {
    int pd = 0;
    std::vector<std::vector<int>> cover_mults;  // multiplicities of P_y per step
};

// Iterated projective covers of syzygies. Throws CapExceeded when the
// resolution does not terminate within cap steps.
Resolution minimal_projective_resolution(const BasicAlgebra& b, Rep m, int cap);

int projective_dimension(const BasicAlgebra& b, Rep m, int cap);

struct GlobalDimension {
    int value = 0;
    std::vector<int> pd_of_simple;  // per idempotent
};
GlobalDimension global_dimension(const BasicAlgebra& b, int cap);

}  // namespace adr
