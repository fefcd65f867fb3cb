#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adr/endo.hpp"

namespace adr {

// A layered partial order on the catalog labels: block k < block l for k < l,
// labels within a block incomparable.
struct OrderSpec {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // per catalog index

    static OrderSpec from_blocks(int n, std::vector<std::vector<int>> blocks);
};

// Order files:  order: {X1, X2} < {X3} < X4
OrderSpec parse_order_file(const std::string& text, const std::vector<std::string>& labels);
OrderSpec adr_order(const StratTable& table, int catalog_size);
OrderSpec length_order(const StratTable& table, int catalog_size);

// nabla(x) inside E(x), built by socle layers keeping only composition factors
// S(j) with j <= x.
struct Costandard {
    Rep nabla;
    Rep quotient;        // E(x) / nabla(x)
    SubSpaces embedding; // nabla as subspaces of E(x)
    Rep injective;       // E(x) itself
};

Costandard costandard(const BasicAlgebra& b, const BasicAlgebra& bop, const OrderSpec& order,
                      int x);

struct QhLabelCert {
    std::string label;
    int nabla_dim = 0;
    int quotient_dim = 0;
    bool injective_quotient = false;       // condition (c)
    bool multiplicities_above = false;     // condition (b)
    std::vector<std::pair<std::string, int>> summands;  // E(y) multiplicities of the quotient
};

struct QhResult {
    bool ok = false;
    std::vector<QhLabelCert> cert;
};

// Definition-level left-strongly quasi-hereditary check for (B, order).
QhResult check_left_strongly_qh(const BasicAlgebra& b, const OrderSpec& order);

struct StrongQhResult {
    bool left = false;
    bool right = false;
    bool strong = false;
    QhResult left_cert;
    QhResult right_cert;
};

StrongQhResult check_strongly_qh(const BasicAlgebra& b, const OrderSpec& order);

struct FoundChain {
    bool found = false;
    Chain chain;
    OrderSpec order;  // induced by the removal sequence (first removed = minimal)
};

// Deterministic backtracking search for a rejective chain of add(~M): removal
// sets enumerated smallest-first, then lexicographically.
FoundChain find_rejective_chain(const AdrModule& adr, int search_bound = 12);

struct Thm2Report {
    int m = 0;
    int n_M = 0;
    bool strongly_qh = false;      // (i) via chain search
    bool chain_rejective = false;  // (ii) the ADR chain
    bool gldim_two = false;        // (iii)
    bool radical_in_add = false;   // (iv)
    bool agree = false;
    int gl = 0;
    std::vector<int> pd_of_simple;
    std::vector<std::pair<std::string, int>> radical_decomposition;  // when (iv) holds
    int radical_stuck_dim = 0;                                       // when (iv) fails
    std::vector<std::string> chain_failures;
    std::vector<std::vector<std::string>> found_order;  // label blocks when (i) holds
};

// The four equivalent conditions for B = End(~A), computed independently.
// Throws LoewyLengthOne when m = 1 and EquivalenceViolation when the four
// booleans disagree.
Thm2Report theorem2_suite(const Presentation& pres, int search_bound = 12);

}  // namespace adr
