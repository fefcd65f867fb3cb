#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adr/matrix.hpp"

namespace adr {

struct Arrow {
    std::string label;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;  // -1 if absent
    int arrow_index(const std::string& label) const;
};

// A path in the quiver: a composable arrow word, or a trivial path e_v
// (empty word anchored at v). Arrows compose left to right.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
};

// Length-lexicographic order with arrow order = declaration order; trivial
// paths ordered by vertex. This is the monomial order of the rewriting system.
struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.src < b.src;
    }
};

inline bool path_eq(const Path& a, const Path& b) {
    return a.src == b.src && a.arrows == b.arrows;
}

// F_p-linear combination of paths; zero coefficients never stored.
using LinComb = std::map<Path, uint32_t, PathLess>;

struct Rule {
    Path lead;
    LinComb tail;  // lead rewrites to tail; every tail term < lead
};

struct PresentationOptions {
    PrimeField field;
    int cap = 64;               // irreducible paths of this length => not admissible
    size_t max_dim = 100000;    // safety bound on |basis|
};

// A = KQ/I given by a quiver with admissible relations, together with a
// confluent rewriting system and the induced monomial basis.
class Presentation {
public:
    static Presentation parse(const std::string& text, PresentationOptions opt = {});

    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return opt_.field; }
    int cap() const { return opt_.cap; }

    int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
    int num_arrows() const { return static_cast<int>(quiver_.arrows.size()); }

    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<LinComb>& relations() const { return relations_; }
    const std::vector<Path>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int basis_index(const Path& p) const;  // -1 when p is not a basis path

    // Smallest m with J(A)^m = 0.
    int loewy_length() const { return loewy_length_; }

    LinComb normal_form(const LinComb& element) const;
    LinComb normal_form(const Path& p) const;

    // Concatenation p * a as an element of A (normal form of the word).
    LinComb right_multiply_arrow(const Path& p, int arrow) const;

    // Re-checks every overlap ambiguity of the completed system.
    bool confluent() const;

    std::vector<int> arrows_from(int vertex) const;
    std::string path_string(const Path& p) const;

private:
    Quiver quiver_;
    PresentationOptions opt_;
    std::vector<LinComb> relations_;
    std::vector<Rule> rules_;
    std::vector<Path> basis_;
    std::map<Path, int, PathLess> basis_index_;
    int loewy_length_ = 1;

    void complete();
    void enumerate_basis();
    LinComb reduce(LinComb c) const;
    friend class PresentationBuilder;
};

// Parses "term (('+'|'-') term)*" path expressions (the same syntax as
// relation right-hand sides) against a presentation's quiver; used by the
// module description files.
LinComb parse_path_expr(const Presentation& pres, const std::string& text);

}  // namespace adr
