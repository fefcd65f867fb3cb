#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adr/module.hpp"

namespace adr {

// The basic module of (+)_{i=1..m} M/MJ^i for a semilocal M = (+) of locals:
// a deduplicated catalog of local modules ordered by descending Loewy length,
// then input order.
class AdrModule {
public:
    AdrModule(const Presentation& pres, std::vector<NamedRep> locals);

    const Presentation& pres() const { return *pres_; }
    const Ops& ops() const { return ops_; }
    int m() const { return m_; }

    const std::vector<NamedRep>& inputs() const { return inputs_; }
    const std::vector<NamedRep>& catalog() const { return catalog_; }
    int size() const { return static_cast<int>(catalog_.size()); }
    const Rep& member(int i) const { return catalog_[i].rep; }
    const std::string& name(int i) const { return catalog_[i].name; }
    int ll(int i) const { return cat_ll_[i]; }

    const HomSpace& hom(int x, int y) const;           // cached Hom(x, y)
    const LocalTop& top_data(int x) const;
    // radical subspace J(x, y) in hom-basis coordinates (column vectors)
    const Matrix& radical_coords(int x, int y) const;

    // catalog index of x/xJ^l (1 <= l <= ll(x)); -1 for l == 0 (zero module)
    int quotient_class(int x, int l) const;
    // the canonical surjection member(x) ->> member(quotient_class(x, l)),
    // i.e. radical-power quotient followed by a fixed isomorphism
    MapTo canonical_surjection(int x, int l) const;

    int class_of(const Rep& r) const;  // -1 if not isomorphic to a member

private:
    const Presentation* pres_;
    Ops ops_;
    std::vector<NamedRep> inputs_;
    std::vector<NamedRep> catalog_;
    std::vector<int> cat_ll_;
    int m_ = 0;

    mutable std::map<std::pair<int, int>, HomSpace> hom_cache_;
    mutable std::map<int, LocalTop> top_cache_;
    mutable std::map<std::pair<int, int>, Matrix> rad_cache_;
    mutable std::map<std::pair<int, int>, int> quot_cache_;
    mutable std::map<std::pair<int, int>, MapTo> surj_cache_;
};

// True iff some radical map x -> n is surjective; x, n local.
bool has_surjective_radical_hom(const AdrModule& adr, int x, int n);

struct Layer {
    int i = 0;  // Loewy stratum: ll = m - i
    int j = 0;  // 1-based position within the stratum
    std::vector<int> members;
};

struct StratTable {
    std::vector<std::vector<int>> strata;  // F_i by i
    std::vector<Layer> layers;             // ADR order: (0,1), (0,2), ..., (m-1, n_{m-1})
    std::vector<int> n;                    // n_i
    int n_M = 0;
};

StratTable stratify(const AdrModule& adr);

struct Chain {
    std::vector<std::vector<int>> levels;   // levels[0] = full catalog, ..., back() = {}
    std::vector<std::vector<int>> removed;  // removed[k] = levels[k] \ levels[k+1]
    int length() const { return static_cast<int>(removed.size()); }
    bool flag_total_left = false;
    bool flag_right = false;
    bool flag_rejective = false;
};

Chain build_chain(const AdrModule& adr, const StratTable& table);

struct ObjectCheck {
    std::string object;
    std::string candidate;
    bool approximation_ok = true;
    bool cosemisimple_ok = true;
    std::vector<std::string> failures;  // witness descriptions
};

struct StepReport {
    int step = 0;
    std::vector<std::string> removed;
    std::vector<ObjectCheck> checks;
    bool ok = true;
};

struct ChainReport {
    bool ok = true;
    std::vector<StepReport> steps;
};

// Definition-level verification of the A-total left rejective chain: per step,
// canonical epic candidates checked as left approximations against the tail of
// the chain, plus the cosemisimplicity isomorphism criterion relative to the
// previous level.
ChainReport verify_total_left_rejective_chain(const AdrModule& adr, Chain& chain);

// Rejective chain: both one-sided criteria at every step, relative to the
// previous level.
ChainReport verify_rejective_chain(const AdrModule& adr, Chain& chain);

// Standalone operation: is f an epic left approximation of x into add(sub)?
bool verify_left_approximation(const AdrModule& adr, const Rep& x, const std::vector<int>& sub,
                               const MapTo& f, const Rep& y);

// Right-rejective step data for one object: xJ must split into add(sub) and
// composing with the inclusion xJ -> x must identify Hom(w, xJ) with J(w, x)
// for every w in the ambient set.
bool verify_right_rejective_step(const AdrModule& adr, int x, const std::vector<int>& sub,
                                 const std::vector<int>& ambient,
                                 std::vector<std::string>* failures = nullptr);

// Minimal left add(sub)-approximation of catalog member x: multiplicities are
// the dimensions of the top of the restricted Hom functor.
struct LeftApprox {
    Rep target;
    MapTo phi;
    std::vector<int> mults;                           // per catalog index
    std::vector<std::pair<int, MapTo>> components;    // (catalog member, x -> member)
    std::string describe(const AdrModule& adr, const std::vector<int>& sub) const;
};

LeftApprox minimal_left_approximation(const AdrModule& adr, int x, const std::vector<int>& sub);

// The cosemisimple-left-rejective criterion with candidate phi: composition
// with phi must be an isomorphism Hom(Y, z) -> J(x, z) for every z in ambient.
bool left_criterion(const AdrModule& adr, int x, const Rep& y, const MapTo& phi,
                    const std::vector<int>& ambient, std::vector<std::string>* failures = nullptr);

}  // namespace adr
