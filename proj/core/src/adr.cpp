#include "adr/adr.hpp"

#include <algorithm>

#include "adr/errors.hpp"

namespace adr {

namespace {

// Materialize a coordinate vector (relative to a cached hom basis) as a map.
MapTo map_from_coords(const Ops& ops, const Rep& x, const Rep& y, const HomSpace& hom,
                      const std::vector<uint32_t>& coords) {
    MapTo f = zero_map(ops, x, y);
    for (size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k]) continue;
        for (size_t s = 0; s < f.f.size(); ++s)
            f.f[s] = f.f[s].add(hom.basis[k].f[s].scale(coords[k]));
    }
    return f;
}

}  // namespace

AdrModule::AdrModule(const Presentation& pres, std::vector<NamedRep> locals)
    : pres_(&pres), ops_(algebra_ops(pres)), inputs_(std::move(locals)) {
    if (inputs_.empty()) throw EmptyInput("a semilocal module needs at least one local summand");
    for (const NamedRep& x : inputs_) {
        check_relations(pres, x.rep);
        if (!is_local(ops_, x.rep))
            throw NotLocal("input summand '" + x.name + "' does not have a simple top");
    }
    struct Entry {
        int ll;
        int input;
        std::string name;
        Rep rep;
    };
    std::vector<Entry> entries;
    m_ = 0;
    for (size_t t = 0; t < inputs_.size(); ++t) {
        int llt = loewy_length(ops_, inputs_[t].rep);
        m_ = std::max(m_, llt);
        for (int k = llt; k >= 1; --k) {
            Rep q = quotient(ops_, inputs_[t].rep, radical_power_sub(ops_, inputs_[t].rep, k)).rep;
            std::string nm;
            if (k == llt) {
                nm = inputs_[t].name;
            } else if (k == 1) {
                LocalTop tp = local_top(ops_, q);
                nm = "S(" + pres.quiver().vertices[tp.slot] + ")";
            } else {
                nm = inputs_[t].name + "/" + inputs_[t].name + "J^" + std::to_string(k);
            }
            entries.push_back({k, static_cast<int>(t), nm, std::move(q)});
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.ll != b.ll) return a.ll > b.ll;
        return a.input < b.input;
    });
    for (Entry& e : entries) {
        bool dup = false;
        for (const NamedRep& kept : catalog_)
            if (is_isomorphic(ops_, kept.rep, e.rep)) {
                dup = true;
                break;
            }
        if (dup) continue;
        catalog_.push_back({std::move(e.rep), e.name});
        cat_ll_.push_back(e.ll);
    }
}

const HomSpace& AdrModule::hom(int x, int y) const {
    auto key = std::make_pair(x, y);
    auto it = hom_cache_.find(key);
    if (it == hom_cache_.end())
        it = hom_cache_.emplace(key, hom_space(ops_, catalog_[x].rep, catalog_[y].rep)).first;
    return it->second;
}

const LocalTop& AdrModule::top_data(int x) const {
    auto it = top_cache_.find(x);
    if (it == top_cache_.end()) it = top_cache_.emplace(x, local_top(ops_, catalog_[x].rep)).first;
    return it->second;
}

const Matrix& AdrModule::radical_coords(int x, int y) const {
    auto key = std::make_pair(x, y);
    auto it = rad_cache_.find(key);
    if (it != rad_cache_.end()) return it->second;
    const HomSpace& h = hom(x, y);
    Matrix coords;
    if (x != y) {
        // distinct catalog members are pairwise non-isomorphic: J = Hom
        coords = Matrix::identity(ops_.field, h.dim());
    } else {
        // kernel of the induced top scalar
        Matrix lam(ops_.field, 1, h.dim());
        const LocalTop& t = top_data(x);
        for (int k = 0; k < h.dim(); ++k)
            lam.at(0, k) = top_scalar(ops_, catalog_[x].rep, t, catalog_[x].rep, t, h.basis[k]);
        coords = kernel_basis(lam);
    }
    return rad_cache_.emplace(key, std::move(coords)).first->second;
}

int AdrModule::quotient_class(int x, int l) const {
    if (l <= 0) return -1;
    if (l >= ll(x)) return x;
    auto key = std::make_pair(x, l);
    auto it = quot_cache_.find(key);
    if (it != quot_cache_.end()) return it->second;
    Rep q = quotient(ops_, catalog_[x].rep, radical_power_sub(ops_, catalog_[x].rep, l)).rep;
    int c = class_of(q);
    if (c < 0)
        throw InvariantViolation("radical-power quotient of a catalog member escaped the catalog");
    quot_cache_[key] = c;
    return c;
}

MapTo AdrModule::canonical_surjection(int x, int l) const {
    auto key = std::make_pair(x, l);
    auto it = surj_cache_.find(key);
    if (it != surj_cache_.end()) return it->second;
    QuotientRep q = quotient(ops_, catalog_[x].rep, radical_power_sub(ops_, catalog_[x].rep, l));
    int c = quotient_class(x, l);
    MapTo result;
    bool found = false;
    for (const MapTo& f : hom_basis(ops_, q.rep, catalog_[c].rep)) {
        if (map_invertible(q.rep, catalog_[c].rep, f)) {
            result = compose(f, q.proj);
            found = true;
            break;
        }
    }
    if (!found) throw InvariantViolation("no isomorphism onto the catalog representative");
    surj_cache_[key] = result;
    return result;
}

int AdrModule::class_of(const Rep& r) const {
    for (int i = 0; i < size(); ++i)
        if (is_isomorphic(ops_, catalog_[i].rep, r)) return i;
    return -1;
}

bool has_surjective_radical_hom(const AdrModule& adr, int x, int n) {
    if (x == n) return false;  // a surjective radical endomorphism would be an isomorphism
    const Ops& ops = adr.ops();
    const HomSpace& h = adr.hom(x, n);
    if (h.dim() == 0) return false;
    // subspace of maps landing in nJ
    SubRep nj = materialize(ops, adr.member(n), radical_sub(ops, adr.member(n)));
    std::vector<std::vector<uint32_t>> cols;
    for (const MapTo& g : hom_basis(ops, adr.member(x), nj.rep)) {
        MapTo into = compose(nj.incl, g);
        auto c = h.coords(adr.member(x), adr.member(n), into);
        if (!c) throw InvariantViolation("map through nJ is not in Hom(x, n)");
        cols.push_back(std::move(*c));
    }
    Matrix sub_img = Matrix::from_cols(ops.field, h.dim(), cols);
    const Matrix& rad = adr.radical_coords(x, n);
    int r0 = rank(sub_img);
    int r1 = rank(Matrix::hstack(sub_img, rad));
    return r1 > r0;
}

StratTable stratify(const AdrModule& adr) {
    StratTable t;
    t.strata.assign(adr.m(), {});
    for (int c = 0; c < adr.size(); ++c) t.strata[adr.m() - adr.ll(c)].push_back(c);
    t.n.assign(adr.m(), 0);
    for (int i = 0; i < adr.m(); ++i) {
        std::vector<int> remaining = t.strata[i];
        int j = 0;
        while (!remaining.empty()) {
            ++j;
            std::vector<int> layer, rest;
            for (int x : remaining) {
                bool quiet = true;
                for (int n : remaining)
                    if (has_surjective_radical_hom(adr, x, n)) {
                        quiet = false;
                        break;
                    }
                (quiet ? layer : rest).push_back(x);
            }
            if (layer.empty())
                throw NonTerminatingLayer("stratum " + std::to_string(i) +
                                          " produced an empty layer");
            t.layers.push_back({i, j, layer});
            remaining = std::move(rest);
        }
        t.n[i] = j;
    }
    for (int ni : t.n) t.n_M += ni;
    return t;
}

Chain build_chain(const AdrModule& adr, const StratTable& table) {
    Chain ch;
    std::vector<int> cur(adr.size());
    for (int i = 0; i < adr.size(); ++i) cur[i] = i;
    ch.levels.push_back(cur);
    for (const Layer& layer : table.layers) {
        std::vector<int> next;
        for (int c : cur)
            if (std::find(layer.members.begin(), layer.members.end(), c) == layer.members.end())
                next.push_back(c);
        ch.removed.push_back(layer.members);
        ch.levels.push_back(next);
        cur = std::move(next);
    }
    if (!ch.levels.back().empty())
        throw InvariantViolation("stratification layers do not partition the catalog");
    return ch;
}

namespace {

// Columns of the composition map Hom(target_k, z) -> Hom(x, z), g |-> g . phi_k,
// expressed in the cached hom(x, z) coordinates.
Matrix composition_columns(const AdrModule& adr, int x, int z,
                           const std::vector<std::pair<int, MapTo>>& comps) {
    const Ops& ops = adr.ops();
    const HomSpace& hxz = adr.hom(x, z);
    std::vector<std::vector<uint32_t>> cols;
    for (const auto& [w, phi] : comps) {
        const HomSpace& hwz = adr.hom(w, z);
        for (const MapTo& g : hwz.basis) {
            MapTo comp = compose(g, phi);
            auto c = hxz.coords(adr.member(x), adr.member(z), comp);
            if (!c) throw InvariantViolation("composite is not a module map");
            cols.push_back(std::move(*c));
        }
    }
    return Matrix::from_cols(ops.field, hxz.dim(), cols);
}

std::string candidate_string(const AdrModule& adr, int x,
                             const std::vector<std::pair<int, MapTo>>& comps) {
    if (comps.empty()) return adr.name(x) + " -> 0";
    std::string s = adr.name(x) + " -> ";
    for (size_t k = 0; k < comps.size(); ++k) {
        if (k) s += " (+) ";
        s += adr.name(comps[k].first);
    }
    return s;
}

// Canonical epic candidate: x ->> x/xJ^l for the largest l < ll(x) whose class
// stays in `sub`; empty when no proper radical-power quotient survives.
std::vector<std::pair<int, MapTo>> canonical_candidate(const AdrModule& adr, int x,
                                                       const std::vector<int>& sub) {
    for (int l = adr.ll(x) - 1; l >= 1; --l) {
        int c = adr.quotient_class(x, l);
        if (std::find(sub.begin(), sub.end(), c) != sub.end())
            return {{c, adr.canonical_surjection(x, l)}};
    }
    return {};
}

bool criterion_at(const AdrModule& adr, int x, int z,
                  const std::vector<std::pair<int, MapTo>>& comps, std::string* fail) {
    Matrix m = composition_columns(adr, x, z, comps);
    const Matrix& rad = adr.radical_coords(x, z);
    int rm = rank(m);
    if (rm != m.cols()) {
        if (fail) *fail = "composition with Hom(-, " + adr.name(z) + ") is not injective";
        return false;
    }
    if (rm != rad.cols() || rank(Matrix::hstack(rad, m)) != rad.cols()) {
        if (fail)
            *fail = "image in Hom(" + adr.name(x) + ", " + adr.name(z) + ") is not J (dim " +
                    std::to_string(rm) + " vs " + std::to_string(rad.cols()) + ")";
        return false;
    }
    return true;
}

}  // namespace

bool left_criterion(const AdrModule& adr, int x, const Rep& y, const MapTo& phi,
                    const std::vector<int>& ambient, std::vector<std::string>* failures) {
    // Wrap the explicit (y, phi) into component form via the catalog class of y.
    // Only used by tests / standalone checks; chain verifiers use components.
    int c = adr.class_of(y);
    std::vector<std::pair<int, MapTo>> comps;
    if (c >= 0 && !y.is_zero()) {
        // re-express phi through the catalog representative
        for (const MapTo& f : hom_basis(adr.ops(), y, adr.member(c)))
            if (map_invertible(y, adr.member(c), f)) {
                comps.push_back({c, compose(f, phi)});
                break;
            }
    }
    bool ok = true;
    for (int z : ambient) {
        std::string fail;
        if (!criterion_at(adr, x, z, comps, &fail)) {
            ok = false;
            if (failures) failures->push_back(fail);
        }
    }
    return ok;
}

LeftApprox minimal_left_approximation(const AdrModule& adr, int x, const std::vector<int>& sub) {
    const Ops& ops = adr.ops();
    LeftApprox out;
    out.mults.assign(adr.size(), 0);
    std::vector<std::pair<int, MapTo>> comps;
    for (int w : sub) {
        const HomSpace& hxw = adr.hom(x, w);
        if (hxw.dim() == 0) continue;
        // R(x, w): maps factoring through a radical map inside add(sub)
        std::vector<std::vector<uint32_t>> rcols;
        for (int wp : sub) {
            const HomSpace& hxwp = adr.hom(x, wp);
            if (hxwp.dim() == 0) continue;
            const Matrix& radcoords = adr.radical_coords(wp, w);
            const HomSpace& hwpw = adr.hom(wp, w);
            for (int jc = 0; jc < radcoords.cols(); ++jc) {
                MapTo g = map_from_coords(ops, adr.member(wp), adr.member(w), hwpw,
                                          radcoords.col(jc));
                for (const MapTo& h : hxwp.basis) {
                    MapTo comp = compose(g, h);
                    auto cc = hxw.coords(adr.member(x), adr.member(w), comp);
                    if (!cc) throw InvariantViolation("radical composite escaped Hom");
                    rcols.push_back(std::move(*cc));
                }
            }
        }
        ColSpace R = col_echelon(Matrix::from_cols(ops.field, hxw.dim(), rcols));
        std::vector<bool> piv(hxw.dim(), false);
        for (int r : R.pivot_rows) piv[r] = true;
        for (int r = 0; r < hxw.dim(); ++r) {
            if (piv[r]) continue;
            comps.push_back({w, hxw.basis[r]});
            ++out.mults[w];
        }
    }
    // assemble target and stacked map (used by callers needing the literal map)
    std::vector<const Rep*> parts;
    for (const auto& [w, f] : comps) parts.push_back(&adr.member(w));
    out.target = direct_sum(ops, parts);
    out.phi = zero_map(ops, adr.member(x), out.target);
    std::vector<int> offset(ops.slots, 0);
    for (const auto& [w, f] : comps) {
        for (int s = 0; s < ops.slots; ++s) {
            for (int r = 0; r < adr.member(w).dims[s]; ++r)
                for (int c = 0; c < adr.member(x).dims[s]; ++c)
                    out.phi.f[s].at(offset[s] + r, c) = f.f[s].at(r, c);
            offset[s] += adr.member(w).dims[s];
        }
    }
    out.components = std::move(comps);
    return out;
}

std::string LeftApprox::describe(const AdrModule& adr, const std::vector<int>& sub) const {
    (void)sub;
    std::string s;
    for (int w = 0; w < adr.size(); ++w) {
        if (!mults[w]) continue;
        if (!s.empty()) s += " (+) ";
        s += adr.name(w);
        if (mults[w] > 1) s += "^" + std::to_string(mults[w]);
    }
    return s.empty() ? "0" : s;
}

bool verify_right_rejective_step(const AdrModule& adr, int x, const std::vector<int>& sub,
                                 const std::vector<int>& ambient,
                                 std::vector<std::string>* failures) {
    const Ops& ops = adr.ops();
    SubRep xj = materialize(ops, adr.member(x), radical_sub(ops, adr.member(x)));
    std::vector<const Rep*> cat;
    for (int w : sub) cat.push_back(&adr.member(w));
    DecomposeResult dec = decompose_into(ops, xj.rep, cat);
    bool ok = true;
    if (!dec.ok) {
        ok = false;
        if (failures)
            failures->push_back(adr.name(x) + "J does not lie in add of the subcategory (stuck remainder of dimension " +
                                std::to_string(dec.remainder.total_dim()) + ")");
    }
    for (int w : ambient) {
        const HomSpace& hwx = adr.hom(w, x);
        std::vector<std::vector<uint32_t>> cols;
        for (const MapTo& g : hom_basis(ops, adr.member(w), xj.rep)) {
            MapTo comp = compose(xj.incl, g);
            auto c = hwx.coords(adr.member(w), adr.member(x), comp);
            if (!c) throw InvariantViolation("map through xJ escaped Hom");
            cols.push_back(std::move(*c));
        }
        Matrix m = Matrix::from_cols(ops.field, hwx.dim(), cols);
        const Matrix& rad = adr.radical_coords(w, x);
        int rm = rank(m);
        bool good = rm == m.cols() && rm == rad.cols() &&
                    rank(Matrix::hstack(rad, m)) == rad.cols();
        if (!good) {
            ok = false;
            if (failures)
                failures->push_back("Hom(" + adr.name(w) + ", " + adr.name(x) +
                                    "J) does not match J(" + adr.name(w) + ", " + adr.name(x) + ")");
        }
    }
    return ok;
}

ChainReport verify_total_left_rejective_chain(const AdrModule& adr, Chain& chain) {
    ChainReport rep;
    for (size_t k = 0; k + 1 < chain.levels.size(); ++k) {
        const std::vector<int>& prev = chain.levels[k];
        const std::vector<int>& cur = chain.levels[k + 1];
        const std::vector<int>& removed_now = chain.removed[k];
        StepReport sr;
        sr.step = static_cast<int>(k + 1);
        for (int r : removed_now) sr.removed.push_back(adr.name(r));
        // every object already outside cur needs an epic left approximation into cur
        std::vector<int> outside;
        for (int c = 0; c < adr.size(); ++c)
            if (std::find(cur.begin(), cur.end(), c) == cur.end()) outside.push_back(c);
        for (int x : outside) {
            ObjectCheck oc;
            oc.object = adr.name(x);
            auto comps = canonical_candidate(adr, x, cur);
            oc.candidate = candidate_string(adr, x, comps);
            // (a) epic + left approximation property against the remaining level
            for (const auto& [c, phi] : comps)
                if (!is_surjective(adr.member(c), phi)) {
                    oc.approximation_ok = false;
                    oc.failures.push_back("candidate is not epic");
                }
            for (int z : cur) {
                Matrix m = composition_columns(adr, x, z, comps);
                if (rank(m) != adr.hom(x, z).dim()) {
                    oc.approximation_ok = false;
                    oc.failures.push_back("Hom(-, " + adr.name(z) + ") does not extend along the candidate");
                }
            }
            // (b) cosemisimplicity relative to the previous level, for the
            // objects removed at this step
            if (std::find(removed_now.begin(), removed_now.end(), x) != removed_now.end()) {
                for (int z : prev) {
                    std::string fail;
                    if (!criterion_at(adr, x, z, comps, &fail)) {
                        oc.cosemisimple_ok = false;
                        oc.failures.push_back(fail);
                    }
                }
            }
            sr.ok = sr.ok && oc.approximation_ok && oc.cosemisimple_ok;
            sr.checks.push_back(std::move(oc));
        }
        rep.ok = rep.ok && sr.ok;
        rep.steps.push_back(std::move(sr));
    }
    chain.flag_total_left = rep.ok;
    return rep;
}

ChainReport verify_rejective_chain(const AdrModule& adr, Chain& chain) {
    ChainReport rep;
    bool right_all = true;
    for (size_t k = 0; k + 1 < chain.levels.size(); ++k) {
        const std::vector<int>& prev = chain.levels[k];
        const std::vector<int>& cur = chain.levels[k + 1];
        StepReport sr;
        sr.step = static_cast<int>(k + 1);
        for (int r : chain.removed[k]) sr.removed.push_back(adr.name(r));
        for (int x : chain.removed[k]) {
            ObjectCheck oc;
            oc.object = adr.name(x);
            LeftApprox la = minimal_left_approximation(adr, x, cur);
            oc.candidate = adr.name(x) + " -> " + la.describe(adr, cur);
            for (int z : prev) {
                std::string fail;
                if (!criterion_at(adr, x, z, la.components, &fail)) {
                    oc.approximation_ok = false;
                    oc.failures.push_back("left: " + fail);
                }
            }
            std::vector<std::string> rfails;
            if (!verify_right_rejective_step(adr, x, cur, prev, &rfails)) {
                oc.cosemisimple_ok = false;
                right_all = false;
                for (std::string& f : rfails) oc.failures.push_back("right: " + f);
            }
            sr.ok = sr.ok && oc.approximation_ok && oc.cosemisimple_ok;
            sr.checks.push_back(std::move(oc));
        }
        rep.ok = rep.ok && sr.ok;
        rep.steps.push_back(std::move(sr));
    }
    chain.flag_rejective = rep.ok;
    chain.flag_right = right_all;
    return rep;
}

bool verify_left_approximation(const AdrModule& adr, const Rep& x, const std::vector<int>& sub,
                               const MapTo& f, const Rep& y) {
    const Ops& ops = adr.ops();
    if (sub.empty()) return x.is_zero();
    if (!is_module_map(ops, x, y, f)) return false;
    std::vector<const Rep*> cat;
    for (int w : sub) cat.push_back(&adr.member(w));
    if (!y.is_zero() && !decompose_into(ops, y, cat).ok) return false;
    if (!is_surjective(y, f)) return false;
    for (int z : sub) {
        HomSpace hxz = hom_space(ops, x, adr.member(z));
        std::vector<std::vector<uint32_t>> cols;
        for (const MapTo& g : hom_basis(ops, y, adr.member(z))) {
            auto c = hxz.coords(x, adr.member(z), compose(g, f));
            if (!c) return false;
            cols.push_back(std::move(*c));
        }
        if (rank(Matrix::from_cols(ops.field, hxz.dim(), cols)) != hxz.dim()) return false;
    }
    return true;
}

}  // namespace adr
