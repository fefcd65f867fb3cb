#include "adr/endo.hpp"

#include <algorithm>

#include "adr/errors.hpp"

namespace adr {

int BasicAlgebra::label_index(const std::string& name) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct PairData {
    std::vector<MapTo> maps;  // basis of Hom_A(s, t); for s == t, maps[0] = id
    CoordSolver solver;
    Matrix flat;
};

MapTo identity_map(const Ops& ops, const Rep& x) {
    MapTo f;
    for (int s = 0; s < ops.slots; ++s) f.f.push_back(Matrix::identity(ops.field, x.dims[s]));
    return f;
}

}  // namespace

BasicAlgebra endomorphism_algebra(const AdrModule& adr) {
    const Ops& aops = adr.ops();
    const PrimeField F = aops.field;
    int nf = adr.size();
    if (nf == 0) throw EmptyInput("empty catalog");

    BasicAlgebra b;
    b.field = F;
    for (int i = 0; i < nf; ++i) b.labels.push_back(adr.name(i));

    // pair bases: identity-first for the diagonal, cached hom bases elsewhere
    std::vector<std::vector<PairData>> pairs(nf, std::vector<PairData>(nf));
    for (int s = 0; s < nf; ++s) {
        for (int t = 0; t < nf; ++t) {
            PairData pd;
            if (s == t) {
                const HomSpace& h = adr.hom(s, s);
                const Matrix& radc = adr.radical_coords(s, s);
                if (h.dim() != radc.cols() + 1)
                    throw NonSplitEndomorphism("End(" + adr.name(s) +
                                               ") has residue dimension > 1");
                pd.maps.push_back(identity_map(aops, adr.member(s)));
                for (int j = 0; j < radc.cols(); ++j) {
                    MapTo f = zero_map(aops, adr.member(s), adr.member(s));
                    for (int k = 0; k < h.dim(); ++k) {
                        uint32_t c = radc.at(k, j);
                        if (!c) continue;
                        for (size_t sl = 0; sl < f.f.size(); ++sl)
                            f.f[sl] = f.f[sl].add(h.basis[k].f[sl].scale(c));
                    }
                    pd.maps.push_back(std::move(f));
                }
            } else {
                pd.maps = adr.hom(s, t).basis;
            }
            std::vector<std::vector<uint32_t>> cols;
            for (const MapTo& f : pd.maps)
                cols.push_back(flatten_map(adr.member(s), adr.member(t), f));
            pd.flat = Matrix::from_cols(F, hom_flat_dim(adr.member(s), adr.member(t)), cols);
            pd.solver = make_coord_solver(pd.flat);
            pairs[s][t] = std::move(pd);
        }
    }

    // basis order: the idempotents, then pair bases by (src, tgt)
    b.pair_elems.assign(nf, std::vector<std::vector<int>>(nf));
    std::vector<std::pair<std::pair<int, int>, int>> at;  // (pair, index within pair)
    for (int i = 0; i < nf; ++i) {
        b.basis.push_back({i, i, true});
        b.pair_elems[i][i].push_back(i);
        at.push_back({{i, i}, 0});
    }
    for (int s = 0; s < nf; ++s)
        for (int t = 0; t < nf; ++t)
            for (size_t k = (s == t ? 1 : 0); k < pairs[s][t].maps.size(); ++k) {
                b.pair_elems[s][t].push_back(static_cast<int>(b.basis.size()));
                at.push_back({{s, t}, static_cast<int>(k)});
                b.basis.push_back({s, t, false});
            }

    int dim = b.dim();
    b.table.assign(dim, std::vector<std::vector<std::pair<int, uint32_t>>>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto& ei = b.basis[i];
            const auto& ej = b.basis[j];
            if (ei.src != ej.tgt) continue;  // composition basis[i] . basis[j]
            if (ei.is_id) {
                b.table[i][j] = {{j, 1}};
                continue;
            }
            if (ej.is_id) {
                b.table[i][j] = {{i, 1}};
                continue;
            }
            const MapTo& fi = pairs[at[i].first.first][at[i].first.second].maps[at[i].second];
            const MapTo& fj = pairs[at[j].first.first][at[j].first.second].maps[at[j].second];
            MapTo comp = compose(fi, fj);  // ej.src -> ei.tgt
            const PairData& target = pairs[ej.src][ei.tgt];
            auto v = flatten_map(adr.member(ej.src), adr.member(ei.tgt), comp);
            auto c = target.solver.coords(v);
            if (!target.solver.verify(c, v))
                throw InvariantViolation("composite endomorphism escaped its Hom space");
            for (size_t k = 0; k < c.size(); ++k)
                if (c[k]) b.table[i][j].push_back({b.pair_elems[ej.src][ei.tgt][k], c[k]});
        }
    }

    // associativity of the table on all compatible triples
    auto mul_sparse = [&](const std::vector<std::pair<int, uint32_t>>& v, int j) {
        std::map<int, uint32_t> acc;
        for (const auto& [bi, c] : v)
            for (const auto& [k, ck] : b.table[bi][j]) {
                uint32_t nv = F.add(acc.count(k) ? acc[k] : 0, F.mul(c, ck));
                if (nv)
                    acc[k] = nv;
                else
                    acc.erase(k);
            }
        return acc;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (b.basis[i].src != b.basis[j].tgt) continue;
            for (int k = 0; k < dim; ++k) {
                if (b.basis[j].src != b.basis[k].tgt) continue;
                std::map<int, uint32_t> lhs = mul_sparse(b.table[i][j], k);
                std::map<int, uint32_t> rhs;
                for (const auto& [bjk, c] : b.table[j][k])
                    for (const auto& [l, cl] : b.table[i][bjk]) {
                        uint32_t nv = F.add(rhs.count(l) ? rhs[l] : 0, F.mul(c, cl));
                        if (nv)
                            rhs[l] = nv;
                        else
                            rhs.erase(l);
                    }
                if (lhs != rhs)
                    throw InvariantViolation("multiplication table is not associative");
            }
        }

    // operators for right modules: each radical basis element acts M e_tgt -> M e_src
    b.basis_to_op.assign(dim, -1);
    b.ops.field = F;
    b.ops.slots = nf;
    for (int i = 0; i < dim; ++i) {
        if (b.basis[i].is_id) continue;
        b.basis_to_op[i] = static_cast<int>(b.ops.edges.size());
        b.ops.edges.push_back({b.basis[i].tgt, b.basis[i].src});
        b.op_to_basis.push_back(i);
    }
    return b;
}

BasicAlgebra opposite_algebra(const BasicAlgebra& b) {
    BasicAlgebra o;
    o.field = b.field;
    o.labels = b.labels;
    o.basis = b.basis;
    for (auto& e : o.basis) std::swap(e.src, e.tgt);
    int dim = b.dim();
    o.table.assign(dim, std::vector<std::vector<std::pair<int, uint32_t>>>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) o.table[i][j] = b.table[j][i];
    o.pair_elems.assign(o.idempotents(), std::vector<std::vector<int>>(o.idempotents()));
    for (int s = 0; s < b.idempotents(); ++s)
        for (int t = 0; t < b.idempotents(); ++t) o.pair_elems[s][t] = b.pair_elems[t][s];
    o.basis_to_op.assign(dim, -1);
    o.ops.field = b.field;
    o.ops.slots = b.idempotents();
    for (int i = 0; i < dim; ++i) {
        if (o.basis[i].is_id) continue;
        o.basis_to_op[i] = static_cast<int>(o.ops.edges.size());
        o.ops.edges.push_back({o.basis[i].tgt, o.basis[i].src});
        o.op_to_basis.push_back(i);
    }
    return o;
}

int radical_nilpotency_degree(const BasicAlgebra& b) {
    const PrimeField F = b.field;
    int dim = b.dim();
    Matrix cur(F, dim, 0);
    {
        std::vector<std::vector<uint32_t>> cols;
        for (int i = 0; i < dim; ++i) {
            if (b.basis[i].is_id) continue;
            std::vector<uint32_t> v(dim, 0);
            v[i] = 1;
            cols.push_back(std::move(v));
        }
        cur = Matrix::from_cols(F, dim, cols);
    }
    int k = 1;
    while (cur.cols() > 0) {
        if (k > dim) throw InvariantViolation("radical is not nilpotent");
        std::vector<std::vector<uint32_t>> cols;
        for (int i = 0; i < dim; ++i) {
            if (b.basis[i].is_id) continue;
            for (int j = 0; j < cur.cols(); ++j) {
                std::vector<uint32_t> v(dim, 0);
                bool nz = false;
                for (int r = 0; r < dim; ++r) {
                    uint32_t c = cur.at(r, j);
                    if (!c) continue;
                    for (const auto& [l, cl] : b.table[i][r]) {
                        v[l] = F.add(v[l], F.mul(c, cl));
                    }
                }
                for (uint32_t x : v)
                    if (x) {
                        nz = true;
                        break;
                    }
                if (nz) cols.push_back(std::move(v));
            }
        }
        ColSpace sp = col_echelon(Matrix::from_cols(F, dim, cols));
        cur = sp.basis;
        ++k;
    }
    return k;
}

Matrix ext_quiver(const BasicAlgebra& b) {
    const PrimeField F = b.field;
    int nf = b.idempotents();
    Matrix counts(F, nf, nf);
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            // radical part of the pair (x, y)
            std::vector<int> rad_elems;
            for (int e : b.pair_elems[x][y])
                if (!b.basis[e].is_id) rad_elems.push_back(e);
            if (rad_elems.empty()) continue;
            std::map<int, int> pos;
            for (size_t k = 0; k < rad_elems.size(); ++k) pos[rad_elems[k]] = static_cast<int>(k);
            // J^2 component: products of two radical basis elements landing here
            std::vector<std::vector<uint32_t>> cols;
            for (int i = 0; i < b.dim(); ++i) {
                if (b.basis[i].is_id) continue;
                if (b.basis[i].tgt != y) continue;
                for (int j = 0; j < b.dim(); ++j) {
                    if (b.basis[j].is_id) continue;
                    if (b.basis[j].src != x || b.basis[j].tgt != b.basis[i].src) continue;
                    std::vector<uint32_t> v(rad_elems.size(), 0);
                    bool nz = false;
                    for (const auto& [l, c] : b.table[i][j]) {
                        v[pos.at(l)] = c;  // products of radicals stay radical
                        nz = nz || c;
                    }
                    if (nz) cols.push_back(std::move(v));
                }
            }
            int j2 = rank(Matrix::from_cols(F, static_cast<int>(rad_elems.size()), cols));
            counts.at(x, y) = static_cast<uint32_t>(static_cast<int>(rad_elems.size()) - j2);
        }
    return counts;
}

int ext_quiver_total(const BasicAlgebra& b) {
    Matrix q = ext_quiver(b);
    int total = 0;
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) total += static_cast<int>(q.at(i, j));
    return total;
}

Rep simple_B(const BasicAlgebra& b, int x) {
    Rep m;
    m.dims.assign(b.idempotents(), 0);
    m.dims[x] = 1;
    for (const OpEdge& e : b.ops.edges) m.act.push_back(Matrix(b.field, m.dims[e.to], m.dims[e.from]));
    return m;
}

Rep projective_B(const BasicAlgebra& b, int x) {
    // P_x = e_x B; slot y holds the basis elements with src y and tgt x.
    Rep m;
    std::vector<std::vector<int>> slot_elems(b.idempotents());
    std::vector<int> pos(b.dim(), -1);
    for (int y = 0; y < b.idempotents(); ++y)
        for (int e : b.pair_elems[y][x]) {
            pos[e] = static_cast<int>(slot_elems[y].size());
            slot_elems[y].push_back(e);
        }
    for (int y = 0; y < b.idempotents(); ++y)
        m.dims.push_back(static_cast<int>(slot_elems[y].size()));
    for (size_t e = 0; e < b.ops.edges.size(); ++e) {
        int c = b.op_to_basis[e];
        const OpEdge& ed = b.ops.edges[e];
        Matrix act(b.field, m.dims[ed.to], m.dims[ed.from]);
        for (int j = 0; j < m.dims[ed.from]; ++j) {
            int h = slot_elems[ed.from][j];
            for (const auto& [l, cl] : b.table[h][c]) act.at(pos[l], j) = cl;
        }
        m.act.push_back(std::move(act));
    }
    return m;
}

bool respects_table(const BasicAlgebra& b, const Rep& m) {
    const PrimeField F = b.field;
    int checked = 0;
    for (size_t e1 = 0; e1 < b.ops.edges.size(); ++e1) {
        int i = b.op_to_basis[e1];
        for (size_t e2 = 0; e2 < b.ops.edges.size(); ++e2) {
            int j = b.op_to_basis[e2];
            if (b.basis[i].src != b.basis[j].tgt) continue;
            // act(i . j) = act(j) . act(i) on M e_{tgt(i)}
            Matrix lhs(F, m.dims[b.basis[j].src], m.dims[b.basis[i].tgt]);
            for (const auto& [l, c] : b.table[i][j]) {
                if (b.basis[l].is_id) {
                    lhs = lhs.add(Matrix::identity(F, m.dims[b.basis[l].src]).scale(c));
                } else {
                    lhs = lhs.add(m.act[b.basis_to_op[l]].scale(c));
                }
            }
            Matrix rhs = m.act[e2].mul(m.act[e1]);
            if (!(lhs == rhs)) return false;
            if (++checked > 4000 && b.dim() > 150) return true;  // sampled check for big algebras
        }
    }
    return true;
}

Rep dual_rep(const BasicAlgebra& b, const BasicAlgebra& bop, const Rep& m) {
    Rep d;
    d.dims = m.dims;
    d.act.resize(bop.ops.edges.size(), Matrix());
    for (size_t e = 0; e < bop.ops.edges.size(); ++e) {
        int elem = bop.op_to_basis[e];
        // same basis index over b; transpose its action
        int src_op = b.basis_to_op[elem];
        d.act[e] = m.act[src_op].transpose();
    }
    return d;
}

Rep injective_B(const BasicAlgebra& b, const BasicAlgebra& bop, int x) {
    (void)b;
    return dual_rep(bop, b, projective_B(bop, x));
}

Resolution minimal_projective_resolution(const BasicAlgebra& b, Rep m, int cap) {
    Resolution res;
    std::vector<Rep> projectives;
    for (int x = 0; x < b.idempotents(); ++x) projectives.push_back(projective_B(b, x));
    // per projective: slot layout (basis elements of e_x B per slot)
    std::vector<std::vector<std::vector<int>>> slot_elems(b.idempotents());
    for (int x = 0; x < b.idempotents(); ++x) {
        slot_elems[x].assign(b.idempotents(), {});
        for (int y = 0; y < b.idempotents(); ++y)
            for (int e : b.pair_elems[y][x]) slot_elems[x][y].push_back(e);
    }

    int steps = 0;
    while (m.total_dim() > 0) {
        if (steps > cap)
            throw CapExceeded("projective resolution exceeded cap " + std::to_string(cap));
        QuotientRep t = top(b.ops, m);
        std::vector<int> mults(b.idempotents(), 0);
        std::vector<const Rep*> parts;
        std::vector<std::pair<int, std::vector<uint32_t>>> gens;  // (idempotent, lift in m)
        for (int x = 0; x < b.idempotents(); ++x) {
            mults[x] = t.rep.dims[x];
            for (int k = 0; k < t.rep.dims[x]; ++k) {
                std::vector<uint32_t> unit(t.rep.dims[x], 0);
                unit[k] = 1;
                gens.push_back({x, t.section.f[x].apply(unit)});
                parts.push_back(&projectives[x]);
            }
        }
        Rep cover = direct_sum(b.ops, parts);
        // cover map: e_x |-> lift, extended by the right action of e_x B
        MapTo phi = zero_map(b.ops, cover, m);
        std::vector<int> slot_off(b.idempotents(), 0);
        for (auto& [x, gen] : gens) {
            for (int y = 0; y < b.idempotents(); ++y) {
                for (size_t k = 0; k < slot_elems[x][y].size(); ++k) {
                    int h = slot_elems[x][y][k];
                    std::vector<uint32_t> img;
                    if (b.basis[h].is_id) {
                        img = gen;
                    } else {
                        img = m.act[b.basis_to_op[h]].apply(gen);
                    }
                    int col = slot_off[y] + static_cast<int>(k);
                    for (int r = 0; r < m.dims[y]; ++r) phi.f[y].at(r, col) = img[r];
                }
                slot_off[y] += static_cast<int>(slot_elems[x][y].size());
            }
        }
        res.cover_mults.push_back(mults);
        m = kernel_rep(b.ops, cover, m, phi).rep;
        ++steps;
    }
    res.pd = steps == 0 ? 0 : steps - 1;
    return res;
}

int projective_dimension(const BasicAlgebra& b, Rep m, int cap) {
    return minimal_projective_resolution(b, std::move(m), cap).pd;
}

GlobalDimension global_dimension(const BasicAlgebra& b, int cap) {
    GlobalDimension g;
    for (int x = 0; x < b.idempotents(); ++x) {
        int pd = projective_dimension(b, simple_B(b, x), cap);
        g.pd_of_simple.push_back(pd);
        g.value = std::max(g.value, pd);
    }
    return g;
}

}  // namespace adr
