#include "adr/rep.hpp"

#include <algorithm>
#include <numeric>

#include "adr/errors.hpp"

namespace adr {

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Rep zero_rep(const Ops& ops) {
    Rep r;
    r.dims.assign(ops.slots, 0);
    for (const OpEdge& e : ops.edges) r.act.push_back(Matrix(ops.field, 0, 0));
    (void)ops;
    return r;
}

Rep direct_sum(const Ops& ops, const std::vector<const Rep*>& parts) {
    Rep out;
    out.dims.assign(ops.slots, 0);
    for (const Rep* p : parts)
        for (int s = 0; s < ops.slots; ++s) out.dims[s] += p->dims[s];
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        Matrix m(ops.field, out.dims[ops.edges[e].to], out.dims[ops.edges[e].from]);
        int ro = 0, co = 0;
        for (const Rep* p : parts) {
            const Matrix& a = p->act[e];
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) m.at(ro + i, co + j) = a.at(i, j);
            ro += p->dims[ops.edges[e].to];
            co += p->dims[ops.edges[e].from];
        }
        out.act.push_back(std::move(m));
    }
    return out;
}

bool same_dims(const Rep& a, const Rep& b) { return a.dims == b.dims; }

MapTo zero_map(const Ops& ops, const Rep& x, const Rep& y) {
    MapTo f;
    for (int s = 0; s < ops.slots; ++s) f.f.push_back(Matrix(ops.field, y.dims[s], x.dims[s]));
    return f;
}

MapTo compose(const MapTo& g, const MapTo& f) {
    MapTo h;
    for (size_t s = 0; s < f.f.size(); ++s) h.f.push_back(g.f[s].mul(f.f[s]));
    return h;
}

bool is_module_map(const Ops& ops, const Rep& x, const Rep& y, const MapTo& f) {
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        const OpEdge& ed = ops.edges[e];
        if (!(f.f[ed.to].mul(x.act[e]) == y.act[e].mul(f.f[ed.from]))) return false;
    }
    return true;
}

bool is_surjective(const Rep& y, const MapTo& f) {
    for (size_t s = 0; s < f.f.size(); ++s)
        if (rank(f.f[s]) != y.dims[s]) return false;
    return true;
}

bool is_injective(const Rep& x, const MapTo& f) {
    for (size_t s = 0; s < f.f.size(); ++s)
        if (rank(f.f[s]) != x.dims[s]) return false;
    return true;
}

bool map_invertible(const Rep& x, const Rep& y, const MapTo& f) {
    if (!same_dims(x, y)) return false;
    for (size_t s = 0; s < f.f.size(); ++s)
        if (!is_invertible(f.f[s])) return false;
    return true;
}

int SubSpaces::total_dim() const {
    int d = 0;
    for (const ColSpace& c : slot) d += c.dim();
    return d;
}

SubSpaces zero_sub(const Ops& ops, const Rep& m) {
    SubSpaces s;
    for (int i = 0; i < ops.slots; ++i) s.slot.push_back(colspace_zero(ops.field, m.dims[i]));
    return s;
}

SubSpaces full_sub(const Ops& ops, const Rep& m) {
    SubSpaces s;
    for (int i = 0; i < ops.slots; ++i)
        s.slot.push_back(col_echelon(Matrix::identity(ops.field, m.dims[i])));
    return s;
}

bool is_submodule(const Ops& ops, const Rep& m, const SubSpaces& s) {
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        const OpEdge& ed = ops.edges[e];
        const ColSpace& src = s.slot[ed.from];
        for (int j = 0; j < src.dim(); ++j)
            if (!in_span(s.slot[ed.to], m.act[e].apply(src.basis.col(j)))) return false;
    }
    return true;
}

SubSpaces closure(const Ops& ops, const Rep& m,
                  const std::vector<std::pair<int, std::vector<uint32_t>>>& seeds) {
    SubSpaces s = zero_sub(ops, m);
    std::vector<std::pair<int, std::vector<uint32_t>>> work = seeds;
    while (!work.empty()) {
        auto [slot, v] = work.back();
        work.pop_back();
        if (!extend_span(s.slot[slot], v)) continue;
        for (size_t e = 0; e < ops.edges.size(); ++e) {
            if (ops.edges[e].from != slot) continue;
            work.push_back({ops.edges[e].to, m.act[e].apply(v)});
        }
    }
    // canonicalize
    for (auto& c : s.slot) c = col_echelon(c.basis);
    return s;
}

SubSpaces radical_sub(const Ops& ops, const Rep& m) {
    SubSpaces s;
    for (int i = 0; i < ops.slots; ++i) {
        Matrix cols(ops.field, m.dims[i], 0);
        for (size_t e = 0; e < ops.edges.size(); ++e)
            if (ops.edges[e].to == i) cols = Matrix::hstack(cols, m.act[e]);
        s.slot.push_back(col_echelon(cols));
    }
    return s;
}

SubSpaces socle_sub(const Ops& ops, const Rep& m) {
    SubSpaces s;
    for (int i = 0; i < ops.slots; ++i) {
        Matrix stack(ops.field, 0, m.dims[i]);
        for (size_t e = 0; e < ops.edges.size(); ++e)
            if (ops.edges[e].from == i) stack = Matrix::vstack(stack, m.act[e]);
        s.slot.push_back(col_echelon(kernel_basis(stack)));
    }
    return s;
}

SubSpaces radical_power_sub(const Ops& ops, const Rep& m, int k) {
    // M J^k: repeatedly push the previous layer through the operators.
    SubSpaces s = full_sub(ops, m);
    for (int it = 0; it < k; ++it) {
        SubSpaces next;
        for (int i = 0; i < ops.slots; ++i) {
            Matrix cols(ops.field, m.dims[i], 0);
            for (size_t e = 0; e < ops.edges.size(); ++e) {
                if (ops.edges[e].to != i) continue;
                const ColSpace& prev = s.slot[ops.edges[e].from];
                if (prev.dim() == 0) continue;
                cols = Matrix::hstack(cols, m.act[e].mul(prev.basis));
            }
            next.slot.push_back(col_echelon(cols));
        }
        s = std::move(next);
    }
    return s;
}

QuotientRep quotient(const Ops& ops, const Rep& m, const SubSpaces& s) {
    if (!is_submodule(ops, m, s)) throw NotASubmodule("quotient by a non-submodule");
    const PrimeField f = ops.field;
    QuotientRep q;
    std::vector<std::vector<int>> comp_rows(ops.slots);  // non-pivot rows, ascending
    for (int i = 0; i < ops.slots; ++i) {
        std::vector<bool> piv(m.dims[i], false);
        for (int r : s.slot[i].pivot_rows) piv[r] = true;
        for (int r = 0; r < m.dims[i]; ++r)
            if (!piv[r]) comp_rows[i].push_back(r);
        q.rep.dims.push_back(static_cast<int>(comp_rows[i].size()));
    }
    // projection: reduce against the submodule basis, then read complement rows
    for (int i = 0; i < ops.slots; ++i) {
        Matrix p(f, q.rep.dims[i], m.dims[i]);
        for (int c = 0; c < m.dims[i]; ++c) {
            std::vector<uint32_t> v(m.dims[i], 0);
            v[c] = 1;
            v = reduce_against(s.slot[i], v);
            for (int r = 0; r < q.rep.dims[i]; ++r) p.at(r, c) = v[comp_rows[i][r]];
        }
        q.proj.f.push_back(std::move(p));
        Matrix sec(f, m.dims[i], q.rep.dims[i]);
        for (int r = 0; r < q.rep.dims[i]; ++r) sec.at(comp_rows[i][r], r) = 1;
        q.section.f.push_back(std::move(sec));
    }
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        const OpEdge& ed = ops.edges[e];
        Matrix a(f, q.rep.dims[ed.to], q.rep.dims[ed.from]);
        for (int j = 0; j < q.rep.dims[ed.from]; ++j) {
            std::vector<uint32_t> v(m.dims[ed.from], 0);
            v[comp_rows[ed.from][j]] = 1;
            auto w = q.proj.f[ed.to].apply(m.act[e].apply(v));
            for (int r = 0; r < q.rep.dims[ed.to]; ++r) a.at(r, j) = w[r];
        }
        q.rep.act.push_back(std::move(a));
    }
    return q;
}

SubRep materialize(const Ops& ops, const Rep& m, const SubSpaces& s) {
    if (!is_submodule(ops, m, s)) throw NotASubmodule("materializing a non-submodule");
    SubRep out;
    for (int i = 0; i < ops.slots; ++i) {
        out.rep.dims.push_back(s.slot[i].dim());
        out.incl.f.push_back(s.slot[i].basis);
    }
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        const OpEdge& ed = ops.edges[e];
        Matrix img = m.act[e].mul(s.slot[ed.from].basis);
        auto x = solve_all(s.slot[ed.to].basis, img);
        if (!x) throw NotASubmodule("restriction failed");  // unreachable after is_submodule
        out.rep.act.push_back(std::move(*x));
    }
    return out;
}

int loewy_length(const Ops& ops, const Rep& m) {
    if (m.is_zero()) return 0;
    int k = 0;
    SubSpaces s = full_sub(ops, m);
    while (s.total_dim() > 0) {
        ++k;
        SubSpaces next;
        for (int i = 0; i < ops.slots; ++i) {
            Matrix cols(ops.field, m.dims[i], 0);
            for (size_t e = 0; e < ops.edges.size(); ++e) {
                if (ops.edges[e].to != i) continue;
                const ColSpace& prev = s.slot[ops.edges[e].from];
                if (prev.dim() == 0) continue;
                cols = Matrix::hstack(cols, m.act[e].mul(prev.basis));
            }
            next.slot.push_back(col_echelon(cols));
        }
        s = std::move(next);
        if (k > m.total_dim() + 1)
            throw InvariantViolation("radical filtration does not terminate");
    }
    return k;
}

QuotientRep top(const Ops& ops, const Rep& m) { return quotient(ops, m, radical_sub(ops, m)); }

SubRep kernel_rep(const Ops& ops, const Rep& x, const Rep& y, const MapTo& f) {
    SubSpaces s;
    for (int i = 0; i < ops.slots; ++i) {
        (void)y;
        s.slot.push_back(col_echelon(kernel_basis(f.f[i])));
    }
    return materialize(ops, x, s);
}

int hom_flat_dim(const Rep& x, const Rep& y) {
    int n = 0;
    for (size_t s = 0; s < x.dims.size(); ++s) n += x.dims[s] * y.dims[s];
    return n;
}

std::vector<uint32_t> flatten_map(const Rep& x, const Rep& y, const MapTo& f) {
    std::vector<uint32_t> v;
    v.reserve(hom_flat_dim(x, y));
    for (size_t s = 0; s < x.dims.size(); ++s)
        for (int r = 0; r < y.dims[s]; ++r)
            for (int c = 0; c < x.dims[s]; ++c) v.push_back(f.f[s].at(r, c));
    return v;
}

MapTo unflatten_map(const Ops& ops, const Rep& x, const Rep& y, const std::vector<uint32_t>& v) {
    MapTo f;
    size_t k = 0;
    for (int s = 0; s < ops.slots; ++s) {
        Matrix m(ops.field, y.dims[s], x.dims[s]);
        for (int r = 0; r < y.dims[s]; ++r)
            for (int c = 0; c < x.dims[s]; ++c) m.at(r, c) = v[k++];
        f.f.push_back(std::move(m));
    }
    return f;
}

std::vector<MapTo> hom_basis(const Ops& ops, const Rep& x, const Rep& y) {
    const PrimeField f = ops.field;
    int nvar = hom_flat_dim(x, y);
    std::vector<int> off(ops.slots, 0);
    for (int s = 1; s < ops.slots; ++s) off[s] = off[s - 1] + x.dims[s - 1] * y.dims[s - 1];
    int neq = 0;
    for (const OpEdge& e : ops.edges) neq += y.dims[e.to] * x.dims[e.from];
    Matrix sys(f, neq, nvar);
    int row = 0;
    for (size_t e = 0; e < ops.edges.size(); ++e) {
        const OpEdge& ed = ops.edges[e];
        const Matrix& tx = x.act[e];
        const Matrix& ty = y.act[e];
        for (int a = 0; a < y.dims[ed.to]; ++a) {
            for (int b = 0; b < x.dims[ed.from]; ++b) {
                // sum_g f_to[a,g] tx[g,b] - sum_d ty[a,d] f_from[d,b] = 0
                for (int g = 0; g < x.dims[ed.to]; ++g) {
                    int idx = off[ed.to] + a * x.dims[ed.to] + g;
                    sys.at(row, idx) = f.add(sys.at(row, idx), tx.at(g, b));
                }
                for (int d = 0; d < y.dims[ed.from]; ++d) {
                    int idx = off[ed.from] + d * x.dims[ed.from] + b;
                    sys.at(row, idx) = f.sub(sys.at(row, idx), ty.at(a, d));
                }
                ++row;
            }
        }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<MapTo> out;
    for (int j = 0; j < ker.cols(); ++j) out.push_back(unflatten_map(ops, x, y, ker.col(j)));
    return out;
}

std::optional<std::vector<uint32_t>> HomSpace::coords(const Rep& x, const Rep& y,
                                                      const MapTo& f) const {
    auto v = flatten_map(x, y, f);
    auto c = solver.coords(v);
    if (!solver.verify(c, v)) return std::nullopt;
    return c;
}

HomSpace hom_space(const Ops& ops, const Rep& x, const Rep& y) {
    HomSpace h;
    h.basis = hom_basis(ops, x, y);
    std::vector<std::vector<uint32_t>> cols;
    for (const MapTo& f : h.basis) cols.push_back(flatten_map(x, y, f));
    h.flat = Matrix::from_cols(ops.field, hom_flat_dim(x, y), cols);
    h.solver = make_coord_solver(h.flat);
    return h;
}

bool is_local(const Ops& ops, const Rep& m) {
    if (m.is_zero()) return false;
    SubSpaces rad = radical_sub(ops, m);
    return m.total_dim() - rad.total_dim() == 1;
}

LocalTop local_top(const Ops& ops, const Rep& m) {
    if (!is_local(ops, m)) throw NotLocal("module does not have a simple top");
    SubSpaces rad = radical_sub(ops, m);
    LocalTop t;
    for (int i = 0; i < ops.slots; ++i) {
        if (m.dims[i] - rad.slot[i].dim() == 1) {
            t.slot = i;
            // complement coordinate: the unique non-pivot row of (mJ)_i
            std::vector<bool> piv(m.dims[i], false);
            for (int r : rad.slot[i].pivot_rows) piv[r] = true;
            int row = -1;
            for (int r = 0; r < m.dims[i]; ++r)
                if (!piv[r]) {
                    row = r;
                    break;
                }
            t.gen.assign(m.dims[i], 0);
            t.gen[row] = 1;
            // pi(v) = complement coordinate of v after reducing mod (mJ)_i
            t.pi.assign(m.dims[i], 0);
            for (int c = 0; c < m.dims[i]; ++c) {
                std::vector<uint32_t> v(m.dims[i], 0);
                v[c] = 1;
                t.pi[c] = reduce_against(rad.slot[i], v)[row];
            }
            break;
        }
    }
    return t;
}

uint32_t top_scalar(const Ops& ops, const Rep& x, const LocalTop& tx, const Rep& y,
                    const LocalTop& ty, const MapTo& f) {
    (void)x;
    (void)y;
    if (tx.slot != ty.slot) return 0;
    const PrimeField F = ops.field;
    auto img = f.f[tx.slot].apply(tx.gen);
    uint64_t acc = 0;
    for (size_t i = 0; i < img.size(); ++i) acc += static_cast<uint64_t>(ty.pi[i]) * img[i];
    return static_cast<uint32_t>(acc % F.p);
}

bool is_isomorphic(const Ops& ops, const Rep& x, const Rep& y) {
    if (!same_dims(x, y)) return false;
    if (x.total_dim() == 0) return true;
    for (const MapTo& f : hom_basis(ops, x, y))
        if (map_invertible(x, y, f)) return true;
    return false;
}

std::optional<Rep> split_local_summand(const Ops& ops, const Rep& m, const Rep& x) {
    LocalTop tx = local_top(ops, x);  // throws NotLocal
    if (x.total_dim() > m.total_dim()) return std::nullopt;
    for (int s = 0; s < ops.slots; ++s)
        if (x.dims[s] > m.dims[s]) return std::nullopt;
    auto fs = hom_basis(ops, x, m);
    auto gs = hom_basis(ops, m, x);
    for (const MapTo& fx : fs) {
        for (const MapTo& gx : gs) {
            MapTo c = compose(gx, fx);  // endomorphism of x
            // invertible in the local ring End(x) iff nonzero on the top
            if (top_scalar(ops, x, tx, x, tx, c) == 0) continue;
            MapTo cinv;
            bool ok = true;
            for (size_t s = 0; s < c.f.size(); ++s) {
                auto inv = inverse(c.f[s]);
                if (!inv) {
                    ok = false;
                    break;
                }
                cinv.f.push_back(std::move(*inv));
            }
            if (!ok) throw InvariantViolation("top-invertible endomorphism of a local module is singular");
            MapTo pi = compose(cinv, gx);  // m -> x with pi . f = id
            return kernel_rep(ops, m, x, pi).rep;
        }
    }
    return std::nullopt;
}

DecomposeResult decompose_into(const Ops& ops, const Rep& m,
                               const std::vector<const Rep*>& catalog) {
    DecomposeResult res;
    res.counts.assign(catalog.size(), 0);
    Rep rem = m;
    bool progress = true;
    while (rem.total_dim() > 0 && progress) {
        progress = false;
        for (size_t k = 0; k < catalog.size(); ++k) {
            auto c = split_local_summand(ops, rem, *catalog[k]);
            if (c) {
                ++res.counts[k];
                rem = std::move(*c);
                progress = true;
                break;
            }
        }
    }
    res.ok = rem.total_dim() == 0;
    res.remainder = std::move(rem);
    return res;
}

}  // namespace adr
