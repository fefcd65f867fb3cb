#include "adr/module.hpp"

#include <algorithm>
#include <sstream>

#include "adr/errors.hpp"

namespace adr {

Ops algebra_ops(const Presentation& pres) {
    Ops ops;
    ops.field = pres.field();
    ops.slots = pres.num_vertices();
    for (const Arrow& a : pres.quiver().arrows) ops.edges.push_back({a.src, a.tgt});
    return ops;
}

Matrix path_action(const Presentation& pres, const Rep& m, const Path& p) {
    Matrix acc = Matrix::identity(pres.field(), m.dims[p.src]);
    for (int a : p.arrows) acc = m.act[a].mul(acc);
    return acc;
}

void check_relations(const Presentation& pres, const Rep& m) {
    for (const LinComb& rel : pres.relations()) {
        if (rel.empty()) continue;
        int src = rel.begin()->first.src;
        int tgt = rel.begin()->first.tgt;
        Matrix sum(pres.field(), m.dims[tgt], m.dims[src]);
        for (const auto& [p, c] : rel) sum = sum.add(path_action(pres, m, p).scale(c));
        if (!sum.is_zero())
            throw InvariantViolation("representation violates a defining relation");
    }
}

namespace {

// Per-vertex layout of the path basis of P(v): slots_paths[t] lists the basis
// indices of paths v -> t, in basis order.
struct ProjLayout {
    std::vector<std::vector<int>> slot_paths;   // slot -> list of global basis indices
    std::vector<int> pos_in_slot;               // global basis index -> position
};

ProjLayout projective_layout(const Presentation& pres, int vertex) {
    ProjLayout L;
    L.slot_paths.assign(pres.num_vertices(), {});
    L.pos_in_slot.assign(pres.basis().size(), -1);
    for (size_t k = 0; k < pres.basis().size(); ++k) {
        const Path& p = pres.basis()[k];
        if (p.src != vertex) continue;
        L.pos_in_slot[k] = static_cast<int>(L.slot_paths[p.tgt].size());
        L.slot_paths[p.tgt].push_back(static_cast<int>(k));
    }
    return L;
}

}  // namespace

Rep projective_rep(const Presentation& pres, int vertex) {
    ProjLayout L = projective_layout(pres, vertex);
    Rep m;
    for (int t = 0; t < pres.num_vertices(); ++t)
        m.dims.push_back(static_cast<int>(L.slot_paths[t].size()));
    for (const Arrow& ar : pres.quiver().arrows) {
        int a = pres.quiver().arrow_index(ar.label);
        Matrix act(pres.field(), m.dims[ar.tgt], m.dims[ar.src]);
        for (int j = 0; j < m.dims[ar.src]; ++j) {
            const Path& p = pres.basis()[L.slot_paths[ar.src][j]];
            LinComb nf = pres.right_multiply_arrow(p, a);
            for (const auto& [q, c] : nf) {
                int bi = pres.basis_index(q);
                act.at(L.pos_in_slot[bi], j) = c;
            }
        }
        m.act.push_back(std::move(act));
    }
    return m;
}

Rep simple_rep(const Presentation& pres, int vertex) {
    Rep m;
    m.dims.assign(pres.num_vertices(), 0);
    m.dims[vertex] = 1;
    for (const Arrow& ar : pres.quiver().arrows)
        m.act.push_back(Matrix(pres.field(), m.dims[ar.tgt], m.dims[ar.src]));
    return m;
}

std::vector<std::pair<int, std::vector<uint32_t>>> element_vectors(const Presentation& pres,
                                                                   int vertex, const LinComb& nf) {
    ProjLayout L = projective_layout(pres, vertex);
    std::vector<std::pair<int, std::vector<uint32_t>>> out;
    std::vector<std::vector<uint32_t>> acc(pres.num_vertices());
    for (int t = 0; t < pres.num_vertices(); ++t)
        acc[t].assign(L.slot_paths[t].size(), 0);
    for (const auto& [p, c] : nf) {
        if (p.src != vertex)
            throw ParseError("generator does not start at the module's vertex");
        int bi = pres.basis_index(p);
        if (bi < 0) throw InvariantViolation("normal form contains a non-basis path");
        acc[p.tgt][L.pos_in_slot[bi]] = c;
    }
    for (int t = 0; t < pres.num_vertices(); ++t) {
        bool nz = std::any_of(acc[t].begin(), acc[t].end(), [](uint32_t x) { return x != 0; });
        if (nz) out.push_back({t, acc[t]});
    }
    return out;
}

Rep local_from_generators(const Presentation& pres, int vertex,
                          const std::vector<LinComb>& gens) {
    Ops ops = algebra_ops(pres);
    Rep proj = projective_rep(pres, vertex);
    std::vector<std::pair<int, std::vector<uint32_t>>> seeds;
    for (const LinComb& g : gens) {
        LinComb nf = pres.normal_form(g);
        for (auto& sv : element_vectors(pres, vertex, nf)) seeds.push_back(std::move(sv));
    }
    SubSpaces sub = closure(ops, proj, seeds);
    Rep q = quotient(ops, proj, sub).rep;
    check_relations(pres, q);
    return q;
}

int ModuleFile::local_index(const std::string& name) const {
    for (size_t i = 0; i < locals.size(); ++i)
        if (locals[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<NamedRep> ModuleFile::resolve(const std::string& name) const {
    const std::vector<std::string>* parts = nullptr;
    if (name.empty()) {
        if (modules.size() != 1)
            throw ParseError("module file declares " + std::to_string(modules.size()) +
                             " modules; specify one by name");
        parts = &modules[0].second;
    } else {
        for (const auto& [n, ps] : modules)
            if (n == name) {
                parts = &ps;
                break;
            }
        if (!parts) throw ParseError("no module named '" + name + "'");
    }
    std::vector<NamedRep> out;
    for (const std::string& p : *parts) {
        int k = local_index(p);
        if (k < 0) throw ParseError("module references undeclared local '" + p + "'");
        out.push_back(locals[k]);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ModuleFile parse_module_file(const Presentation& pres, const std::string& text) {
    ModuleFile mf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.rfind("local", 0) == 0) {
            std::string rest = t.substr(5);
            size_t eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("local line without '='", lineno, 1);
            std::string name = trim(rest.substr(0, eq));
            if (name.empty()) throw ParseError("empty local name", lineno, 1);
            if (mf.local_index(name) >= 0)
                throw ParseError("duplicate local '" + name + "'", lineno, 1);
            std::string rhs = trim(rest.substr(eq + 1));
            if (rhs.empty() || (rhs[0] != 'P' && rhs[0] != 'p'))
                throw ParseError("local right-hand side must be 'P <vertex> [/ gens]'", lineno, 1);
            rhs = trim(rhs.substr(1));
            size_t slash = rhs.find('/');
            std::string vtx = trim(slash == std::string::npos ? rhs : rhs.substr(0, slash));
            int v = pres.quiver().vertex_index(vtx);
            if (v < 0) throw ParseError("unknown vertex '" + vtx + "'", lineno, 1);
            std::vector<LinComb> gens;
            if (slash != std::string::npos) {
                for (const std::string& g : split(rhs.substr(slash + 1), ',')) {
                    std::string gt = trim(g);
                    if (gt.empty()) continue;
                    gens.push_back(parse_path_expr(pres, gt));
                }
            }
            mf.locals.push_back({local_from_generators(pres, v, gens), name});
        } else if (t.rfind("module", 0) == 0) {
            std::string rest = t.substr(6);
            size_t eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("module line without '='", lineno, 1);
            std::string name = trim(rest.substr(0, eq));
            std::vector<std::string> parts;
            for (const std::string& p : split(rest.substr(eq + 1), '+')) {
                std::string pt = trim(p);
                if (!pt.empty()) parts.push_back(pt);
            }
            if (parts.empty()) throw ParseError("empty module sum", lineno, 1);
            mf.modules.push_back({name, parts});
        } else {
            throw ParseError("expected 'local' or 'module'", lineno, 1);
        }
    }
    return mf;
}

}  // namespace adr
