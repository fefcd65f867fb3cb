#include "adr/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "adr/errors.hpp"

namespace adr {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

std::string general_presentation_text(std::mt19937_64& rng) {
    int nv = pick(rng, 1, 5);
    int na = pick(rng, 0, 6);
    std::ostringstream out;
    out << "quiver\nvertices:";
    for (int v = 1; v <= nv; ++v) out << " v" << v;
    out << "\n";
    std::vector<std::pair<int, int>> arrows;
    for (int a = 0; a < na; ++a) {
        int s = pick(rng, 1, nv), t = pick(rng, 1, nv);
        arrows.push_back({s, t});
        out << "arrow a" << a << ": v" << s << " -> v" << t << "\n";
    }
    int nrel = pick(rng, 0, 3);
    std::vector<std::string> rels;
    for (int r = 0; r < nrel && !arrows.empty(); ++r) {
        // random composable monomial of length 2..3
        int len = pick(rng, 2, 3);
        std::vector<int> word;
        int first = pick(rng, 0, na - 1);
        word.push_back(first);
        int at = arrows[first].second;
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            std::vector<int> candidates;
            for (int a = 0; a < na; ++a)
                if (arrows[a].first == at) candidates.push_back(a);
            if (candidates.empty()) {
                ok = false;
                break;
            }
            int nxt = candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
            word.push_back(nxt);
            at = arrows[nxt].second;
        }
        if (!ok) continue;
        std::ostringstream rel;
        rel << "rel:";
        for (size_t k = 0; k < word.size(); ++k) rel << (k ? "*a" : " a") << word[k];
        rels.push_back(rel.str());
    }
    if (!rels.empty()) {
        out << "relations\n";
        for (const std::string& r : rels) out << r << "\n";
    }
    return out.str();
}

std::string serial_presentation_text(std::mt19937_64& rng) {
    bool cyclic = pick(rng, 0, 1) == 1;
    int nv = cyclic ? pick(rng, 2, 3) : pick(rng, 2, 4);
    std::ostringstream out;
    out << "quiver\nvertices:";
    for (int v = 1; v <= nv; ++v) out << " v" << v;
    out << "\n";
    for (int v = 1; v <= nv; ++v) {
        if (v == nv && !cyclic) break;
        out << "arrow a" << v << ": v" << v << " -> v" << (v == nv ? 1 : v + 1) << "\n";
    }
    int maxlen = cyclic ? 3 : nv - 1;
    if (maxlen >= 2) {
        int len = pick(rng, 2, maxlen);
        std::vector<std::string> rels;
        for (int start = 1; start <= nv; ++start) {
            if (!cyclic && start + len > nv) continue;
            std::ostringstream rel;
            rel << "rel:";
            int at = start;
            for (int k = 0; k < len; ++k) {
                rel << (k ? "*a" : " a") << at;
                at = at == nv ? 1 : at + 1;
            }
            rels.push_back(rel.str());
        }
        if (!rels.empty()) {
            out << "relations\n";
            for (const std::string& r : rels) out << r << "\n";
        }
    }
    return out.str();
}

}  // namespace

Presentation random_presentation(std::mt19937_64& rng, const FuzzConfig& cfg) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::string text = pick(rng, 0, 1) ? serial_presentation_text(rng)
                                           : general_presentation_text(rng);
        try {
            PresentationOptions opt;
            opt.field = cfg.field;
            opt.cap = cfg.cap;
            opt.max_dim = cfg.max_dim;
            Presentation pres = Presentation::parse(text, opt);
            if (pres.dim() > static_cast<int>(cfg.max_dim)) continue;
            return pres;
        } catch (const NotAdmissibleWithinCap&) {
            continue;
        }
    }
    throw InvariantViolation("random presentation generator starved");
}

std::vector<NamedRep> random_semilocal(std::mt19937_64& rng, const Presentation& pres,
                                       int max_locals) {
    int nloc = pick(rng, 1, max_locals);
    std::vector<NamedRep> out;
    for (int t = 0; t < nloc; ++t) {
        int v = pick(rng, 0, pres.num_vertices() - 1);
        std::vector<Path> rad_paths;
        for (const Path& p : pres.basis())
            if (p.src == v && p.length() >= 1) rad_paths.push_back(p);
        std::vector<LinComb> gens;
        int ngen = rad_paths.empty() ? 0 : pick(rng, 0, 2);
        for (int g = 0; g < ngen; ++g) {
            LinComb c;
            c[rad_paths[pick(rng, 0, static_cast<int>(rad_paths.size()) - 1)]] = 1;
            gens.push_back(c);
        }
        out.push_back({local_from_generators(pres, v, gens), "X" + std::to_string(t + 1)});
    }
    return out;
}

namespace {

struct Recorder {
    FuzzSummary* sum;
    int instance;

    void record(const std::string& prop, bool pass, const std::string& detail = "") {
        auto& c = sum->props[prop];
        if (pass) {
            ++c.pass;
        } else {
            ++c.fail;
            sum->failures.push_back("instance " + std::to_string(instance) + ": " + prop +
                                    (detail.empty() ? "" : ": " + detail));
        }
    }
    void skip(const std::string& prop) { ++sum->props[prop].skip; }
};

// dim Hom(x/xJ^{m-1}, ~M) computed against the whole catalog.
int hom_dim_to_catalog(const AdrModule& adr, int cls) {
    int d = 0;
    if (cls < 0) return 0;
    for (int z = 0; z < adr.size(); ++z) d += adr.hom(cls, z).dim();
    return d;
}

int radical_dim_to_catalog(const AdrModule& adr, int x) {
    int d = 0;
    for (int z = 0; z < adr.size(); ++z) d += adr.radical_coords(x, z).cols();
    return d;
}

void instance_suite(Recorder& rec, const FuzzConfig& cfg, const Presentation& pres,
                    std::vector<NamedRep> locals, bool is_regular_module) {
    AdrModule adr(pres, std::move(locals));
    StratTable table = stratify(adr);

    // stratification soundness
    {
        bool ok = true;
        std::string why;
        for (size_t li = 0; li < table.layers.size() && ok; ++li) {
            const Layer& layer = table.layers[li];
            std::vector<int> at_or_after, after_prev;
            for (const Layer& l2 : table.layers) {
                if (l2.i != layer.i) continue;
                if (l2.j >= layer.j)
                    at_or_after.insert(at_or_after.end(), l2.members.begin(), l2.members.end());
                if (l2.j >= layer.j - 1)
                    after_prev.insert(after_prev.end(), l2.members.begin(), l2.members.end());
            }
            for (int x : layer.members) {
                for (int n : at_or_after)
                    if (has_surjective_radical_hom(adr, x, n)) {
                        ok = false;
                        why = adr.name(x) + " surjects into its own tail";
                    }
                if (layer.j >= 2) {
                    bool witness = false;
                    for (int n : after_prev)
                        if (has_surjective_radical_hom(adr, x, n)) witness = true;
                    if (!witness) {
                        ok = false;
                        why = adr.name(x) + " has no reason to miss layer " +
                              std::to_string(layer.j - 1);
                    }
                }
            }
        }
        rec.record("stratification_soundness", ok, why);
    }

    Chain chain = build_chain(adr, table);
    ChainReport total = verify_total_left_rejective_chain(adr, chain);
    rec.record("theorem_2_1", total.ok && chain.length() == table.n_M);

    // Lemma 2.3 dimension identity on the first layer
    {
        bool ok = true;
        if (!table.layers.empty() && table.layers[0].i == 0) {
            for (int x : table.layers[0].members) {
                int cls = adr.quotient_class(x, adr.m() - 1);
                if (hom_dim_to_catalog(adr, cls) != radical_dim_to_catalog(adr, x)) ok = false;
            }
        }
        rec.record("lemma_2_3", ok);
    }

    // Corollary 2.7 and the classical comparison bound
    int gl = -1;
    try {
        BasicAlgebra b = endomorphism_algebra(adr);
        GlobalDimension g = global_dimension(b, table.n_M);
        gl = g.value;
        rec.record("corollary_2_7", gl <= table.n_M);
        rec.record("remark_2_8", table.n_M == 1 ? gl == 0 : gl <= 2 * (table.n_M - 1));
    } catch (const CapExceeded& e) {
        rec.record("corollary_2_7", false, e.what());
        rec.skip("remark_2_8");
    }

    rec.record("prop_1_7", !total.ok || gl < 0 || gl <= chain.length(),
               "verified chain of length " + std::to_string(chain.length()) +
                   " but gl = " + std::to_string(gl));

    if (is_regular_module) {
        // Lemma 3.2, conditional on P(i)J in add(~A)
        const Ops& ops = adr.ops();
        std::vector<const Rep*> cat;
        for (int i = 0; i < adr.size(); ++i) cat.push_back(&adr.member(i));
        bool all_rad_in_add = true;
        std::vector<Rep> rads;
        for (int v = 0; v < pres.num_vertices(); ++v) {
            Rep p = projective_rep(pres, v);
            rads.push_back(materialize(ops, p, radical_sub(ops, p)).rep);
        }
        for (const Rep& r : rads)
            if (r.total_dim() > 0 && !decompose_into(ops, r, cat).ok) all_rad_in_add = false;
        if (!all_rad_in_add) {
            rec.skip("lemma_3_2");
        } else {
            bool ok = true;
            for (const Rep& r : rads) {
                for (int j = 1; j <= adr.m(); ++j) {
                    Rep q = quotient(ops, r, radical_power_sub(ops, r, j)).rep;
                    if (q.total_dim() > 0 && !decompose_into(ops, q, cat).ok) ok = false;
                }
            }
            rec.record("lemma_3_2", ok);
        }

        if (pres.loewy_length() >= 2 && adr.size() <= cfg.max_catalog) {
            try {
                Thm2Report t2 = theorem2_suite(pres, cfg.search_bound);
                rec.record("thm_3_1", t2.agree,
                           "booleans " + std::to_string(t2.strongly_qh) +
                               std::to_string(t2.chain_rejective) + std::to_string(t2.gldim_two) +
                               std::to_string(t2.radical_in_add));
            } catch (const Error& e) {
                rec.record("thm_3_1", false, e.what());
            }
        } else {
            rec.skip("thm_3_1");
        }
    }
}

}  // namespace

FuzzSummary run_property_suites(const FuzzConfig& cfg) {
    FuzzSummary sum;
    for (int i = 0; i < cfg.count; ++i) {
        std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(i));
        Recorder rec{&sum, i};
        try {
            Presentation pres = random_presentation(rng, cfg);
            std::vector<NamedRep> regs;
            for (int v = 0; v < pres.num_vertices(); ++v)
                regs.push_back({projective_rep(pres, v), "P(" + pres.quiver().vertices[v] + ")"});
            instance_suite(rec, cfg, pres, std::move(regs), true);
            instance_suite(rec, cfg, pres, random_semilocal(rng, pres), false);
            ++sum.instances;
        } catch (const Error& e) {
            sum.failures.push_back("instance " + std::to_string(i) + ": " + e.what());
            ++sum.props["instance"].fail;
        }
    }
    return sum;
}

}  // namespace adr
