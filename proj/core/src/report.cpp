#include "adr/report.hpp"

namespace adr {

Json basis_report(const Presentation& pres) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "basis";
    j["prime"] = pres.field().p;
    j["dim_A"] = pres.dim();
    j["loewy_length"] = pres.loewy_length();
    Json paths = Json::array();
    for (const Path& p : pres.basis()) {
        Json e;
        e["path"] = pres.path_string(p);
        e["source"] = pres.quiver().vertices[p.src];
        e["target"] = pres.quiver().vertices[p.tgt];
        e["length"] = p.length();
        paths.push_back(e);
    }
    j["basis"] = paths;
    return j;
}

Json stratify_report(const AdrModule& adr, const StratTable& table) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "stratify";
    j["m"] = adr.m();
    Json cat = Json::array();
    for (int i = 0; i < adr.size(); ++i) {
        Json e;
        e["name"] = adr.name(i);
        e["loewy_length"] = adr.ll(i);
        Json dims = Json::array();
        for (int d : adr.member(i).dims) dims.push_back(d);
        e["dims"] = dims;
        cat.push_back(e);
    }
    j["catalog"] = cat;
    Json layers = Json::array();
    for (const Layer& l : table.layers) {
        Json e;
        e["i"] = l.i;
        e["j"] = l.j;
        Json mem = Json::array();
        for (int c : l.members) mem.push_back(adr.name(c));
        e["members"] = mem;
        layers.push_back(e);
    }
    j["layers"] = layers;
    j["n"] = table.n;
    j["n_M"] = table.n_M;
    return j;
}

Json chain_report_json(const AdrModule& adr, const Chain& chain, const ChainReport& report,
                       const std::string& mode) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "verify";
    j["mode"] = mode;
    j["ok"] = report.ok;
    j["length"] = chain.length();
    Json steps = Json::array();
    for (const StepReport& sr : report.steps) {
        Json s;
        s["step"] = sr.step;
        s["removed"] = sr.removed;
        s["ok"] = sr.ok;
        Json checks = Json::array();
        for (const ObjectCheck& oc : sr.checks) {
            Json c;
            c["object"] = oc.object;
            c["candidate"] = oc.candidate;
            c["approximation_ok"] = oc.approximation_ok;
            c["cosemisimple_ok"] = oc.cosemisimple_ok;
            c["failures"] = oc.failures;
            checks.push_back(c);
        }
        s["checks"] = checks;
        steps.push_back(s);
    }
    j["steps"] = steps;
    (void)adr;
    return j;
}

Json gldim_report(const AdrModule& adr, const StratTable& table, const GlobalDimension& g) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "gldim";
    j["gl"] = g.value;
    j["n_M"] = table.n_M;
    j["classical_bound"] = 2 * (table.n_M - 1);
    j["bound_tight"] = g.value == table.n_M;
    j["corollary_bound_better"] = table.n_M < 2 * (table.n_M - 1);
    Json pds;
    for (int i = 0; i < adr.size(); ++i) pds[adr.name(i)] = g.pd_of_simple[i];
    j["pd_of_simple"] = pds;
    return j;
}

Json thm2_report_json(const Thm2Report& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "thm2";
    j["m"] = rep.m;
    j["n_M"] = rep.n_M;
    Json b;
    b["strongly_qh"] = rep.strongly_qh;
    b["chain_rejective"] = rep.chain_rejective;
    b["gldim_two"] = rep.gldim_two;
    b["radical_in_add"] = rep.radical_in_add;
    j["booleans"] = b;
    j["agree"] = rep.agree;
    j["gl"] = rep.gl;
    Json w;
    if (rep.radical_in_add) {
        Json d = Json::array();
        for (const auto& [name, mult] : rep.radical_decomposition) {
            Json e;
            e["summand"] = name;
            e["multiplicity"] = mult;
            d.push_back(e);
        }
        w["radical_decomposition"] = d;
    } else {
        w["radical_stuck_dim"] = rep.radical_stuck_dim;
    }
    w["chain_failures"] = rep.chain_failures;
    w["pd_of_simple"] = rep.pd_of_simple;
    if (!rep.found_order.empty()) w["found_order"] = rep.found_order;
    j["witnesses"] = w;
    return j;
}

Json qh_report_json(const BasicAlgebra& b, const OrderSpec& order, const StrongQhResult& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "qh";
    Json blocks = Json::array();
    for (const auto& blk : order.blocks) {
        Json names = Json::array();
        for (int x : blk) names.push_back(b.labels[x]);
        blocks.push_back(names);
    }
    j["order"] = blocks;
    j["left"] = r.left;
    j["right"] = r.right;
    j["strong"] = r.strong;
    auto cert_json = [&](const QhResult& q) {
        Json arr = Json::array();
        for (const QhLabelCert& c : q.cert) {
            Json e;
            e["label"] = c.label;
            e["nabla_dim"] = c.nabla_dim;
            e["quotient_dim"] = c.quotient_dim;
            e["injective_quotient"] = c.injective_quotient;
            e["multiplicities_above"] = c.multiplicities_above;
            Json s = Json::array();
            for (const auto& [name, mult] : c.summands) {
                Json x;
                x["summand"] = name;
                x["multiplicity"] = mult;
                s.push_back(x);
            }
            e["summands"] = s;
            arr.push_back(e);
        }
        return arr;
    };
    j["left_certificate"] = cert_json(r.left_cert);
    j["right_certificate"] = cert_json(r.right_cert);
    return j;
}

Json search_report(const AdrModule& adr, const FoundChain& fc) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "search-chain";
    j["found"] = fc.found;
    if (fc.found) {
        Json blocks = Json::array();
        for (const auto& blk : fc.order.blocks) {
            Json names = Json::array();
            for (int x : blk) names.push_back(adr.name(x));
            blocks.push_back(names);
        }
        j["order"] = blocks;
        j["length"] = fc.chain.length();
    }
    return j;
}

Json dump_basic_algebra(const BasicAlgebra& b) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["prime"] = b.field.p;
    j["idempotents"] = b.labels;
    j["dim"] = b.dim();
    Json table(Json::array());
    for (int s = 0; s < b.idempotents(); ++s) {
        Json row = Json::array();
        for (int t = 0; t < b.idempotents(); ++t)
            row.push_back(static_cast<int>(b.pair_elems[s][t].size()));
        table.push_back(row);
    }
    j["hom_dims"] = table;
    Json mult = Json::array();
    for (int i = 0; i < b.dim(); ++i)
        for (int k = 0; k < b.dim(); ++k)
            for (const auto& [l, c] : b.table[i][k]) {
                Json e = Json::array();
                e.push_back(i);
                e.push_back(k);
                e.push_back(l);
                e.push_back(c);
                mult.push_back(e);
            }
    j["products"] = mult;
    Json rad = Json::array();
    for (int i = 0; i < b.dim(); ++i)
        if (!b.basis[i].is_id) rad.push_back(i);
    j["radical_basis"] = rad;
    return j;
}

}  // namespace adr
