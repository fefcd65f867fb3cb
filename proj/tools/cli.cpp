#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "adr/fuzz.hpp"
#include "adr/report.hpp"

namespace adr::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvariant = 2;
constexpr int kUsage = 64;
constexpr int kParse = 65;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Common {
    uint32_t prime = 101;
    int cap = 64;
    bool json = false;
    int search_bound = 12;
    std::string module_name;
};

Presentation load_presentation(const Common& c, const std::string& path) {
    PresentationOptions opt;
    opt.field = PrimeField(c.prime);
    opt.cap = c.cap;
    return Presentation::parse(slurp(path), opt);
}

AdrModule load_adr(const Common& c, const Presentation& pres, const std::string& modpath) {
    ModuleFile mf = parse_module_file(pres, slurp(modpath));
    return AdrModule(pres, mf.resolve(c.module_name));
}

void emit(const Common& c, std::ostream& out, const Json& j, const std::string& text) {
    if (c.json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

std::string order_to_text(const std::vector<std::vector<std::string>>& blocks) {
    std::string s;
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (k) s += " < ";
        if (blocks[k].size() > 1) s += "{";
        for (size_t i = 0; i < blocks[k].size(); ++i) {
            if (i) s += ", ";
            s += blocks[k][i];
        }
        if (blocks[k].size() > 1) s += "}";
    }
    return s;
}

int cmd_basis(const Common& c, const std::string& alg, std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    Json j = basis_report(pres);
    std::ostringstream text;
    text << "dim A = " << pres.dim() << ", m = " << pres.loewy_length() << "\n";
    for (const Path& p : pres.basis())
        text << "  " << pres.path_string(p) << "  (" << pres.quiver().vertices[p.src] << " -> "
             << pres.quiver().vertices[p.tgt] << ")\n";
    emit(c, out, j, text.str());
    return kOk;
}

int cmd_stratify(const Common& c, const std::string& alg, const std::string& mod,
                 std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    AdrModule adr = load_adr(c, pres, mod);
    StratTable table = stratify(adr);
    Json j = stratify_report(adr, table);
    std::ostringstream text;
    text << "|F| = " << adr.size() << ", m = " << adr.m() << "\n";
    for (const Layer& l : table.layers) {
        text << "F_{" << l.i << "," << l.j << "} = {";
        for (size_t k = 0; k < l.members.size(); ++k)
            text << (k ? ", " : "") << adr.name(l.members[k]);
        text << "}\n";
    }
    text << "n = (";
    for (size_t i = 0; i < table.n.size(); ++i) text << (i ? ", " : "") << table.n[i];
    text << "), n_M = " << table.n_M << "\n";
    emit(c, out, j, text.str());
    return kOk;
}

int cmd_verify(const Common& c, const std::string& alg, const std::string& mod,
               const std::string& mode, bool do_search, std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    AdrModule adr = load_adr(c, pres, mod);
    if (do_search) {
        FoundChain fc = find_rejective_chain(adr, c.search_bound);
        Json j = search_report(adr, fc);
        std::ostringstream text;
        if (fc.found) {
            std::vector<std::vector<std::string>> blocks;
            for (const auto& blk : fc.order.blocks) {
                std::vector<std::string> names;
                for (int x : blk) names.push_back(adr.name(x));
                blocks.push_back(names);
            }
            text << "rejective chain found, induced order: " << order_to_text(blocks) << "\n";
        } else {
            text << "no rejective chain exists\n";
        }
        emit(c, out, j, text.str());
        return fc.found ? kOk : kCheckFailed;
    }
    StratTable table = stratify(adr);
    Chain chain = build_chain(adr, table);
    ChainReport r = mode == "rejective" ? verify_rejective_chain(adr, chain)
                                        : verify_total_left_rejective_chain(adr, chain);
    Json j = chain_report_json(adr, chain, r, mode);
    std::ostringstream text;
    text << (mode == "rejective" ? "rejective" : "A-total left rejective") << " chain of length "
         << chain.length() << ": " << (r.ok ? "verified" : "FAILED") << "\n";
    for (const StepReport& sr : r.steps)
        for (const ObjectCheck& oc : sr.checks)
            for (const std::string& f : oc.failures)
                text << "  step " << sr.step << ", " << oc.object << ": " << f << "\n";
    emit(c, out, j, text.str());
    return r.ok ? kOk : kCheckFailed;
}

int cmd_gldim(const Common& c, const std::string& alg, const std::string& mod,
              std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    AdrModule adr = load_adr(c, pres, mod);
    StratTable table = stratify(adr);
    BasicAlgebra b = endomorphism_algebra(adr);
    GlobalDimension g = global_dimension(b, table.n_M);
    Json j = gldim_report(adr, table, g);
    std::ostringstream text;
    text << "gl B = " << g.value << ", n_M = " << table.n_M << ", classical bound "
         << 2 * (table.n_M - 1) << "\n";
    if (table.n_M < 2 * (table.n_M - 1))
        text << "corollary bound n_M is strictly better than the classical bound\n";
    emit(c, out, j, text.str());
    return kOk;
}

int cmd_thm2(const Common& c, const std::string& alg, std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    Thm2Report rep = theorem2_suite(pres, c.search_bound);
    Json j = thm2_report_json(rep);
    std::ostringstream text;
    text << "(i) strongly quasi-hereditary: " << (rep.strongly_qh ? "true" : "false") << "\n"
         << "(ii) ADR chain rejective:      " << (rep.chain_rejective ? "true" : "false") << "\n"
         << "(iii) gl B = 2:                " << (rep.gldim_two ? "true" : "false")
         << "  (gl B = " << rep.gl << ")\n"
         << "(iv) J(A) in add(~A):          " << (rep.radical_in_add ? "true" : "false") << "\n";
    if (rep.radical_in_add) {
        text << "J(A) = ";
        bool first = true;
        for (const auto& [name, mult] : rep.radical_decomposition) {
            if (!first) text << " (+) ";
            text << name;
            if (mult > 1) text << "^" << mult;
            first = false;
        }
        if (first) text << "0";
        text << "\n";
    }
    if (!rep.found_order.empty())
        text << "order: " << order_to_text(rep.found_order) << "\n";
    text << (rep.agree ? "all four conditions agree" : "EQUIVALENCE VIOLATION") << "\n";
    emit(c, out, j, text.str());
    return rep.agree ? kOk : kInvariant;
}

int cmd_qh(const Common& c, const std::string& alg, const std::string& mod,
           const std::string& orderfile, std::ostream& out) {
    Presentation pres = load_presentation(c, alg);
    AdrModule adr = load_adr(c, pres, mod);
    BasicAlgebra b = endomorphism_algebra(adr);
    OrderSpec order = parse_order_file(slurp(orderfile), b.labels);
    StrongQhResult r = check_strongly_qh(b, order);
    Json j = qh_report_json(b, order, r);
    std::ostringstream text;
    text << "left-strongly QH:  " << (r.left ? "true" : "false") << "\n"
         << "right-strongly QH: " << (r.right ? "true" : "false") << "\n"
         << "strongly QH:       " << (r.strong ? "true" : "false") << "\n";
    emit(c, out, j, text.str());
    return r.strong ? kOk : kCheckFailed;
}

int cmd_search(const Common& c, const std::string& alg, const std::string& mod,
               std::ostream& out) {
    return cmd_verify(c, alg, mod, "rejective", true, out);
}

int cmd_fuzz(const Common& c, uint64_t seed, int count, std::ostream& out) {
    FuzzConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.field = PrimeField(c.prime);
    cfg.search_bound = c.search_bound;
    FuzzSummary sum = run_property_suites(cfg);
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "fuzz";
    j["seed"] = seed;
    j["count"] = count;
    j["instances"] = sum.instances;
    Json props;
    for (const auto& [name, pc] : sum.props) {
        Json e;
        e["pass"] = pc.pass;
        e["fail"] = pc.fail;
        e["skip"] = pc.skip;
        props[name] = e;
    }
    j["properties"] = props;
    j["failures"] = sum.failures;
    std::ostringstream text;
    text << "instances: " << sum.instances << "\n";
    for (const auto& [name, pc] : sum.props)
        text << "  " << name << ": pass " << pc.pass << ", fail " << pc.fail << ", skip "
             << pc.skip << "\n";
    for (const std::string& f : sum.failures) text << "  FAIL " << f << "\n";
    if (!sum.ok()) text << "replay with --seed " << seed << " --count " << count << "\n";
    emit(c, out, j, text.str());
    return sum.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ADR algebras of semilocal modules: stratification, rejective chains, "
                 "global dimension and quasi-hereditary structure over F_p"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--prime", common.prime, "prime p for the ground field F_p");
    app.add_option("--cap", common.cap, "rewriting cap (max irreducible path length)");
    app.add_flag("--json", common.json, "emit JSON reports");
    app.add_option("--search-bound", common.search_bound, "catalog bound for the chain search");
    app.add_option("--module", common.module_name, "module name inside the module file");

    std::string alg, mod, orderfile, mode = "left";
    bool do_search = false;
    uint64_t seed = 1;
    int count = 50;

    CLI::App* basis = app.add_subcommand("basis", "monomial basis and Loewy length of A");
    basis->add_option("alg", alg, "presentation file")->required();

    CLI::App* strat = app.add_subcommand("stratify", "the F_{i,j} table and n_M");
    strat->add_option("alg", alg)->required();
    strat->add_option("module", mod)->required();

    CLI::App* verify = app.add_subcommand("verify", "verify the ADR chain");
    verify->add_option("alg", alg)->required();
    verify->add_option("module", mod)->required();
    verify->add_option("--mode", mode, "left | rejective")
        ->check(CLI::IsMember({"left", "rejective"}));
    verify->add_flag("--search", do_search, "search for some rejective chain instead");

    CLI::App* gldim = app.add_subcommand("gldim", "global dimension of the ADR algebra");
    gldim->add_option("alg", alg)->required();
    gldim->add_option("module", mod)->required();

    CLI::App* thm2 = app.add_subcommand("thm2", "the four equivalent conditions for End(~A)");
    thm2->add_option("alg", alg)->required();

    CLI::App* qh = app.add_subcommand("qh", "strongly quasi-hereditary check for an order");
    qh->add_option("alg", alg)->required();
    qh->add_option("module", mod)->required();
    qh->add_option("--order", orderfile, "order file")->required();

    CLI::App* search = app.add_subcommand("search-chain", "search for a rejective chain");
    search->add_option("alg", alg)->required();
    search->add_option("module", mod)->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized property suites");
    fuzz->add_option("--seed", seed, "RNG seed");
    fuzz->add_option("--count", count, "number of instances");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (basis->parsed()) return cmd_basis(common, alg, out);
        if (strat->parsed()) return cmd_stratify(common, alg, mod, out);
        if (verify->parsed()) return cmd_verify(common, alg, mod, mode, do_search, out);
        if (gldim->parsed()) return cmd_gldim(common, alg, mod, out);
        if (thm2->parsed()) return cmd_thm2(common, alg, out);
        if (qh->parsed()) return cmd_qh(common, alg, mod, orderfile, out);
        if (search->parsed()) return cmd_search(common, alg, mod, out);
        if (fuzz->parsed()) return cmd_fuzz(common, seed, count, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NonParallelRelation& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const RelationTooShort& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NotAdmissibleWithinCap& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const CapExceeded& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const EquivalenceViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const NonTerminatingLayer& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    err << "no subcommand\n";
    return kUsage;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace adr::cli
