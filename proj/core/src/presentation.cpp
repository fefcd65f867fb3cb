#include "adr/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace adr {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return static_cast<int>(i);
    return -1;
}

namespace {

struct Tok {
    std::string s;
    int line = 0;
    int col = 0;
};

// Tokens: punctuation ':' ',' '*' '+' '-' '=' '/', the two-char token '->',
// and label runs. '#' starts a comment to end of line.
std::vector<Tok> tokenize(const std::string& text) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    const std::string punct = ":,*+=/";
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({"->", line, col});
            advance(2);
            continue;
        }
        if (c == '-' || punct.find(c) != std::string::npos) {
            out.push_back({std::string(1, c), line, col});
            advance(1);
            continue;
        }
        int sl = line, sc = col;
        std::string lab;
        while (i < text.size()) {
            char d = text[i];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '#' || d == '-' ||
                punct.find(d) != std::string::npos)
                break;
            lab.push_back(d);
            advance(1);
        }
        out.push_back({lab, sl, sc});
    }
    return out;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class TermParser {
public:
    TermParser(const Quiver& q, PrimeField f) : q_(q), f_(f) {}

    // term := (integer '*')? label ('*' label)*
    std::pair<Path, uint32_t> term(const std::vector<Tok>& t, size_t& i) const {
        uint32_t coeff = 1;
        if (i < t.size() && is_integer(t[i].s) &&
            i + 1 < t.size() && t[i + 1].s == "*" && q_.arrow_index(t[i].s) < 0) {
            coeff = f_.reduce(static_cast<long long>(std::stoll(t[i].s)));
            i += 2;
        }
        Path p;
        bool first = true;
        while (true) {
            if (i >= t.size()) throw ParseError("expected arrow label", 0, 0);
            int a = q_.arrow_index(t[i].s);
            if (a < 0) throw ParseError("unknown arrow '" + t[i].s + "'", t[i].line, t[i].col);
            const Arrow& ar = q_.arrows[a];
            if (first) {
                p.src = ar.src;
                p.tgt = ar.tgt;
                first = false;
            } else {
                if (p.tgt != ar.src)
                    throw ParseError("arrows do not compose at '" + t[i].s + "'", t[i].line, t[i].col);
                p.tgt = ar.tgt;
            }
            p.arrows.push_back(a);
            ++i;
            if (i < t.size() && t[i].s == "*") {
                ++i;
                continue;
            }
            break;
        }
        return {p, coeff};
    }

    // term (('+'|'-') term)* with an optional leading '-'
    LinComb expr(const std::vector<Tok>& t, size_t& i) const {
        LinComb c;
        uint32_t sign = 1;
        if (i < t.size() && t[i].s == "-") {
            sign = f_.neg(1);
            ++i;
        }
        while (true) {
            auto [p, k] = term(t, i);
            k = f_.mul(k, sign);
            uint32_t nv = f_.add(c.count(p) ? c[p] : 0, k);
            if (nv)
                c[p] = nv;
            else
                c.erase(p);
            if (i < t.size() && (t[i].s == "+" || t[i].s == "-")) {
                sign = t[i].s == "+" ? 1 : f_.neg(1);
                ++i;
                continue;
            }
            break;
        }
        return c;
    }

private:
    const Quiver& q_;
    PrimeField f_;
};

Path concat(const Path& a, const Path& b) {
    Path p;
    p.src = a.trivial() ? b.src : a.src;
    p.tgt = b.trivial() ? a.tgt : b.tgt;
    p.arrows = a.arrows;
    p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
    return p;
}

// Position of the first occurrence of `sub` in `word`, or -1.
int find_subword(const std::vector<int>& word, const std::vector<int>& sub) {
    if (sub.size() > word.size()) return -1;
    for (size_t i = 0; i + sub.size() <= word.size(); ++i)
        if (std::equal(sub.begin(), sub.end(), word.begin() + i)) return static_cast<int>(i);
    return -1;
}

}  // namespace

Presentation Presentation::parse(const std::string& text, PresentationOptions opt) {
    Presentation pres;
    pres.opt_ = opt;
    auto toks = tokenize(text);
    size_t i = 0;
    auto expect = [&](const std::string& s) {
        if (i >= toks.size())
            throw ParseError("expected '" + s + "' at end of input");
        if (toks[i].s != s)
            throw ParseError("expected '" + s + "', got '" + toks[i].s + "'", toks[i].line, toks[i].col);
        ++i;
    };
    expect("quiver");
    expect("vertices");
    expect(":");
    Quiver& q = pres.quiver_;
    while (i < toks.size() && toks[i].s != "arrow" && toks[i].s != "relations") {
        if (q.vertex_index(toks[i].s) >= 0)
            throw ParseError("duplicate vertex '" + toks[i].s + "'", toks[i].line, toks[i].col);
        q.vertices.push_back(toks[i].s);
        ++i;
    }
    if (q.vertices.empty()) throw ParseError("no vertices declared");
    while (i < toks.size() && toks[i].s == "arrow") {
        ++i;
        if (i >= toks.size()) throw ParseError("truncated arrow declaration");
        Tok name = toks[i++];
        if (q.arrow_index(name.s) >= 0)
            throw ParseError("duplicate arrow '" + name.s + "'", name.line, name.col);
        expect(":");
        if (i >= toks.size()) throw ParseError("truncated arrow declaration");
        Tok sv = toks[i++];
        expect("->");
        if (i >= toks.size()) throw ParseError("truncated arrow declaration");
        Tok tv = toks[i++];
        int s = q.vertex_index(sv.s), t = q.vertex_index(tv.s);
        if (s < 0) throw ParseError("unknown vertex '" + sv.s + "'", sv.line, sv.col);
        if (t < 0) throw ParseError("unknown vertex '" + tv.s + "'", tv.line, tv.col);
        q.arrows.push_back({name.s, s, t});
    }
    if (i < toks.size() && toks[i].s == "relations") {
        ++i;
        TermParser tp(q, opt.field);
        while (i < toks.size()) {
            expect("rel");
            expect(":");
            size_t start = i;
            LinComb c = tp.expr(toks, i);
            // admissibility checks are syntactic: every written path parallel, length >= 2
            (void)start;
            int src = -1, tgt = -1;
            for (const auto& [p, k] : c) {
                (void)k;
                if (p.length() < 2)
                    throw RelationTooShort("relation contains a path of length " +
                                           std::to_string(p.length()));
                if (src < 0) {
                    src = p.src;
                    tgt = p.tgt;
                } else if (p.src != src || p.tgt != tgt) {
                    throw NonParallelRelation("relation mixes non-parallel paths");
                }
            }
            if (!c.empty()) pres.relations_.push_back(c);
        }
    }
    if (i < toks.size())
        throw ParseError("unexpected token '" + toks[i].s + "'", toks[i].line, toks[i].col);
    pres.complete();
    pres.enumerate_basis();
    return pres;
}

LinComb Presentation::reduce(LinComb c) const {
    const PrimeField& F = opt_.field;
    bool changed = true;
    while (changed) {
        changed = false;
        // scan terms largest-first so the leading term settles early
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            const Path term = it->first;
            for (const Rule& r : rules_) {
                int pos = find_subword(term.arrows, r.lead.arrows);
                if (pos < 0) continue;
                uint32_t k = it->second;
                Path pre, suf;
                pre.arrows.assign(term.arrows.begin(), term.arrows.begin() + pos);
                suf.arrows.assign(term.arrows.begin() + pos + r.lead.length(), term.arrows.end());
                if (pre.arrows.empty()) {
                    pre.src = pre.tgt = term.src;
                } else {
                    pre.src = term.src;
                    pre.tgt = quiver_.arrows[pre.arrows.back()].tgt;
                }
                if (suf.arrows.empty()) {
                    suf.src = suf.tgt = term.tgt;
                } else {
                    suf.src = quiver_.arrows[suf.arrows.front()].src;
                    suf.tgt = term.tgt;
                }
                c.erase(term);
                for (const auto& [t, ct] : r.tail) {
                    Path np = concat(concat(pre, t), suf);
                    uint32_t nv = F.add(c.count(np) ? c[np] : 0, F.mul(k, ct));
                    if (nv)
                        c[np] = nv;
                    else
                        c.erase(np);
                }
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return c;
}

void Presentation::complete() {
    const PrimeField& F = opt_.field;
    std::deque<LinComb> pending(relations_.begin(), relations_.end());
    auto rule_to_comb = [&](const Rule& r) {
        LinComb c;
        c[r.lead] = 1;
        for (const auto& [t, k] : r.tail) c[t] = F.neg(k);
        return c;
    };
    size_t guard = 0;
    while (!pending.empty()) {
        if (++guard > 500000)
            throw NotAdmissibleWithinCap("rewriting completion exceeded its work bound");
        LinComb c = reduce(pending.front());
        pending.pop_front();
        if (c.empty()) continue;
        auto lead_it = c.rbegin();
        Path lead = lead_it->first;
        if (lead.length() > opt_.cap)
            throw NotAdmissibleWithinCap("leading word of length " + std::to_string(lead.length()) +
                                         " exceeds cap " + std::to_string(opt_.cap));
        uint32_t ic = F.inv(lead_it->second);
        Rule r;
        r.lead = lead;
        for (const auto& [t, k] : c) {
            if (path_eq(t, lead)) continue;
            r.tail[t] = F.mul(F.neg(k), ic);
        }
        // keep the system reduced: requeue rules that the new lead now touches
        std::vector<Rule> keep;
        for (Rule& old : rules_) {
            bool hit = find_subword(old.lead.arrows, r.lead.arrows) >= 0;
            if (!hit)
                for (const auto& [t, k] : old.tail) {
                    (void)k;
                    if (find_subword(t.arrows, r.lead.arrows) >= 0) {
                        hit = true;
                        break;
                    }
                }
            if (hit)
                pending.push_back(rule_to_comb(old));
            else
                keep.push_back(std::move(old));
        }
        rules_ = std::move(keep);
        rules_.push_back(r);
        size_t nr = rules_.size() - 1;
        // overlap ambiguities with every rule (including itself)
        for (size_t a = 0; a < rules_.size(); ++a) {
            for (auto [x, y] : {std::pair<size_t, size_t>{a, nr}, std::pair<size_t, size_t>{nr, a}}) {
                const Rule& rx = rules_[x];
                const Rule& ry = rules_[y];
                int lx = rx.lead.length(), ly = ry.lead.length();
                for (int k = 1; k < std::min(lx, ly); ++k) {
                    // suffix_k(rx.lead) == prefix_k(ry.lead)?
                    if (!std::equal(rx.lead.arrows.end() - k, rx.lead.arrows.end(),
                                    ry.lead.arrows.begin()))
                        continue;
                    Path suffix;
                    suffix.arrows.assign(ry.lead.arrows.begin() + k, ry.lead.arrows.end());
                    suffix.src = quiver_.arrows[suffix.arrows.front()].src;
                    suffix.tgt = ry.lead.tgt;
                    Path prefix;
                    prefix.arrows.assign(rx.lead.arrows.begin(), rx.lead.arrows.end() - k);
                    prefix.src = rx.lead.src;
                    prefix.tgt = quiver_.arrows[prefix.arrows.back()].tgt;
                    LinComb diff;
                    for (const auto& [t, kk] : rx.tail) {
                        Path np = concat(t, suffix);
                        uint32_t nv = F.add(diff.count(np) ? diff[np] : 0, kk);
                        if (nv)
                            diff[np] = nv;
                        else
                            diff.erase(np);
                    }
                    for (const auto& [t, kk] : ry.tail) {
                        Path np = concat(prefix, t);
                        uint32_t nv = F.sub(diff.count(np) ? diff[np] : 0, kk);
                        if (nv)
                            diff[np] = nv;
                        else
                            diff.erase(np);
                    }
                    if (!diff.empty()) pending.push_back(diff);
                }
            }
        }
    }
}

bool Presentation::confluent() const {
    for (const Rule& rx : rules_) {
        for (const Rule& ry : rules_) {
            int lx = rx.lead.length(), ly = ry.lead.length();
            for (int k = 1; k < std::min(lx, ly); ++k) {
                if (!std::equal(rx.lead.arrows.end() - k, rx.lead.arrows.end(),
                                ry.lead.arrows.begin()))
                    continue;
                Path suffix;
                suffix.arrows.assign(ry.lead.arrows.begin() + k, ry.lead.arrows.end());
                suffix.src = quiver_.arrows[suffix.arrows.front()].src;
                suffix.tgt = ry.lead.tgt;
                Path prefix;
                prefix.arrows.assign(rx.lead.arrows.begin(), rx.lead.arrows.end() - k);
                prefix.src = rx.lead.src;
                prefix.tgt = quiver_.arrows[prefix.arrows.back()].tgt;
                LinComb a, b;
                for (const auto& [t, kk] : rx.tail) a[concat(t, suffix)] = kk;
                for (const auto& [t, kk] : ry.tail) b[concat(prefix, t)] = kk;
                if (reduce(a) != reduce(b)) return false;
            }
        }
    }
    return true;
}

void Presentation::enumerate_basis() {
    basis_.clear();
    basis_index_.clear();
    auto irreducible = [&](const Path& p) {
        for (const Rule& r : rules_) {
            if (r.lead.length() > p.length()) continue;
            if (std::equal(r.lead.arrows.begin(), r.lead.arrows.end(),
                           p.arrows.end() - r.lead.length()))
                return false;
        }
        return true;
    };
    std::vector<Path> frontier;
    for (int v = 0; v < num_vertices(); ++v) {
        Path e{v, v, {}};
        frontier.push_back(e);
    }
    int maxlen = 0;
    while (!frontier.empty()) {
        for (const Path& p : frontier) {
            basis_.push_back(p);
            if (basis_.size() > opt_.max_dim)
                throw NotAdmissibleWithinCap("monomial basis exceeded the size bound " +
                                             std::to_string(opt_.max_dim));
            maxlen = std::max(maxlen, p.length());
        }
        std::vector<Path> next;
        for (const Path& p : frontier) {
            for (size_t a = 0; a < quiver_.arrows.size(); ++a) {
                if (quiver_.arrows[a].src != p.tgt) continue;
                Path np = p;
                np.arrows.push_back(static_cast<int>(a));
                np.tgt = quiver_.arrows[a].tgt;
                if (!irreducible(np)) continue;
                if (np.length() >= opt_.cap)
                    throw NotAdmissibleWithinCap("irreducible path of length " +
                                                 std::to_string(np.length()) +
                                                 " reaches cap " + std::to_string(opt_.cap));
                next.push_back(np);
            }
        }
        frontier = std::move(next);
    }
    std::stable_sort(basis_.begin(), basis_.end(), [](const Path& a, const Path& b) {
        return PathLess{}(a, b);
    });
    for (size_t k = 0; k < basis_.size(); ++k) basis_index_[basis_[k]] = static_cast<int>(k);
    loewy_length_ = 1 + maxlen;
}

int Presentation::basis_index(const Path& p) const {
    auto it = basis_index_.find(p);
    return it == basis_index_.end() ? -1 : it->second;
}

LinComb Presentation::normal_form(const LinComb& element) const { return reduce(element); }

LinComb Presentation::normal_form(const Path& p) const {
    LinComb c;
    c[p] = 1;
    return reduce(c);
}

LinComb Presentation::right_multiply_arrow(const Path& p, int arrow) const {
    Path np = p;
    np.arrows.push_back(arrow);
    np.tgt = quiver_.arrows[arrow].tgt;
    if (p.tgt != quiver_.arrows[arrow].src)
        throw DimensionMismatch("path and arrow do not compose");
    if (p.trivial()) np.src = quiver_.arrows[arrow].src;
    return normal_form(np);
}

std::vector<int> Presentation::arrows_from(int vertex) const {
    std::vector<int> out;
    for (size_t a = 0; a < quiver_.arrows.size(); ++a)
        if (quiver_.arrows[a].src == vertex) out.push_back(static_cast<int>(a));
    return out;
}

std::string Presentation::path_string(const Path& p) const {
    if (p.trivial()) return "e_" + quiver_.vertices[p.src];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += quiver_.arrows[p.arrows[i]].label;
    }
    return s;
}

LinComb parse_path_expr(const Presentation& pres, const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty()) throw ParseError("empty path expression");
    TermParser tp(pres.quiver(), pres.field());
    size_t i = 0;
    LinComb c = tp.expr(toks, i);
    if (i != toks.size())
        throw ParseError("unexpected token '" + toks[i].s + "' in path expression",
                         toks[i].line, toks[i].col);
    return c;
}

}  // namespace adr
