#pragma once

#include "presentation.hpp"
#include "module.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace ayt {

/* Parse error with location. */
struct ParseError : AytError {
    ParseError(size_t line, size_t col, const std::string& msg)
        : AytError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg)
    {
    }
};

struct ModuleSpecText {
    std::string name;
    std::map<int, int> dims;                             /* vertex (0-based) -> dim */
    std::map<std::string, std::vector<std::vector<std::pair<long long, long long>>>> maps;
    size_t line = 0;
};

struct AlgebraFile {
    PathPresentation pres;
    std::vector<ModuleSpecText> modules;
    struct ComplexText {
        std::string name;
        std::map<int, std::vector<int>> terms; /* degree -> vertex list (0-based) */
        std::map<int, std::vector<std::vector<std::pair<long long, long long>>>> maps;
    };
    std::vector<ComplexText> complexes;
    bool field_set = false;
};

namespace iodetail {

inline std::string strip(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string w;
    while (iss >> w)
        out.push_back(w);
    return out;
}

/* coefficient literal: [+-]digits[/digits] */
inline std::pair<long long, long long> parse_coeff(const std::string& s, size_t line)
{
    long long num = 0, den = 1;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        neg = s[i++] == '-';
    AYT_CHECK(i < s.size() && isdigit(s[i]), "bad coefficient at line " + std::to_string(line));
    while (i < s.size() && isdigit(s[i]))
        num = num * 10 + (s[i++] - '0');
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = 0;
        while (i < s.size() && isdigit(s[i]))
            den = den * 10 + (s[i++] - '0');
        AYT_CHECK(den > 0, "bad denominator at line " + std::to_string(line));
    }
    AYT_CHECK(i == s.size(), "trailing characters in coefficient at line " + std::to_string(line));
    return {neg ? -num : num, den};
}

/* matrix literal [[a,b],[c,d]] with integer or p/q entries */
inline std::vector<std::vector<std::pair<long long, long long>>>
parse_matrix_literal(const std::string& s, size_t line)
{
    std::vector<std::vector<std::pair<long long, long long>>> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && isspace((unsigned char)s[i]))
            ++i;
    };
    skip();
    AYT_CHECK(i < s.size() && s[i] == '[', "expected '[' at line " + std::to_string(line));
    ++i;
    skip();
    if (i < s.size() && s[i] == ']')
        return out; /* empty matrix */
    while (true) {
        skip();
        AYT_CHECK(i < s.size() && s[i] == '[', "expected row '[' at line " + std::to_string(line));
        ++i;
        std::vector<std::pair<long long, long long>> row;
        skip();
        if (i < s.size() && s[i] == ']')
            ++i;
        else
            while (true) {
                skip();
                size_t j = i;
                while (j < s.size() && s[j] != ',' && s[j] != ']')
                    ++j;
                row.push_back(parse_coeff(strip(s.substr(i, j - i)), line));
                i = j;
                AYT_CHECK(i < s.size(), "unterminated row at line " + std::to_string(line));
                if (s[i] == ']') {
                    ++i;
                    break;
                }
                ++i; /* comma */
            }
        out.push_back(std::move(row));
        skip();
        AYT_CHECK(i < s.size(), "unterminated matrix at line " + std::to_string(line));
        if (s[i] == ']')
            break;
        AYT_CHECK(s[i] == ',', "expected ',' between rows at line " + std::to_string(line));
        ++i;
    }
    return out;
}

} // namespace iodetail

/* Line-oriented algebra file:
 *   field p=2 | field rational
 *   vertex <count>
 *   arrow <label>: <src> -> <dst>
 *   relation <term> <term> ...     term = [+-][c[/d]*]path, path = a.b.c
 *   cap path=<n>
 *   module <name> ... end   (dim <v>: <d>; map <arrow>: [[..],[..]])
 *   complex <name> ... end  (term <deg>: P<v> ...; map <deg>: [[..]])
 * '#' starts a comment. */
inline AlgebraFile parse_algebra_text(const std::string& text)
{
    using namespace iodetail;
    AlgebraFile out;
    out.pres.cap = 0;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    ModuleSpecText* cur_mod = nullptr;
    AlgebraFile::ComplexText* cur_cpx = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = strip(line);
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        std::string rest = strip(line.substr(kw.size()));
        if (kw == "end") {
            cur_mod = nullptr;
            cur_cpx = nullptr;
        } else if (kw == "field") {
            if (rest == "rational")
                out.pres.field = FieldSpec::Q();
            else if (rest.rfind("p=", 0) == 0) {
                long long p = std::stoll(rest.substr(2));
                AYT_CHECK(is_prime_ll(p), "line " + std::to_string(lineno) +
                                              ": field characteristic must be prime");
                out.pres.field = FieldSpec::Fp(p);
            } else
                throw ParseError(lineno, 7, "expected 'p=<prime>' or 'rational'");
            out.field_set = true;
        } else if (kw == "vertex") {
            out.pres.quiver.nv = std::stoi(rest);
            AYT_CHECK(out.pres.quiver.nv > 0,
                      "line " + std::to_string(lineno) + ": vertex count must be positive");
        } else if (kw == "arrow") {
            /* arrow <label>: <src> -> <dst> */
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError(lineno, kw.size() + 2, "expected 'label: src -> dst'");
            std::string label = strip(rest.substr(0, colon));
            auto arr = rest.find("->", colon);
            if (arr == std::string::npos)
                throw ParseError(lineno, colon + 1, "expected '->'");
            int src = std::stoi(strip(rest.substr(colon + 1, arr - colon - 1)));
            int dst = std::stoi(strip(rest.substr(arr + 2)));
            if (src < 1 || src > out.pres.quiver.nv)
                throw ParseError(lineno, colon + 1, "unknown source vertex");
            if (dst < 1 || dst > out.pres.quiver.nv)
                throw ParseError(lineno, arr + 2, "unknown target vertex");
            AYT_CHECK(out.pres.quiver.arrow_index(label) < 0,
                      "line " + std::to_string(lineno) + ": duplicate arrow label " + label);
            out.pres.quiver.arrows.push_back({label, src - 1, dst - 1});
        } else if (kw == "relation") {
            Relation rel;
            for (auto& tok : split_ws(rest)) {
                PathTerm term;
                std::string t = tok;
                bool neg = false;
                if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
                    neg = t[0] == '-';
                    t = t.substr(1);
                }
                if (auto star = t.find('*'); star != std::string::npos) {
                    std::tie(term.num, term.den) = parse_coeff(t.substr(0, star), lineno);
                    t = t.substr(star + 1);
                }
                if (neg)
                    term.num = -term.num;
                /* path a.b.c */
                std::istringstream ps(t);
                std::string lbl;
                int prev_dst = -1;
                while (std::getline(ps, lbl, '.')) {
                    int ai = out.pres.quiver.arrow_index(lbl);
                    if (ai < 0)
                        throw ParseError(lineno, 1, "unknown arrow '" + lbl + "'");
                    if (prev_dst >= 0 && out.pres.quiver.arrows[ai].src != prev_dst)
                        throw ParseError(lineno, 1,
                                         "relation path not composable at '" + lbl + "'");
                    prev_dst = out.pres.quiver.arrows[ai].dst;
                    term.arrows.push_back(ai);
                }
                if (term.arrows.empty())
                    throw ParseError(lineno, 1, "empty path in relation");
                rel.terms.push_back(std::move(term));
            }
            AYT_CHECK(!rel.terms.empty(),
                      "line " + std::to_string(lineno) + ": empty relation");
            out.pres.relations.push_back(std::move(rel));
        } else if (kw == "cap") {
            if (rest.rfind("path=", 0) != 0)
                throw ParseError(lineno, 5, "expected 'path=<n>'");
            out.pres.cap = std::stoi(rest.substr(5));
        } else if (kw == "module") {
            out.modules.push_back(ModuleSpecText{rest, {}, {}, lineno});
            cur_mod = &out.modules.back();
        } else if (kw == "complex") {
            out.complexes.push_back({rest, {}, {}});
            cur_cpx = &out.complexes.back();
        } else if (kw == "dim" && cur_mod) {
            auto colon = rest.find(':');
            AYT_CHECK(colon != std::string::npos,
                      "line " + std::to_string(lineno) + ": expected 'dim <v>: <d>'");
            int v = std::stoi(strip(rest.substr(0, colon)));
            AYT_CHECK(v >= 1 && v <= out.pres.quiver.nv,
                      "line " + std::to_string(lineno) + ": unknown vertex");
            cur_mod->dims[v - 1] = std::stoi(strip(rest.substr(colon + 1)));
        } else if (kw == "map" && cur_mod) {
            auto colon = rest.find(':');
            AYT_CHECK(colon != std::string::npos,
                      "line " + std::to_string(lineno) + ": expected 'map <arrow>: [[..]]'");
            std::string lbl = strip(rest.substr(0, colon));
            AYT_CHECK(out.pres.quiver.arrow_index(lbl) >= 0,
                      "line " + std::to_string(lineno) + ": unknown arrow '" + lbl + "'");
            cur_mod->maps[lbl] =
                iodetail::parse_matrix_literal(strip(rest.substr(colon + 1)), lineno);
        } else if (kw == "term" && cur_cpx) {
            auto colon = rest.find(':');
            AYT_CHECK(colon != std::string::npos,
                      "line " + std::to_string(lineno) + ": expected 'term <deg>: P..'");
            int deg = std::stoi(strip(rest.substr(0, colon)));
            std::vector<int> parts;
            for (auto& tok : split_ws(strip(rest.substr(colon + 1)))) {
                AYT_CHECK(tok.size() >= 2 && tok[0] == 'P',
                          "line " + std::to_string(lineno) + ": summands are P<vertex>");
                int v = std::stoi(tok.substr(1));
                AYT_CHECK(v >= 1 && v <= out.pres.quiver.nv,
                          "line " + std::to_string(lineno) + ": unknown vertex in " + tok);
                parts.push_back(v - 1);
            }
            cur_cpx->terms[deg] = parts;
        } else if (kw == "map" && cur_cpx) {
            auto colon = rest.find(':');
            AYT_CHECK(colon != std::string::npos,
                      "line " + std::to_string(lineno) + ": expected 'map <deg>: [[..]]'");
            int deg = std::stoi(strip(rest.substr(0, colon)));
            cur_cpx->maps[deg] =
                iodetail::parse_matrix_literal(strip(rest.substr(colon + 1)), lineno);
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + kw + "'");
        }
    }
    AYT_CHECK(out.field_set, "algebra file: missing 'field' line");
    AYT_CHECK(out.pres.quiver.nv > 0, "algebra file: missing 'vertex' line");
    AYT_CHECK(out.pres.cap > 0, "algebra file: missing 'cap path=<n>' line");
    return out;
}

inline AlgebraFile parse_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    AYT_CHECK(in.good(), "cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str());
}

/* Build an FDModule from its text block (per-arrow matrices of left
 * multiplication, mapping the target-vertex block to the source-vertex
 * block). Coordinates are blocks in vertex order. */
template <class K>
FDModule<K> module_from_text(const PresentedAlgebra<K>& pa, const ModuleSpecText& mt)
{
    const auto& q = pa.quiver;
    const auto& alg = *pa.alg;
    std::vector<size_t> off(q.nv + 1, 0);
    for (int v = 0; v < q.nv; ++v) {
        auto it = mt.dims.find(v);
        off[v + 1] = off[v] + (it == mt.dims.end() ? 0 : (size_t)it->second);
    }
    size_t dim = off[q.nv];
    /* arrow action matrices */
    std::vector<Matrix<K>> arrow_act(q.arrows.size(), Matrix<K>(dim, dim));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto it = mt.maps.find(q.arrows[a].label);
        size_t rs = off[q.arrows[a].src + 1] - off[q.arrows[a].src];
        size_t cs = off[q.arrows[a].dst + 1] - off[q.arrows[a].dst];
        if (it == mt.maps.end()) {
            AYT_CHECK(rs == 0 || cs == 0, "module " + mt.name + ": missing map for arrow " +
                                              q.arrows[a].label);
            continue;
        }
        const auto& rows = it->second;
        AYT_CHECK(rows.size() == rs, "module " + mt.name + ": map " + q.arrows[a].label +
                                         " row count != dim at source vertex");
        for (size_t i = 0; i < rs; ++i) {
            AYT_CHECK(rows[i].size() == cs, "module " + mt.name + ": map " +
                                                q.arrows[a].label + " column count mismatch");
            for (size_t j = 0; j < cs; ++j)
                arrow_act[a].at(off[q.arrows[a].src] + i, off[q.arrows[a].dst] + j) =
                    scalar_from_frac<K>(rows[i][j].first, rows[i][j].second, alg.field);
        }
    }
    FDModule<K> m;
    m.algebra = AlgebraPtr<K>(pa.alg);
    m.dim = dim;
    m.name = mt.name;
    m.act.resize(alg.dim);
    for (size_t b = 0; b < alg.dim; ++b) {
        const auto& arrows = pa.basis_arrows[b];
        if (arrows.empty()) { /* trivial path e_v: block projection */
            Matrix<K> pr(dim, dim);
            int v = pa.basis_src[b];
            for (size_t i = off[v]; i < off[v + 1]; ++i)
                pr.at(i, i) = K(1);
            m.act[b] = std::move(pr);
        } else {
            Matrix<K> acc = arrow_act[arrows[0]];
            for (size_t k = 1; k < arrows.size(); ++k)
                acc = acc * arrow_act[arrows[k]];
            m.act[b] = std::move(acc);
        }
    }
    m.verify(); /* rejects inputs that do not satisfy the relations */
    return m;
}

/* present a PathPresentation back as text */
inline std::string presentation_to_text(const PathPresentation& p)
{
    std::ostringstream os;
    os << "field " << (p.field.rational ? "rational" : "p=" + std::to_string(p.field.p))
       << "\n";
    os << "vertex " << p.quiver.nv << "\n";
    for (auto& a : p.quiver.arrows)
        os << "arrow " << a.label << ": " << a.src + 1 << " -> " << a.dst + 1 << "\n";
    for (auto& r : p.relations) {
        os << "relation";
        for (auto& t : r.terms) {
            os << " ";
            if (t.num >= 0)
                os << "+";
            if (t.den != 1)
                os << t.num << "/" << t.den << "*";
            else if (t.num != 1 && t.num != -1)
                os << t.num << "*";
            else if (t.num == -1)
                os << "-";
            std::string path;
            for (size_t k = 0; k < t.arrows.size(); ++k)
                path += (k ? "." : "") + p.quiver.arrows[t.arrows[k]].label;
            os << path;
        }
        os << "\n";
    }
    os << "cap path=" << p.cap << "\n";
    return os.str();
}

} // namespace ayt
