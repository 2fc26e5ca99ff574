#include "syzint/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace syzint {

namespace {

std::string print_monomial(const Registry& reg, const Monomial& m)
{
    std::string out;
    for (const auto& [v, k] : m.entries()) {
        if (!out.empty())
            out += "*";
        out += reg.var(v).name;
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

/// One polynomial as "c*mono + ..." without outer parentheses; highest
/// monomials first.
std::string poly_body(const Registry& reg, const Poly& p)
{
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        bool neg = sgn(a) < 0;
        if (neg)
            a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = print_monomial(reg, m);
        if (mono.empty())
            out += rat_to_string(a);
        else if (is_one(a))
            out += mono;
        else
            out += rat_to_string(a) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

template <class Sym, class NameFn>
std::string print_linexpr(const Registry& reg, const LinExpr<Sym>& e, NameFn&& name_of)
{
    if (e.is_zero())
        return "0";
    // symbol-major, highest derivative first within a symbol
    std::vector<std::pair<DerivTerm<Sym>, Poly>> terms(e.terms().begin(), e.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.sym != b.first.sym)
            return a.first.sym < b.first.sym;
        return b.first.idx < a.first.idx;
    });
    std::string out;
    for (const auto& [k, c] : terms) {
        std::string sym = name_of(k.sym);
        if (!k.idx.empty())
            sym += "_" + print_multiindex(reg, k.idx);
        std::string piece;
        bool neg = false;
        if (c.is_constant()) {
            Rational a = c.constant_value();
            neg = sgn(a) < 0;
            if (neg)
                a = -a;
            piece = is_one(a) ? sym : rat_to_string(a) + "*" + sym;
        } else if (c.terms().size() == 1) {
            const auto& [m, a0] = *c.terms().begin();
            Rational a = a0;
            neg = sgn(a) < 0;
            if (neg)
                a = -a;
            piece = (is_one(a) ? "" : rat_to_string(a) + "*") + print_monomial(reg, m) + "*" + sym;
        } else {
            piece = "(" + poly_body(reg, c) + ")*" + sym;
        }
        if (out.empty())
            out += (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

} // namespace

std::string print_poly(const Registry& reg, const Poly& p) { return poly_body(reg, p); }

std::string print_multiindex(const Registry& reg, const MultiIndex& j)
{
    std::string out;
    for (const auto& [v, k] : j.entries())
        for (std::uint32_t i = 0; i < k; ++i)
            out += reg.var(v).name;
    return out;
}

std::string print_expr(const Registry& reg, const FuncExpr& e)
{
    return print_linexpr(reg, e, [&](FuncId f) { return reg.func(f).name; });
}

std::string print_label_expr(const System& sys, const LabelExpr& e)
{
    return print_linexpr(sys.registry(), e, [&](LabelId l) { return sys.eq(l).name; });
}

// ---------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    std::string number()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected number", pos);
        return s.substr(start, pos - start);
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected identifier", pos);
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct Parsed {
    Poly p;
    FuncExpr f;

    bool poly_only() const { return f.is_zero(); }
};

struct ExprParser {
    const Registry& reg;
    Lexer lex;

    Parsed parse_expr()
    {
        Parsed acc;
        bool neg = false;
        if (lex.accept('-'))
            neg = true;
        else
            lex.accept('+');
        acc = parse_term();
        if (neg)
            acc = negate(acc);
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '+' || c == '-') {
                ++lex.pos;
                Parsed t = parse_term();
                if (c == '-')
                    t = negate(t);
                acc.p += t.p;
                acc.f += t.f;
            } else {
                break;
            }
        }
        return acc;
    }

    Parsed negate(Parsed x) { return Parsed{-x.p, -x.f}; }

    Parsed parse_term()
    {
        Parsed acc = parse_factor();
        while (lex.accept('*')) {
            Parsed b = parse_factor();
            acc = multiply(acc, b, lex.pos);
        }
        return acc;
    }

    Parsed multiply(const Parsed& a, const Parsed& b, std::size_t pos)
    {
        if (!a.poly_only() && !b.poly_only())
            throw ParseError("nonlinear term: product of two unknowns", pos);
        Parsed out;
        out.p = a.p * b.p;
        out.f = a.f.scaled(b.p) + b.f.scaled(a.p);
        return out;
    }

    Parsed parse_factor()
    {
        std::size_t start = lex.pos;
        char c = lex.peek();
        if (c == '(') {
            ++lex.pos;
            Parsed inner = parse_expr();
            lex.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.number();
            std::string den = "1";
            if (lex.accept('/'))
                den = lex.number();
            Rational q(num + "/" + den);
            q.canonicalize();
            Parsed out;
            out.p = Poly(q);
            return out;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = lex.ident();
            std::string base = id, suffix;
            if (auto us = id.find('_'); us != std::string::npos) {
                base = id.substr(0, us);
                suffix = id.substr(us + 1);
            }
            if (suffix.empty()) {
                if (auto v = reg.find_variable(base)) {
                    std::uint32_t k = 1;
                    if (lex.accept('^')) {
                        std::string e = lex.number();
                        k = std::uint32_t(std::stoul(e));
                        if (k == 0)
                            throw ParseError("zero exponent", start);
                    }
                    Parsed out;
                    out.p = Poly::monomial(Monomial::single(*v, k));
                    return out;
                }
                if (auto f = reg.find_function(base)) {
                    if (lex.peek() == '^')
                        throw ParseError("nonlinear term: power of unknown " + base, lex.pos);
                    Parsed out;
                    out.f = FuncExpr::symbol(*f);
                    return out;
                }
                throw ParseError("unknown symbol '" + base + "'", start);
            }
            auto f = reg.find_function(base);
            if (!f)
                throw ParseError("unknown function '" + base + "'", start);
            MultiIndex j = parse_suffix(suffix, start, *f);
            Parsed out;
            out.f = func_term(*f, j);
            return out;
        }
        throw ParseError("unexpected character", lex.pos);
    }

    /// Longest-match tokenization of a derivative suffix over the registered
    /// variable names; extra underscores are separators.
    MultiIndex parse_suffix(const std::string& suffix, std::size_t where, FuncId f)
    {
        MultiIndex j;
        std::size_t i = 0;
        while (i < suffix.size()) {
            if (suffix[i] == '_') {
                ++i;
                continue;
            }
            std::optional<VarId> best;
            std::size_t best_len = 0;
            for (std::uint32_t vi = 0; vi < reg.num_variables(); ++vi) {
                const std::string& name = reg.var(VarId{vi}).name;
                if (name.size() > best_len && suffix.compare(i, name.size(), name) == 0) {
                    best = VarId{vi};
                    best_len = name.size();
                }
            }
            if (!best)
                throw ParseError("bad derivative suffix '" + suffix + "'", where);
            if (!reg.func(f).deps.contains(*best))
                throw ParseError("function " + reg.func(f).name + " does not depend on " +
                                     reg.var(*best).name,
                                 where);
            j = j.plus(*best);
            i += best_len;
        }
        return j;
    }
};

} // namespace

FuncExpr parse_expression(const Registry& reg, const std::string& text)
{
    ExprParser p{reg, Lexer{text}};
    Parsed out = p.parse_expr();
    if (!p.lex.eof())
        throw ParseError("trailing input", p.lex.pos);
    if (!out.p.is_zero())
        throw ParseError("expression has a term with no unknown function", 0);
    return out.f;
}

SystemFile parse_system_file(const std::string& json_text)
{
    nlohmann::json j = nlohmann::json::parse(json_text);
    SystemFile f;
    for (const auto& v : j.at("variables"))
        f.variables.push_back(v.get<std::string>());
    for (const auto& fn : j.at("functions")) {
        std::vector<std::string> deps;
        for (const auto& d : fn.at("deps"))
            deps.push_back(d.get<std::string>());
        f.functions.emplace_back(fn.at("name").get<std::string>(), std::move(deps));
    }
    for (const auto& e : j.at("equations"))
        f.equations.push_back(e.get<std::string>());
    if (j.contains("options")) {
        const auto& o = j["options"];
        if (o.contains("ranking"))
            f.ranking = o["ranking"].get<std::string>();
        if (o.contains("strategy"))
            f.strategy = o["strategy"].get<std::string>();
        if (o.contains("max_steps"))
            f.max_steps = o["max_steps"].get<int>();
        if (o.contains("max_divergence_subset"))
            f.max_divergence_subset = o["max_divergence_subset"].get<int>();
    }
    return f;
}

SystemFile load_system_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system_file(ss.str());
}

Registry build_registry(const SystemFile& file)
{
    Registry reg;
    for (const auto& v : file.variables)
        reg.add_variable(v);
    for (const auto& [name, deps] : file.functions) {
        VarSet ds;
        for (const auto& d : deps) {
            auto v = reg.find_variable(d);
            if (!v)
                throw std::runtime_error("function " + name + " depends on unknown variable " + d);
            ds.add(*v);
        }
        reg.add_function(name, ds, FuncOrigin::original);
    }
    return reg;
}

System build_system(const SystemFile& file)
{
    Registry reg = build_registry(file);
    System sys(std::move(reg));
    for (const auto& e : file.equations)
        sys.add_basis_equation(parse_expression(sys.registry(), e));
    return sys;
}

} // namespace syzint
