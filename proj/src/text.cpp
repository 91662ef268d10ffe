#include "seqcalc/text.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "seqcalc/calculus.hpp"

namespace seqcalc {

ParseError::ParseError(int line, int column, const std::string& expected, const std::string& found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                         expected + (found.empty() ? "" : ", found " + found)),
      line_(line),
      column_(column),
      expected_(expected) {}

IndentationError::IndentationError(int line, int column, const std::string& what)
    : ParseError(line, column, what, "inconsistent indentation") {}

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Not, And, Or, Imp, Turnstile, Bot, Forall, Exists, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

const std::vector<std::pair<std::string, Tok>>& symbols() {
    static const std::vector<std::pair<std::string, Tok>> table = {
        {"=>", Tok::Turnstile}, {"⇒", Tok::Turnstile}, {"->", Tok::Imp}, {"→", Tok::Imp}, {"~", Tok::Not},
        {"¬", Tok::Not},        {"&", Tok::And},       {"∧", Tok::And},  {"|", Tok::Or},  {"∨", Tok::Or},
        {"⊥", Tok::Bot},        {"∀", Tok::Forall},    {"∃", Tok::Exists}, {"(", Tok::LParen}, {")", Tok::RParen},
        {",", Tok::Comma},      {".", Tok::Dot}};
    return table;
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& s, int line, int col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    int col = col0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) ++col;
        i += n;
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            std::string word = s.substr(i, j - i);
            Tok k = word == "bot" ? Tok::Bot : word == "forall" ? Tok::Forall : word == "exists" ? Tok::Exists : Tok::Ident;
            out.push_back({k, word, col});
            advance(j - i);
            continue;
        }
        bool hit = false;
        for (const auto& [sym, kind] : symbols()) {
            if (s.compare(i, sym.size(), sym) == 0) {
                out.push_back({kind, sym, col});
                advance(sym.size());
                hit = true;
                break;
            }
        }
        if (!hit) {
            std::size_t n = 1;
            while (i + n < s.size() && (static_cast<unsigned char>(s[i + n]) & 0xC0) == 0x80) ++n;
            throw ParseError(line, col, "formula", "'" + s.substr(i, n) + "'");
        }
    }
    out.push_back({Tok::End, "", col});
    return out;
}

bool is_predicate(const std::string& name) { return name[0] >= 'A' && name[0] <= 'Z'; }
bool looks_like_variable(const std::string& name) { return name[0] >= 'u' && name[0] <= 'z'; }

class Parser {
public:
    Parser(const std::string& text, int line, int col0, const ContextBindings* ctx = nullptr)
        : toks_(lex(text, line, col0)), line_(line), ctx_(ctx) {}

    Term term() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || is_predicate(t.text)) fail("term");
        std::string name = next().text;
        if (peek().kind == Tok::LParen) {
            next();
            std::vector<Term> args;
            if (peek().kind != Tok::RParen) {
                args.push_back(term());
                while (accept(Tok::Comma)) args.push_back(term());
            }
            expect(Tok::RParen, "')'");
            return Term::app(name, std::move(args));
        }
        if (std::find(bound_.begin(), bound_.end(), name) != bound_.end() || looks_like_variable(name))
            return Term::var(name);
        return Term::app(name);
    }

    FormulaPtr formula() {
        FormulaPtr l = disjunction();
        if (accept(Tok::Imp)) return imp(l, formula());
        return l;
    }

    Sequent sequent() {
        Sequent s;
        list(s.ante, Tok::Turnstile);
        expect(Tok::Turnstile, "'=>'");
        list(s.succ, Tok::End);
        return s;
    }

    void finish() {
        if (peek().kind != Tok::End) fail("end of input");
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
    const ContextBindings* ctx_;
    std::vector<std::string> bound_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    void expect(Tok k, const std::string& what) {
        if (!accept(k)) fail(what);
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, peek().column, what, describe(peek())); }

    void list(Multiset& out, Tok stop) {
        if (peek().kind == stop) return;
        for (;;) {
            const Token& t = peek();
            bool expanded = false;
            if (ctx_ && t.kind == Tok::Ident) {
                auto it = ctx_->find(t.text);
                Tok after = toks_[pos_ + 1].kind;
                if (it != ctx_->end() && (after == Tok::Comma || after == stop)) {
                    next();
                    out.insert(out.end(), it->second.begin(), it->second.end());
                    expanded = true;
                }
            }
            if (!expanded) out.push_back(formula());
            if (!accept(Tok::Comma)) break;
        }
    }

    FormulaPtr disjunction() {
        FormulaPtr l = conjunction();
        while (accept(Tok::Or)) l = disj(l, conjunction());
        return l;
    }

    FormulaPtr conjunction() {
        FormulaPtr l = unary();
        while (accept(Tok::And)) l = conj(l, unary());
        return l;
    }

    FormulaPtr unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not:
                next();
                return neg(unary());
            case Tok::Bot:
                next();
                return bottom();
            case Tok::Forall:
            case Tok::Exists: {
                Conn q = t.kind == Tok::Forall ? Conn::Forall : Conn::Exists;
                next();
                if (peek().kind != Tok::Ident || is_predicate(peek().text)) fail("bound variable");
                std::string x = next().text;
                expect(Tok::Dot, "'.'");
                bound_.push_back(x);
                FormulaPtr body = formula();
                bound_.pop_back();
                return quantifier(q, x, body);
            }
            case Tok::LParen: {
                next();
                FormulaPtr f = formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident: {
                if (!is_predicate(t.text)) fail("formula");
                std::string p = next().text;
                std::vector<Term> args;
                if (accept(Tok::LParen)) {
                    if (peek().kind != Tok::RParen) {
                        args.push_back(term());
                        while (accept(Tok::Comma)) args.push_back(term());
                    }
                    expect(Tok::RParen, "')'");
                }
                return atom(p, std::move(args));
            }
            default:
                fail("formula");
        }
    }
};

void check_arity(const std::vector<FormulaPtr>& fs, int line) {
    std::string err = arity_error(fs);
    if (!err.empty()) throw ParseError(line, 1, "consistent arities", err);
}

// ---------------------------------------------------------------- rendering

struct Render {
    Notation n;
    std::vector<std::string> bound;

    std::string sym(Conn c) const {
        static const char* ascii[] = {"", "bot", "~", " & ", " | ", " -> ", "forall ", "exists "};
        static const char* uni[] = {"", "⊥", "¬", " ∧ ", " ∨ ", " → ", "∀", "∃"};
        static const char* tex[] = {"", "\\bot", "\\lnot ", " \\land ", " \\lor ", " \\to ", "\\forall ", "\\exists "};
        int i = static_cast<int>(c);
        return n == Notation::Ascii ? ascii[i] : n == Notation::Unicode ? uni[i] : tex[i];
    }

    std::string term(const Term& t) const {
        if (t.is_var()) return t.name;
        std::string out = t.name;
        bool clash = std::find(bound.begin(), bound.end(), t.name) != bound.end();
        if (t.args.empty()) return (looks_like_variable(t.name) || clash) ? out + "()" : out;
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + term(t.args[i]);
        return out + ")";
    }

    // prec: 0 top, 1 right of ->, 2 left of -> / operand of |, 3 operand of &, 4 operand of ~
    std::string formula(const FormulaPtr& f, int prec) {
        auto wrap = [&](int mine, std::string s) { return mine < prec ? "(" + s + ")" : s; };
        switch (f->conn()) {
            case Conn::Atom: {
                std::string out = f->name();
                if (!f->args().empty()) {
                    out += "(";
                    for (std::size_t i = 0; i < f->args().size(); ++i) out += (i ? ", " : "") + term(f->args()[i]);
                    out += ")";
                }
                return out;
            }
            case Conn::Bottom:
                return sym(Conn::Bottom);
            case Conn::Not:
                return sym(Conn::Not) + formula(f->lhs(), 4);
            case Conn::And:
                return wrap(3, formula(f->lhs(), 3) + sym(Conn::And) + formula(f->rhs(), 4));
            case Conn::Or:
                return wrap(2, formula(f->lhs(), 2) + sym(Conn::Or) + formula(f->rhs(), 3));
            case Conn::Imp:
                return wrap(1, formula(f->lhs(), 2) + sym(Conn::Imp) + formula(f->rhs(), 1));
            case Conn::Forall:
            case Conn::Exists: {
                bound.push_back(f->name());
                std::string body = formula(f->body(), 0);
                bound.pop_back();
                std::string s = sym(f->conn()) + f->name() + (n == Notation::Latex ? ".\\, " : n == Notation::Ascii ? ". " : ".") + body;
                return prec > 0 ? "(" + s + ")" : s;
            }
        }
        return "";
    }
};

std::string side(const Multiset& m, Notation n) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += Render{n, {}}.formula(m[i], 0);
    }
    return out;
}

}  // namespace

Term parse_term(const std::string& text) {
    Parser p(text, 1, 1);
    Term t = p.term();
    p.finish();
    return t;
}

FormulaPtr parse_formula(const std::string& text) {
    Parser p(text, 1, 1);
    FormulaPtr f = p.formula();
    p.finish();
    check_arity({f}, 1);
    return f;
}

namespace {

Sequent parse_sequent_at(const std::string& text, int line, int col, const ContextBindings& ctx) {
    Parser p(text, line, col, &ctx);
    Sequent s = p.sequent();
    p.finish();
    std::vector<FormulaPtr> all = s.ante;
    all.insert(all.end(), s.succ.begin(), s.succ.end());
    check_arity(all, line);
    return s;
}

}  // namespace

Sequent parse_sequent(const std::string& text, const ContextBindings& contexts) {
    return parse_sequent_at(text, 1, 1, contexts);
}

std::string to_text(const Term& t) { return Render{Notation::Ascii, {}}.term(t); }

std::string to_text(const FormulaPtr& f, Notation n) { return Render{n, {}}.formula(f, 0); }

std::string to_text(const Sequent& s, Notation n) {
    std::string a = side(s.ante, n), c = side(s.succ, n);
    std::string arrow = n == Notation::Ascii ? "=>" : n == Notation::Unicode ? "⇒" : "\\Rightarrow";
    return (a.empty() ? "" : a + " ") + arrow + (c.empty() ? "" : " " + c);
}

// ---------------------------------------------------------------- proof trees

std::size_t ProofTree::node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
}

std::size_t ProofTree::height() const {
    std::size_t h = 0;
    for (const auto& c : children) h = std::max(h, c.height());
    return h + 1;
}

bool ProofTree::same_as(const ProofTree& o) const {
    if (!(sequent == o.sequent) || rule != o.rule || hints != o.hints || children.size() != o.children.size())
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i].same_as(o.children[i])) return false;
    return true;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Expectation parse_expectation(const std::string& v, int line) {
    std::istringstream in(v);
    std::string word;
    in >> word;
    Expectation e;
    if (word == "valid") return e;
    if (word != "invalid") throw ParseError(line, 1, "'valid' or 'invalid'", "'" + word + "'");
    e.valid = false;
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (!rest.empty() && rest[0] == '[') {
        auto close = rest.find(']');
        if (close == std::string::npos) throw ParseError(line, 1, "']'");
        std::string inside = rest.substr(1, close - 1);
        std::replace(inside.begin(), inside.end(), ',', ' ');
        std::istringstream ps(inside);
        std::size_t k;
        while (ps >> k) e.path.push_back(k);
        rest = trim(rest.substr(close + 1));
    }
    e.reason = rest;
    return e;
}

struct FlatNode {
    int indent;
    int parent;
    int line;
    ProofTree node;
    std::vector<int> kids;
};

ProofTree assemble(std::vector<FlatNode>& flat, int i) {
    ProofTree t = std::move(flat[i].node);
    for (int k : flat[i].kids) t.children.push_back(assemble(flat, k));
    return t;
}

}  // namespace

ProofScript parse_proof_script(const std::string& text, const ContextBindings& overrides) {
    ProofScript out;
    ContextBindings ctx;
    std::vector<FlatNode> flat;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool in_body = false;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        if (!in_body) {
            auto colon = t.find(':');
            std::string key = colon == std::string::npos ? "" : trim(t.substr(0, colon));
            bool known = key == "calculus" || key == "id" || key == "provenance" || key == "expected" || key == "context";
            bool header = known || (!key.empty() &&
                                    std::all_of(key.begin(), key.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }) &&
                                    t.find("=>") == std::string::npos && t.find("⇒") == std::string::npos);
            if (header) {
                std::string value = trim(t.substr(colon + 1));
                if (key == "calculus") {
                    out.calculus = value;
                } else if (key == "id") {
                    out.id = value;
                } else if (key == "provenance") {
                    out.provenance = value;
                } else if (key == "expected") {
                    out.expected = parse_expectation(value, line);
                } else if (key == "context") {
                    auto eq = value.find('=');
                    if (eq == std::string::npos) throw ParseError(line, static_cast<int>(colon) + 2, "'name = formulas'");
                    std::string name = trim(value.substr(0, eq));
                    std::string body = trim(value.substr(eq + 1));
                    Multiset m;
                    if (!body.empty()) m = parse_sequent_at("=> " + body, line, 1, ctx).succ;
                    if (auto o = overrides.find(name); o != overrides.end()) m = o->second;
                    ctx[name] = m;
                    out.contexts.emplace_back(name, m);
                } else {
                    throw ParseError(line, 1, "header key (calculus, context, id, expected, provenance)", "'" + key + "'");
                }
                continue;
            }
            in_body = true;
        }
        std::size_t tab = raw.find('\t');
        if (tab != std::string::npos && tab < raw.find_first_not_of(" \t"))
            throw IndentationError(line, static_cast<int>(tab) + 1, "spaces, not tabs");
        int indent = static_cast<int>(raw.find_first_not_of(' '));
        std::string body = raw.substr(indent);
        while (!body.empty() && (body.back() == ' ' || body.back() == '\r')) body.pop_back();
        if (body.empty() || body.back() != ']') throw ParseError(line, static_cast<int>(raw.size()) + 1, "'[rule]' at end of line");
        std::size_t open = body.rfind('[');
        if (open == std::string::npos) throw ParseError(line, indent + 1, "'['");
        FlatNode fn{indent, -1, line, {}, {}};
        fn.node.sequent = parse_sequent_at(body.substr(0, open), line, indent + 1, ctx);
        std::string annot = body.substr(open + 1, body.size() - open - 2);
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            std::size_t semi = annot.find(';', start);
            parts.push_back(trim(annot.substr(start, semi - start)));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        fn.node.rule = parts[0];
        if (fn.node.rule.empty()) throw ParseError(line, indent + static_cast<int>(open) + 2, "rule name");
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto eq = parts[i].find('=');
            if (eq == std::string::npos) throw ParseError(line, indent + static_cast<int>(open) + 2, "hint 'key=value'", "'" + parts[i] + "'");
            fn.node.hints[trim(parts[i].substr(0, eq))] = trim(parts[i].substr(eq + 1));
        }

        if (flat.empty()) {
            if (indent != 0) throw IndentationError(line, 1, "root at column 1");
        } else {
            int p = static_cast<int>(flat.size()) - 1;
            while (p >= 0 && flat[p].indent >= indent) p = flat[p].parent;
            if (p < 0) throw IndentationError(line, indent + 1, "a single root");
            if (!flat[p].kids.empty() && flat[flat[p].kids.back()].indent != indent)
                throw IndentationError(line, indent + 1, "sibling indentation " + std::to_string(flat[flat[p].kids.back()].indent));
            fn.parent = p;
            flat[p].kids.push_back(static_cast<int>(flat.size()));
        }
        flat.push_back(std::move(fn));
    }
    if (flat.empty()) throw ParseError(line + 1, 1, "proof body");
    out.tree = assemble(flat, 0);
    return out;
}

namespace {

void script_lines(const ProofTree& t, int depth, std::string& out) {
    out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + to_text(t.sequent) + "  [" + t.rule;
    for (const auto& [k, v] : t.hints) out += "; " + k + "=" + v;
    out += "]\n";
    for (const auto& c : t.children) script_lines(c, depth + 1, out);
}

nlohmann::json to_json(const ProofTree& t) {
    nlohmann::json j;
    auto arr = [](const Multiset& m) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& f : m) a.push_back(to_text(f));
        return a;
    };
    j["sequent"] = {{"ante", arr(t.sequent.ante)}, {"succ", arr(t.sequent.succ)}};
    j["rule"] = t.rule;
    j["hints"] = nlohmann::json::object();
    for (const auto& [k, v] : t.hints) j["hints"][k] = v;
    j["children"] = nlohmann::json::array();
    for (const auto& c : t.children) j["children"].push_back(to_json(c));
    return j;
}

ProofTree from_json(const nlohmann::json& j) {
    ProofTree t;
    for (const auto& f : j.at("sequent").at("ante")) t.sequent.ante.push_back(parse_formula(f.get<std::string>()));
    for (const auto& f : j.at("sequent").at("succ")) t.sequent.succ.push_back(parse_formula(f.get<std::string>()));
    t.rule = j.at("rule").get<std::string>();
    if (j.contains("hints"))
        for (const auto& [k, v] : j.at("hints").items()) t.hints[k] = v.get<std::string>();
    if (j.contains("children"))
        for (const auto& c : j.at("children")) t.children.push_back(from_json(c));
    return t;
}

std::string latex_label(const std::string& rule) {
    std::string out;
    const std::string label = canonical_rule_name(rule);
    static const std::vector<std::pair<std::string, std::string>> map = {
        {"∧", "\\land"}, {"∨", "\\lor"}, {"→", "\\to"}, {"¬", "\\lnot"}, {"⊥", "\\bot"}, {"∀", "\\forall"}, {"∃", "\\exists"}};
    for (std::size_t i = 0; i < label.size();) {
        bool hit = false;
        for (const auto& [u, tex] : map) {
            if (label.compare(i, u.size(), u) == 0) {
                out += tex + std::string(" ");
                i += u.size();
                hit = true;
                break;
            }
        }
        if (!hit) out += label[i++];
    }
    return "$\\mathrm{" + out + "}$";
}

void latex_lines(const ProofTree& t, std::string& out) {
    for (const auto& c : t.children) latex_lines(c, out);
    std::string seq = "$" + to_text(t.sequent, Notation::Latex) + "$";
    static const char* infer[] = {"\\AxiomC", "\\UnaryInfC", "\\BinaryInfC", "\\TrinaryInfC"};
    if (t.children.empty()) {
        out += "\\AxiomC{" + seq + "}\n";
        return;
    }
    std::size_t k = std::min<std::size_t>(t.children.size(), 3);
    out += "\\RightLabel{\\scriptsize " + latex_label(t.rule) + "}\n";
    out += std::string(infer[k]) + "{" + seq + "}\n";
}

}  // namespace

std::string render_script(const ProofTree& tree, const std::string& calculus) {
    std::string out;
    if (!calculus.empty()) out += "calculus: " + calculus + "\n";
    script_lines(tree, 0, out);
    return out;
}

std::string render_json(const ProofTree& tree) { return to_json(tree).dump(2) + "\n"; }

ProofTree parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), "JSON proof tree", e.what());
    }
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, "JSON proof tree", e.what());
    }
}

std::string render_latex(const ProofTree& tree) {
    std::string out = "\\begin{prooftree}\n";
    latex_lines(tree, out);
    return out + "\\end{prooftree}\n";
}

}  // namespace seqcalc
