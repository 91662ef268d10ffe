#include "seqcalc/syntax.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace seqcalc {

Term Term::var(std::string name) { return Term{Kind::Var, std::move(name), {}}; }

Term Term::app(std::string symbol, std::vector<Term> args) {
    return Term{Kind::App, std::move(symbol), std::move(args)};
}

void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.is_var()) {
        out.insert(t.name);
        return;
    }
    for (const auto& a : t.args) collect_vars(a, out);
}

namespace {

void term_canon(const Term& t, const std::vector<std::string>& env, std::string& out) {
    if (t.is_var()) {
        for (std::size_t i = env.size(); i-- > 0;) {
            if (env[i] == t.name) {
                out += '#';
                out += std::to_string(env.size() - 1 - i);
                return;
            }
        }
        out += '$';
        out += t.name;
        return;
    }
    out += t.name;
    if (!t.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ',';
            term_canon(t.args[i], env, out);
        }
        out += ')';
    }
}

bool touches(const Formula& f, const std::vector<std::string>& env) {
    for (const auto& v : env)
        if (f.free_vars().count(v)) return true;
    return false;
}

void canon(const Formula& f, std::vector<std::string>& env, std::string& out) {
    if (env.empty() || !touches(f, env)) {
        out += f.key();
        return;
    }
    switch (f.conn()) {
        case Conn::Atom:
            out += "p:";
            out += f.name();
            if (!f.args().empty()) {
                out += '(';
                for (std::size_t i = 0; i < f.args().size(); ++i) {
                    if (i) out += ',';
                    term_canon(f.args()[i], env, out);
                }
                out += ')';
            }
            return;
        case Conn::Bottom:
            out += "_|_";
            return;
        case Conn::Not:
            out += '~';
            canon(*f.lhs(), env, out);
            return;
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            out += f.conn() == Conn::And ? "&(" : f.conn() == Conn::Or ? "|(" : ">(";
            canon(*f.lhs(), env, out);
            out += ',';
            canon(*f.rhs(), env, out);
            out += ')';
            return;
        case Conn::Forall:
        case Conn::Exists:
            out += f.conn() == Conn::Forall ? "A." : "E.";
            env.push_back(f.name());
            canon(*f.body(), env, out);
            env.pop_back();
            return;
    }
}

}  // namespace

std::string term_key(const Term& t) {
    std::string out;
    term_canon(t, {}, out);
    return out;
}

Formula::Formula(Token, Conn c, std::string name, std::vector<Term> args, FormulaPtr l, FormulaPtr r)
    : conn_(c), name_(std::move(name)), args_(std::move(args)), lhs_(std::move(l)), rhs_(std::move(r)) {
    switch (conn_) {
        case Conn::Atom:
            for (const auto& a : args_) collect_vars(a, free_);
            key_ = "p:" + name_;
            if (!args_.empty()) {
                key_ += '(';
                for (std::size_t i = 0; i < args_.size(); ++i) {
                    if (i) key_ += ',';
                    term_canon(args_[i], {}, key_);
                }
                key_ += ')';
            }
            break;
        case Conn::Bottom:
            key_ = "_|_";
            break;
        case Conn::Not:
            free_ = lhs_->free_vars();
            size_ += lhs_->size();
            quant_ = lhs_->has_quantifier();
            key_ = "~" + lhs_->key();
            break;
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            free_ = lhs_->free_vars();
            free_.insert(rhs_->free_vars().begin(), rhs_->free_vars().end());
            size_ += lhs_->size() + rhs_->size();
            quant_ = lhs_->has_quantifier() || rhs_->has_quantifier();
            key_ = (conn_ == Conn::And ? "&(" : conn_ == Conn::Or ? "|(" : ">(") + lhs_->key() + "," +
                   rhs_->key() + ")";
            break;
        case Conn::Forall:
        case Conn::Exists: {
            free_ = lhs_->free_vars();
            free_.erase(name_);
            size_ += lhs_->size();
            quant_ = true;
            key_ = conn_ == Conn::Forall ? "A." : "E.";
            std::vector<std::string> env{name_};
            canon(*lhs_, env, key_);
            break;
        }
    }
    hash_ = std::hash<std::string>{}(key_);
}

namespace {
FormulaPtr make(Conn c, std::string name, std::vector<Term> args, FormulaPtr l, FormulaPtr r) {
    return std::make_shared<const Formula>(Formula::Token{}, c, std::move(name), std::move(args), std::move(l),
                                           std::move(r));
}
}  // namespace

FormulaPtr atom(std::string pred, std::vector<Term> args) {
    return make(Conn::Atom, std::move(pred), std::move(args), nullptr, nullptr);
}

FormulaPtr bottom() {
    static const FormulaPtr b = make(Conn::Bottom, "", {}, nullptr, nullptr);
    return b;
}

FormulaPtr neg(FormulaPtr a) { return make(Conn::Not, "", {}, std::move(a), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Conn::And, "", {}, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Conn::Or, "", {}, std::move(a), std::move(b)); }
FormulaPtr imp(FormulaPtr a, FormulaPtr b) { return make(Conn::Imp, "", {}, std::move(a), std::move(b)); }
FormulaPtr forall(std::string var, FormulaPtr body) {
    return make(Conn::Forall, std::move(var), {}, std::move(body), nullptr);
}
FormulaPtr exists(std::string var, FormulaPtr body) {
    return make(Conn::Exists, std::move(var), {}, std::move(body), nullptr);
}
FormulaPtr quantifier(Conn q, std::string var, FormulaPtr body) {
    return make(q, std::move(var), {}, std::move(body), nullptr);
}
FormulaPtr binary(Conn c, FormulaPtr a, FormulaPtr b) { return make(c, "", {}, std::move(a), std::move(b)); }

std::set<std::string> free_vars(const FormulaPtr& f) { return f->free_vars(); }

bool alpha_eq(const FormulaPtr& f, const FormulaPtr& g) {
    return f == g || (f->hash() == g->hash() && f->key() == g->key());
}

bool is_atomic(const FormulaPtr& f) { return f->conn() == Conn::Atom; }

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
    std::string name = base;
    while (used.count(name)) name += '\'';
    return name;
}

Term substitute(const Term& u, const std::string& x, const Term& t) {
    if (u.is_var()) return u.name == x ? t : u;
    Term r = u;
    for (auto& a : r.args) a = substitute(a, x, t);
    return r;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const Term& t) {
    if (!f->free_vars().count(x)) return f;
    switch (f->conn()) {
        case Conn::Atom: {
            std::vector<Term> args = f->args();
            for (auto& a : args) a = substitute(a, x, t);
            return atom(f->name(), std::move(args));
        }
        case Conn::Bottom:
            return f;
        case Conn::Not:
            return neg(substitute(f->lhs(), x, t));
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            return binary(f->conn(), substitute(f->lhs(), x, t), substitute(f->rhs(), x, t));
        case Conn::Forall:
        case Conn::Exists: {
            std::set<std::string> tvars;
            collect_vars(t, tvars);
            std::string y = f->name();
            FormulaPtr body = f->body();
            if (tvars.count(y)) {
                std::set<std::string> used = tvars;
                used.insert(body->free_vars().begin(), body->free_vars().end());
                used.insert(x);
                std::string fresh = fresh_name(y, used);
                body = substitute(body, y, Term::var(fresh));
                y = fresh;
            }
            return quantifier(f->conn(), y, substitute(body, x, t));
        }
    }
    return f;
}

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
    std::vector<FormulaPtr> out;
    std::set<std::string> seen;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (seen.insert(g->key()).second) out.push_back(g);
        if (g->lhs()) walk(g->lhs());
        if (g->rhs()) walk(g->rhs());
    };
    walk(f);
    return out;
}

void collect_names(const FormulaPtr& f, std::set<std::string>& out) {
    if (f->conn() == Conn::Atom)
        for (const auto& a : f->args()) collect_vars(a, out);
    if (f->is_quantifier()) out.insert(f->name());
    if (f->lhs()) collect_names(f->lhs(), out);
    if (f->rhs()) collect_names(f->rhs(), out);
}

namespace {
void term_signature(const Term& t, std::set<std::pair<std::string, std::size_t>>& funcs) {
    if (t.is_var()) return;
    funcs.insert({t.name, t.args.size()});
    for (const auto& a : t.args) term_signature(a, funcs);
}

void ground_terms(const Term& t, const std::set<std::string>& bound, std::vector<Term>& out) {
    auto add = [&](const Term& u) {
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    };
    if (t.is_var()) {
        if (!bound.count(t.name)) add(t);
        return;
    }
    if (t.args.empty()) {
        add(t);
        return;
    }
    for (const auto& a : t.args) ground_terms(a, bound, out);
}

void ground_walk(const FormulaPtr& f, std::set<std::string>& bound, std::vector<Term>& out) {
    if (f->conn() == Conn::Atom) {
        for (const auto& a : f->args()) ground_terms(a, bound, out);
        return;
    }
    if (f->is_quantifier()) {
        bool fresh = bound.insert(f->name()).second;
        ground_walk(f->body(), bound, out);
        if (fresh) bound.erase(f->name());
        return;
    }
    if (f->lhs()) ground_walk(f->lhs(), bound, out);
    if (f->rhs()) ground_walk(f->rhs(), bound, out);
}
}  // namespace

void collect_signature(const FormulaPtr& f, std::set<std::pair<std::string, std::size_t>>& preds,
                       std::set<std::pair<std::string, std::size_t>>& funcs) {
    if (f->conn() == Conn::Atom) {
        preds.insert({f->name(), f->args().size()});
        for (const auto& a : f->args()) term_signature(a, funcs);
    }
    if (f->lhs()) collect_signature(f->lhs(), preds, funcs);
    if (f->rhs()) collect_signature(f->rhs(), preds, funcs);
}

void collect_ground_terms(const FormulaPtr& f, std::vector<Term>& out) {
    std::set<std::string> bound;
    ground_walk(f, bound, out);
}

std::string multiset_key(const Multiset& m) {
    std::vector<const std::string*> keys;
    keys.reserve(m.size());
    for (const auto& f : m) keys.push_back(&f->key());
    std::sort(keys.begin(), keys.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string out;
    for (const auto* k : keys) {
        out += *k;
        out += ';';
    }
    return out;
}

bool multiset_eq(const Multiset& a, const Multiset& b) {
    return a.size() == b.size() && multiset_key(a) == multiset_key(b);
}

std::size_t count_of(const Multiset& m, const FormulaPtr& f) {
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [&](const FormulaPtr& g) { return alpha_eq(f, g); }));
}

bool remove_one(Multiset& m, const FormulaPtr& f) {
    for (auto it = m.begin(); it != m.end(); ++it) {
        if (alpha_eq(*it, f)) {
            m.erase(it);
            return true;
        }
    }
    return false;
}

bool contains(const Multiset& m, const Multiset& sub) {
    Multiset rest = m;
    for (const auto& f : sub)
        if (!remove_one(rest, f)) return false;
    return true;
}

std::string Sequent::key() const { return multiset_key(ante) + "=>" + multiset_key(succ); }

std::set<std::string> Sequent::free_vars() const {
    std::set<std::string> out;
    for (const auto& f : ante) out.insert(f->free_vars().begin(), f->free_vars().end());
    for (const auto& f : succ) out.insert(f->free_vars().begin(), f->free_vars().end());
    return out;
}

bool Sequent::has_quantifier() const {
    for (const auto& f : ante)
        if (f->has_quantifier()) return true;
    for (const auto& f : succ)
        if (f->has_quantifier()) return true;
    return false;
}

std::string arity_error(const std::vector<FormulaPtr>& fs) {
    std::set<std::pair<std::string, std::size_t>> preds, funcs;
    for (const auto& f : fs) collect_signature(f, preds, funcs);
    auto check = [](const std::set<std::pair<std::string, std::size_t>>& s, const char* what) -> std::string {
        std::map<std::string, std::size_t> seen;
        for (const auto& [name, n] : s) {
            auto [it, fresh] = seen.emplace(name, n);
            if (!fresh && it->second != n)
                return std::string(what) + " '" + name + "' used with arities " + std::to_string(it->second) +
                       " and " + std::to_string(n);
        }
        return "";
    };
    std::string e = check(preds, "predicate");
    return e.empty() ? check(funcs, "function symbol") : e;
}

}  // namespace seqcalc
