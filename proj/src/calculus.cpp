#include "seqcalc/calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcalc {

std::size_t SequentPattern::formula_items_succ() const {
    return static_cast<std::size_t>(
        std::count_if(succ.begin(), succ.end(), [](const Item& i) { return !i.is_context(); }));
}

std::string Discipline::name() const {
    switch (kind) {
        case DisciplineKind::MultiSuccedent:
            return "multisuccedent";
        case DisciplineKind::SingleSuccedent:
            return liberal ? "singlesuccedent (liberal)" : "singlesuccedent (strict)";
        case DisciplineKind::SingleNonEmpty:
            return "singlesuccedent, nonempty";
    }
    return "";
}

// ---------------------------------------------------------------- pattern text

namespace {

struct PatLexer {
    std::string s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::logic_error("bad schema pattern '" + s + "': " + what + " at " + std::to_string(pos));
    }
};

PatternPtr mk(Pattern::Kind k, std::string meta = {}, std::string binder = {}, std::string slot = {},
              PatternPtr l = nullptr, PatternPtr r = nullptr) {
    auto p = std::make_shared<Pattern>();
    p->kind = k;
    p->meta = std::move(meta);
    p->binder = std::move(binder);
    p->slot = std::move(slot);
    p->lhs = std::move(l);
    p->rhs = std::move(r);
    return p;
}

PatternPtr parse_pat_imp(PatLexer& lx);

PatternPtr parse_pat_unary(PatLexer& lx) {
    if (lx.eat("¬")) return mk(Pattern::Kind::Not, {}, {}, {}, parse_pat_unary(lx));
    if (lx.eat("⊥")) return mk(Pattern::Kind::Bottom);
    for (auto [sym, kind] : {std::pair{"∀", Pattern::Kind::Forall}, std::pair{"∃", Pattern::Kind::Exists}}) {
        if (lx.eat(sym)) {
            char x = lx.peek();
            if (x < 'a' || x > 'z') lx.fail("binder");
            ++lx.pos;
            if (!lx.eat(".")) lx.fail("'.'");
            char a = lx.peek();
            if (a < 'A' || a > 'Z') lx.fail("body metavariable");
            ++lx.pos;
            return mk(kind, std::string(1, a), std::string(1, x));
        }
    }
    if (lx.eat("(")) {
        PatternPtr p = parse_pat_imp(lx);
        if (!lx.eat(")")) lx.fail("')'");
        return p;
    }
    char a = lx.peek();
    if (a >= 'A' && a <= 'Z') {
        ++lx.pos;
        std::string meta(1, a);
        std::size_t save = lx.pos;
        if (lx.eat("(")) {
            char x = lx.peek();
            if (x >= 'a' && x <= 'z') {
                ++lx.pos;
                if (lx.eat("/")) {
                    char t = lx.peek();
                    ++lx.pos;
                    if (!lx.eat(")")) lx.fail("')'");
                    return mk(Pattern::Kind::Subst, meta, std::string(1, x), std::string(1, t));
                }
            }
            lx.pos = save;
        }
        return mk(Pattern::Kind::Meta, meta);
    }
    lx.fail("formula pattern");
}

PatternPtr parse_pat_and(PatLexer& lx) {
    PatternPtr l = parse_pat_unary(lx);
    while (lx.eat("∧")) l = mk(Pattern::Kind::And, {}, {}, {}, l, parse_pat_unary(lx));
    return l;
}

PatternPtr parse_pat_or(PatLexer& lx) {
    PatternPtr l = parse_pat_and(lx);
    while (lx.eat("∨")) l = mk(Pattern::Kind::Or, {}, {}, {}, l, parse_pat_and(lx));
    return l;
}

PatternPtr parse_pat_imp(PatLexer& lx) {
    PatternPtr l = parse_pat_or(lx);
    if (lx.eat("→")) return mk(Pattern::Kind::Imp, {}, {}, {}, l, parse_pat_imp(lx));
    return l;
}

std::vector<Item> parse_items(PatLexer& lx, bool stop_at_arrow) {
    std::vector<Item> items;
    for (;;) {
        if (lx.at_end()) break;
        if (stop_at_arrow && lx.s.compare(lx.pos, 3, "⇒") == 0) break;
        bool ctx = false;
        for (const char* c : {"Γ", "Δ", "Θ", "Λ"}) {
            if (lx.eat(c)) {
                items.push_back(Item{c, nullptr});
                ctx = true;
                break;
            }
        }
        if (!ctx) items.push_back(Item{"", parse_pat_imp(lx)});
        if (!lx.eat(",")) break;
    }
    return items;
}

std::string pat_text(const PatternPtr& p, int prec) {
    auto wrap = [&](int mine, const std::string& s) { return mine < prec ? "(" + s + ")" : s; };
    switch (p->kind) {
        case Pattern::Kind::Meta:
            return p->meta;
        case Pattern::Kind::Bottom:
            return "⊥";
        case Pattern::Kind::Not:
            return "¬" + pat_text(p->lhs, 4);
        case Pattern::Kind::And:
            return wrap(3, pat_text(p->lhs, 3) + " ∧ " + pat_text(p->rhs, 4));
        case Pattern::Kind::Or:
            return wrap(2, pat_text(p->lhs, 2) + " ∨ " + pat_text(p->rhs, 3));
        case Pattern::Kind::Imp:
            return wrap(1, pat_text(p->lhs, 2) + " → " + pat_text(p->rhs, 1));
        case Pattern::Kind::Forall:
            return wrap(1, "∀" + p->binder + "." + p->meta);
        case Pattern::Kind::Exists:
            return wrap(1, "∃" + p->binder + "." + p->meta);
        case Pattern::Kind::Subst:
            return p->meta + "(" + p->binder + "/" + p->slot + ")";
    }
    return "";
}

void pattern_metas(const PatternPtr& p, std::set<std::string>& metas, std::set<std::string>& slots) {
    if (!p) return;
    if (p->kind == Pattern::Kind::Meta || p->kind == Pattern::Kind::Forall || p->kind == Pattern::Kind::Exists ||
        p->kind == Pattern::Kind::Subst)
        metas.insert(p->meta);
    if (p->kind == Pattern::Kind::Subst) slots.insert(p->slot);
    pattern_metas(p->lhs, metas, slots);
    pattern_metas(p->rhs, metas, slots);
}

void sequent_metas(const SequentPattern& sp, std::set<std::string>& metas, std::set<std::string>& slots) {
    for (const auto* side : {&sp.ante, &sp.succ})
        for (const auto& it : *side)
            if (!it.is_context()) pattern_metas(it.formula, metas, slots);
}

}  // namespace

SequentPattern parse_pattern(const std::string& text) {
    PatLexer lx{text};
    SequentPattern sp;
    sp.ante = parse_items(lx, true);
    if (!lx.eat("⇒")) lx.fail("'⇒'");
    sp.succ = parse_items(lx, false);
    if (!lx.at_end()) lx.fail("trailing input");
    return sp;
}

std::string render_pattern(const SequentPattern& p) {
    auto side = [](const std::vector<Item>& items) {
        std::string out;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ", ";
            out += items[i].is_context() ? items[i].context : pat_text(items[i].formula, 0);
        }
        return out;
    };
    std::string a = side(p.ante), s = side(p.succ);
    return (a.empty() ? "" : a + " ") + "⇒" + (s.empty() ? "" : " " + s);
}

RuleSchema make_schema(std::string name, const std::vector<std::string>& premises, const std::string& conclusion,
                       std::set<Tag> tags, std::vector<SideCondition> side) {
    RuleSchema r;
    r.name = std::move(name);
    for (const auto& p : premises) r.premises.push_back(parse_pattern(p));
    r.conclusion = parse_pattern(conclusion);
    r.side_conditions = std::move(side);
    r.tags = std::move(tags);
    if (r.premises.empty()) r.tags.insert(Tag::Axiom);
    if (r.premises.size() >= 2) {
        for (const auto* side_items : {&r.conclusion.ante, &r.conclusion.succ}) {
            for (const auto& it : *side_items) {
                if (!it.is_context()) continue;
                for (const auto& prem : r.premises) {
                    bool found = false;
                    for (const auto* ps : {&prem.ante, &prem.succ})
                        for (const auto& pi : *ps)
                            if (pi.context == it.context) found = true;
                    if (!found) r.tags.insert(Tag::ContextSplitting);
                }
            }
        }
    }
    return r;
}

std::vector<std::string> RuleSchema::premise_only_metas() const {
    std::set<std::string> concl, cslots, prem, pslots;
    sequent_metas(conclusion, concl, cslots);
    for (const auto& p : premises) sequent_metas(p, prem, pslots);
    std::vector<std::string> out;
    for (const auto& m : prem)
        if (!concl.count(m)) out.push_back(m);
    return out;
}

std::vector<std::string> RuleSchema::term_slots() const {
    std::set<std::string> metas, slots;
    sequent_metas(conclusion, metas, slots);
    for (const auto& p : premises) sequent_metas(p, metas, slots);
    std::set<std::string> eig;
    for (const auto& sc : side_conditions)
        if (sc.kind == SideCondition::Kind::EigenvariableFresh) eig.insert(sc.slot);
    std::vector<std::string> out;
    for (const auto& s : slots)
        if (!eig.count(s)) out.push_back(s);
    return out;
}

std::vector<std::string> RuleSchema::eigen_slots() const {
    std::vector<std::string> out;
    for (const auto& sc : side_conditions)
        if (sc.kind == SideCondition::Kind::EigenvariableFresh) out.push_back(sc.slot);
    return out;
}

std::string RuleSchema::text() const {
    std::string out;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (i) out += "   ";
        out += render_pattern(premises[i]);
    }
    if (premises.empty()) out = "(axiom)";
    out += "  /  " + render_pattern(conclusion);
    return out;
}

// ---------------------------------------------------------------- instantiation

std::string Instantiation::key() const {
    std::string out;
    for (const auto& [k, v] : formulas) out += k + "=" + v->key() + ";";
    for (const auto& [k, v] : binders) out += k + "~" + v + ";";
    for (const auto& [k, v] : contexts) out += k + "=" + multiset_key(v) + "|";
    for (const auto& [k, v] : terms) out += k + ":" + term_key(v) + ";";
    return out;
}

namespace {

struct Pending {
    std::string meta, binder, slot;
    FormulaPtr target;
};

struct State {
    Instantiation inst;
    std::vector<Pending> pending;
};

// Solves A[x:=t] ≅ F for t. Returns false on mismatch; `found` stays empty if x
// does not occur free in A.
struct InstanceSolver {
    const std::string& x;
    std::optional<Term> found;
    std::vector<std::string> env_a, env_f;

    static int lookup(const std::vector<std::string>& env, const std::string& n) {
        for (std::size_t i = env.size(); i-- > 0;)
            if (env[i] == n) return static_cast<int>(env.size() - 1 - i);
        return -1;
    }

    bool mentions_bound(const Term& t) const {
        if (t.is_var()) return lookup(env_f, t.name) >= 0;
        for (const auto& a : t.args)
            if (mentions_bound(a)) return true;
        return false;
    }

    bool term(const Term& a, const Term& b) {
        if (a.is_var()) {
            int ia = lookup(env_a, a.name);
            if (ia >= 0) return b.is_var() && lookup(env_f, b.name) == ia;
            if (a.name == x) {
                if (mentions_bound(b)) return false;
                if (found) return *found == b;
                found = b;
                return true;
            }
            return b.is_var() && b.name == a.name && lookup(env_f, b.name) < 0;
        }
        if (b.is_var() || a.name != b.name || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!term(a.args[i], b.args[i])) return false;
        return true;
    }

    bool formula(const FormulaPtr& a, const FormulaPtr& b) {
        if (a->conn() != b->conn()) return false;
        switch (a->conn()) {
            case Conn::Atom:
                if (a->name() != b->name() || a->args().size() != b->args().size()) return false;
                for (std::size_t i = 0; i < a->args().size(); ++i)
                    if (!term(a->args()[i], b->args()[i])) return false;
                return true;
            case Conn::Bottom:
                return true;
            case Conn::Not:
                return formula(a->lhs(), b->lhs());
            case Conn::And:
            case Conn::Or:
            case Conn::Imp:
                return formula(a->lhs(), b->lhs()) && formula(a->rhs(), b->rhs());
            case Conn::Forall:
            case Conn::Exists: {
                env_a.push_back(a->name());
                env_f.push_back(b->name());
                bool ok = formula(a->body(), b->body());
                env_a.pop_back();
                env_f.pop_back();
                return ok;
            }
        }
        return false;
    }
};

bool resolve_subst(State& st, const std::string& meta, const std::string& binder, const std::string& slot,
                   const FormulaPtr& f) {
    const FormulaPtr& a = st.inst.formulas.at(meta);
    const std::string& x = st.inst.binders.at(binder);
    auto bound = st.inst.terms.find(slot);
    if (bound != st.inst.terms.end()) return alpha_eq(substitute(a, x, bound->second), f);
    InstanceSolver solver{x, std::nullopt, {}, {}};
    if (!solver.formula(a, f)) return false;
    if (solver.found) st.inst.terms[slot] = *solver.found;
    return true;
}

bool match_formula(const PatternPtr& p, const FormulaPtr& f, State& st) {
    using K = Pattern::Kind;
    switch (p->kind) {
        case K::Meta: {
            auto it = st.inst.formulas.find(p->meta);
            if (it != st.inst.formulas.end()) return alpha_eq(it->second, f);
            st.inst.formulas.emplace(p->meta, f);
            return true;
        }
        case K::Bottom:
            return f->conn() == Conn::Bottom;
        case K::Not:
            return f->conn() == Conn::Not && match_formula(p->lhs, f->lhs(), st);
        case K::And:
        case K::Or:
        case K::Imp: {
            Conn c = p->kind == K::And ? Conn::And : p->kind == K::Or ? Conn::Or : Conn::Imp;
            return f->conn() == c && match_formula(p->lhs, f->lhs(), st) && match_formula(p->rhs, f->rhs(), st);
        }
        case K::Forall:
        case K::Exists: {
            Conn q = p->kind == K::Forall ? Conn::Forall : Conn::Exists;
            if (f->conn() != q) return false;
            auto bx = st.inst.binders.find(p->binder);
            auto ba = st.inst.formulas.find(p->meta);
            if (bx != st.inst.binders.end() && ba != st.inst.formulas.end())
                return alpha_eq(quantifier(q, bx->second, ba->second), f);
            if (bx == st.inst.binders.end() && ba == st.inst.formulas.end()) {
                st.inst.binders.emplace(p->binder, f->name());
                st.inst.formulas.emplace(p->meta, f->body());
                return true;
            }
            if (ba != st.inst.formulas.end()) {
                st.inst.binders.emplace(p->binder, f->name());
                return alpha_eq(quantifier(q, f->name(), ba->second), f);
            }
            const std::string& xv = bx->second;
            if (xv != f->name() && f->free_vars().count(xv)) return false;
            st.inst.formulas.emplace(p->meta, substitute(f->body(), f->name(), Term::var(xv)));
            return true;
        }
        case K::Subst:
            if (st.inst.formulas.count(p->meta) && st.inst.binders.count(p->binder))
                return resolve_subst(st, p->meta, p->binder, p->slot, f);
            st.pending.push_back(Pending{p->meta, p->binder, p->slot, f});
            return true;
    }
    return false;
}

int item_rank(const Item& it, const State& st) {
    if (it.is_context()) return 4;
    switch (it.formula->kind) {
        case Pattern::Kind::Meta:
            return st.inst.formulas.count(it.formula->meta) ? 1 : 2;
        case Pattern::Kind::Subst:
            return 3;
        default:
            return 0;
    }
}

using Cont = std::function<bool(State&)>;

// Distributes `rest` over the unbound context metavariables ctx[i..].
bool split_contexts(const std::vector<std::string>& ctx, std::size_t i, const std::vector<std::pair<FormulaPtr, std::size_t>>& groups,
                    std::vector<std::size_t>& left, State& st, const Cont& k) {
    if (i + 1 == ctx.size()) {
        Multiset m;
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (std::size_t c = 0; c < left[g]; ++c) m.push_back(groups[g].first);
        State next = st;
        next.inst.contexts[ctx[i]] = std::move(m);
        return k(next);
    }
    // Enumerate how many copies of each group go to ctx[i].
    std::vector<std::size_t> take(groups.size(), 0);
    for (;;) {
        Multiset m;
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (std::size_t c = 0; c < take[g]; ++c) m.push_back(groups[g].first);
        State next = st;
        next.inst.contexts[ctx[i]] = std::move(m);
        for (std::size_t g = 0; g < groups.size(); ++g) left[g] -= take[g];
        bool go = split_contexts(ctx, i + 1, groups, left, next, k);
        for (std::size_t g = 0; g < groups.size(); ++g) left[g] += take[g];
        if (!go) return false;
        std::size_t g = 0;
        while (g < groups.size() && take[g] == left[g]) take[g++] = 0;
        if (g == groups.size()) return true;
        ++take[g];
    }
}

bool match_side(std::vector<Item> items, const Multiset& concrete, State& st, bool conclusion_side, bool ante,
                const Cont& k) {
    std::stable_sort(items.begin(), items.end(),
                     [&](const Item& a, const Item& b) { return item_rank(a, st) < item_rank(b, st); });
    std::vector<const Item*> formula_items;
    std::vector<std::string> contexts;
    for (const auto& it : items) {
        if (it.is_context())
            contexts.push_back(it.context);
        else
            formula_items.push_back(&it);
    }
    std::vector<bool> used(concrete.size(), false);

    std::function<bool(std::size_t, State&)> pick = [&](std::size_t i, State& s) -> bool {
        if (i == formula_items.size()) {
            Multiset rest;
            for (std::size_t j = 0; j < concrete.size(); ++j)
                if (!used[j]) rest.push_back(concrete[j]);
            std::vector<std::string> open;
            for (const auto& c : contexts) {
                auto b = s.inst.contexts.find(c);
                if (b == s.inst.contexts.end()) {
                    open.push_back(c);
                    continue;
                }
                for (const auto& f : b->second)
                    if (!remove_one(rest, f)) return true;
            }
            if (open.empty()) return rest.empty() ? k(s) : true;
            std::vector<std::pair<FormulaPtr, std::size_t>> groups;
            for (const auto& f : rest) {
                auto g = std::find_if(groups.begin(), groups.end(), [&](const auto& p) { return alpha_eq(p.first, f); });
                if (g == groups.end())
                    groups.push_back({f, 1});
                else
                    ++g->second;
            }
            std::vector<std::size_t> left;
            for (const auto& g : groups) left.push_back(g.second);
            return split_contexts(open, 0, groups, left, s, k);
        }
        std::set<std::string> tried;
        for (std::size_t j = 0; j < concrete.size(); ++j) {
            if (used[j] || !tried.insert(concrete[j]->key()).second) continue;
            State next = s;
            if (!match_formula(formula_items[i]->formula, concrete[j], next)) continue;
            if (conclusion_side) (ante ? next.inst.principal_ante : next.inst.principal_succ).push_back(concrete[j]);
            used[j] = true;
            bool go = pick(i + 1, next);
            used[j] = false;
            if (!go) return false;
        }
        return true;
    };
    return pick(0, st);
}

bool match_sequent(const SequentPattern& p, const Sequent& s, State& st, bool conclusion, const Cont& k) {
    return match_side(p.succ, s.succ, st, conclusion, false, [&](State& s1) {
        return match_side(p.ante, s.ante, s1, conclusion, true, k);
    });
}

bool finish_pending(State& st) {
    std::vector<Pending> rest;
    for (const auto& pd : st.pending) {
        if (st.inst.formulas.count(pd.meta) && st.inst.binders.count(pd.binder)) {
            if (!resolve_subst(st, pd.meta, pd.binder, pd.slot, pd.target)) return false;
        } else {
            rest.push_back(pd);
        }
    }
    st.pending = std::move(rest);
    return true;
}

FormulaPtr build(const PatternPtr& p, const Instantiation& inst, std::string& err) {
    using K = Pattern::Kind;
    auto need = [&](const std::string& m) -> FormulaPtr {
        auto it = inst.formulas.find(m);
        if (it == inst.formulas.end()) {
            err = "metavariable " + m + " is not instantiated";
            return nullptr;
        }
        return it->second;
    };
    switch (p->kind) {
        case K::Meta:
            return need(p->meta);
        case K::Bottom:
            return bottom();
        case K::Not: {
            auto a = build(p->lhs, inst, err);
            return a ? neg(a) : nullptr;
        }
        case K::And:
        case K::Or:
        case K::Imp: {
            auto a = build(p->lhs, inst, err);
            auto b = a ? build(p->rhs, inst, err) : nullptr;
            if (!b) return nullptr;
            return binary(p->kind == K::And ? Conn::And : p->kind == K::Or ? Conn::Or : Conn::Imp, a, b);
        }
        case K::Forall:
        case K::Exists:
        case K::Subst: {
            auto a = need(p->meta);
            if (!a) return nullptr;
            auto x = inst.binders.find(p->binder);
            if (x == inst.binders.end()) {
                err = "bound variable " + p->binder + " is not instantiated";
                return nullptr;
            }
            if (p->kind != K::Subst) return quantifier(p->kind == K::Forall ? Conn::Forall : Conn::Exists, x->second, a);
            auto t = inst.terms.find(p->slot);
            if (t == inst.terms.end()) {
                err = "slot " + p->slot + " is not instantiated";
                return nullptr;
            }
            return substitute(a, x->second, t->second);
        }
    }
    return nullptr;
}

std::optional<Sequent> build_sequent(const SequentPattern& sp, const Instantiation& inst, std::string& err) {
    Sequent out;
    for (auto [items, dest] : {std::pair{&sp.ante, &out.ante}, std::pair{&sp.succ, &out.succ}}) {
        for (const auto& it : *items) {
            if (it.is_context()) {
                auto c = inst.contexts.find(it.context);
                if (c == inst.contexts.end()) {
                    err = "context " + it.context + " is not instantiated";
                    return std::nullopt;
                }
                dest->insert(dest->end(), c->second.begin(), c->second.end());
            } else {
                auto f = build(it.formula, inst, err);
                if (!f) return std::nullopt;
                dest->push_back(f);
            }
        }
    }
    return out;
}

}  // namespace

std::string Instantiation::describe() const {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    for (const auto& [k, v] : formulas) add(k + ":=" + v->key());
    for (const auto& [k, v] : binders) add(k + ":=" + v);
    for (const auto& [k, v] : terms) add(k + ":=" + term_key(v));
    for (const auto& [k, v] : contexts) add(k + ":={" + multiset_key(v) + "}");
    return out;
}

std::vector<Instantiation> match_conclusion(const RuleSchema& schema, const Sequent& goal) {
    std::vector<Instantiation> out;
    std::set<std::string> seen;
    State st;
    match_sequent(schema.conclusion, goal, st, true, [&](State& s) {
        State done = s;
        if (!finish_pending(done) || !done.pending.empty()) return true;
        if (seen.insert(done.inst.key()).second) out.push_back(done.inst);
        return true;
    });
    return out;
}

void match_instance(const RuleSchema& schema, const Sequent& node, const std::vector<Sequent>& children,
                    const Instantiation& seed, const std::function<bool(const Instantiation&)>& visit) {
    if (children.size() != schema.premises.size()) return;
    State st;
    st.inst = seed;
    std::function<bool(std::size_t, State&)> premise = [&](std::size_t i, State& s) -> bool {
        if (i == children.size()) {
            State done = s;
            if (!finish_pending(done) || !done.pending.empty()) return true;
            return visit(done.inst);
        }
        return match_sequent(schema.premises[i], children[i], s, false, [&](State& s2) { return premise(i + 1, s2); });
    };
    match_sequent(schema.conclusion, node, st, true, [&](State& s) { return premise(0, s); });
}

std::optional<Sequent> instantiate_conclusion(const RuleSchema& schema, const Instantiation& inst) {
    std::string err;
    return build_sequent(schema.conclusion, inst, err);
}

std::optional<SideConditionViolation> check_side_conditions(const RuleSchema& schema, const Instantiation& inst,
                                                            const Sequent& conclusion,
                                                            const std::vector<Sequent>& premises) {
    for (const auto& sc : schema.side_conditions) {
        switch (sc.kind) {
            case SideCondition::Kind::AtomicOnly: {
                auto f = inst.formulas.find(sc.slot);
                if (f != inst.formulas.end() && !is_atomic(f->second))
                    return SideConditionViolation{sc, sc.slot + " := " + f->second->key() + " is not atomic"};
                break;
            }
            case SideCondition::Kind::EigenvariableFresh: {
                auto t = inst.terms.find(sc.slot);
                if (t == inst.terms.end()) break;
                if (!t->second.is_var())
                    return SideConditionViolation{sc, "eigenvariable " + sc.slot + " := " + term_key(t->second) +
                                                          " is not a variable"};
                // Inversion rules run the original rule upside down: the
                // sequent without the instance is the premise.
                bool inverted = schema.has(Tag::Inversion);
                std::set<std::string> fv;
                if (inverted) {
                    for (const auto& p : premises) {
                        auto v = p.free_vars();
                        fv.insert(v.begin(), v.end());
                    }
                } else {
                    fv = conclusion.free_vars();
                }
                if (fv.count(t->second.name))
                    return SideConditionViolation{sc, "eigenvariable " + t->second.name + " occurs free in the " +
                                                          (inverted ? "premise" : "conclusion")};
                break;
            }
            case SideCondition::Kind::NoEmptySuccedent: {
                bool empty = conclusion.succ.empty();
                for (const auto& p : premises) empty = empty || p.succ.empty();
                if (empty) return SideConditionViolation{sc, "empty succedent in rule instance"};
                break;
            }
        }
    }
    return std::nullopt;
}

PremiseResult instantiate_premises(const RuleSchema& schema, Instantiation inst, const FreshSupplier& fresh) {
    PremiseResult out;
    for (const auto& y : schema.eigen_slots())
        if (!inst.terms.count(y)) inst.terms[y] = Term::var(fresh(y));
    std::string err;
    auto concl = build_sequent(schema.conclusion, inst, err);
    if (!concl) {
        out.error = err;
        return out;
    }
    for (const auto& p : schema.premises) {
        auto s = build_sequent(p, inst, err);
        if (!s) {
            out.error = err;
            out.premises.clear();
            return out;
        }
        out.premises.push_back(std::move(*s));
    }
    out.violation = check_side_conditions(schema, inst, *concl, out.premises);
    return out;
}

FreshSupplier fresh_supplier_for(const std::vector<Sequent>& avoid) {
    auto used = std::make_shared<std::set<std::string>>();
    for (const auto& s : avoid)
        for (const auto* side : {&s.ante, &s.succ})
            for (const auto& f : *side) collect_names(f, *used);
    return [used](const std::string& base) {
        std::string n = fresh_name(base, *used);
        used->insert(n);
        return n;
    };
}

// ---------------------------------------------------------------- names

const std::vector<std::pair<std::string, std::string>>& rule_aliases() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"axiom", "Ax"},       {"Axiom", "Ax"},         {"Lconj", "L∧"},     {"Rconj", "R∧"},
        {"LIconj", "LI∧"},     {"RIconj", "RI∧"},       {"Ldisj", "L∨"},     {"Rdisj", "R∨"},
        {"LIdisj", "LI∨"},     {"RIdisj", "RI∨"},       {"Limp", "L→"},      {"Rimp", "R→"},
        {"LIimp", "LI→"},      {"RIimp", "RI→"},        {"Lbot", "L⊥"},      {"Lneg", "L¬"},
        {"Rneg", "R¬"},        {"Lnegneg", "L¬¬"},      {"Rnegneg", "R¬¬"},  {"LInegneg", "LI¬¬"},
        {"RInegneg", "RI¬¬"},  {"Lall", "L∀"},          {"Rall", "R∀"},      {"LIall", "LI∀"},
        {"RIall", "RI∀"},      {"Lex", "L∃"},           {"Rex", "R∃"},       {"LIex", "LI∃"},
        {"RIex", "RI∃"},       {"Lnegimp", "L¬→"},      {"Rnegimp", "R¬→"},  {"Gem_at", "Gem-at"},
        {"Gem0_at", "Gem0-at"}};
    return table;
}

std::string canonical_rule_name(const std::string& name) {
    for (const auto& [alias, label] : rule_aliases())
        if (alias == name) return label;
    return name;
}

std::vector<const RuleSchema*> Calculus::schemas() const {
    std::vector<const RuleSchema*> out;
    for (const auto& r : axioms) out.push_back(&r);
    for (const auto& r : rules) out.push_back(&r);
    return out;
}

std::vector<const RuleSchema*> Calculus::lookup(const std::string& rule_name) const {
    std::string canon = canonical_rule_name(rule_name);
    std::vector<const RuleSchema*> out;
    for (const auto* r : schemas())
        if (r->name == canon) out.push_back(r);
    return out;
}

bool Calculus::has_rule(const std::string& canonical_name) const { return !lookup(canonical_name).empty(); }

}  // namespace seqcalc
