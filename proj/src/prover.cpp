#include "seqcalc/prover.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace seqcalc {

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Derivable:
            return "DERIVABLE";
        case VerdictKind::NotDerivable:
            return "NOT DERIVABLE";
        case VerdictKind::Unknown:
            return "UNKNOWN";
    }
    return "";
}

namespace {

struct Result {
    std::optional<ProofTree> tree;
    bool limit = false;  // a depth or node limit cut the search
    // Branch ancestors a loop check pruned against.
    std::set<std::string> loops;

    void absorb(const Result& r) {
        limit = limit || r.limit;
        loops.insert(r.loops.begin(), r.loops.end());
    }
};

Result failure() { return Result{}; }

Result success(ProofTree t) {
    Result r;
    r.tree = std::move(t);
    return r;
}

bool has_contexts(const SequentPattern& p) {
    for (const auto* side : {&p.ante, &p.succ})
        for (const auto& it : *side)
            if (it.is_context()) return true;
    return false;
}

std::size_t count_items(const std::vector<Item>& items) {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.is_context(); }));
}

// Index subsets of size k from n, in lexicographic order.
void choose(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) -> bool {
        if (pos == k) return visit(idx);
        for (std::size_t i = from; i < n; ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    rec(0, 0);
}

}  // namespace

struct Prover::Impl {
    Calculus c;
    SearchLimits lim;
    std::vector<const RuleSchema*> axioms, invertible, branching, gem, term_rules;
    const RuleSchema* lw = nullptr;
    const RuleSchema* rw = nullptr;
    const RuleSchema* lc = nullptr;
    const RuleSchema* rc = nullptr;

    std::unordered_map<std::string, ProofTree> proved;
    std::unordered_set<std::string> refuted;
    // Failures that hold whenever the listed keys are on the branch.
    std::unordered_map<std::string, std::vector<std::set<std::string>>> refuted_under;

    std::size_t nodes = 0;
    bool hit_depth = false, hit_nodes = false;
    std::vector<FormulaPtr> gem_candidates;
    std::vector<Term> extra_terms;
    std::unordered_set<std::string> branch;
    std::string run_signature;

    Impl(const Calculus& calc, SearchLimits l) : c(calc), lim(std::move(l)) {
        for (const auto& r : c.axioms) axioms.push_back(&r);
        for (const auto& r : c.rules) {
            auto only = [&](const char* n) { return r.name == n && r.premises.size() == 1; };
            if (only("LW")) lw = &r;
            if (only("RW")) rw = &r;
            if (only("LC")) lc = &r;
            if (only("RC")) rc = &r;
            if (!r.has(Tag::Logical) || r.has(Tag::Inversion) || r.has(Tag::Cut)) continue;
            if (!r.premise_only_metas().empty())
                gem.push_back(&r);
            else if (!r.term_slots().empty())
                term_rules.push_back(&r);
            else if (r.has(Tag::Invertible))
                invertible.push_back(&r);
            else
                branching.push_back(&r);
        }
    }

    bool premise_fits(const RuleSchema& s, std::size_t i, const Sequent& p) const {
        std::size_t n = p.succ.size();
        switch (c.discipline.kind) {
            case DisciplineKind::MultiSuccedent:
                return true;
            case DisciplineKind::SingleNonEmpty:
                return n == 1;
            case DisciplineKind::SingleSuccedent:
                return c.discipline.liberal || n <= 1 || s.premises[i].formula_items_succ() >= n;
        }
        return true;
    }

    std::optional<ProofTree> close_by_axiom(const Sequent& g) {
        auto fresh = fresh_supplier_for({g});
        for (const auto* s : axioms) {
            for (const auto& inst : match_conclusion(*s, g))
                if (instantiate_premises(*s, inst, fresh).ok()) return ProofTree{g, s->name, {}, {}};
        }
        // Context-free axioms close larger sequents through explicit weakenings.
        if (!lw) return std::nullopt;
        for (const auto* s : axioms) {
            if (has_contexts(s->conclusion)) continue;
            std::size_t na = count_items(s->conclusion.ante), ns = count_items(s->conclusion.succ);
            if (na > g.ante.size() || ns > g.succ.size()) continue;
            if (ns < g.succ.size() && !rw) continue;
            std::optional<ProofTree> found;
            choose(g.ante.size(), na, [&](const std::vector<std::size_t>& ai) {
                choose(g.succ.size(), ns, [&](const std::vector<std::size_t>& si) {
                    Sequent sub;
                    for (auto i : ai) sub.ante.push_back(g.ante[i]);
                    for (auto i : si) sub.succ.push_back(g.succ[i]);
                    for (const auto& inst : match_conclusion(*s, sub)) {
                        if (!instantiate_premises(*s, inst, fresh).ok()) continue;
                        found = weaken_down(g, sub, ProofTree{sub, s->name, {}, {}});
                        return false;
                    }
                    return true;
                });
                return !found;
            });
            if (found) return found;
        }
        return std::nullopt;
    }

    // Chain of LW/RW steps from `g` up to its sub-sequent `sub`.
    ProofTree weaken_down(const Sequent& g, const Sequent& sub, ProofTree top) const {
        Multiset extra_a = g.ante, extra_s = g.succ;
        for (const auto& f : sub.ante) remove_one(extra_a, f);
        for (const auto& f : sub.succ) remove_one(extra_s, f);
        // Build from the top: add succedent extras first, then antecedent extras.
        Sequent cur = sub;
        ProofTree t = std::move(top);
        for (const auto& f : extra_s) {
            cur.succ.push_back(f);
            t = ProofTree{cur, rw->name, {}, {std::move(t)}};
        }
        for (const auto& f : extra_a) {
            cur.ante.insert(cur.ante.begin(), f);
            t = ProofTree{cur, lw->name, {}, {std::move(t)}};
        }
        t.sequent = g;
        return t;
    }

    Result apply(const RuleSchema& s, const Instantiation& inst, const Sequent& g, std::size_t depth, bool& applicable) {
        applicable = false;
        auto pr = instantiate_premises(s, inst, fresh_supplier_for({g}));
        if (!pr.ok()) return failure();
        for (std::size_t i = 0; i < pr.premises.size(); ++i)
            if (!premise_fits(s, i, pr.premises[i])) return failure();
        applicable = true;
        ProofTree node{g, s.name, {}, {}};
        for (const auto& p : pr.premises) {
            Result r = search(p, depth + 1);
            if (!r.tree) return r;
            node.children.push_back(std::move(*r.tree));
        }
        return success(std::move(node));
    }

    // Tries every instance of `s` on `g`, then on `g` with one principal formula
    // duplicated (under an explicit contraction). `fill` completes instances
    // (term slots, Gem formula) and may yield several.
    using Filler = std::function<std::vector<Instantiation>(const Instantiation&, const Sequent&)>;

    Result try_schema(const RuleSchema& s, const Sequent& g, std::size_t depth, const Filler& fill) {
        Result acc;
        auto attempt = [&](const Sequent& goal, const Instantiation& inst, std::size_t d) -> std::optional<ProofTree> {
            for (const auto& full : fill(inst, goal)) {
                bool applicable = false;
                Result r = apply(s, full, goal, d, applicable);
                if (r.tree) return r.tree;
                acc.absorb(r);
            }
            return std::nullopt;
        };
        for (const auto& inst : match_conclusion(s, g))
            if (auto t = attempt(g, inst, depth)) return success(std::move(*t));

        if (depth + 1 >= lim.max_depth) {
            hit_depth = true;
            acc.limit = true;
            return acc;
        }
        for (bool left : {true, false}) {
            const RuleSchema* contraction = left ? lc : rc;
            if (!contraction) continue;
            const Multiset& side = left ? g.ante : g.succ;
            std::set<std::string> tried;
            for (const auto& f : side) {
                if (!tried.insert(f->key()).second) continue;
                if (count_of(side, f) + 1 > lim.contraction_bound) continue;
                Sequent g2 = g;
                (left ? g2.ante : g2.succ).push_back(f);
                for (const auto& inst : match_conclusion(s, g2)) {
                    const Multiset& principal = left ? inst.principal_ante : inst.principal_succ;
                    if (std::none_of(principal.begin(), principal.end(), [&](const FormulaPtr& p) { return alpha_eq(p, f); }))
                        continue;
                    if (auto t = attempt(g2, inst, depth + 1))
                        return success(ProofTree{g, contraction->name, {}, {std::move(*t)}});
                }
            }
        }
        return acc;
    }

    static std::vector<Instantiation> as_is(const Instantiation& i, const Sequent&) { return {i}; }

    std::vector<Term> term_pool(const Sequent& g) const {
        std::vector<Term> pool;
        for (const auto* side : {&g.ante, &g.succ})
            for (const auto& f : *side) collect_ground_terms(f, pool);
        pool.insert(pool.end(), extra_terms.begin(), extra_terms.end());
        std::vector<Term> out;
        std::set<std::string> seen;
        for (const auto& t : pool)
            if (seen.insert(term_key(t)).second) out.push_back(t);
        return out;
    }

    Result search(const Sequent& g, std::size_t depth) {
        if (++nodes > lim.max_nodes) {
            hit_nodes = true;
            Result r;
            r.limit = true;
            return r;
        }
        const std::string key = g.key();
        if (auto it = proved.find(key); it != proved.end()) return success(it->second);
        if (refuted.count(key)) return failure();
        if (auto it = refuted_under.find(key); it != refuted_under.end())
            for (const auto& deps : it->second)
                if (std::all_of(deps.begin(), deps.end(), [&](const std::string& k) { return branch.count(k) > 0; })) {
                    Result r;
                    r.loops = deps;
                    return r;
                }
        if (auto t = close_by_axiom(g)) {
            proved.emplace(key, *t);
            return success(std::move(*t));
        }
        if (branch.count(key)) {
            Result r;
            r.loops.insert(key);
            return r;
        }
        if (depth >= lim.max_depth) {
            hit_depth = true;
            Result r;
            r.limit = true;
            return r;
        }
        branch.insert(key);
        Result r = over_bound(g) ? trim(g, depth) : expand(g, depth);
        branch.erase(key);
        if (r.tree) {
            proved.emplace(key, *r.tree);
        } else if (!r.limit) {
            r.loops.erase(key);
            if (r.loops.empty())
                refuted.insert(key);
            else if (auto& v = refuted_under[key]; v.size() < 8)
                v.push_back(r.loops);
        }
        return r;
    }

    std::optional<FormulaPtr> excess(const Multiset& m) const {
        for (const auto& f : m)
            if (count_of(m, f) > lim.contraction_bound) return f;
        return std::nullopt;
    }

    // Without the matching weakening rule a side is left alone; it can then
    // only grow through contraction, which the bound already limits.
    bool over_bound(const Sequent& g) const { return (lw && excess(g.ante)) || (rw && excess(g.succ)); }

    // Copies above the contraction bound are dropped by an explicit weakening.
    Result trim(const Sequent& g, std::size_t depth) {
        bool left = lw && excess(g.ante).has_value();
        const RuleSchema* rule = left ? lw : rw;
        if (!rule) return failure();
        Sequent smaller = g;
        remove_one(left ? smaller.ante : smaller.succ, *(left ? excess(g.ante) : excess(g.succ)));
        Result r = search(smaller, depth + 1);
        if (!r.tree) return r;
        return success(ProofTree{g, rule->name, {}, {std::move(*r.tree)}});
    }

    // Gem is pointless on a formula whose value the sequent already fixes.
    static bool settled(const FormulaPtr& a, const Sequent& g) {
        if (contains(g.ante, {a}) || contains(g.ante, {neg(a)}) || contains(g.succ, {a})) return true;
        if (a->conn() == Conn::Not) return contains(g.ante, {a->lhs()}) || contains(g.succ, {a->lhs()});
        return false;
    }

    Result expand(const Sequent& g, std::size_t depth) {
        // Invertible rules: the first applicable instance decides the goal.
        for (const auto* s : invertible) {
            for (const auto& inst : match_conclusion(*s, g)) {
                bool applicable = false;
                Result r = apply(*s, inst, g, depth, applicable);
                if (applicable) return r;
            }
        }
        Result acc;
        auto absorb = [&](Result r) -> std::optional<Result> {
            if (r.tree) return r;
            acc.absorb(r);
            return std::nullopt;
        };
        for (const auto* s : branching)
            if (auto r = absorb(try_schema(*s, g, depth, as_is))) return *r;

        // Gem is searched only in calculi without a succedent context.
        bool succedent_context = c.discipline.kind == DisciplineKind::MultiSuccedent || c.discipline.liberal;
        if (lim.gem != GemPolicy::Off && !succedent_context) {
            const auto& pool = lim.gem == GemPolicy::Unrestricted ? lim.gem_pool : gem_candidates;
            for (const auto* s : gem) {
                std::string meta = s->premise_only_metas().front();
                Filler fill = [&](const Instantiation& inst, const Sequent& goal) {
                    std::vector<Instantiation> out;
                    for (const auto& a : pool) {
                        if (settled(a, goal)) continue;
                        Instantiation full = inst;
                        full.formulas[meta] = a;
                        out.push_back(std::move(full));
                    }
                    return out;
                };
                if (auto r = absorb(try_schema(*s, g, depth, fill))) return *r;
            }
        }

        for (const auto* s : term_rules) {
            auto slots = s->term_slots();
            Filler fill = [&](const Instantiation& inst, const Sequent& goal) {
                std::vector<Instantiation> out;
                std::vector<Instantiation> partial{inst};
                for (const auto& slot : slots) {
                    std::vector<Instantiation> next;
                    for (const auto& p : partial) {
                        if (p.terms.count(slot)) {
                            next.push_back(p);
                            continue;
                        }
                        for (const auto& t : term_pool(goal)) {
                            Instantiation q = p;
                            q.terms[slot] = t;
                            next.push_back(std::move(q));
                        }
                    }
                    partial = std::move(next);
                }
                // Distinct premises only: a vacuous quantifier makes every term equal.
                std::set<std::string> seen;
                for (auto& p : partial) {
                    auto pr = instantiate_premises(*s, p, fresh_supplier_for({goal}));
                    std::string k;
                    for (const auto& q : pr.premises) k += q.key() + "|";
                    if (seen.insert(k).second) out.push_back(std::move(p));
                }
                return out;
            };
            if (auto r = absorb(try_schema(*s, g, depth, fill))) return *r;
        }
        return acc;
    }

    Verdict run(const Sequent& goal) {
        nodes = 0;
        hit_depth = hit_nodes = false;
        branch.clear();

        gem_candidates.clear();
        std::set<std::string> seen;
        for (const auto* side : {&goal.ante, &goal.succ})
            for (const auto& f : *side)
                for (const auto& s : subformulas(f))
                    if (seen.insert(s->key()).second) gem_candidates.push_back(s);
        std::stable_sort(gem_candidates.begin(), gem_candidates.end(),
                         [](const FormulaPtr& a, const FormulaPtr& b) { return a->size() < b->size(); });

        std::set<std::string> names;
        std::set<std::pair<std::string, std::size_t>> preds, funcs;
        for (const auto* side : {&goal.ante, &goal.succ})
            for (const auto& f : *side) {
                collect_names(f, names);
                collect_signature(f, preds, funcs);
            }
        for (const auto& [fname, arity] : funcs) names.insert(fname);
        extra_terms = lim.term_pool;
        if (goal.has_quantifier()) extra_terms.push_back(Term::app(fresh_name("c", names)));

        // Refutations depend on the Gem candidates and the term pool.
        std::string sig;
        for (const auto& f : gem_candidates) sig += f->key() + ";";
        for (const auto& t : extra_terms) sig += term_key(t) + ";";
        if (sig != run_signature) {
            refuted.clear();
            refuted_under.clear();
        }
        run_signature = sig;

        Result r = search(goal, 0);
        Verdict v;
        v.nodes = nodes;
        if (r.tree) {
            v.kind = VerdictKind::Derivable;
            v.proof = std::move(r.tree);
        } else if (hit_nodes || hit_depth) {
            v.kind = VerdictKind::Unknown;
            v.resource = hit_nodes ? "nodes" : "depth";
        } else {
            v.kind = VerdictKind::NotDerivable;
        }
        return v;
    }
};

Prover::Prover(const Calculus& c, SearchLimits lim) : impl_(std::make_unique<Impl>(c, std::move(lim))) {}
Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

Verdict Prover::prove(const Sequent& goal) { return impl_->run(goal); }

namespace {

bool endsequent_fits(const Calculus& c, const Sequent& goal) {
    std::size_t n = goal.succ.size();
    switch (c.discipline.kind) {
        case DisciplineKind::MultiSuccedent:
            return true;
        case DisciplineKind::SingleNonEmpty:
            return n == 1;
        case DisciplineKind::SingleSuccedent:
            return c.discipline.liberal ? n == 1 : n <= 1;
    }
    return true;
}

}  // namespace

Verdict prove(const Calculus& c, const Sequent& goal, const SearchLimits& lim) {
    if (!endsequent_fits(c, goal)) return Verdict{};
    return Prover(c, lim).prove(goal);
}

SearchLimits decision_limits(SearchLimits lim) {
    lim.max_depth = std::max<std::size_t>(lim.max_depth, 1000);
    lim.max_nodes = std::max<std::size_t>(lim.max_nodes, 5000000);
    return lim;
}

Verdict decide_propositional(const Calculus& c, const Sequent& goal, const SearchLimits& lim) {
    if (goal.has_quantifier()) throw NotPropositional();
    return prove(c, goal, decision_limits(lim));
}

// ---------------------------------------------------------------- semantics

namespace {

bool eval(const FormulaPtr& f, const std::map<std::string, bool>& v) {
    switch (f->conn()) {
        case Conn::Atom:
            return v.at(f->key());
        case Conn::Bottom:
            return false;
        case Conn::Not:
            return !eval(f->lhs(), v);
        case Conn::And:
            return eval(f->lhs(), v) && eval(f->rhs(), v);
        case Conn::Or:
            return eval(f->lhs(), v) || eval(f->rhs(), v);
        case Conn::Imp:
            return !eval(f->lhs(), v) || eval(f->rhs(), v);
        default:
            throw NotPropositional();
    }
}

void atoms_of(const FormulaPtr& f, std::set<std::string>& out) {
    if (f->conn() == Conn::Atom) out.insert(f->key());
    if (f->is_quantifier()) throw NotPropositional();
    if (f->lhs()) atoms_of(f->lhs(), out);
    if (f->rhs()) atoms_of(f->rhs(), out);
}

}  // namespace

bool classical_valid(const Sequent& goal) {
    std::set<std::string> atoms;
    for (const auto* side : {&goal.ante, &goal.succ})
        for (const auto& f : *side) atoms_of(f, atoms);
    std::vector<std::string> names(atoms.begin(), atoms.end());
    for (std::size_t bits = 0; bits < (std::size_t{1} << names.size()); ++bits) {
        std::map<std::string, bool> v;
        for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (bits >> i) & 1;
        bool ante = std::all_of(goal.ante.begin(), goal.ante.end(), [&](const FormulaPtr& f) { return eval(f, v); });
        bool succ = std::any_of(goal.succ.begin(), goal.succ.end(), [&](const FormulaPtr& f) { return eval(f, v); });
        if (ante && !succ) return false;
    }
    return true;
}

// ---------------------------------------------------------------- invertibility

InstancePool default_instance_pool(std::size_t atoms) {
    InstancePool pool;
    std::vector<FormulaPtr> base;
    for (std::size_t i = 0; i < atoms; ++i) base.push_back(atom(std::string(1, static_cast<char>('P' + i))));
    std::vector<FormulaPtr> literals = base;
    for (const auto& a : base) literals.push_back(neg(a));
    pool.formulas = literals;
    for (Conn op : {Conn::And, Conn::Or, Conn::Imp})
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j)
                if (i != j || base.size() == 1) pool.formulas.push_back(binary(op, base[i], base[j]));
    pool.formulas.push_back(bottom());

    pool.contexts.push_back({});
    for (std::size_t i = 0; i < literals.size(); ++i) {
        pool.contexts.push_back({literals[i]});
        for (std::size_t j = i; j < literals.size(); ++j) pool.contexts.push_back({literals[i], literals[j]});
    }
    pool.succ_contexts.push_back({});
    for (const auto& l : literals) pool.succ_contexts.push_back({l});
    return pool;
}

namespace {

void pattern_metas(const PatternPtr& p, std::set<std::string>& metas, bool& binders) {
    if (!p) return;
    switch (p->kind) {
        case Pattern::Kind::Meta:
            metas.insert(p->meta);
            break;
        case Pattern::Kind::Forall:
        case Pattern::Kind::Exists:
        case Pattern::Kind::Subst:
            binders = true;
            break;
        default:
            break;
    }
    pattern_metas(p->lhs, metas, binders);
    pattern_metas(p->rhs, metas, binders);
}

}  // namespace

InvertibilityReport invertibility_report(const Calculus& c, const std::string& rule, const InstancePool& pool,
                                         const SearchLimits& lim) {
    InvertibilityReport rep;
    rep.rule = canonical_rule_name(rule);
    Prover prover(c, lim);
    std::map<std::string, VerdictKind> memo;
    auto derivable = [&](const Sequent& s) {
        auto key = s.key();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        VerdictKind k = prover.prove(s).kind;
        memo.emplace(key, k);
        return k;
    };
    auto all_of = [&](const std::vector<Sequent>& ss) {
        VerdictKind out = VerdictKind::Derivable;
        for (const auto& s : ss) {
            VerdictKind k = derivable(s);
            if (k == VerdictKind::NotDerivable) return k;
            if (k == VerdictKind::Unknown) out = k;
        }
        return out;
    };
    auto fits = [&](const Sequent& s, std::size_t written) {
        std::size_t n = s.succ.size();
        switch (c.discipline.kind) {
            case DisciplineKind::MultiSuccedent:
                return true;
            case DisciplineKind::SingleNonEmpty:
                return n == 1;
            case DisciplineKind::SingleSuccedent:
                return c.discipline.liberal || n <= 1 || written >= n;
        }
        return true;
    };

    std::set<std::string> seen;
    for (const auto* s : c.lookup(rule)) {
        rep.inversion = s->has(Tag::Inversion);
        std::set<std::string> metas;
        std::set<std::string> ctx;
        bool binders = false;
        for (const auto* sp : [&] {
                 std::vector<const SequentPattern*> v{&s->conclusion};
                 for (const auto& p : s->premises) v.push_back(&p);
                 return v;
             }())
            for (const auto* side : {&sp->ante, &sp->succ})
                for (const auto& it : *side) {
                    if (it.is_context())
                        ctx.insert(it.context);
                    else
                        pattern_metas(it.formula, metas, binders);
                }
        if (binders) continue;
        std::vector<std::string> mv(metas.begin(), metas.end()), cv(ctx.begin(), ctx.end());

        Instantiation inst;
        std::function<void(std::size_t)> over_ctx;
        std::function<void(std::size_t)> over_meta = [&](std::size_t i) {
            if (i == mv.size()) return over_ctx(0);
            for (const auto& f : pool.formulas) {
                inst.formulas[mv[i]] = f;
                over_meta(i + 1);
            }
        };
        over_ctx = [&](std::size_t i) {
            if (i < cv.size()) {
                bool succ_side = cv[i] == "Δ" || cv[i] == "Λ";
                for (const auto& m : succ_side ? pool.succ_contexts : pool.contexts) {
                    inst.contexts[cv[i]] = m;
                    over_ctx(i + 1);
                }
                return;
            }
            auto concl = instantiate_conclusion(*s, inst);
            if (!concl) return;
            auto pr = instantiate_premises(*s, inst, fresh_supplier_for({*concl}));
            if (!pr.ok()) return;
            if (!fits(*concl, s->conclusion.formula_items_succ())) return;
            for (std::size_t k = 0; k < pr.premises.size(); ++k)
                if (!fits(pr.premises[k], s->premises[k].formula_items_succ())) return;
            std::string key = concl->key();
            for (const auto& p : pr.premises) key += "|" + p.key();
            if (!seen.insert(key).second) return;

            InvertibilityRow row{*concl, pr.premises, derivable(*concl), all_of(pr.premises), false};
            // Direction of the implication under test.
            VerdictKind from = rep.inversion ? row.premises_verdict : row.conclusion_verdict;
            VerdictKind to = rep.inversion ? row.conclusion_verdict : row.premises_verdict;
            if (from == VerdictKind::Derivable && to == VerdictKind::NotDerivable) {
                row.violation = true;
                ++rep.violations;
            } else if (from == VerdictKind::Unknown || (from == VerdictKind::Derivable && to == VerdictKind::Unknown)) {
                ++rep.undecided;
            }
            rep.rows.push_back(std::move(row));
        };
        over_meta(0);
    }
    return rep;
}

}  // namespace seqcalc
