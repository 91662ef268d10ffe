#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

// Schematic formula. `Subst` is A(x/t): body metavariable A, bound-variable
// metavariable x, term slot t (or eigenvariable slot y).
struct Pattern {
    enum class Kind { Meta, Bottom, Not, And, Or, Imp, Forall, Exists, Subst };
    Kind kind = Kind::Meta;
    std::string meta;
    std::string binder;
    std::string slot;
    PatternPtr lhs, rhs;
};

struct Item {
    std::string context;  // nonempty for a context metavariable (Γ, Δ, Θ, Λ)
    PatternPtr formula;
    bool is_context() const { return !context.empty(); }
};

struct SequentPattern {
    std::vector<Item> ante;
    std::vector<Item> succ;

    std::size_t formula_items_succ() const;
};

struct SideCondition {
    enum class Kind { EigenvariableFresh, AtomicOnly, NoEmptySuccedent };
    Kind kind;
    std::string slot;
};

enum class Tag { Axiom, Logical, Structural, Inversion, Invertible, Cut, ContextSplitting };

struct RuleSchema {
    std::string name;
    std::vector<SequentPattern> premises;
    SequentPattern conclusion;
    std::vector<SideCondition> side_conditions;
    std::set<Tag> tags;

    bool has(Tag t) const { return tags.count(t) > 0; }
    // Formula metavariables occurring only in premises (cut formula, Gem formula, ...).
    std::vector<std::string> premise_only_metas() const;
    std::vector<std::string> term_slots() const;
    std::vector<std::string> eigen_slots() const;
    std::string text() const;
};

enum class DisciplineKind { MultiSuccedent, SingleSuccedent, SingleNonEmpty };

struct Discipline {
    DisciplineKind kind = DisciplineKind::MultiSuccedent;
    bool liberal = false;
    std::string name() const;
};

struct Calculus {
    std::string name;
    std::vector<RuleSchema> axioms;
    std::vector<RuleSchema> rules;
    Discipline discipline;

    // Axioms then rules, registry order.
    std::vector<const RuleSchema*> schemas() const;
    // All schemas citable under `rule_name` (rule label or ASCII alias).
    std::vector<const RuleSchema*> lookup(const std::string& rule_name) const;
    bool has_rule(const std::string& canonical_name) const;
};

// Maps an ASCII alias or label to the canonical label; returns the input if unknown.
std::string canonical_rule_name(const std::string& name);
const std::vector<std::pair<std::string, std::string>>& rule_aliases();

struct Instantiation {
    std::map<std::string, FormulaPtr> formulas;
    std::map<std::string, std::string> binders;
    std::map<std::string, Multiset> contexts;
    std::map<std::string, Term> terms;
    // Concrete formulas matched by the non-context items of the conclusion.
    Multiset principal_ante, principal_succ;

    std::string key() const;
    std::string describe() const;
};

struct SideConditionViolation {
    SideCondition condition;
    std::string detail;
};

struct PremiseResult {
    std::vector<Sequent> premises;
    std::optional<SideConditionViolation> violation;
    std::string error;  // unfilled metavariable or slot
    bool ok() const { return !violation && error.empty(); }
};

using FreshSupplier = std::function<std::string(const std::string& base)>;

// Instantiations fixing the whole conclusion. A conclusion item A(x/t) whose A
// is bound only by a premise (LI∀, RI∃, ...) yields none; see match_instance.
std::vector<Instantiation> match_conclusion(const RuleSchema& schema, const Sequent& goal);

PremiseResult instantiate_premises(const RuleSchema& schema, Instantiation inst, const FreshSupplier& fresh);

// Builds the concrete conclusion; fails only on unbound metavariables.
std::optional<Sequent> instantiate_conclusion(const RuleSchema& schema, const Instantiation& inst);

std::optional<SideConditionViolation> check_side_conditions(const RuleSchema& schema, const Instantiation& inst,
                                                            const Sequent& conclusion,
                                                            const std::vector<Sequent>& premises);

// Enumerates every instantiation under which the schema's conclusion is `node`
// and its premises are `children`, in order. `seed` may pre-bind metavariables
// and slots. The callback returns false to stop.
void match_instance(const RuleSchema& schema, const Sequent& node, const std::vector<Sequent>& children,
                    const Instantiation& seed, const std::function<bool(const Instantiation&)>& visit);

// Fresh-name supplier avoiding every name occurring in the given sequents.
FreshSupplier fresh_supplier_for(const std::vector<Sequent>& avoid);

// Schema construction from text such as "A ∧ B, Γ ⇒ Δ".
SequentPattern parse_pattern(const std::string& text);
RuleSchema make_schema(std::string name, const std::vector<std::string>& premises, const std::string& conclusion,
                       std::set<Tag> tags, std::vector<SideCondition> side = {});

std::string render_pattern(const SequentPattern& p);

using Registry = std::map<std::string, Calculus>;

const Registry& builtin_calculi();
const Calculus* find_calculus(const std::string& name);
std::vector<std::string> calculus_names();

const RuleSchema& gem_at_schema();
const RuleSchema& gem0_at_schema();

// Copy of `base` with one more schema, under a new name.
Calculus attach(const Calculus& base, const RuleSchema& extra, const std::string& name);

}  // namespace seqcalc
