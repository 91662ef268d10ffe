#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcalc/calculus.hpp"
#include "seqcalc/proof.hpp"

namespace seqcalc {

enum class GemPolicy { Analytic, Off, Unrestricted };

struct SearchLimits {
    std::size_t max_depth = 12;
    std::size_t max_nodes = 100000;
    std::size_t contraction_bound = 2;
    GemPolicy gem = GemPolicy::Analytic;
    std::vector<FormulaPtr> gem_pool;  // required for Unrestricted
    std::vector<Term> term_pool;       // added to the goal's own terms
};

enum class VerdictKind { Derivable, NotDerivable, Unknown };

struct Verdict {
    VerdictKind kind = VerdictKind::NotDerivable;
    std::optional<ProofTree> proof;
    std::string resource;  // "depth" or "nodes" when Unknown
    std::size_t nodes = 0;
};

std::string verdict_name(VerdictKind k);

class NotPropositional : public std::invalid_argument {
public:
    NotPropositional() : std::invalid_argument("goal contains quantifiers") {}
};

// Reusable search engine; caches results across goals for one calculus and limits.
class Prover {
public:
    Prover(const Calculus& c, SearchLimits lim);
    ~Prover();
    Prover(Prover&&) noexcept;
    Prover& operator=(Prover&&) noexcept;

    Verdict prove(const Sequent& goal);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Verdict prove(const Calculus& c, const Sequent& goal, const SearchLimits& lim = {});

// Limits used by decide_propositional: depth effectively unbounded, termination
// from loop checking and the contraction bound.
SearchLimits decision_limits(SearchLimits lim = {});
Verdict decide_propositional(const Calculus& c, const Sequent& goal, const SearchLimits& lim = {});

bool classical_valid(const Sequent& goal);

struct InvertibilityRow {
    Sequent conclusion;
    std::vector<Sequent> premises;
    VerdictKind conclusion_verdict;
    VerdictKind premises_verdict;  // Derivable iff every premise is
    bool violation = false;
};

struct InvertibilityReport {
    std::string rule;
    // True for inversion rules, which are checked premise-to-conclusion.
    bool inversion = false;
    std::vector<InvertibilityRow> rows;
    std::size_t violations = 0;
    std::size_t undecided = 0;
};

struct InstancePool {
    std::vector<FormulaPtr> formulas;   // values for formula metavariables
    std::vector<Multiset> contexts;     // values for context metavariables
    std::vector<Multiset> succ_contexts;  // values for succedent contexts (Δ, Λ)
};

// Formulas: K atoms, their negations, binary combinations of atoms, ⊥.
// Contexts: multisets of at most two atoms or negated atoms.
InstancePool default_instance_pool(std::size_t atoms);

// Base rules: a violation is a derivable conclusion with an underivable premise.
// Inversion rules: a derivable premise with an underivable conclusion.
InvertibilityReport invertibility_report(const Calculus& c, const std::string& rule, const InstancePool& pool,
                                         const SearchLimits& lim = decision_limits());

}  // namespace seqcalc
