#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace seqcalc {

// First-order term: a variable or a function application (constants have no args).
struct Term {
    enum class Kind { Var, App };

    Kind kind = Kind::Var;
    std::string name;
    std::vector<Term> args;

    static Term var(std::string name);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_var() const { return kind == Kind::Var; }
    bool operator==(const Term&) const = default;
};

void collect_vars(const Term& t, std::set<std::string>& out);
std::string term_key(const Term& t);

enum class Conn { Atom, Bottom, Not, And, Or, Imp, Forall, Exists };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Build through the factory functions below.
class Formula {
public:
    Conn conn() const { return conn_; }
    // Predicate symbol for atoms, bound variable for quantifiers.
    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }
    // Operand of Not, body of a quantifier, left operand of a binary connective.
    const FormulaPtr& lhs() const { return lhs_; }
    const FormulaPtr& rhs() const { return rhs_; }
    const FormulaPtr& body() const { return lhs_; }

    // Alpha-invariant canonical key: equal keys iff alpha-equivalent.
    const std::string& key() const { return key_; }
    std::size_t hash() const { return hash_; }
    const std::set<std::string>& free_vars() const { return free_; }
    std::size_t size() const { return size_; }
    bool has_quantifier() const { return quant_; }

    bool is_binary() const { return conn_ == Conn::And || conn_ == Conn::Or || conn_ == Conn::Imp; }
    bool is_quantifier() const { return conn_ == Conn::Forall || conn_ == Conn::Exists; }

    struct Token {};
    Formula(Token, Conn c, std::string name, std::vector<Term> args, FormulaPtr l, FormulaPtr r);

private:
    Conn conn_;
    std::string name_;
    std::vector<Term> args_;
    FormulaPtr lhs_, rhs_;
    std::string key_;
    std::size_t hash_ = 0;
    std::set<std::string> free_;
    std::size_t size_ = 1;
    bool quant_ = false;
};

FormulaPtr atom(std::string pred, std::vector<Term> args = {});
FormulaPtr bottom();
FormulaPtr neg(FormulaPtr a);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr quantifier(Conn q, std::string var, FormulaPtr body);
FormulaPtr binary(Conn c, FormulaPtr a, FormulaPtr b);

std::set<std::string> free_vars(const FormulaPtr& f);
bool alpha_eq(const FormulaPtr& f, const FormulaPtr& g);
bool is_atomic(const FormulaPtr& f);

// Capture-avoiding substitution of t for the free occurrences of x.
FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const Term& t);
Term substitute(const Term& u, const std::string& x, const Term& t);

// Reflexive-transitive subformula closure, deduplicated up to alpha, in
// preorder of first occurrence.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

// Every identifier used as a variable, free or bound.
void collect_names(const FormulaPtr& f, std::set<std::string>& out);

// Constants and function symbols with their arities.
void collect_signature(const FormulaPtr& f, std::set<std::pair<std::string, std::size_t>>& preds,
                       std::set<std::pair<std::string, std::size_t>>& funcs);

// Ground constants and free variables occurring in f, as terms.
void collect_ground_terms(const FormulaPtr& f, std::vector<Term>& out);

// name, name', name'', ... : the first variant not in `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

using Multiset = std::vector<FormulaPtr>;

struct Sequent {
    Multiset ante;
    Multiset succ;

    // Order-insensitive, multiplicity-sensitive, alpha-invariant.
    std::string key() const;
    bool operator==(const Sequent& other) const { return key() == other.key(); }
    std::set<std::string> free_vars() const;
    bool has_quantifier() const;
};

std::string multiset_key(const Multiset& m);
bool multiset_eq(const Multiset& a, const Multiset& b);
std::size_t count_of(const Multiset& m, const FormulaPtr& f);
// Removes one alpha-equivalent occurrence; false if absent.
bool remove_one(Multiset& m, const FormulaPtr& f);
bool contains(const Multiset& m, const Multiset& sub);

// Term/predicate arities must agree across one sequent. Returns an error message or "".
std::string arity_error(const std::vector<FormulaPtr>& fs);

}  // namespace seqcalc
