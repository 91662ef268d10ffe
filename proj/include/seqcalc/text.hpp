#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcalc/proof.hpp"
#include "seqcalc/syntax.hpp"

namespace seqcalc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& expected, const std::string& found = {});
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_, column_;
    std::string expected_;
};

class IndentationError : public ParseError {
public:
    IndentationError(int line, int column, const std::string& what);
};

// Named multisets that may appear as bare list elements in a sequent.
using ContextBindings = std::map<std::string, Multiset>;

// Grammar: atoms `P`, `Q(x, f(y))`; `~ & | ->`, `bot`, `forall x.`, `exists x.`
// (and the Unicode forms). A bare lowercase identifier is a variable when bound
// or when it starts with u..z, otherwise a constant; `x()` forces a constant.
Term parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text, const ContextBindings& contexts = {});

enum class Notation { Ascii, Unicode, Latex };

std::string to_text(const Term& t);
std::string to_text(const FormulaPtr& f, Notation n = Notation::Ascii);
std::string to_text(const Sequent& s, Notation n = Notation::Ascii);

struct Expectation {
    bool valid = true;
    std::vector<std::size_t> path;
    std::string reason;  // failure reason name, empty = any
};

struct ProofScript {
    std::string calculus;
    std::string id;
    std::string provenance;
    std::optional<Expectation> expected;
    std::vector<std::pair<std::string, Multiset>> contexts;
    ProofTree tree;
};

// `overrides` replaces the values of header context bindings with the same name.
ProofScript parse_proof_script(const std::string& text, const ContextBindings& overrides = {});

std::string render_script(const ProofTree& tree, const std::string& calculus = {});
std::string render_json(const ProofTree& tree);
std::string render_latex(const ProofTree& tree);
ProofTree parse_json(const std::string& text);

}  // namespace seqcalc
