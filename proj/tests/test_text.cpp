#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "seqcalc/corpus.hpp"
#include "seqcalc/text.hpp"
#include "support/oracles.hpp"

using namespace seqcalc;
using seqcalc::testing::Gen;

namespace {

FormulaPtr F(const std::string& s) { return parse_formula(s); }

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

const char* kLem = R"(calculus: GM
=> P | ~P  [R∨]
  => P, ~P  [R¬]
    P => P  [Ax]
)";

}  // namespace

TEST_CASE("formula grammar") {
    auto f = F("P -> Q -> R");
    REQUIRE(f->conn() == Conn::Imp);
    CHECK(alpha_eq(f->lhs(), F("P")));
    CHECK(alpha_eq(f->rhs(), imp(atom("Q"), atom("R"))));

    auto g = F("~(P & Q)");
    REQUIRE(g->conn() == Conn::Not);
    CHECK(g->lhs()->conn() == Conn::And);

    auto h = F("forall x. P(x) -> Q");
    REQUIRE(h->conn() == Conn::Forall);
    CHECK(h->body()->conn() == Conn::Imp);

    CHECK(alpha_eq(F("~P & Q | R -> S"), imp(disj(conj(neg(atom("P")), atom("Q")), atom("R")), atom("S"))));
    CHECK(alpha_eq(F("(P -> Q) -> R"), imp(imp(atom("P"), atom("Q")), atom("R"))));
    CHECK(alpha_eq(F("¬P ∧ Q → ⊥"), F("~P & Q -> bot")));
    CHECK(alpha_eq(F("∀x.∃y.R(x, y)"), F("forall x. exists y. R(x, y)")));
    CHECK(F("bot")->conn() == Conn::Bottom);

    // u..z are variables, other lowercase names are constants
    auto q = F("Q(x, a, f(y))");
    CHECK(q->args()[0].is_var());
    CHECK_FALSE(q->args()[1].is_var());
    CHECK(free_vars(q) == std::set<std::string>{"x", "y"});
    CHECK_FALSE(F("Q(x())")->args()[0].is_var());
}

TEST_CASE("sequent grammar") {
    auto a = parse_sequent("P, ~P => bot");
    CHECK(a.ante.size() == 2);
    REQUIRE(a.succ.size() == 1);
    CHECK(a.succ[0]->conn() == Conn::Bottom);

    auto b = parse_sequent("=> P | ~P");
    CHECK(b.ante.empty());
    CHECK(b.succ.size() == 1);

    auto c = parse_sequent("P =>");
    CHECK(c.succ.empty());

    auto d = parse_sequent("Gamma, P => Q", {{"Gamma", {F("S"), F("T")}}});
    CHECK(d.ante.size() == 3);
    CHECK(parse_sequent("P ⇒ Q") == parse_sequent("P => Q"));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_formula("P & & Q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_formula("(P & Q"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall . P"), ParseError);
    CHECK_THROWS_AS(parse_sequent("P => Q => R"), ParseError);
    CHECK_THROWS_AS(parse_formula("P $ Q"), ParseError);
}

TEST_CASE("proof script grammar") {
    auto s = parse_proof_script(kLem);
    CHECK(s.calculus == "GM");
    CHECK(s.tree.node_count() == 3);
    CHECK(s.tree.rule == "R∨");

    auto hints = parse_proof_script("S => C  [Cut; cut=P & Q]\n  S => P & Q  [Ax]\n  P & Q, S => C  [Ax]\n");
    CHECK(hints.tree.hints.at("cut") == "P & Q");

    // syntax only: unknown rules and wrong child counts parse
    CHECK(parse_proof_script("P => P  [RFoo]\n").tree.rule == "RFoo");
    CHECK(parse_proof_script("P => P & P  [R∧]\n  P => P  [Ax]\n").tree.children.size() == 1);

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_proof_script("P => P\n"), ParseError);
        CHECK_THROWS_AS(parse_proof_script("P => P  []\n"), ParseError);
        CHECK_THROWS_AS(parse_proof_script("  P => P  [Ax]\n"), IndentationError);
        CHECK_THROWS_AS(parse_proof_script("P => P  [Ax]\nQ => Q  [Ax]\n"), IndentationError);
        CHECK_THROWS_AS(parse_proof_script("S => C  [Cut]\n    S => P  [Ax]\n  P, S => C  [Ax]\n"), IndentationError);
        CHECK_THROWS_AS(parse_proof_script("P => P  [Ax]\n\tP => P  [Ax]\n"), IndentationError);
        CHECK_THROWS_AS(parse_proof_script("colour: blue\nP => P  [Ax]\n"), ParseError);
        CHECK_THROWS_AS(parse_proof_script("calculus: GM\n"), ParseError);
        try {
            parse_proof_script("calculus: GM\nP => P  [Ax]\n  P => P &  [Ax]\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
}

TEST_CASE("rendering the LEM tree") {
    auto t = parse_proof_script(kLem).tree;
    auto j = nlohmann::json::parse(render_json(t));
    std::size_t nodes = 0;
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& n) {
        ++nodes;
        CHECK(n.contains("sequent"));
        CHECK(n["sequent"].contains("ante"));
        CHECK(n["sequent"].contains("succ"));
        CHECK(n.contains("rule"));
        CHECK(n.contains("hints"));
        for (const auto& c : n["children"]) walk(c);
    };
    walk(j);
    CHECK(nodes == 3);

    auto tex = render_latex(t);
    CHECK(count(tex, "\\begin{prooftree}") == 1);
    CHECK(count(tex, "\\UnaryInfC") == 2);
    CHECK(count(tex, "\\BinaryInfC") == 0);
    CHECK(count(tex, "\\AxiomC") == 1);

    CHECK(render_script(t, "GM").rfind("calculus: GM\n", 0) == 0);
}

TEST_CASE("to_text round-trips formulas") {
    Gen g(61);
    for (int i = 0; i < 1000; ++i) {
        auto f = g.fol(4);
        for (auto n : {Notation::Ascii, Notation::Unicode}) CHECK(alpha_eq(parse_formula(to_text(f, n)), f));
    }
}

TEST_CASE("property: script and json round-trip random trees") {
    Gen g(67);
    for (int i = 0; i < 200; ++i) {
        ProofTree t = g.tree(3);
        auto via_script = parse_proof_script(render_script(t, "GM"));
        CHECK(via_script.calculus == "GM");
        CHECK(via_script.tree.same_as(t));
        CHECK(parse_json(render_json(t)).same_as(t));
    }
}

TEST_CASE("property: corpus trees round-trip") {
    for (const auto& d : load_corpus()) {
        CAPTURE(d.id);
        CHECK(parse_proof_script(render_script(d.tree, d.calculus)).tree.same_as(d.tree));
        CHECK(parse_json(render_json(d.tree)).same_as(d.tree));
    }
}

TEST_CASE("json errors") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(parse_json(R"({"rule": "Ax"})"), ParseError);
}
