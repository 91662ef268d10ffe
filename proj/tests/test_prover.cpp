#include "doctest.h"
#include "seqcalc/checker.hpp"
#include "seqcalc/prover.hpp"
#include "seqcalc/text.hpp"
#include "support/oracles.hpp"
#include "support/pool.hpp"

using namespace seqcalc;
using seqcalc::testing::Gen;
using seqcalc::testing::oracle_valid;

namespace {

const Calculus& calc(const std::string& name) {
    const Calculus* c = find_calculus(name);
    REQUIRE(c != nullptr);
    return *c;
}

Sequent S(const std::string& s) { return parse_sequent(s); }

VerdictKind decide(const std::string& c, const std::string& s) {
    auto v = decide_propositional(calc(c), S(s));
    if (v.proof) CHECK(check_proof(calc(c), *v.proof).valid);
    return v.kind;
}

constexpr auto Yes = VerdictKind::Derivable;
constexpr auto No = VerdictKind::NotDerivable;

// Formulas introduced by Gem nodes: in the first child, not in the node.
void gem_formulas(const ProofTree& t, std::vector<FormulaPtr>& out) {
    if (canonical_rule_name(t.rule) == "Gem" && t.children.size() == 2) {
        Multiset extra = t.children[0].sequent.ante;
        for (const auto& f : t.sequent.ante) remove_one(extra, f);
        for (const auto& f : extra) out.push_back(f);
    }
    for (const auto& c : t.children) gem_formulas(c, out);
}

}  // namespace

TEST_CASE("prove examples") {
    auto lem = prove(calc("GM"), S("=> P | ~P"));
    REQUIRE(lem.kind == Yes);
    CHECK(lem.proof->node_count() == 3);
    CHECK(check_proof(calc("GM"), *lem.proof).valid);

    CHECK(prove(calc("Gm"), S("=> P | ~P")).kind == No);

    auto efq = prove(calc("Gi"), S("bot => Q"));
    REQUIRE(efq.kind == Yes);
    CHECK(canonical_rule_name(efq.proof->rule) == "L⊥");
}

TEST_CASE("decide examples") {
    CHECK(decide("Gc-liberal", "=> ((P -> Q) -> P) -> P") == Yes);
    CHECK(decide("GM", "=> ((P -> Q) -> P) -> P") == Yes);
    CHECK(decide("Gi", "=> ((P -> Q) -> P) -> P") == No);
    CHECK(decide("Gm", "bot => Q") == No);
    CHECK(decide("Gi", "bot => Q") == Yes);
    CHECK(decide("Gc-liberal", "~~P => P") == Yes);
    CHECK(decide("Gi", "~~P => P") == No);
    // Gi negation is A -> bot
    CHECK(decide("Gi", "P => (P -> bot) -> bot") == Yes);
    CHECK(decide("Gi", "=> ((P | (P -> bot)) -> bot) -> bot") == Yes);
    CHECK(decide("LK", "P & ~P => Q") == Yes);
    CHECK(decide("G0ip", "bot, P => Q") == Yes);
    CHECK(decide("G0m", "bot, P => Q") == No);
    CHECK(decide("G0cp", "=> P | ~P") == Yes);
    CHECK(decide("G0ip", "=> P | ~P") == No);
    for (const char* s : {"~(P & Q) => ~P | ~Q", "~P | ~Q => ~(P & Q)", "~(P | Q) => ~P & ~Q", "~P & ~Q => ~(P | Q)"})
        CHECK(decide("GM", s) == Yes);
}

TEST_CASE("decide_propositional rejects quantifiers") {
    CHECK_THROWS_AS(decide_propositional(calc("GM"), S("=> forall x. P(x) -> P(x)")), NotPropositional);
}

TEST_CASE("first-order search") {
    for (const char* c : {"GM", "Gc-strict", "Gi", "Gm"}) {
        CAPTURE(c);
        auto v = prove(calc(c), S("=> forall x. P(x) -> P(x)"));
        REQUIRE(v.kind == Yes);
        CHECK(check_proof(calc(c), *v.proof).valid);
    }
    for (const char* s : {"forall x. P(x) => exists y. P(y)", "exists x. forall y. R(x, y) => forall y. exists x. R(x, y)",
                          "forall x. P(x) & Q(x) => forall x. P(x)"}) {
        CAPTURE(s);
        auto v = prove(calc("GM"), S(s));
        REQUIRE(v.kind == Yes);
        CHECK(check_proof(calc("GM"), *v.proof).valid);
    }
}

TEST_CASE("limits") {
    SearchLimits tight;
    tight.max_nodes = 2;
    auto v = prove(calc("GM"), S("~(P & Q & R) => ~P | ~Q | ~R"), tight);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.resource == "nodes");

    SearchLimits shallow;
    shallow.max_depth = 1;
    auto d = prove(calc("GM"), S("=> ((P -> Q) -> P) -> P"), shallow);
    CHECK(d.kind == VerdictKind::Unknown);
    CHECK(d.resource == "depth");
}

TEST_CASE("classical_valid examples") {
    CHECK(classical_valid(S("=> P | ~P")));
    CHECK_FALSE(classical_valid(S("P => Q")));
    CHECK(classical_valid(S("~(P & Q) => ~P | ~Q")));
    CHECK(classical_valid(S("bot =>")));
    CHECK_FALSE(classical_valid(S("=>")));
    CHECK(classical_valid(S("P => Q, P")));
}

TEST_CASE("property: classical_valid agrees with truth tables") {
    for (const auto& s : seqcalc::testing::sweep_pool()) CHECK(classical_valid(s) == oracle_valid(s));
    Gen g(43);
    for (int i = 0; i < 2000; ++i) {
        Sequent s{g.multiset(3, 3), g.multiset(2, 3)};
        CHECK(classical_valid(s) == oracle_valid(s));
    }
}

TEST_CASE("property: search is deterministic") {
    Gen g(47);
    auto pool = seqcalc::testing::sweep_pool();
    for (int i = 0; i < 100; ++i) {
        const auto& s = pool[g.below(pool.size())];
        auto a = prove(calc("Gi"), s);
        auto b = prove(calc("Gi"), s);
        CHECK(a.kind == b.kind);
        CHECK(a.nodes == b.nodes);
        if (a.proof) CHECK(a.proof->same_as(*b.proof));
    }
}

TEST_CASE("property: Gem formulas are subformulas of the goal") {
    SearchLimits lim;
    lim.max_nodes = 20000;
    std::vector<Sequent> goals = {S("~P -> Q, P -> Q => Q"), S("P -> Q, ~P -> Q, R => Q")};
    Gen g(53);
    for (int i = 0; i < 150; ++i) goals.push_back(Sequent{g.multiset(2, 2), {atom(g.coin() ? "P" : "Q")}});
    std::size_t gems = 0;
    Prover strict(calc("Gc-strict"), lim);
    for (const auto& s : goals) {
        auto v = strict.prove(s);
        if (!v.proof) continue;
        CHECK(check_proof(calc("Gc-strict"), *v.proof).valid);
        CHECK(oracle_valid(s));
        std::set<std::string> subs;
        for (const auto* side : {&s.ante, &s.succ})
            for (const auto& f : *side)
                for (const auto& sf : subformulas(f)) subs.insert(sf->key());
        std::vector<FormulaPtr> used;
        gem_formulas(*v.proof, used);
        for (const auto& f : used) CHECK(subs.count(f->key()) == 1);
        gems += used.size();
    }
    MESSAGE("Gem steps inspected: " << gems);
    CHECK(gems > 0);

    lim.gem = GemPolicy::Off;
    CHECK(prove(calc("Gc-strict"), goals[0], lim).kind != Yes);
}

TEST_CASE("property: random goals, verdicts against truth tables") {
    Gen g(59);
    for (int i = 0; i < 300; ++i) {
        Sequent s{g.multiset(2, 2), {g.prop(2)}};
        bool valid = oracle_valid(s);
        auto gm = decide_propositional(calc("GM"), s);
        CHECK(gm.kind == (valid ? Yes : No));
        auto gi = decide_propositional(calc("Gi"), s);
        REQUIRE(gi.kind != VerdictKind::Unknown);
        if (gi.kind == Yes) CHECK(valid);
        if (gi.proof) CHECK(check_proof(calc("Gi"), *gi.proof).valid);
    }
}

TEST_CASE("invertibility examples") {
    auto pool = default_instance_pool(2);
    for (const char* r : {"L∧", "RI∧", "LI∧", "LI→", "RI→", "L∨"}) {
        auto rep = invertibility_report(calc("Gc-liberal"), r, pool);
        CAPTURE(r);
        CHECK(rep.rows.size() > 0);
        CHECK(rep.violations == 0);
        CHECK(rep.undecided == 0);
    }
    auto lneg = invertibility_report(calc("Gc-strict"), "L¬", pool);
    CHECK(lneg.violations >= 1);
    for (const auto& row : lneg.rows) {
        if (!row.violation) continue;
        CHECK(row.conclusion_verdict == Yes);
        CHECK(row.premises_verdict == No);
    }
    CHECK(invertibility_report(calc("Gc-strict"), "RI∧", pool).inversion);
}
