#include <sstream>

#include "doctest.h"
#include "seqcalc/calculus.hpp"
#include "seqcalc/text.hpp"
#include "support/oracles.hpp"
#include "support/pool.hpp"

using namespace seqcalc;
using seqcalc::testing::brute_force_splits;
using seqcalc::testing::debruijn;
using seqcalc::testing::Gen;

namespace {

Sequent S(const std::string& s) { return parse_sequent(s); }
FormulaPtr F(const std::string& s) { return parse_formula(s); }

const Calculus& calc(const std::string& name) {
    const Calculus* c = find_calculus(name);
    REQUIRE(c != nullptr);
    return *c;
}

const RuleSchema& schema(const std::string& calculus, const std::string& rule, std::size_t which = 0) {
    auto found = calc(calculus).lookup(rule);
    REQUIRE(found.size() > which);
    return *found[which];
}

std::vector<Sequent> premises_of(const RuleSchema& r, const Instantiation& inst, const Sequent& goal) {
    auto res = instantiate_premises(r, inst, fresh_supplier_for({goal}));
    REQUIRE(res.ok());
    return res.premises;
}

// "Ax:0 L∧:1 ..." for a calculus, in registry order.
std::string shape(const Calculus& c) {
    std::ostringstream out;
    for (const auto* s : c.schemas()) out << s->name << ":" << s->premises.size() << " ";
    return out.str();
}

}  // namespace

TEST_CASE("R∧ matches P => Q & R once") {
    const auto& r = schema("Gc-strict", "R∧");
    auto insts = match_conclusion(r, S("P => Q & R"));
    REQUIRE(insts.size() == 1);
    CHECK(alpha_eq(insts[0].formulas.at("A"), F("Q")));
    CHECK(alpha_eq(insts[0].formulas.at("B"), F("R")));
    CHECK(multiset_eq(insts[0].contexts.at("Γ"), {F("P")}));
}

TEST_CASE("axiom matches P, Q => P once") {
    auto insts = match_conclusion(schema("Gc-strict", "Ax"), S("P, Q => P"));
    REQUIRE(insts.size() == 1);
    CHECK(alpha_eq(insts[0].formulas.at("A"), F("P")));
    CHECK(multiset_eq(insts[0].contexts.at("Γ"), {F("Q")}));
    CHECK(match_conclusion(schema("Gc-strict", "Ax"), S("P, Q => R")).empty());
}

TEST_CASE("LK cut enumerates the four antecedent splits") {
    const auto& cut = schema("LK", "Cut");
    CHECK(cut.has(Tag::ContextSplitting));
    auto insts = match_conclusion(cut, S("P, Q => R"));
    std::set<std::pair<std::string, std::string>> ante;
    for (const auto& i : insts) ante.insert({multiset_key(i.contexts.at("Γ")), multiset_key(i.contexts.at("Θ"))});
    CHECK(ante.size() == 4);
    // with the cut formula bound, every split yields two premises carrying it
    for (auto inst : insts) {
        inst.formulas["A"] = F("P -> Q");
        auto ps = premises_of(cut, inst, S("P, Q => R"));
        REQUIRE(ps.size() == 2);
        CHECK(count_of(ps[0].succ, F("P -> Q")) == 1);
        CHECK(count_of(ps[1].ante, F("P -> Q")) == 1);
    }
}

TEST_CASE("R∀ introduces a fresh eigenvariable") {
    const auto& r = schema("Gc-strict", "R∀");
    Sequent goal = S("=> forall x. P(x)");
    auto insts = match_conclusion(r, goal);
    REQUIRE(insts.size() == 1);
    auto ps = premises_of(r, insts[0], goal);
    REQUIRE(ps.size() == 1);
    REQUIRE(ps[0].succ.size() == 1);
    auto body = ps[0].succ[0];
    REQUIRE(body->conn() == Conn::Atom);
    REQUIRE(body->args().size() == 1);
    CHECK(body->args()[0].is_var());

    // y already free in the antecedent: the supplier must avoid it
    Sequent busy = S("P(y) => forall x. P(x)");
    auto ps2 = premises_of(r, match_conclusion(r, busy).at(0), busy);
    CHECK(ps2[0].succ[0]->args()[0].name != "y");
}

TEST_CASE("Gi axiom on bot violates AtomicOnly") {
    const auto& ax = schema("Gi", "Ax");
    Sequent goal = S("bot => bot");
    auto insts = match_conclusion(ax, goal);
    REQUIRE(insts.size() == 1);
    auto res = instantiate_premises(ax, insts[0], fresh_supplier_for({goal}));
    REQUIRE(res.violation.has_value());
    CHECK(res.violation->condition.kind == SideCondition::Kind::AtomicOnly);
}

TEST_CASE("Gm R→ fills the antecedent as a multiset") {
    const auto& r = schema("Gm", "R→");
    Sequent goal = S("P => P -> Q");
    auto insts = match_conclusion(r, goal);
    REQUIRE(insts.size() == 1);
    auto ps = premises_of(r, insts[0], goal);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == S("P, P => Q"));
}

TEST_CASE("side conditions") {
    SUBCASE("R∀ eigenvariable free in the context") {
        const auto& r = schema("Gc-strict", "R∀");
        Sequent concl = S("P(y) => forall x. Q(x)");
        Sequent prem = S("P(y) => Q(y)");
        bool seen = false;
        match_instance(r, concl, {prem}, {}, [&](const Instantiation& inst) {
            auto v = check_side_conditions(r, inst, concl, {prem});
            REQUIRE(v.has_value());
            CHECK(v->condition.kind == SideCondition::Kind::EigenvariableFresh);
            seen = true;
            return true;
        });
        CHECK(seen);
    }
    SUBCASE("Gem-at rejects a compound formula, Gem accepts it") {
        Sequent concl = S("R => R");
        std::vector<Sequent> prem = {S("P & Q, R => R"), S("~(P & Q), R => R")};
        int at = 0, full = 0;
        match_instance(gem_at_schema(), concl, prem, {}, [&](const Instantiation& inst) {
            auto v = check_side_conditions(gem_at_schema(), inst, concl, prem);
            REQUIRE(v.has_value());
            CHECK(v->condition.kind == SideCondition::Kind::AtomicOnly);
            ++at;
            return true;
        });
        const auto& gem = schema("Gc-strict", "Gem");
        match_instance(gem, concl, prem, {}, [&](const Instantiation& inst) {
            CHECK_FALSE(check_side_conditions(gem, inst, concl, prem).has_value());
            ++full;
            return true;
        });
        CHECK(at == 1);
        CHECK(full == 1);
    }
}

TEST_CASE("registry fidelity") {
    const std::map<std::string, std::string> table = {
        {"LK", "Ax:0 L∧:1 L∧:1 R∧:2 L∨:2 R∨:1 R∨:1 L→:2 R→:1 L¬:1 R¬:1 L∀:1 R∀:1 L∃:1 R∃:1 "
               "LW:1 RW:1 LC:1 RC:1 LInc:1 RInc:1 Cut:2 "},
        {"G0m", "Ax:0 L∧:1 R∧:2 L∨:2 R∨:1 R∨:1 L→:2 R→:1 LW:1 LC:1 "},
        {"G0ip", "Ax:0 L⊥:0 L∧:1 R∧:2 L∨:2 R∨:1 R∨:1 L→:2 R→:1 LW:1 LC:1 "},
        {"G0cp", "Ax:0 L⊥:0 L∧:1 R∧:2 L∨:2 R∨:1 R∨:1 L→:2 R→:1 Gem0-at:2 LW:1 LC:1 "},
        {"Gc-strict", "Ax:0 L⊥:0 L∧:1 R∧:2 LI∧:1 RI∧:1 RI∧:1 L∨:2 R∨:1 LI∨:1 LI∨:1 RI∨:1 L→:2 R→:1 LI→:1 "
                      "RI→:1 L¬¬:1 R¬¬:1 LI¬¬:1 RI¬¬:1 L¬:1 R¬:1 Gem:2 L∀:1 R∀:1 LI∀:1 RI∀:1 L∃:1 R∃:1 "
                      "LI∃:1 RI∃:1 LW:1 LC:1 Cut:2 "},
        {"Gi", "Ax:0 L⊥:0 L∧:1 R∧:2 LI∧:1 RI∧:1 RI∧:1 L∨:2 R∨:1 R∨:1 LI∨:1 LI∨:1 RI∨:1 RI∨:1 L→:2 R→:1 "
               "LI→:1 RI→:1 L¬→:1 R¬→:1 L∀:1 R∀:1 LI∀:1 RI∀:1 L∃:1 R∃:1 LI∃:1 RI∃:1 LW:1 LC:1 Cut:2 "},
        {"Gm", "Ax:0 L∧:1 R∧:2 LI∧:1 RI∧:1 RI∧:1 L∨:2 R∨:1 R∨:1 LI∨:1 LI∨:1 RI∨:1 RI∨:1 L→:2 R→:1 "
               "LI→:1 RI→:1 L∀:1 R∀:1 LI∀:1 RI∀:1 L∃:1 R∃:1 LI∃:1 RI∃:1 LW:1 LC:1 Cut:2 "},
        {"GM", "Ax:0 L⊥:0 L∧:1 R∧:2 LI∧:1 RI∧:1 RI∧:1 L∨:2 R∨:1 LI∨:1 LI∨:1 RI∨:1 L→:2 R→:1 LI→:1 "
               "RI→:1 L¬¬:1 R¬¬:1 LI¬¬:1 RI¬¬:1 L¬:1 R¬:1 Gem:2 L∀:1 R∀:1 LI∀:1 RI∀:1 L∃:1 R∃:1 "
               "LI∃:1 RI∃:1 LW:1 RW:1 LC:1 RC:1 Cut:2 "},
    };
    CHECK(calculus_names().size() == table.size() + 1);
    for (const auto& [name, want] : table) {
        CAPTURE(name);
        CHECK(shape(calc(name)) == want);
    }
    CHECK(shape(calc("Gc-liberal")) == table.at("Gc-strict"));
    CHECK(calc("Gm").discipline.kind == DisciplineKind::SingleNonEmpty);
    CHECK(calc("GM").discipline.kind == DisciplineKind::MultiSuccedent);
    CHECK(calc("Gc-liberal").discipline.liberal);
    CHECK_FALSE(calc("Gc-strict").discipline.liberal);
}

TEST_CASE("registry lookups") {
    const auto& gm = calc("Gm");
    CHECK_FALSE(gm.has_rule("L⊥"));
    CHECK_FALSE(gm.has_rule("L¬"));
    CHECK_FALSE(gm.has_rule("R¬"));
    CHECK(gm.lookup("Ax").at(0)->side_conditions.at(0).kind == SideCondition::Kind::AtomicOnly);

    const auto& g0 = calc("G0m");
    CHECK(g0.has_rule("LW"));
    CHECK(g0.has_rule("LC"));
    CHECK_FALSE(g0.has_rule("Cut"));

    // schemas writing a two-formula succedent: R∨'s premise and RI∨'s conclusion
    std::vector<std::string> two;
    for (const auto* s : calc("Gc-strict").schemas()) {
        bool wide = s->conclusion.formula_items_succ() >= 2;
        for (const auto& p : s->premises) wide = wide || p.formula_items_succ() >= 2;
        if (wide) two.push_back(s->name);
    }
    CHECK(two == std::vector<std::string>{"R∨", "RI∨"});

    CHECK(calc("LK").lookup("Lconj").size() == 2);
    CHECK(calc("Gc-strict").lookup("RIconj").size() == 2);
    CHECK(canonical_rule_name("Rimp") == "R→");
    CHECK(canonical_rule_name("RFoo") == "RFoo");
    CHECK(calc("GM").lookup("RFoo").empty());
}

TEST_CASE("Gm structural audit: no instance can have an empty succedent") {
    for (const auto* s : calc("Gm").schemas()) {
        CAPTURE(s->name);
        std::vector<const SequentPattern*> all = {&s->conclusion};
        for (const auto& p : s->premises) all.push_back(&p);
        for (const auto* p : all) {
            REQUIRE(p->succ.size() == 1);
            CHECK_FALSE(p->succ[0].is_context());
        }
    }
}

TEST_CASE("context splitting tags") {
    for (const auto& name : calculus_names()) {
        for (const auto* s : calc(name).schemas()) {
            bool splitting = s->has(Tag::ContextSplitting);
            bool expected = name == "LK" && (s->name == "L→" || s->name == "Cut");
            CAPTURE(name);
            CAPTURE(s->name);
            CHECK(splitting == expected);
            if (s->has(Tag::Axiom)) CHECK(s->premises.empty());
        }
    }
}

TEST_CASE("property: matches re-instantiate to the goal") {
    auto pool = seqcalc::testing::sweep_pool();
    Gen g(23);
    std::vector<Sequent> goals;
    for (int i = 0; i < 400; ++i) goals.push_back(pool[g.below(pool.size())]);
    goals.push_back(S("P, P => P | Q, P"));
    goals.push_back(S("forall x. P(x), exists y. R(y, a) => forall z. P(z) & Q"));
    std::size_t checked = 0;
    for (const auto& name : calculus_names())
        for (const auto* s : calc(name).schemas())
            for (const auto& goal : goals)
                for (const auto& inst : match_conclusion(*s, goal)) {
                    auto back = instantiate_conclusion(*s, inst);
                    CAPTURE(s->name);
                    CAPTURE(inst.describe());
                    REQUIRE(back.has_value());
                    CHECK(debruijn(*back) == debruijn(goal));
                    ++checked;
                }
    MESSAGE("instantiations re-checked: " << checked);
    CHECK(checked > 1000);
}

TEST_CASE("property: shared contexts are determined by the principal formulas") {
    auto pool = seqcalc::testing::sweep_pool();
    Gen g(29);
    for (const auto& name : calculus_names())
        for (const auto* s : calc(name).schemas()) {
            if (s->has(Tag::ContextSplitting)) continue;
            for (int i = 0; i < 150; ++i) {
                const auto& goal = pool[g.below(pool.size())];
                std::map<std::string, std::set<std::string>> ctx;
                for (const auto& inst : match_conclusion(*s, goal)) {
                    std::string principal = multiset_key(inst.principal_ante) + "|" + multiset_key(inst.principal_succ);
                    std::string contexts;
                    for (const auto& [k, m] : inst.contexts) contexts += k + "=" + multiset_key(m) + ";";
                    ctx[principal].insert(contexts);
                }
                for (const auto& [p, cs] : ctx) {
                    CAPTURE(s->name);
                    CHECK(cs.size() == 1);
                }
            }
        }
}

TEST_CASE("property: split counts agree with the brute-force enumerator") {
    // Γ, Θ on the left only, so every split is visible in the contexts.
    RuleSchema split = make_schema("Split", {"Γ ⇒ A", "Θ ⇒ A"}, "Γ, Θ ⇒ A", {});
    Gen g(31);
    for (int i = 0; i < 300; ++i) {
        Multiset ante;
        std::size_t n = g.below(5);
        std::vector<FormulaPtr> choices = {F("P"), F("Q"), F("P & Q"), F("~P")};
        for (std::size_t k = 0; k < n; ++k) ante.push_back(choices[g.below(g.coin() ? 2 : choices.size())]);
        Sequent goal{ante, {F("R")}};
        std::set<std::vector<std::string>> got;
        for (const auto& inst : match_conclusion(split, goal))
            got.insert({debruijn(inst.contexts.at("Γ")), debruijn(inst.contexts.at("Θ"))});
        auto want = brute_force_splits(ante, 2);
        CHECK(got == want);
        // multiplicity-aware count: product of (m_i + 1)
        std::map<std::string, std::size_t> mult;
        for (const auto& f : ante) ++mult[f->key()];
        std::size_t product = 1;
        for (const auto& [k, m] : mult) product *= m + 1;
        CHECK(got.size() == product);
    }
}
