#include "doctest.h"
#include "seqcalc/checker.hpp"
#include "seqcalc/prover.hpp"
#include "seqcalc/text.hpp"
#include "support/oracles.hpp"
#include "support/pool.hpp"

using namespace seqcalc;
using seqcalc::testing::Gen;

namespace {

const Calculus& calc(const std::string& name) {
    const Calculus* c = find_calculus(name);
    REQUIRE(c != nullptr);
    return *c;
}

ProofTree tree(const std::string& script) { return parse_proof_script(script).tree; }

ProofTree leaf(const std::string& sequent, const std::string& rule) {
    ProofTree t;
    t.sequent = parse_sequent(sequent);
    t.rule = rule;
    return t;
}

const ProofTree& at(const ProofTree& t, const std::vector<std::size_t>& path) {
    const ProofTree* n = &t;
    for (auto i : path) {
        REQUIRE(i < n->children.size());
        n = &n->children[i];
    }
    return *n;
}

ProofTree* at_mut(ProofTree& t, const std::vector<std::size_t>& path) {
    ProofTree* n = &t;
    for (auto i : path) n = &n->children[i];
    return n;
}

void all_paths(const ProofTree& t, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        cur.push_back(i);
        all_paths(t.children[i], cur, out);
        cur.pop_back();
    }
}

const char* kLem = R"(
=> P | ~P  [R∨]
  => P, ~P  [R¬]
    P => P  [Ax]
)";

}  // namespace

TEST_CASE("LEM through the double-active R∨") {
    auto t = tree(kLem);
    CHECK(check_proof(calc("GM"), t).valid);
    CHECK(check_proof(calc("Gc-liberal"), t).valid);

    auto strict = check_proof(calc("Gc-strict"), t);
    REQUIRE_FALSE(strict.valid);
    CHECK(strict.failure->path == std::vector<std::size_t>{0});
    CHECK(strict.failure->reason == FailureReason::NoMatchingInstantiation);

    auto gi = check_proof(calc("Gi"), t);
    CHECK_FALSE(gi.valid);
}

TEST_CASE("Gi axiom must be atomic") {
    auto t = leaf("P & Q, S => P & Q", "Ax");
    auto r = check_proof(calc("Gi"), t);
    REQUIRE_FALSE(r.valid);
    CHECK(r.failure->reason == FailureReason::SideConditionViolated);
    CHECK(r.failure->path.empty());
    CHECK(check_proof(calc("Gc-strict"), t).valid);
}

TEST_CASE("check_step examples") {
    CHECK_FALSE(check_step(calc("Gi"), leaf("bot, S => C", "L⊥")).has_value());
    CHECK_FALSE(check_step(calc("Gi"), leaf("bot, S => C", "Lbot")).has_value());
    CHECK(check_step(calc("Gm"), leaf("bot, S => C", "L⊥"))->reason == FailureReason::UnknownRule);

    ProofTree cut = tree(R"(
S => C  [Cut]
  S => P  [Ax]
  P, S => C  [Ax]
)");
    CHECK_FALSE(check_step(calc("Gc-strict"), cut).has_value());
    cut.hints["cut"] = "P";
    CHECK_FALSE(check_step(calc("Gc-strict"), cut).has_value());
    cut.hints["cut"] = "Q";
    CHECK(check_step(calc("Gc-strict"), cut).has_value());

    // a singleton ⊥ succedent is fine in Gm; an empty one is not
    ProofTree falsum = tree("P, P -> bot => bot  [L→]\n  P => P  [Ax]\n  bot, P => bot  [LW]\n");
    CHECK_FALSE(check_step(calc("Gm"), falsum).has_value());
    auto empty = check_step(calc("Gm"), leaf("P =>", "Ax"));
    REQUIRE(empty.has_value());
    CHECK(empty->reason == FailureReason::DisciplineViolated);
}

TEST_CASE("failure reasons") {
    SUBCASE("unknown rule") {
        auto r = check_proof(calc("GM"), tree("P => P  [RFoo]\n"));
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->reason == FailureReason::UnknownRule);
    }
    SUBCASE("premise count") {
        auto r = check_proof(calc("GM"), tree("P => P & P  [R∧]\n  P => P  [Ax]\n"));
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->reason == FailureReason::PremiseCountMismatch);
        CHECK(r.failure->path.empty());
    }
    SUBCASE("wrong child") {
        auto r = check_proof(calc("GM"), tree("P => P & Q  [R∧]\n  P => P  [Ax]\n  P => P  [Ax]\n"));
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->reason == FailureReason::NoMatchingInstantiation);
    }
    SUBCASE("deepest failure reported first") {
        auto r = check_proof(calc("GM"), tree("P => P & Q  [R∧]\n  P => P  [Ax]\n  P => Q  [Ax]\n"));
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->path == std::vector<std::size_t>{1});
    }
    SUBCASE("liberal endsequent must be singlesuccedent") {
        auto r = check_proof(calc("Gc-liberal"), tree("P => P, Q  [Ax]\n"));
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->reason == FailureReason::EndsequentDisciplineViolated);
        CHECK(check_proof(calc("GM"), tree("P => P, Q  [Ax]\n")).valid);
    }
    SUBCASE("eigenvariable") {
        auto ok = tree("P(a) => forall x. P(a)  [R∀; eigen=y]\n  P(a) => P(a)  [Ax]\n");
        CHECK(check_proof(calc("Gc-strict"), ok).valid);
        auto bad = tree("P(y) => forall x. P(x)  [R∀]\n  P(y) => P(y)  [Ax]\n");
        auto r = check_proof(calc("Gc-strict"), bad);
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure->reason == FailureReason::SideConditionViolated);
    }
}

TEST_CASE("ASCII aliases and labels check identically") {
    auto a = tree("=> P -> P  [R→]\n  P => P  [Ax]\n");
    auto b = tree("=> P -> P  [Rimp]\n  P => P  [axiom]\n");
    CHECK(check_proof(calc("Gi"), a).valid);
    CHECK(check_proof(calc("Gi"), b).valid);
}

TEST_CASE("eigenvariable names are compared up to alpha") {
    auto t = tree("=> forall x. P(x) -> P(x)  [R∀]\n  => P(w) -> P(w)  [R→]\n    P(w) => P(w)  [Ax]\n");
    CHECK(check_proof(calc("Gi"), t).valid);
}

TEST_CASE("property: prover trees re-check, mutations fail at the reported node") {
    auto pool = seqcalc::testing::sweep_pool();
    Gen g(41);
    std::size_t proofs = 0, mutated = 0;
    for (const auto* name : {"GM", "Gi", "Gm", "Gc-liberal"}) {
        const Calculus& c = calc(name);
        Prover prover(c, decision_limits());
        for (int i = 0; i < 120; ++i) {
            const auto& s = pool[g.below(pool.size())];
            auto v = prover.prove(s);
            if (v.kind != VerdictKind::Derivable) continue;
            const ProofTree& t = *v.proof;
            auto first = check_proof(c, t);
            REQUIRE(first.valid);
            ++proofs;

            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> cur;
            all_paths(t, cur, paths);
            ProofTree broken = t;
            auto path = paths[g.below(paths.size())];
            ProofTree* n = at_mut(broken, path);
            switch (path.empty() ? 0 : g.below(3)) {
                case 0:
                    n->rule = "RFoo";
                    break;
                case 1:
                    n->children.push_back(leaf("P => P", "Ax"));
                    break;
                default:
                    n->sequent.ante.push_back(parse_formula("Q & ~Q & R"));
                    break;
            }
            auto r1 = check_proof(c, broken);
            auto r2 = check_proof(c, broken);
            REQUIRE_FALSE(r1.valid);
            ++mutated;
            CHECK(r1.failure->path == r2.failure->path);
            CHECK(r1.failure->reason == r2.failure->reason);
            CHECK(r1.failure->detail == r2.failure->detail);
            const ProofTree& bad = at(broken, r1.failure->path);
            if (r1.failure->reason != FailureReason::EndsequentDisciplineViolated)
                CHECK(check_step(c, bad).has_value());
        }
    }
    MESSAGE(proofs << " proofs re-checked, " << mutated << " mutants rejected");
    CHECK(proofs > 100);
}

TEST_CASE("property: valid Gm proofs are valid Gi proofs") {
    auto pool = seqcalc::testing::sweep_pool();
    Prover gm(calc("Gm"), decision_limits());
    std::size_t n = 0;
    for (std::size_t i = 0; i < pool.size(); i += 7) {
        auto v = gm.prove(pool[i]);
        if (v.kind != VerdictKind::Derivable) continue;
        CHECK(check_proof(calc("Gi"), *v.proof).valid);
        ++n;
    }
    CHECK(n > 50);
}
