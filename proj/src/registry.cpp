#include <stdexcept>

#include "seqcalc/calculus.hpp"

namespace seqcalc {

namespace {

using SC = SideCondition;

const std::set<Tag> kLogical{Tag::Logical};
const std::set<Tag> kInvertible{Tag::Logical, Tag::Invertible};
const std::set<Tag> kInversion{Tag::Logical, Tag::Inversion};
const std::set<Tag> kStructural{Tag::Structural};
const std::set<Tag> kCut{Tag::Structural, Tag::Cut};

SC eig(const char* slot) { return SC{SC::Kind::EigenvariableFresh, slot}; }
SC atomic_only(const char* slot) { return SC{SC::Kind::AtomicOnly, slot}; }

// Builds one calculus from rows; `inv` lists the labels that search may apply
// without backtracking.
struct Builder {
    Calculus c;
    std::set<std::string> inv;

    void rule(const std::string& name, std::vector<std::string> prem, const std::string& concl, std::set<Tag> tags,
              std::vector<SC> side = {}) {
        if (tags.count(Tag::Logical) && !tags.count(Tag::Inversion)) {
            if (inv.count(name))
                tags.insert(Tag::Invertible);
            else
                tags.erase(Tag::Invertible);
        }
        RuleSchema r = make_schema(name, prem, concl, std::move(tags), std::move(side));
        (r.premises.empty() ? c.axioms : c.rules).push_back(std::move(r));
    }
};

Calculus lk() {
    Builder b{{"LK", {}, {}, {DisciplineKind::MultiSuccedent, false}},
              {"R∧", "L∨", "R→", "L¬", "R¬", "R∀", "L∃"}};
    b.rule("Ax", {}, "A ⇒ A", kLogical);
    b.rule("L∧", {"A, Γ ⇒ Δ"}, "A ∧ B, Γ ⇒ Δ", kLogical);
    b.rule("L∧", {"B, Γ ⇒ Δ"}, "A ∧ B, Γ ⇒ Δ", kLogical);
    b.rule("R∧", {"Γ ⇒ Δ, A", "Γ ⇒ Δ, B"}, "Γ ⇒ Δ, A ∧ B", kLogical);
    b.rule("L∨", {"A, Γ ⇒ Δ", "B, Γ ⇒ Δ"}, "A ∨ B, Γ ⇒ Δ", kLogical);
    b.rule("R∨", {"Γ ⇒ Δ, A"}, "Γ ⇒ Δ, A ∨ B", kLogical);
    b.rule("R∨", {"Γ ⇒ Δ, B"}, "Γ ⇒ Δ, A ∨ B", kLogical);
    b.rule("L→", {"Γ ⇒ Δ, A", "B, Θ ⇒ Λ"}, "A → B, Γ, Θ ⇒ Δ, Λ", kLogical);
    b.rule("R→", {"A, Γ ⇒ Δ, B"}, "Γ ⇒ Δ, A → B", kLogical);
    b.rule("L¬", {"Γ ⇒ Δ, A"}, "¬A, Γ ⇒ Δ", kLogical);
    b.rule("R¬", {"A, Γ ⇒ Δ"}, "Γ ⇒ Δ, ¬A", kLogical);
    b.rule("L∀", {"A(x/t), Γ ⇒ Δ"}, "∀x.A, Γ ⇒ Δ", kLogical);
    b.rule("R∀", {"Γ ⇒ Δ, A(x/y)"}, "Γ ⇒ Δ, ∀x.A", kLogical, {eig("y")});
    b.rule("L∃", {"A(x/y), Γ ⇒ Δ"}, "∃x.A, Γ ⇒ Δ", kLogical, {eig("y")});
    b.rule("R∃", {"Γ ⇒ Δ, A(x/t)"}, "Γ ⇒ Δ, ∃x.A", kLogical);
    b.rule("LW", {"Γ ⇒ Δ"}, "A, Γ ⇒ Δ", kStructural);
    b.rule("RW", {"Γ ⇒ Δ"}, "Γ ⇒ Δ, A", kStructural);
    b.rule("LC", {"A, A, Γ ⇒ Δ"}, "A, Γ ⇒ Δ", kStructural);
    b.rule("RC", {"Γ ⇒ Δ, A, A"}, "Γ ⇒ Δ, A", kStructural);
    b.rule("LInc", {"A, B, Γ ⇒ Δ"}, "B, A, Γ ⇒ Δ", kStructural);
    b.rule("RInc", {"Γ ⇒ Δ, A, B"}, "Γ ⇒ Δ, B, A", kStructural);
    b.rule("Cut", {"Γ ⇒ Δ, A", "A, Θ ⇒ Λ"}, "Γ, Θ ⇒ Δ, Λ", kCut);
    return b.c;
}

Builder g0(const std::string& name) {
    Builder b{{name, {}, {}, {DisciplineKind::SingleSuccedent, false}}, {"L∧", "R∧", "L∨", "R→"}};
    b.rule("Ax", {}, "A ⇒ A", kLogical);
    b.rule("L∧", {"A, B, Γ ⇒ C"}, "A ∧ B, Γ ⇒ C", kLogical);
    b.rule("R∧", {"Γ ⇒ A", "Γ ⇒ B"}, "Γ ⇒ A ∧ B", kLogical);
    b.rule("L∨", {"A, Γ ⇒ C", "B, Γ ⇒ C"}, "A ∨ B, Γ ⇒ C", kLogical);
    b.rule("R∨", {"Γ ⇒ A"}, "Γ ⇒ A ∨ B", kLogical);
    b.rule("R∨", {"Γ ⇒ B"}, "Γ ⇒ A ∨ B", kLogical);
    b.rule("L→", {"Γ ⇒ A", "B, Γ ⇒ C"}, "A → B, Γ ⇒ C", kLogical);
    b.rule("R→", {"A, Γ ⇒ B"}, "Γ ⇒ A → B", kLogical);
    return b;
}

void g0_structural(Builder& b) {
    b.rule("LW", {"Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
    b.rule("LC", {"A, A, Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
}

Calculus g0m() {
    Builder b = g0("G0m");
    g0_structural(b);
    return b.c;
}

Calculus g0ip(const std::string& name = "G0ip") {
    Builder b = g0(name);
    b.rule("L⊥", {}, "⊥ ⇒ C", kLogical);
    g0_structural(b);
    return b.c;
}

Calculus g0cp() {
    Builder b = g0("G0cp");
    b.rule("L⊥", {}, "⊥ ⇒ C", kLogical);
    b.rule("Gem0-at", {"P, Γ ⇒ C", "¬P, Γ ⇒ C"}, "Γ ⇒ C", kLogical, {atomic_only("P")});
    g0_structural(b);
    return b.c;
}

// Gc in the printed singlesuccedent form (strict) or with a passive succedent
// context Δ throughout (liberal, GM-shaped). GM is the liberal table plus RW/RC.
Calculus gc_family(const std::string& name, bool multi, bool with_rw) {
    std::set<std::string> inv =
        multi ? std::set<std::string>{"L∧", "R∧", "L∨", "R∨", "L→", "R→", "L¬¬", "R¬¬", "L¬", "R¬", "R∀", "L∃"}
              : std::set<std::string>{"L∧", "R∧", "R→", "R¬", "R∀", "L∃"};
    Discipline d = multi ? (with_rw ? Discipline{DisciplineKind::MultiSuccedent, false}
                                    : Discipline{DisciplineKind::SingleSuccedent, true})
                         : Discipline{DisciplineKind::SingleSuccedent, false};
    Builder b{{name, {}, {}, d}, inv};
    // In strict rows `C` is the single succedent; in liberal rows it becomes Δ.
    auto s = [&](std::string text) {
        const std::string tail = "⇒ C";
        if (multi && text.size() >= tail.size() && text.compare(text.size() - tail.size(), tail.size(), tail) == 0)
            text.replace(text.size() - 1, 1, "Δ");
        return text;
    };
    auto r = [&](const std::string& n, std::vector<std::string> prem, const std::string& concl, std::set<Tag> tags,
                 std::vector<SC> side = {}) {
        for (auto& p : prem) p = s(p);
        b.rule(n, prem, s(concl), std::move(tags), std::move(side));
    };
    // Right rules: strict succedent is just the principal formula; liberal adds Δ.
    auto rs = [&](const std::string& formula) { return multi ? "Δ, " + formula : formula; };

    r("Ax", {}, "A, Γ ⇒ " + rs("A"), kLogical);
    r("L∧", {"A, B, Γ ⇒ C"}, "A ∧ B, Γ ⇒ C", kLogical);
    r("R∧", {"Γ ⇒ " + rs("A"), "Γ ⇒ " + rs("B")}, "Γ ⇒ " + rs("A ∧ B"), kLogical);
    r("LI∧", {"A ∧ B, Γ ⇒ C"}, "A, B, Γ ⇒ C", kInversion);
    r("RI∧", {"Γ ⇒ " + rs("A ∧ B")}, "Γ ⇒ " + rs("A"), kInversion);
    r("RI∧", {"Γ ⇒ " + rs("A ∧ B")}, "Γ ⇒ " + rs("B"), kInversion);
    r("L∨", {"A, Γ ⇒ C", "B, Γ ⇒ C"}, "A ∨ B, Γ ⇒ C", kLogical);
    r("R∨", {"Γ ⇒ " + rs("A, B")}, "Γ ⇒ " + rs("A ∨ B"), kLogical);
    r("LI∨", {"A ∨ B, Γ ⇒ C"}, "A, Γ ⇒ C", kInversion);
    r("LI∨", {"A ∨ B, Γ ⇒ C"}, "B, Γ ⇒ C", kInversion);
    r("RI∨", {"Γ ⇒ " + rs("A ∨ B")}, "Γ ⇒ " + rs("A, B"), kInversion);
    r("L→", {"Γ ⇒ " + rs("A"), "B, Γ ⇒ C"}, "A → B, Γ ⇒ C", kLogical);
    r("R→", {"A, Γ ⇒ " + rs("B")}, "Γ ⇒ " + rs("A → B"), kLogical);
    r("LI→", {"A → B, Γ ⇒ C"}, "B, Γ ⇒ C", kInversion);
    r("RI→", {"Γ ⇒ " + rs("A → B")}, "A, Γ ⇒ " + rs("B"), kInversion);
    r("L⊥", {}, "⊥, Γ ⇒ C", kLogical);
    r("L¬¬", {"A, Γ ⇒ C"}, "¬¬A, Γ ⇒ C", kLogical);
    r("R¬¬", {"Γ ⇒ " + rs("A")}, "Γ ⇒ " + rs("¬¬A"), kLogical);
    r("LI¬¬", {"¬¬A, Γ ⇒ C"}, "A, Γ ⇒ C", kInversion);
    r("RI¬¬", {"Γ ⇒ " + rs("¬¬A")}, "Γ ⇒ " + rs("A"), kInversion);
    if (multi) {
        r("L¬", {"Γ ⇒ Δ, A"}, "¬A, Γ ⇒ Δ", kLogical);
        r("R¬", {"A, Γ ⇒ Δ"}, "Γ ⇒ Δ, ¬A", kLogical);
    } else {
        r("L¬", {"Γ ⇒ A"}, "¬A, Γ ⇒ ⊥", kLogical);
        r("R¬", {"A, Γ ⇒ ⊥"}, "Γ ⇒ ¬A", kLogical);
    }
    r("Gem", {"A, Γ ⇒ C", "¬A, Γ ⇒ C"}, "Γ ⇒ C", kLogical);
    r("L∀", {"A(x/t), Γ ⇒ C"}, "∀x.A, Γ ⇒ C", kLogical);
    r("R∀", {"Γ ⇒ " + rs("A(x/y)")}, "Γ ⇒ " + rs("∀x.A"), kLogical, {eig("y")});
    r("LI∀", {"∀x.A, Γ ⇒ C"}, "A(x/t), Γ ⇒ C", kInversion);
    r("RI∀", {"Γ ⇒ " + rs("∀x.A")}, "Γ ⇒ " + rs("A(x/t)"), kInversion);
    r("L∃", {"A(x/y), Γ ⇒ C"}, "∃x.A, Γ ⇒ C", kLogical, {eig("y")});
    r("R∃", {"Γ ⇒ " + rs("A(x/t)")}, "Γ ⇒ " + rs("∃x.A"), kLogical);
    r("LI∃", {"∃x.A, Γ ⇒ C"}, "A(x/y), Γ ⇒ C", kInversion, {eig("y")});
    r("RI∃", {"Γ ⇒ " + rs("∃x.A")}, "Γ ⇒ " + rs("A(x/y)"), kInversion, {eig("y")});
    r("LW", {"Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
    if (with_rw) r("RW", {"Γ ⇒ Δ"}, "Γ ⇒ Δ, A", kStructural);
    r("LC", {"A, A, Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
    if (with_rw) r("RC", {"Γ ⇒ Δ, A, A"}, "Γ ⇒ Δ, A", kStructural);
    r("Cut", {"Γ ⇒ " + rs("A"), "A, Γ ⇒ C"}, "Γ ⇒ C", kCut);
    return b.c;
}

Calculus gi_family(bool minimal) {
    Builder b{{minimal ? "Gm" : "Gi", {}, {},
               minimal ? Discipline{DisciplineKind::SingleNonEmpty, false}
                       : Discipline{DisciplineKind::SingleSuccedent, false}},
              {"L∧", "R∧", "L∨", "R→", "R¬→", "R∀", "L∃"}};
    std::vector<SC> base;
    if (minimal) base.push_back(SC{SC::Kind::NoEmptySuccedent, ""});
    auto r = [&](const std::string& n, std::vector<std::string> prem, const std::string& concl, std::set<Tag> tags,
                 std::vector<SC> side = {}) {
        side.insert(side.end(), base.begin(), base.end());
        b.rule(n, std::move(prem), concl, std::move(tags), std::move(side));
    };
    r("Ax", {}, "P, Γ ⇒ P", kLogical, {atomic_only("P")});
    r("L∧", {"A, B, Γ ⇒ C"}, "A ∧ B, Γ ⇒ C", kLogical);
    r("R∧", {"Γ ⇒ A", "Γ ⇒ B"}, "Γ ⇒ A ∧ B", kLogical);
    r("LI∧", {"A ∧ B, Γ ⇒ C"}, "A, B, Γ ⇒ C", kInversion);
    r("RI∧", {"Γ ⇒ A ∧ B"}, "Γ ⇒ A", kInversion);
    r("RI∧", {"Γ ⇒ A ∧ B"}, "Γ ⇒ B", kInversion);
    r("L∨", {"A, Γ ⇒ C", "B, Γ ⇒ C"}, "A ∨ B, Γ ⇒ C", kLogical);
    r("R∨", {"Γ ⇒ A"}, "Γ ⇒ A ∨ B", kLogical);
    r("R∨", {"Γ ⇒ B"}, "Γ ⇒ A ∨ B", kLogical);
    r("LI∨", {"A ∨ B, Γ ⇒ C"}, "A, Γ ⇒ C", kInversion);
    r("LI∨", {"A ∨ B, Γ ⇒ C"}, "B, Γ ⇒ C", kInversion);
    r("RI∨", {"Γ ⇒ A ∨ B"}, "Γ ⇒ A", kInversion);
    r("RI∨", {"Γ ⇒ A ∨ B"}, "Γ ⇒ B", kInversion);
    r("L→", {"Γ ⇒ A", "B, Γ ⇒ C"}, "A → B, Γ ⇒ C", kLogical);
    r("R→", {"A, Γ ⇒ B"}, "Γ ⇒ A → B", kLogical);
    r("LI→", {"A → B, Γ ⇒ C"}, "B, Γ ⇒ C", kInversion);
    r("RI→", {"Γ ⇒ A → B"}, "A, Γ ⇒ B", kInversion);
    if (!minimal) {
        r("L⊥", {}, "⊥, Γ ⇒ C", kLogical);
        r("L¬→", {"Γ ⇒ A"}, "A → ⊥, Γ ⇒ ⊥", kLogical);
        r("R¬→", {"A, Γ ⇒ ⊥"}, "Γ ⇒ A → ⊥", kLogical);
    }
    r("L∀", {"A(x/t), Γ ⇒ C"}, "∀x.A, Γ ⇒ C", kLogical);
    r("R∀", {"Γ ⇒ A(x/y)"}, "Γ ⇒ ∀x.A", kLogical, {eig("y")});
    r("LI∀", {"∀x.A, Γ ⇒ C"}, "A(x/t), Γ ⇒ C", kInversion);
    r("RI∀", {"Γ ⇒ ∀x.A"}, "Γ ⇒ A(x/t)", kInversion);
    r("L∃", {"A(x/y), Γ ⇒ C"}, "∃x.A, Γ ⇒ C", kLogical, {eig("y")});
    r("R∃", {"Γ ⇒ A(x/t)"}, "Γ ⇒ ∃x.A", kLogical);
    r("LI∃", {"∃x.A, Γ ⇒ C"}, "A(x/y), Γ ⇒ C", kInversion, {eig("y")});
    r("RI∃", {"Γ ⇒ ∃x.A"}, "Γ ⇒ A(x/y)", kInversion, {eig("y")});
    r("LW", {"Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
    r("LC", {"A, A, Γ ⇒ C"}, "A, Γ ⇒ C", kStructural);
    r("Cut", {"Γ ⇒ A", "A, Γ ⇒ C"}, "Γ ⇒ C", kCut);
    return b.c;
}

Registry build_registry() {
    Registry reg;
    for (Calculus c : {lk(), g0m(), g0ip(), g0cp(), gc_family("Gc-strict", false, false),
                       gc_family("Gc-liberal", true, false), gi_family(false), gi_family(true),
                       gc_family("GM", true, true)}) {
        std::string n = c.name;
        reg.emplace(n, std::move(c));
    }
    return reg;
}

}  // namespace

const Registry& builtin_calculi() {
    static const Registry reg = build_registry();
    return reg;
}

const Calculus* find_calculus(const std::string& name) {
    const auto& reg = builtin_calculi();
    auto it = reg.find(name);
    if (it != reg.end()) return &it->second;
    if (name == "Gc") return &reg.at("Gc-strict");
    return nullptr;
}

std::vector<std::string> calculus_names() {
    return {"LK", "G0m", "G0ip", "G0cp", "Gc-strict", "Gc-liberal", "Gi", "Gm", "GM"};
}

const RuleSchema& gem_at_schema() {
    static const RuleSchema r = make_schema("Gem-at", {"P, Γ ⇒ C", "¬P, Γ ⇒ C"}, "Γ ⇒ C", kLogical,
                                            {atomic_only("P")});
    return r;
}

const RuleSchema& gem0_at_schema() {
    static const RuleSchema r = make_schema("Gem0-at", {"P, Γ ⇒ C", "¬P, Γ ⇒ C"}, "Γ ⇒ C", kLogical,
                                            {atomic_only("P")});
    return r;
}

Calculus attach(const Calculus& base, const RuleSchema& extra, const std::string& name) {
    Calculus c = base;
    c.name = name;
    c.rules.push_back(extra);
    return c;
}

}  // namespace seqcalc
