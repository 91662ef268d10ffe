#include "seqcalc/checker.hpp"

#include "seqcalc/text.hpp"

namespace seqcalc {

std::string reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::UnknownRule:
            return "UnknownRule";
        case FailureReason::PremiseCountMismatch:
            return "PremiseCountMismatch";
        case FailureReason::NoMatchingInstantiation:
            return "NoMatchingInstantiation";
        case FailureReason::SideConditionViolated:
            return "SideConditionViolated";
        case FailureReason::DisciplineViolated:
            return "DisciplineViolated";
        case FailureReason::EndsequentDisciplineViolated:
            return "EndsequentDisciplineViolated";
    }
    return "";
}

std::string Failure::describe() const {
    std::string p = "[";
    for (std::size_t i = 0; i < path.size(); ++i) p += (i ? "," : "") + std::to_string(path[i]);
    p += "]";
    return p + " " + reason_name(reason) + (detail.empty() ? "" : ": " + detail);
}

namespace {

Failure fail(FailureReason r, std::string detail = {}) { return Failure{{}, r, std::move(detail)}; }

std::optional<Failure> check_discipline(const Calculus& c, const ProofTree& node,
                                        const std::vector<const RuleSchema*>& schemas, bool multi_ok) {
    std::size_t n = node.sequent.succ.size();
    switch (c.discipline.kind) {
        case DisciplineKind::MultiSuccedent:
            return std::nullopt;
        case DisciplineKind::SingleNonEmpty:
            if (n != 1)
                return fail(FailureReason::DisciplineViolated,
                            "succedent has " + std::to_string(n) + " formulas, " + c.name + " requires exactly one");
            return std::nullopt;
        case DisciplineKind::SingleSuccedent:
            if (c.discipline.liberal || n <= 1 || multi_ok) return std::nullopt;
            for (const auto* s : schemas)
                if (s->conclusion.formula_items_succ() >= n) return std::nullopt;
            return fail(FailureReason::DisciplineViolated,
                        "succedent has " + std::to_string(n) + " formulas where the schemas allow at most one");
    }
    return std::nullopt;
}

// Seeds the matcher from the node's hints.
std::optional<Failure> seed_from_hints(const RuleSchema& schema, const Hints& hints, Instantiation& seed) {
    for (const auto& [key, value] : hints) {
        try {
            if (key == "cut" || key == "gem" || key == "formula") {
                auto metas = schema.premise_only_metas();
                if (!metas.empty()) seed.formulas[metas.front()] = parse_formula(value);
            } else if (key == "term") {
                seed.terms["t"] = parse_term(value);
            } else if (key == "eigen") {
                seed.terms["y"] = parse_term(value);
            }
        } catch (const ParseError& e) {
            return fail(FailureReason::NoMatchingInstantiation, "unreadable hint " + key + ": " + e.what());
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Failure> check_step(const Calculus& c, const ProofTree& node, bool multi_succedent_allowed) {
    auto schemas = c.lookup(node.rule);
    if (auto d = check_discipline(c, node, schemas, multi_succedent_allowed)) return d;
    if (schemas.empty()) return fail(FailureReason::UnknownRule, "'" + node.rule + "' is not a rule of " + c.name);

    std::vector<const RuleSchema*> fitting;
    for (const auto* s : schemas)
        if (s->premises.size() == node.children.size()) fitting.push_back(s);
    if (fitting.empty()) {
        std::string expected;
        for (const auto* s : schemas) {
            std::string n = std::to_string(s->premises.size());
            if (expected.find(n) == std::string::npos) expected += (expected.empty() ? "" : " or ") + n;
        }
        return fail(FailureReason::PremiseCountMismatch, node.rule + " takes " + expected + " premises, node has " +
                                                             std::to_string(node.children.size()));
    }

    std::vector<Sequent> kids;
    for (const auto& ch : node.children) kids.push_back(ch.sequent);

    std::optional<SideConditionViolation> first_violation;
    std::optional<Failure> hint_error;
    for (const auto* s : fitting) {
        Instantiation seed;
        if (auto e = seed_from_hints(*s, node.hints, seed)) {
            if (!hint_error) hint_error = e;
            continue;
        }
        bool ok = false;
        match_instance(*s, node.sequent, kids, seed, [&](const Instantiation& inst) {
            auto v = check_side_conditions(*s, inst, node.sequent, kids);
            if (!v) {
                ok = true;
                return false;
            }
            if (!first_violation) first_violation = v;
            return true;
        });
        if (ok) return std::nullopt;
    }
    if (first_violation) return fail(FailureReason::SideConditionViolated, first_violation->detail);
    if (hint_error) return hint_error;
    return fail(FailureReason::NoMatchingInstantiation,
                "no instance of " + node.rule + " has conclusion " + to_text(node.sequent) + " and the given premises");
}

namespace {

std::optional<Failure> walk(const Calculus& c, const ProofTree& node, bool multi_ok, std::vector<std::size_t>& path) {
    auto schemas = c.lookup(node.rule);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        bool child_multi = false;
        for (const auto* s : schemas)
            if (s->premises.size() == node.children.size() && s->premises[i].formula_items_succ() >= 2)
                child_multi = true;
        path.push_back(i);
        auto f = walk(c, node.children[i], child_multi, path);
        path.pop_back();
        if (f) return f;
    }
    if (auto f = check_step(c, node, multi_ok)) {
        f->path = path;
        return f;
    }
    return std::nullopt;
}

}  // namespace

CheckReport check_proof(const Calculus& c, const ProofTree& p) {
    std::vector<std::size_t> path;
    if (auto f = walk(c, p, false, path)) return CheckReport{false, f};
    std::size_t n = p.sequent.succ.size();
    bool root_ok = true;
    std::string need;
    switch (c.discipline.kind) {
        case DisciplineKind::MultiSuccedent:
            break;
        case DisciplineKind::SingleNonEmpty:
            root_ok = n == 1;
            need = "exactly one";
            break;
        case DisciplineKind::SingleSuccedent:
            root_ok = c.discipline.liberal ? n == 1 : n <= 1;
            need = c.discipline.liberal ? "exactly one" : "at most one";
            break;
    }
    if (!root_ok)
        return CheckReport{false, Failure{{}, FailureReason::EndsequentDisciplineViolated,
                                          "endsequent has " + std::to_string(n) + " succedent formulas, " + c.name +
                                              " requires " + need}};
    return CheckReport{true, std::nullopt};
}

}  // namespace seqcalc
