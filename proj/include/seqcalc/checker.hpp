#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqcalc/calculus.hpp"
#include "seqcalc/proof.hpp"

namespace seqcalc {

enum class FailureReason {
    UnknownRule,
    PremiseCountMismatch,
    NoMatchingInstantiation,
    SideConditionViolated,
    DisciplineViolated,
    EndsequentDisciplineViolated,
};

std::string reason_name(FailureReason r);

struct Failure {
    std::vector<std::size_t> path;
    FailureReason reason;
    std::string detail;

    std::string describe() const;
};

struct CheckReport {
    bool valid = true;
    std::optional<Failure> failure;
};

// Validates one rule application, taking the children's sequents as given.
// `multi_succedent_allowed` is set when the parent's premise pattern writes two
// or more succedent formulas at this position (strict singlesuccedent only).
std::optional<Failure> check_step(const Calculus& c, const ProofTree& node, bool multi_succedent_allowed = false);

CheckReport check_proof(const Calculus& c, const ProofTree& p);

}  // namespace seqcalc
