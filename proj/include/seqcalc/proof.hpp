#pragma once

#include <map>
#include <string>
#include <vector>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

// Hint keys: cut, gem, formula (premise-only formula), term (slot t), eigen (slot y).
using Hints = std::map<std::string, std::string>;

struct ProofTree {
    Sequent sequent;
    std::string rule;
    Hints hints;
    std::vector<ProofTree> children;

    std::size_t node_count() const;
    std::size_t height() const;
    // Alpha-invariant structural equality of sequents, rules, hints and shape.
    bool same_as(const ProofTree& other) const;
};

}  // namespace seqcalc
