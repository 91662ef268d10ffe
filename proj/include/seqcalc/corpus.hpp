#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "seqcalc/checker.hpp"
#include "seqcalc/text.hpp"

namespace seqcalc {

struct NamedDerivation {
    std::string id;
    std::string calculus;
    std::string provenance;
    std::string file;
    Expectation expected;
    std::vector<std::pair<std::string, Multiset>> contexts;
    ProofTree tree;
};

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Directory baked in at build time.
std::string default_corpus_dir();

// Every `*.proof` file in `dir`, sorted by id. `overrides` rebinds header contexts.
std::vector<NamedDerivation> load_corpus(const std::string& dir = default_corpus_dir(),
                                         const ContextBindings& overrides = {});

bool expectation_met(const Expectation& e, const CheckReport& r);

struct GoldenResult {
    std::string id;
    bool passed = false;
    CheckReport report;
};

struct GoldenSummary {
    std::vector<GoldenResult> results;
    std::size_t passed() const;
    std::size_t failed() const { return results.size() - passed(); }
};

// `filter` is an id or an id prefix ending in `*`; empty runs everything.
bool id_matches(const std::string& id, const std::string& filter);
GoldenResult run_one(const NamedDerivation& d);
GoldenSummary run_golden(const std::vector<NamedDerivation>& corpus, const std::string& filter = {});

}  // namespace seqcalc
