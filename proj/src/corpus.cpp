#include "seqcalc/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef SEQCALC_CORPUS_DIR
#define SEQCALC_CORPUS_DIR "corpus"
#endif

namespace seqcalc {

std::string default_corpus_dir() { return SEQCALC_CORPUS_DIR; }

std::vector<NamedDerivation> load_corpus(const std::string& dir, const ContextBindings& overrides) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw CorpusError("corpus directory not found: " + dir);
    std::vector<NamedDerivation> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".proof") continue;
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string file = entry.path().filename().string();
        ProofScript s;
        try {
            s = parse_proof_script(buf.str(), overrides);
        } catch (const ParseError& e) {
            throw CorpusError(file + ": " + e.what());
        }
        if (s.id.empty()) throw CorpusError(file + ": missing id header");
        if (s.calculus.empty()) throw CorpusError(file + ": missing calculus header");
        if (!find_calculus(s.calculus)) throw CorpusError(file + ": unknown calculus " + s.calculus);
        if (!s.expected) throw CorpusError(file + ": missing expected header");
        out.push_back(NamedDerivation{s.id, s.calculus, s.provenance, file, *s.expected, s.contexts, std::move(s.tree)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].id == out[i - 1].id) throw CorpusError("duplicate id " + out[i].id);
    return out;
}

bool expectation_met(const Expectation& e, const CheckReport& r) {
    if (e.valid) return r.valid;
    if (r.valid || !r.failure) return false;
    if (r.failure->path != e.path) return false;
    return e.reason.empty() || reason_name(r.failure->reason) == e.reason;
}

std::size_t GoldenSummary::passed() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

bool id_matches(const std::string& id, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter.back() == '*') return id.compare(0, filter.size() - 1, filter, 0, filter.size() - 1) == 0;
    return id == filter;
}

GoldenResult run_one(const NamedDerivation& d) {
    GoldenResult g;
    g.id = d.id;
    g.report = check_proof(*find_calculus(d.calculus), d.tree);
    g.passed = expectation_met(d.expected, g.report);
    return g;
}

GoldenSummary run_golden(const std::vector<NamedDerivation>& corpus, const std::string& filter) {
    GoldenSummary s;
    for (const auto& d : corpus)
        if (id_matches(d.id, filter)) s.results.push_back(run_one(d));
    return s;
}

}  // namespace seqcalc
