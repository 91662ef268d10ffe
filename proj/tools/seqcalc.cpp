// Command-line front end: check, prove, decide, list-calculi, rules,
// invertibility, corpus run, export.
//
// Exit codes: 0 valid/derivable, 1 invalid/not derivable, 2 unknown,
// 64 usage, 65 unreadable input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seqcalc/checker.hpp"
#include "seqcalc/corpus.hpp"
#include "seqcalc/prover.hpp"
#include "seqcalc/text.hpp"

using namespace seqcalc;

namespace {

constexpr int kOk = 0, kNo = 1, kUnknown = 2, kUsage = 64, kData = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const Calculus& calculus_or_throw(const std::string& name) {
    const Calculus* c = find_calculus(name);
    if (!c) {
        std::string known;
        for (const auto& n : calculus_names()) known += " " + n;
        throw UsageError("unknown calculus '" + name + "' (known:" + known + ")");
    }
    return *c;
}

struct SearchFlags {
    std::string calculus;
    std::size_t depth = 12;
    std::size_t nodes = 100000;
    std::size_t contraction = 2;
    std::string gem = "analytic";
    std::string format = "script";

    void add_to(CLI::App* cmd) {
        cmd->add_option("--calculus,-c", calculus, "calculus name")->required();
        cmd->add_option("--depth", depth, "maximum branch depth")->capture_default_str();
        cmd->add_option("--nodes", nodes, "maximum search nodes")->capture_default_str();
        cmd->add_option("--contraction", contraction, "copies of a formula kept per side")->capture_default_str();
        cmd->add_option("--gem", gem, "Gem candidates")->check(CLI::IsMember({"analytic", "off"}))->capture_default_str();
        cmd->add_option("--format", format, "proof output")
            ->check(CLI::IsMember({"script", "json", "latex"}))
            ->capture_default_str();
    }

    SearchLimits limits() const {
        SearchLimits l;
        l.max_depth = depth;
        l.max_nodes = nodes;
        l.contraction_bound = contraction;
        l.gem = gem == "off" ? GemPolicy::Off : GemPolicy::Analytic;
        return l;
    }
};

std::string render(const ProofTree& t, const std::string& format, const std::string& calculus = {}) {
    if (format == "json") return render_json(t) + "\n";
    if (format == "latex") return render_latex(t);
    return render_script(t, calculus);
}

int report_verdict(const Verdict& v, const std::string& format, const std::string& calculus) {
    switch (v.kind) {
        case VerdictKind::Derivable:
            std::cout << "DERIVABLE (" << v.nodes << " nodes searched)\n" << render(*v.proof, format, calculus);
            return kOk;
        case VerdictKind::NotDerivable:
            std::cout << "NOT DERIVABLE\n";
            return kNo;
        case VerdictKind::Unknown:
            std::cout << "UNKNOWN (" << v.resource << " limit reached after " << v.nodes << " nodes)\n";
            return kUnknown;
    }
    return kUnknown;
}

int cmd_check(const std::string& file, const std::string& calc_override) {
    ProofScript s = parse_proof_script(slurp(file));
    std::string name = calc_override.empty() ? s.calculus : calc_override;
    if (name.empty()) throw UsageError(file + " has no calculus header; pass --calculus");
    const Calculus& c = calculus_or_throw(name);
    CheckReport r = check_proof(c, s.tree);
    if (r.valid) {
        std::cout << "VALID " << c.name << " proof of " << to_text(s.tree.sequent) << " (" << s.tree.node_count()
                  << " nodes)\n";
        return kOk;
    }
    std::cout << "INVALID " << r.failure->describe() << "\n";
    return kNo;
}

int cmd_rules(const std::string& name) {
    const Calculus& c = calculus_or_throw(name);
    std::cout << c.name << ": " << c.discipline.name() << "\n";
    for (const auto* s : c.schemas()) {
        std::string tags;
        if (s->has(Tag::Invertible)) tags += " invertible";
        if (s->has(Tag::Inversion)) tags += " inversion";
        if (s->has(Tag::Structural)) tags += " structural";
        if (s->has(Tag::Cut)) tags += " cut";
        std::cout << "  " << s->name << "\t" << s->text() << (tags.empty() ? "" : "\t[" + tags.substr(1) + "]") << "\n";
    }
    return kOk;
}

int cmd_invertibility(const std::string& name, const std::string& rule, std::size_t atoms, std::size_t nodes,
                      std::size_t show) {
    const Calculus& c = calculus_or_throw(name);
    if (c.lookup(rule).empty()) throw UsageError("'" + rule + "' is not a rule of " + c.name);
    if (atoms == 0 || atoms > 4) throw UsageError("--atoms must be between 1 and 4");
    SearchLimits lim = decision_limits();
    lim.max_nodes = nodes;
    auto rep = invertibility_report(c, rule, default_instance_pool(atoms), lim);
    std::cout << rep.rule << " in " << c.name << (rep.inversion ? " (inversion rule)" : "") << ": " << rep.rows.size()
              << " instances, " << rep.violations << " violations, " << rep.undecided << " undecided\n";
    std::size_t shown = 0;
    for (const auto& row : rep.rows) {
        if (!row.violation || shown++ >= show) continue;
        std::cout << "  conclusion " << to_text(row.conclusion) << " [" << verdict_name(row.conclusion_verdict)
                  << "]  premises";
        for (const auto& p : row.premises) std::cout << " " << to_text(p) << ";";
        std::cout << " [" << verdict_name(row.premises_verdict) << "]\n";
    }
    return kOk;
}

int cmd_corpus(const std::string& dir, const std::string& filter, bool verbose) {
    auto corpus = load_corpus(dir);
    auto sum = run_golden(corpus, filter);
    for (const auto& r : sum.results) {
        if (!verbose && r.passed) continue;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.id;
        if (!r.report.valid) std::cout << "  " << r.report.failure->describe();
        std::cout << "\n";
    }
    std::cout << sum.passed() << " passed";
    if (sum.failed()) std::cout << ", " << sum.failed() << " failed";
    std::cout << "\n";
    return sum.failed() ? kNo : kOk;
}

int cmd_export(const std::string& file, const std::string& format) {
    ProofScript s = parse_proof_script(slurp(file));
    std::cout << render(s.tree, format, s.calculus);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequent calculus checker and bounded prover"};
    app.require_subcommand(1);

    std::string file, calc_override, sequent, rule, format = "json", filter;
    std::string dir = default_corpus_dir();
    std::size_t atoms = 2, inv_nodes = 100000, show = 3;
    bool verbose = false;
    SearchFlags prove_flags, decide_flags;

    auto* check = app.add_subcommand("check", "check a proof script");
    check->add_option("file", file)->required();
    check->add_option("--calculus,-c", calc_override, "override the script's calculus");

    auto* prove_cmd = app.add_subcommand("prove", "bounded backward proof search");
    prove_cmd->add_option("sequent", sequent)->required();
    prove_flags.add_to(prove_cmd);

    auto* decide_cmd = app.add_subcommand("decide", "propositional decision (loop-checked search)");
    decide_cmd->add_option("sequent", sequent)->required();
    decide_flags.add_to(decide_cmd);

    auto* list = app.add_subcommand("list-calculi", "list calculus names");

    std::string rules_calc;
    auto* rules = app.add_subcommand("rules", "print a calculus' schemas");
    rules->add_option("calculus", rules_calc)->required();

    std::string inv_calc;
    auto* inv = app.add_subcommand("invertibility", "test a rule's invertibility on small instances");
    inv->add_option("calculus", inv_calc)->required();
    inv->add_option("rule", rule)->required();
    inv->add_option("--atoms", atoms, "atoms in the instance pool")->capture_default_str();
    inv->add_option("--nodes", inv_nodes, "search nodes per sequent")->capture_default_str();
    inv->add_option("--show", show, "violations to print")->capture_default_str();

    auto* corpus = app.add_subcommand("corpus", "golden derivations");
    corpus->require_subcommand(1);
    auto* run = corpus->add_subcommand("run", "check every corpus derivation");
    run->add_option("--dir", dir, "corpus directory")->capture_default_str();
    run->add_option("--filter", filter, "id or prefix*");
    run->add_flag("--verbose,-v", verbose, "list passing items too");

    auto* exp = app.add_subcommand("export", "render a proof script");
    exp->add_option("file", file)->required();
    exp->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "script"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check) return cmd_check(file, calc_override);
        if (*prove_cmd)
            return report_verdict(prove(calculus_or_throw(prove_flags.calculus), parse_sequent(sequent), prove_flags.limits()),
                                  prove_flags.format, prove_flags.calculus);
        if (*decide_cmd)
            return report_verdict(decide_propositional(calculus_or_throw(decide_flags.calculus), parse_sequent(sequent),
                                                       decide_flags.limits()),
                                  decide_flags.format, decide_flags.calculus);
        if (*list) {
            for (const auto& n : calculus_names())
                std::cout << n << "\t" << find_calculus(n)->discipline.name() << "\n";
            return kOk;
        }
        if (*rules) return cmd_rules(rules_calc);
        if (*inv) return cmd_invertibility(inv_calc, rule, atoms, inv_nodes, show);
        if (*run) return cmd_corpus(dir, filter, verbose);
        if (*exp) return cmd_export(file, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotPropositional& e) {
        std::cerr << "error: " << e.what() << "; use prove\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kData;
    } catch (const CorpusError& e) {
        std::cerr << "corpus error: " << e.what() << "\n";
        return kData;
    }
    return kUsage;
}
