#pragma once

#include <map>
#include <optional>
#include <set>

#include "mtmodal/alba.hpp"
#include "mtmodal/correspondence.hpp"
#include "mtmodal/syntax.hpp"

namespace mtm {

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

struct RuleSchema {
    std::vector<Sequent> prem;
    Sequent concl;
    bool bidir = false;  // double-line: also applicable premise<->conclusion
};

enum class RuleCat { Axiom, Logical, Display, Structural, Cut, Extension, Hyp };

struct Rule {
    std::string name;
    RuleCat cat = RuleCat::Logical;
    std::vector<RuleSchema> schemas;
    std::optional<AxiomId> ext_id;
};

struct RuleSet {
    Sig sig;
    bool cut = true;
    std::vector<Rule> rules;
    const Rule* find(const std::string& name) const;
};

// assembles the calculus for a signature with the chosen extension rules;
// throws on an extension that has no analytic rule in this signature
RuleSet ruleset(Sig sig, const std::set<AxiomId>& extensions, bool cut);

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

struct Derivation {
    Sequent seq;
    std::string rule;
    std::vector<Derivation> kids;
};

struct CheckResult {
    bool ok = true;
    std::string path;    // e.g. "root.1.0"
    std::string reason;
};

CheckResult check_derivation(const Derivation& d, const RuleSet& rs);
bool derivation_closed(const Derivation& d);  // no hypothesis leaves

Derivation parse_derivation(const std::string& text, Sig sig);
Derivation parse_derivation_file(const std::string& path, Sig sig);
std::string print_derivation(const Derivation& d);
// rule names decide the signature: conditional-only tokens force MT>
Sig detect_sig(const std::string& text);

// ---------------------------------------------------------------------------
// Proof search (backward, cut-free)
// ---------------------------------------------------------------------------

struct ProveOptions {
    int depth = 12;
    int timeout_ms = 10000;
    int contraction_budget = 2;
};

std::optional<Derivation> prove(const Sequent& goal, const RuleSet& rs, const ProveOptions& opt);

// ---------------------------------------------------------------------------
// Rule interpretations (soundness)
// ---------------------------------------------------------------------------

// the quasi-inequality interpreting one schema: structure connectives become
// algebra operations, metavariables universally quantified subset variables
QuasiIneq interpret_schema(const RuleSchema& schema, Sig sig);
std::vector<QuasiIneq> interpret_rule(const Rule& r, Sig sig);

bool rule_sound_on(const Rule& r, const TSNFrame& fr);
bool rule_sound_on(const Rule& r, const TSCFrame& fr);

}  // namespace mtm
