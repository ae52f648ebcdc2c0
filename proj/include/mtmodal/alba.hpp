#pragma once

#include "mtmodal/correspondence.hpp"
#include "mtmodal/semantics.hpp"

namespace mtm {

enum class VarKind { Nom, CoNom, Free };

struct VarDecl {
    int id;
    Sort sort;
    VarKind kind;
};

struct Ineq {
    MF l, r;
};

struct QuasiIneq {
    Sig sig = Sig::MTNabla;
    std::vector<VarDecl> vars;
    std::vector<Ineq> ante;
    Ineq cons;
    bool biconditional = false;  // single antecedent, both directions
};

std::string var_name(const QuasiIneq& q, int id);
std::string render(const QuasiIneq& q);
bool is_pure(const QuasiIneq& q);

// ---------------------------------------------------------------------------
// Rewrite steps
// ---------------------------------------------------------------------------

// how each side of s <= t is treated during first approximation
enum class FAMode {
    DecomposeMax,  // bracket maximal PIA-hereditary subterms
    DecomposeMin,  // keep recursing through skeleton-capable nodes
    Whole,         // one fresh (co)nominal for the whole side
    Keep,          // leave the side in place (constants)
};

struct FAOptions {
    FAMode left = FAMode::DecomposeMax;
    FAMode right = FAMode::DecomposeMax;
    bool neg_skeleton = false;  // prefer the skeleton reading of a negation
};

QuasiIneq as_quasi(const MF& lhs, const MF& rhs, Sig sig);
QuasiIneq first_approximation(const MF& lhs, const MF& rhs, Sig sig, FAOptions opts = {});

// index -1 addresses the consequent; `which` disambiguates binary residuation
// (0 moves the first coordinate, 1 the second)
QuasiIneq apply_adjunction(const QuasiIneq& q, int index, int which = 1);
QuasiIneq apply_splitting(const QuasiIneq& q, int index);
// eliminate a proposition by substituting the join of its lower bounds
// (from_below) or the meet of its upper bounds; throws when the polarity
// side conditions fail
QuasiIneq ackermann(const QuasiIneq& q, const std::string& prop, bool from_below);
QuasiIneq eliminate_var(const QuasiIneq& q, int var_id, bool from_below);

// ---------------------------------------------------------------------------
// Scripted runs
// ---------------------------------------------------------------------------

struct TraceStep {
    std::string label;
    QuasiIneq q;
};

struct AlbaRun {
    AxiomId id;
    Sig sig;
    MTSequent source;             // the translated axiom as an inequality
    std::vector<TraceStep> steps; // steps[0] is the source as a quasi-inequality
    const QuasiIneq& final() const { return steps.back().q; }
};

AlbaRun run_alba(AxiomId id);

// ---------------------------------------------------------------------------
// Semantic evaluation
// ---------------------------------------------------------------------------

// truth of a quasi-inequality on the complex algebra of a two-sorted frame,
// quantifying nominals over atoms, conominals over coatoms, free variables
// over all subsets, and remaining propositions over all S-subsets
bool holds_on(const QuasiIneq& q, const TSNFrame& fr);
bool holds_on(const QuasiIneq& q, const TSCFrame& fr);

bool verify_pure(const QuasiIneq& q, const TSNFrame& fr);  // requires purity
bool verify_pure(const QuasiIneq& q, const TSCFrame& fr);

}  // namespace mtm
