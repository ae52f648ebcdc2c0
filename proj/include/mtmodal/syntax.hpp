#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtm {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Single-type languages (monotone modal / conditional)
// ---------------------------------------------------------------------------

enum class Mode { Nabla, Cond };
enum class Sig { MTNabla, MTCond };
enum class Sort { S, N };

enum class SK { Prop, Top, Bot, Neg, And, Or, Nabla, Cond };

struct Single;
using SF = std::shared_ptr<const Single>;

struct Single {
    SK k;
    std::string name;  // Prop only
    SF a, b;
};

SF sProp(const std::string& name);
SF sTop();
SF sBot();
SF sNeg(SF a);
SF sAnd(SF a, SF b);
SF sOr(SF a, SF b);
SF sNabla(SF a);
SF sCond(SF a, SF b);
// sugar used by parser and the axiom table
SF sImp(SF a, SF b);   // ~a | b
SF sIff(SF a, SF b);   // (~a|b) & (~b|a)

bool equal(const SF& x, const SF& y);
bool mode_ok(const SF& f, Mode m);           // Nabla only in Nabla mode, Cond only in Cond mode
void collect_props(const SF& f, std::vector<std::string>& out);

// ---------------------------------------------------------------------------
// Multi-type languages (sorts S and N), extended with the adjoint connectives
// and the nominal/conominal leaves used by the rewrite engine.
// ---------------------------------------------------------------------------

enum class MK {
    // S-sort
    Prop, Top, Bot, Neg, And, Or,
    DiamNu,        // <nu>  : N -> S
    BoxNuc,        // [nuc] : N -> S
    Triangle,      // |>    : N x S -> S
    DiamIn,        // <in>  : N -> S   (adjoint)
    BoxNotIn,      // [nin] : N -> S   (adjoint)
    BoxArrNotIn,   // [nin> : N -> S   (Galois adjoint of [nni>)
    BlackTriUp,    // <|    : N x S -> S (residual)
    SNom, SCoNom,  // nominal / conominal leaves over the S carrier
    // N-sort
    One, Zero, SimNeg, Cap, Cup,
    BoxNi,         // [ni]  : S -> N
    DiamNotNi,     // <nni> : S -> N
    BoxArrNotNi,   // [nni> : S -> N
    BoxBNu,        // [bnu] : S -> N   (adjoint of <nu>)
    DiamBNuC,      // <bnuc>: S -> N   (adjoint of [nuc])
    BlackTriRight, // |>>   : S x S -> N (residual)
    NNom, NCoNom,
    // formula metavariables, used in rule schemas only
    MetaFS, MetaFN, MetaProp,
};

struct MT;
using MF = std::shared_ptr<const MT>;

struct MT {
    MK k;
    Sort sort;
    std::string name;  // Prop
    int var = -1;      // nominal / conominal / metavariable id
    MF a, b;
};

int arity(MK k);
Sort result_sort(MK k);
Sort arg_sort(MK k, int i);
bool coord_positive(MK k, int i);  // tonicity of coordinate i

// checked constructors (throw std::logic_error on sort mismatch)
MF mk(MK k, MF a = nullptr, MF b = nullptr);
MF mProp(const std::string& name);
MF mNom(MK kind, int id);  // SNom/SCoNom/NNom/NCoNom
// unchecked constructor, for building deliberately ill-sorted trees
MF mk_raw(MK k, Sort claimed, MF a = nullptr, MF b = nullptr);

bool equal(const MF& x, const MF& y);
bool sort_check(const MF& f);                       // child sorts match arg signatures
bool in_mt_language(const MF& f, Sig sig);          // the plain two-sorted languages
bool is_alba_term(const MF& f, Sig sig);            // adds adjoints and (co)nominals
bool in_calculus_fragment(const MF& f, Sig sig);    // the logical grammars of the display calculi
void collect_props(const MF& f, std::vector<std::string>& out);
bool contains_prop(const MF& f);
MF substitute_prop(const MF& f, const std::string& name, const MF& repl);
MF substitute_var(const MF& f, int var, const MF& repl);

struct MTSequent {
    MF lhs, rhs;
};

// ---------------------------------------------------------------------------
// Structures of the display calculi
// ---------------------------------------------------------------------------

enum class STK {
    Formula,  // leaf holding an MF of either sort
    // S-sort structural connectives
    HatTop, CheckBot, TildeNeg, HatAnd, CheckOr,
    HatDiamNu, CheckBoxNuc, HatDiamIn, CheckBoxNotIn,   // N -> S
    CheckTri, HatBlackUp,                               // (N,S) -> S
    CheckBoxArrNotIn,                                   // N -> S
    // N-sort structural connectives
    HatOne, CheckZero, TildeSim, HatCap, CheckCup,
    CheckBoxNi, HatDiamNotNi, CheckBoxBNu, HatDiamBNuC, // S -> N
    CheckBoxArrNotNi,                                   // S -> N
    CheckBlackRight,                                    // (S,S) -> N
    // pattern metavariables (rule schemas only)
    MetaS, MetaN, MetaFS, MetaFN, MetaProp,
};

struct Struct;
using St = std::shared_ptr<const Struct>;

struct Struct {
    STK k;
    MF f;              // Formula leaf
    std::string meta;  // metavariable name
    St a, b;
};

int arity(STK k);
Sort result_sort_st(STK k);
Sort arg_sort_st(STK k, int i);
bool coord_positive_st(STK k, int i);
// polarity class: +1 antecedent-only (hat), -1 succedent-only (check), 0 either (tilde/leaf)
int polarity_class(STK k);

St stF(MF f);
St stMk(STK k, St a = nullptr, St b = nullptr);
St stMeta(STK k, const std::string& name);

bool equal(const St& x, const St& y);
Sort sort_of(const St& s);
bool has_meta(const St& s);

struct Sequent {
    St ante, succ;
};
bool equal(const Sequent& x, const Sequent& y);

// checks hats in antecedent-polarity positions, checks in succedent-polarity ones
bool polarity_ok(const Sequent& s, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Parsing / printing
// ---------------------------------------------------------------------------

SF parse_single(const std::string& text, Mode mode);
MF parse_mt(const std::string& text, Sig sig, bool extended = false);
St parse_structure(const std::string& text, Sig sig);
Sequent parse_sequent(const std::string& text, Sig sig);
MTSequent parse_mt_sequent(const std::string& text, Sig sig);
std::pair<SF, SF> parse_single_sequent(const std::string& text, Mode mode);
// "lhs <= rhs"
std::pair<MF, MF> parse_inequality(const std::string& text, Sig sig, bool extended = false);

std::string render(const SF& f);
std::string render(const MF& f);
std::string render(const St& s);
std::string render(const Sequent& s);
std::string render(const MTSequent& s);

}  // namespace mtm
