#include "mtmodal/calculus.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace mtm {

// ---------------------------------------------------------------------------
// Schema construction helpers
// ---------------------------------------------------------------------------

namespace {

St SV(const char* n) { return stMeta(STK::MetaS, n); }   // structural S-variable
St NV(const char* n) { return stMeta(STK::MetaN, n); }   // structural N-variable

MF fmeta(MK k, const char* n) {
    auto f = mk_raw(k, k == MK::MetaFN ? Sort::N : Sort::S);
    const_cast<MT*>(f.get())->name = n;
    return f;
}
MF FS(const char* n) { return fmeta(MK::MetaFS, n); }
MF FN(const char* n) { return fmeta(MK::MetaFN, n); }
MF PV(const char* n) { return fmeta(MK::MetaProp, n); }

St F(MF f) { return stF(std::move(f)); }

// structural wrappers
St hTop() { return stMk(STK::HatTop); }
St cBot() { return stMk(STK::CheckBot); }
St tNeg(St a) { return stMk(STK::TildeNeg, std::move(a)); }
St hAnd(St a, St b) { return stMk(STK::HatAnd, std::move(a), std::move(b)); }
St cOr(St a, St b) { return stMk(STK::CheckOr, std::move(a), std::move(b)); }
St hOne() { return stMk(STK::HatOne); }
St cZero() { return stMk(STK::CheckZero); }
St tSim(St a) { return stMk(STK::TildeSim, std::move(a)); }
St hCap(St a, St b) { return stMk(STK::HatCap, std::move(a), std::move(b)); }
St cCup(St a, St b) { return stMk(STK::CheckCup, std::move(a), std::move(b)); }
St hDNu(St a) { return stMk(STK::HatDiamNu, std::move(a)); }
St cBNuc(St a) { return stMk(STK::CheckBoxNuc, std::move(a)); }
St hDIn(St a) { return stMk(STK::HatDiamIn, std::move(a)); }
St cBNotIn(St a) { return stMk(STK::CheckBoxNotIn, std::move(a)); }
St cBNi(St a) { return stMk(STK::CheckBoxNi, std::move(a)); }
St hDNni(St a) { return stMk(STK::HatDiamNotNi, std::move(a)); }
St cBBNu(St a) { return stMk(STK::CheckBoxBNu, std::move(a)); }
St hDBNuC(St a) { return stMk(STK::HatDiamBNuC, std::move(a)); }
St cBArrNotNi(St a) { return stMk(STK::CheckBoxArrNotNi, std::move(a)); }
St cBArrNotIn(St a) { return stMk(STK::CheckBoxArrNotIn, std::move(a)); }
St cTri(St a, St b) { return stMk(STK::CheckTri, std::move(a), std::move(b)); }
St hBUp(St a, St b) { return stMk(STK::HatBlackUp, std::move(a), std::move(b)); }
St cBRight(St a, St b) { return stMk(STK::CheckBlackRight, std::move(a), std::move(b)); }

Sequent SQ(St a, St s) { return {std::move(a), std::move(s)}; }

Rule rule(std::string name, RuleCat cat, std::vector<RuleSchema> schemas,
          std::optional<AxiomId> ext = std::nullopt) {
    return {std::move(name), cat, std::move(schemas), ext};
}

RuleSchema schema(std::vector<Sequent> prem, Sequent concl, bool bidir = false) {
    return {std::move(prem), std::move(concl), bidir};
}

}  // namespace

// ---------------------------------------------------------------------------
// Rule set assembly
// ---------------------------------------------------------------------------

const Rule* RuleSet::find(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name) return &r;
    return nullptr;
}

RuleSet ruleset(Sig sig, const std::set<AxiomId>& extensions, bool cut) {
    RuleSet rs;
    rs.sig = sig;
    rs.cut = cut;
    auto& R = rs.rules;

    // identity, cut
    R.push_back(rule("Id", RuleCat::Axiom, {schema({}, SQ(F(PV("p")), F(PV("p"))))}));
    if (cut) {
        R.push_back(rule("Cut_S", RuleCat::Cut,
                         {schema({SQ(SV("X"), F(FS("A"))), SQ(F(FS("A")), SV("Y"))},
                                 SQ(SV("X"), SV("Y")))}));
        R.push_back(rule("Cut_N", RuleCat::Cut,
                         {schema({SQ(NV("G"), F(FN("a"))), SQ(F(FN("a")), NV("D"))},
                                 SQ(NV("G"), NV("D")))}));
    }

    // constants: axioms plus the converse logical rules
    R.push_back(rule("bot_L", RuleCat::Axiom, {schema({}, SQ(F(mk(MK::Bot)), cBot()))}));
    R.push_back(rule("top_R", RuleCat::Axiom, {schema({}, SQ(hTop(), F(mk(MK::Top))))}));
    R.push_back(rule("top_L", RuleCat::Logical,
                     {schema({SQ(hTop(), SV("X"))}, SQ(F(mk(MK::Top)), SV("X")))}));
    R.push_back(rule("bot_R", RuleCat::Logical,
                     {schema({SQ(SV("X"), cBot())}, SQ(SV("X"), F(mk(MK::Bot))))}));

    // pure S display rules
    R.push_back(rule("gal_S", RuleCat::Display,
                     {schema({SQ(tNeg(SV("X")), SV("Y"))}, SQ(tNeg(SV("Y")), SV("X")), true),
                      schema({SQ(SV("X"), tNeg(SV("Y")))}, SQ(SV("Y"), tNeg(SV("X"))), true)}));
    R.push_back(rule("res_S", RuleCat::Display,
                     {schema({SQ(hAnd(SV("X"), SV("Y")), SV("Z"))},
                             SQ(SV("Y"), cOr(tNeg(SV("X")), SV("Z"))), true),
                      schema({SQ(SV("X"), cOr(SV("Y"), SV("Z")))},
                             SQ(hAnd(tNeg(SV("Y")), SV("X")), SV("Z")), true)}));

    // pure N display rules
    R.push_back(rule("gal_N", RuleCat::Display,
                     {schema({SQ(tSim(NV("G")), NV("D"))}, SQ(tSim(NV("D")), NV("G")), true),
                      schema({SQ(NV("G"), tSim(NV("D")))}, SQ(NV("D"), tSim(NV("G"))), true)}));
    R.push_back(rule("res_N", RuleCat::Display,
                     {schema({SQ(hCap(NV("G"), NV("D")), NV("P"))},
                             SQ(NV("D"), cCup(tSim(NV("G")), NV("P"))), true),
                      schema({SQ(NV("G"), cCup(NV("D"), NV("P")))},
                             SQ(hCap(tSim(NV("D")), NV("G")), NV("P")), true)}));

    // pure S structural rules
    R.push_back(rule("cont_S", RuleCat::Structural,
                     {schema({SQ(SV("X"), SV("Y"))}, SQ(tNeg(SV("Y")), tNeg(SV("X"))), true)}));
    R.push_back(rule("top_S", RuleCat::Structural,
                     {schema({SQ(SV("X"), SV("Y"))}, SQ(hAnd(SV("X"), hTop()), SV("Y")), true)}));
    R.push_back(rule("bot_S", RuleCat::Structural,
                     {schema({SQ(SV("X"), SV("Y"))}, SQ(SV("X"), cOr(SV("Y"), cBot())), true)}));
    R.push_back(rule("W_S", RuleCat::Structural,
                     {schema({SQ(SV("X"), SV("Y"))}, SQ(hAnd(SV("X"), SV("Z")), SV("Y"))),
                      schema({SQ(SV("X"), SV("Y"))}, SQ(SV("X"), cOr(SV("Y"), SV("Z"))))}));
    R.push_back(rule("C_S", RuleCat::Structural,
                     {schema({SQ(hAnd(SV("X"), SV("X")), SV("Y"))}, SQ(SV("X"), SV("Y"))),
                      schema({SQ(SV("X"), cOr(SV("Y"), SV("Y")))}, SQ(SV("X"), SV("Y")))}));
    R.push_back(rule("E_S", RuleCat::Structural,
                     {schema({SQ(hAnd(SV("X"), SV("Y")), SV("Z"))},
                             SQ(hAnd(SV("Y"), SV("X")), SV("Z"))),
                      schema({SQ(SV("X"), cOr(SV("Y"), SV("Z")))},
                             SQ(SV("X"), cOr(SV("Z"), SV("Y"))))}));
    R.push_back(rule("A_S", RuleCat::Structural,
                     {schema({SQ(hAnd(SV("X"), hAnd(SV("Y"), SV("Z"))), SV("W"))},
                             SQ(hAnd(hAnd(SV("X"), SV("Y")), SV("Z")), SV("W"))),
                      schema({SQ(SV("W"), cOr(SV("X"), cOr(SV("Y"), SV("Z"))))},
                             SQ(SV("W"), cOr(cOr(SV("X"), SV("Y")), SV("Z"))))}));

    // pure N structural rules
    R.push_back(rule("cont_N", RuleCat::Structural,
                     {schema({SQ(NV("G"), NV("D"))}, SQ(tSim(NV("D")), tSim(NV("G"))), true)}));
    R.push_back(rule("one_N", RuleCat::Structural,
                     {schema({SQ(NV("G"), NV("D"))}, SQ(hCap(NV("G"), hOne()), NV("D")), true)}));
    R.push_back(rule("zero_N", RuleCat::Structural,
                     {schema({SQ(NV("G"), NV("D"))}, SQ(NV("G"), cCup(NV("D"), cZero())), true)}));
    R.push_back(rule("W_N", RuleCat::Structural,
                     {schema({SQ(NV("G"), NV("D"))}, SQ(hCap(NV("G"), NV("P")), NV("D"))),
                      schema({SQ(NV("G"), NV("D"))}, SQ(NV("G"), cCup(NV("D"), NV("P"))))}));
    R.push_back(rule("C_N", RuleCat::Structural,
                     {schema({SQ(hCap(NV("G"), NV("G")), NV("D"))}, SQ(NV("G"), NV("D"))),
                      schema({SQ(NV("G"), cCup(NV("D"), NV("D")))}, SQ(NV("G"), NV("D")))}));
    R.push_back(rule("E_N", RuleCat::Structural,
                     {schema({SQ(hCap(NV("G"), NV("D")), NV("P"))},
                             SQ(hCap(NV("D"), NV("G")), NV("P"))),
                      schema({SQ(NV("G"), cCup(NV("D"), NV("P")))},
                             SQ(NV("G"), cCup(NV("P"), NV("D"))))}));
    R.push_back(rule("A_N", RuleCat::Structural,
                     {schema({SQ(hCap(NV("G"), hCap(NV("D"), NV("P"))), NV("S"))},
                             SQ(hCap(hCap(NV("G"), NV("D")), NV("P")), NV("S"))),
                      schema({SQ(NV("S"), cCup(NV("G"), cCup(NV("D"), NV("P"))))},
                             SQ(NV("S"), cCup(cCup(NV("G"), NV("D")), NV("P"))))}));

    // pure S logical rules
    R.push_back(rule("neg_L", RuleCat::Logical,
                     {schema({SQ(tNeg(F(FS("A"))), SV("X"))}, SQ(F(mk(MK::Neg, FS("A"))), SV("X")))}));
    R.push_back(rule("neg_R", RuleCat::Logical,
                     {schema({SQ(SV("X"), tNeg(F(FS("A"))))}, SQ(SV("X"), F(mk(MK::Neg, FS("A")))))}));
    R.push_back(rule("and_L", RuleCat::Logical,
                     {schema({SQ(hAnd(F(FS("A")), F(FS("B"))), SV("X"))},
                             SQ(F(mk(MK::And, FS("A"), FS("B"))), SV("X")))}));
    R.push_back(rule("and_R", RuleCat::Logical,
                     {schema({SQ(SV("X"), F(FS("A"))), SQ(SV("Y"), F(FS("B")))},
                             SQ(hAnd(SV("X"), SV("Y")), F(mk(MK::And, FS("A"), FS("B")))))}));

    if (sig == Sig::MTNabla) {
        // multi-type display rules
        R.push_back(rule("dp_nu", RuleCat::Display,
                         {schema({SQ(hDNu(NV("G")), SV("X"))}, SQ(NV("G"), cBBNu(SV("X"))), true)}));
        R.push_back(rule("dp_nuc", RuleCat::Display,
                         {schema({SQ(hDBNuC(SV("X")), NV("G"))}, SQ(SV("X"), cBNuc(NV("G"))), true)}));
        R.push_back(rule("dp_ni", RuleCat::Display,
                         {schema({SQ(hDIn(NV("G")), SV("X"))}, SQ(NV("G"), cBNi(SV("X"))), true)}));
        R.push_back(rule("dp_nni", RuleCat::Display,
                         {schema({SQ(hDNni(SV("X")), NV("G"))}, SQ(SV("X"), cBNotIn(NV("G"))), true)}));
        // logical rules for the multi-type connectives
        R.push_back(rule("nu_L", RuleCat::Logical,
                         {schema({SQ(hDNu(F(FN("a"))), SV("X"))},
                                 SQ(F(mk(MK::DiamNu, FN("a"))), SV("X")))}));
        R.push_back(rule("nu_R", RuleCat::Logical,
                         {schema({SQ(NV("G"), F(FN("a")))},
                                 SQ(hDNu(NV("G")), F(mk(MK::DiamNu, FN("a")))))}));
        R.push_back(rule("nuc_L", RuleCat::Logical,
                         {schema({SQ(F(FN("a")), NV("G"))},
                                 SQ(F(mk(MK::BoxNuc, FN("a"))), cBNuc(NV("G"))))}));
        R.push_back(rule("nuc_R", RuleCat::Logical,
                         {schema({SQ(SV("X"), cBNuc(F(FN("a"))))},
                                 SQ(SV("X"), F(mk(MK::BoxNuc, FN("a")))))}));
        R.push_back(rule("nni_L", RuleCat::Logical,
                         {schema({SQ(hDNni(F(FS("A"))), NV("G"))},
                                 SQ(F(mk(MK::DiamNotNi, FS("A"))), NV("G")))}));
        R.push_back(rule("nni_R", RuleCat::Logical,
                         {schema({SQ(SV("X"), F(FS("A")))},
                                 SQ(hDNni(SV("X")), F(mk(MK::DiamNotNi, FS("A")))))}));
    } else {
        R.push_back(rule("dp_tri_black", RuleCat::Display,
                         {schema({SQ(SV("X"), cTri(NV("G"), SV("Y")))},
                                 SQ(hBUp(NV("G"), SV("X")), SV("Y")), true)}));
        R.push_back(rule("dp_tri_right", RuleCat::Display,
                         {schema({SQ(NV("G"), cBRight(SV("X"), SV("Y")))},
                                 SQ(SV("X"), cTri(NV("G"), SV("Y"))), true)}));
        R.push_back(rule("dp_nin", RuleCat::Display,
                         {schema({SQ(SV("X"), cBArrNotIn(NV("G")))},
                                 SQ(NV("G"), cBArrNotNi(SV("X"))), true)}));
        R.push_back(rule("dp_ni", RuleCat::Display,
                         {schema({SQ(hDIn(NV("G")), SV("X"))}, SQ(NV("G"), cBNi(SV("X"))), true)}));
        R.push_back(rule("tri_L", RuleCat::Logical,
                         {schema({SQ(NV("G"), F(FN("a"))), SQ(F(FS("A")), SV("X"))},
                                 SQ(F(mk(MK::Triangle, FN("a"), FS("A"))),
                                    cTri(NV("G"), SV("X"))))}));
        R.push_back(rule("tri_R", RuleCat::Logical,
                         {schema({SQ(SV("X"), cTri(F(FN("a")), F(FS("A"))))},
                                 SQ(SV("X"), F(mk(MK::Triangle, FN("a"), FS("A")))))}));
        R.push_back(rule("bnni_L", RuleCat::Logical,
                         {schema({SQ(SV("X"), F(FS("A")))},
                                 SQ(F(mk(MK::BoxArrNotNi, FS("A"))), cBArrNotNi(SV("X"))))}));
        R.push_back(rule("bnni_R", RuleCat::Logical,
                         {schema({SQ(NV("G"), cBArrNotNi(F(FS("A"))))},
                                 SQ(NV("G"), F(mk(MK::BoxArrNotNi, FS("A")))))}));
        R.push_back(rule("cap_L", RuleCat::Logical,
                         {schema({SQ(hCap(F(FN("a")), F(FN("b"))), NV("G"))},
                                 SQ(F(mk(MK::Cap, FN("a"), FN("b"))), NV("G")))}));
        R.push_back(rule("cap_R", RuleCat::Logical,
                         {schema({SQ(NV("G"), F(FN("a"))), SQ(NV("D"), F(FN("b")))},
                                 SQ(hCap(NV("G"), NV("D")), F(mk(MK::Cap, FN("a"), FN("b")))))}));
    }

    // shared [ni] logical rules
    R.push_back(rule("ni_L", RuleCat::Logical,
                     {schema({SQ(F(FS("A")), SV("X"))},
                             SQ(F(mk(MK::BoxNi, FS("A"))), cBNi(SV("X"))))}));
    R.push_back(rule("ni_R", RuleCat::Logical,
                     {schema({SQ(NV("G"), cBNi(F(FS("A"))))},
                             SQ(NV("G"), F(mk(MK::BoxNi, FS("A")))))}));

    // axiomatic extensions
    for (AxiomId id : extensions) {
        bool n_side = axiom_mode(id) == Mode::Nabla;
        if (n_side != (sig == Sig::MTNabla))
            throw std::invalid_argument("ruleset: extension " + axiom_name(id) +
                                        " is not in this signature");
        switch (id) {
            case AxiomId::N:
                R.push_back(rule("N", RuleCat::Extension,
                                 {schema({SQ(hDNni(hTop()), NV("G"))},
                                         SQ(hTop(), cBNuc(NV("G"))))},
                                 id));
                break;
            case AxiomId::P:
                R.push_back(rule("P", RuleCat::Extension,
                                 {schema({SQ(NV("G"), cBNi(cBot()))},
                                         SQ(hTop(), tNeg(hDNu(NV("G")))))},
                                 id));
                break;
            case AxiomId::C:
                R.push_back(rule("C", RuleCat::Extension,
                                 {schema({SQ(hDNni(hAnd(hDIn(NV("G")), hDIn(NV("D")))), NV("H"))},
                                         SQ(hAnd(hDNu(NV("G")), hDNu(NV("D"))), cBNuc(NV("H"))))},
                                 id));
                break;
            case AxiomId::D:
                R.push_back(rule("D", RuleCat::Extension,
                                 {schema({SQ(NV("G"), cBNi(tNeg(hDIn(NV("D")))))},
                                         SQ(hDNu(NV("D")), tNeg(hDNu(NV("G")))))},
                                 id));
                break;
            case AxiomId::T:
                R.push_back(rule("T", RuleCat::Extension,
                                 {schema({SQ(NV("G"), cBNi(SV("X")))},
                                         SQ(hDNu(NV("G")), SV("X")))},
                                 id));
                break;
            case AxiomId::ID:
                R.push_back(rule("ID", RuleCat::Extension,
                                 {schema({SQ(NV("D"), cBArrNotNi(hDIn(NV("G")))),
                                          SQ(hDIn(NV("G")), SV("X"))},
                                         SQ(hTop(), cTri(hCap(NV("G"), NV("D")), SV("X"))))},
                                 id));
                break;
            case AxiomId::CS:
                R.push_back(rule("CS", RuleCat::Extension,
                                 {schema({SQ(NV("G"), cBNi(cBArrNotIn(NV("D")))),
                                          SQ(SV("X"), cBArrNotIn(NV("D"))), SQ(SV("Y"), SV("Z"))},
                                         SQ(hAnd(SV("X"), SV("Y")),
                                            cTri(hCap(NV("G"), NV("D")), SV("Z"))))},
                                 id));
                break;
            case AxiomId::CEM:
                R.push_back(rule(
                    "CEM", RuleCat::Extension,
                    {schema({SQ(NV("P"), cBArrNotNi(hDIn(NV("G")))),
                             SQ(NV("P"), cBArrNotNi(hDIn(NV("H")))),
                             SQ(NV("D"), cBArrNotNi(hDIn(NV("G")))),
                             SQ(NV("D"), cBArrNotNi(hDIn(NV("H")))), SQ(SV("Y"), SV("X"))},
                            SQ(hTop(), cOr(cTri(hCap(NV("G"), NV("D")), SV("X")),
                                           cTri(hCap(NV("H"), NV("P")), tNeg(SV("Y"))))))},
                    id));
                break;
            case AxiomId::CN:
                R.push_back(rule(
                    "CN", RuleCat::Extension,
                    {schema({SQ(NV("G"), cBNi(cBArrNotIn(NV("D")))), SQ(NV("G"), cBNi(SV("Y"))),
                             SQ(NV("H"), cBNi(cBArrNotIn(NV("P")))), SQ(NV("H"), cBNi(SV("X")))},
                            SQ(hTop(), cOr(cTri(hCap(NV("G"), NV("D")), SV("X")),
                                           cTri(hCap(NV("H"), NV("P")), SV("Y")))))},
                    id));
                break;
            default:
                throw std::invalid_argument("ruleset: no analytic rule for axiom " +
                                            axiom_name(id));
        }
    }
    return rs;
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

namespace {

struct Bindings {
    std::map<std::string, St> sts;
    std::map<std::string, MF> mfs;
};

bool matchF(const MF& pat, const MF& c, Bindings& b);

bool bindF(const std::string& name, const MF& c, Bindings& b) {
    auto it = b.mfs.find(name);
    if (it != b.mfs.end()) return equal(it->second, c);
    b.mfs[name] = c;
    return true;
}

bool matchF(const MF& pat, const MF& c, Bindings& b) {
    switch (pat->k) {
        case MK::MetaFS: return c->sort == Sort::S && bindF(pat->name, c, b);
        case MK::MetaFN: return c->sort == Sort::N && bindF(pat->name, c, b);
        case MK::MetaProp: return c->k == MK::Prop && bindF(pat->name, c, b);
        default: break;
    }
    if (pat->k != c->k || pat->name != c->name || pat->var != c->var) return false;
    for (int i = 0; i < arity(pat->k); ++i)
        if (!matchF(i == 0 ? pat->a : pat->b, i == 0 ? c->a : c->b, b)) return false;
    return true;
}

bool matchS(const St& pat, const St& c, Bindings& b) {
    switch (pat->k) {
        case STK::MetaS: {
            if (sort_of(c) != Sort::S) return false;
            auto it = b.sts.find(pat->meta);
            if (it != b.sts.end()) return equal(it->second, c);
            b.sts[pat->meta] = c;
            return true;
        }
        case STK::MetaN: {
            if (sort_of(c) != Sort::N) return false;
            auto it = b.sts.find(pat->meta);
            if (it != b.sts.end()) return equal(it->second, c);
            b.sts[pat->meta] = c;
            return true;
        }
        case STK::Formula:
            return c->k == STK::Formula && matchF(pat->f, c->f, b);
        default:
            break;
    }
    if (pat->k != c->k) return false;
    for (int i = 0; i < arity(pat->k); ++i)
        if (!matchS(i == 0 ? pat->a : pat->b, i == 0 ? c->a : c->b, b)) return false;
    return true;
}

bool matchSeq(const Sequent& pat, const Sequent& c, Bindings& b) {
    return matchS(pat.ante, c.ante, b) && matchS(pat.succ, c.succ, b);
}

MF instF(const MF& pat, const Bindings& b) {
    switch (pat->k) {
        case MK::MetaFS: case MK::MetaFN: case MK::MetaProp: {
            auto it = b.mfs.find(pat->name);
            if (it == b.mfs.end()) throw std::logic_error("unbound formula metavariable");
            return it->second;
        }
        default: break;
    }
    if (arity(pat->k) == 0) return pat;
    MF a = instF(pat->a, b);
    MF bb = arity(pat->k) == 2 ? instF(pat->b, b) : nullptr;
    return mk_raw(pat->k, pat->sort, a, bb);
}

St instS(const St& pat, const Bindings& b) {
    switch (pat->k) {
        case STK::MetaS: case STK::MetaN: {
            auto it = b.sts.find(pat->meta);
            if (it == b.sts.end()) throw std::logic_error("unbound structure metavariable");
            return it->second;
        }
        case STK::Formula:
            return stF(instF(pat->f, b));
        default: break;
    }
    if (arity(pat->k) == 0) return pat;
    St a = instS(pat->a, b);
    St bb = arity(pat->k) == 2 ? instS(pat->b, b) : nullptr;
    auto n = std::make_shared<Struct>();
    n->k = pat->k;
    n->a = a;
    n->b = bb;
    return n;
}

Sequent instSeq(const Sequent& pat, const Bindings& b) {
    return {instS(pat.ante, b), instS(pat.succ, b)};
}

// all (premises, conclusion) orientations of a rule's schemas
struct Oriented {
    std::vector<Sequent> prem;
    Sequent concl;
};

std::vector<Oriented> orientations(const Rule& r) {
    std::vector<Oriented> out;
    for (const auto& s : r.schemas) {
        out.push_back({s.prem, s.concl});
        if (s.bidir && s.prem.size() == 1) out.push_back({{s.concl}, s.prem[0]});
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Derivation checking
// ---------------------------------------------------------------------------

bool derivation_closed(const Derivation& d) {
    if (d.rule == "hyp") return false;
    for (const auto& k : d.kids)
        if (!derivation_closed(k)) return false;
    return true;
}

static bool node_ok(const Derivation& d, const RuleSet& rs, std::string& reason) {
    std::string why;
    if (!polarity_ok(d.seq, &why)) {
        reason = "polarity violation: " + why;
        return false;
    }
    if (d.rule == "hyp") {
        if (!d.kids.empty()) {
            reason = "hypothesis with premises";
            return false;
        }
        return true;
    }
    const Rule* r = rs.find(d.rule);
    if (!r) {
        reason = "unknown rule '" + d.rule + "'";
        return false;
    }
    for (const auto& o : orientations(*r)) {
        if (o.prem.size() != d.kids.size()) continue;
        Bindings b;
        if (!matchSeq(o.concl, d.seq, b)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < o.prem.size() && ok; ++i) {
            if (!matchSeq(o.prem[i], d.kids[i].seq, b)) ok = false;
        }
        if (ok) return true;
    }
    reason = "sequent does not instantiate rule '" + d.rule + "'";
    return false;
}

static CheckResult check_rec(const Derivation& d, const RuleSet& rs, const std::string& path) {
    std::string reason;
    if (!node_ok(d, rs, reason)) return {false, path, reason};
    for (std::size_t i = 0; i < d.kids.size(); ++i) {
        CheckResult r = check_rec(d.kids[i], rs, path + "." + std::to_string(i));
        if (!r.ok) return r;
    }
    return {true, "", ""};
}

CheckResult check_derivation(const Derivation& d, const RuleSet& rs) {
    return check_rec(d, rs, "root");
}

// ---------------------------------------------------------------------------
// Derivation files
// ---------------------------------------------------------------------------

Sig detect_sig(const std::string& text) {
    for (const char* tok : {"|>", "[nni>", "[nin>", "ID:", "CS:", "CEM:", "CN:", "tri_", "cap_", "bnni_"})
        if (text.find(tok) != std::string::npos) return Sig::MTCond;
    return Sig::MTNabla;
}

namespace {

struct Line {
    int indent;
    std::string rule;
    std::string seq;
};

Derivation build_tree(const std::vector<Line>& ls, std::size_t& i, int indent, Sig sig) {
    if (i >= ls.size() || ls[i].indent != indent)
        throw std::invalid_argument("derivation file: bad indentation structure");
    Derivation d;
    d.rule = ls[i].rule;
    d.seq = parse_sequent(ls[i].seq, sig);
    ++i;
    while (i < ls.size() && ls[i].indent == indent + 1) d.kids.push_back(build_tree(ls, i, indent + 1, sig));
    return d;
}

}  // namespace

Derivation parse_derivation(const std::string& text, Sig sig) {
    std::vector<Line> ls;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::size_t ns = raw.find_first_not_of(' ');
        if (ns == std::string::npos) continue;
        if (raw[ns] == '#') continue;
        if (ns % 2 != 0) throw std::invalid_argument("derivation file: indentation must be two spaces per level");
        std::size_t colon = raw.find(':', ns);
        if (colon == std::string::npos)
            throw std::invalid_argument("derivation file: expected 'rule: sequent'");
        Line l;
        l.indent = (int)(ns / 2);
        l.rule = raw.substr(ns, colon - ns);
        while (!l.rule.empty() && l.rule.back() == ' ') l.rule.pop_back();
        l.seq = raw.substr(colon + 1);
        ls.push_back(l);
    }
    if (ls.empty()) throw std::invalid_argument("derivation file: empty");
    std::size_t i = 0;
    Derivation d = build_tree(ls, i, 0, sig);
    if (i != ls.size()) throw std::invalid_argument("derivation file: trailing lines");
    return d;
}

Derivation parse_derivation_file(const std::string& path, Sig sig) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open derivation file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_derivation(ss.str(), sig);
}

static void print_rec(const Derivation& d, int indent, std::ostringstream& os) {
    for (int i = 0; i < indent; ++i) os << "  ";
    os << d.rule << ": " << render(d.seq) << "\n";
    for (const auto& k : d.kids) print_rec(k, indent + 1, os);
}

std::string print_derivation(const Derivation& d) {
    std::ostringstream os;
    print_rec(d, 0, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// Backward proof search
// ---------------------------------------------------------------------------

namespace {

int cat_priority(RuleCat c) {
    switch (c) {
        case RuleCat::Axiom: return 0;
        case RuleCat::Logical: return 1;
        case RuleCat::Extension: return 2;
        case RuleCat::Display: return 3;
        case RuleCat::Structural: return 4;
        default: return 9;
    }
}

int st_size(const St& s) {
    if (!s) return 0;
    return 1 + st_size(s->a) + st_size(s->b) + (s->k == STK::Formula ? 1 : 0);
}
int seq_size(const Sequent& s) { return st_size(s.ante) + st_size(s.succ); }

struct Searcher {
    const RuleSet& rs;
    std::chrono::steady_clock::time_point deadline;
    std::vector<std::string> visited;
    int contraction_budget;
    bool timed_out = false;

    bool expired() {
        if (timed_out) return true;
        if (std::chrono::steady_clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    std::optional<Derivation> search(const Sequent& goal, int depth) {
        if (expired()) return std::nullopt;
        std::string key = render(goal);
        if (std::find(visited.begin(), visited.end(), key) != visited.end()) return std::nullopt;
        if (depth <= 0) return std::nullopt;
        visited.push_back(key);
        std::optional<Derivation> result;
        // move generation, cheapest categories first
        std::vector<const Rule*> order;
        for (const auto& r : rs.rules)
            if (r.cat != RuleCat::Cut && r.cat != RuleCat::Hyp) order.push_back(&r);
        std::stable_sort(order.begin(), order.end(), [](const Rule* a, const Rule* b) {
            return cat_priority(a->cat) < cat_priority(b->cat);
        });
        int gsize = seq_size(goal);
        for (const Rule* r : order) {
            for (const auto& o : orientations(*r)) {
                Bindings b;
                if (!matchSeq(o.concl, goal, b)) continue;
                bool all_bound = true;
                std::vector<Sequent> subgoals;
                try {
                    for (const auto& p : o.prem) subgoals.push_back(instSeq(p, b));
                } catch (const std::logic_error&) {
                    all_bound = false;  // premise variable not in the conclusion (cut-like)
                }
                if (!all_bound) continue;
                // contraction and the growing direction of the unit rules are
                // rationed per branch to keep backward search bounded
                bool growing = false;
                for (const auto& sg : subgoals)
                    if (seq_size(sg) >= gsize + 2) growing = true;
                if (growing && contraction_budget <= 0) continue;
                Derivation d;
                d.seq = goal;
                d.rule = r->name;
                bool ok = true;
                if (growing) --contraction_budget;
                for (const auto& sg : subgoals) {
                    auto sub = search(sg, depth - 1);
                    if (!sub) {
                        ok = false;
                        break;
                    }
                    d.kids.push_back(std::move(*sub));
                }
                if (growing) ++contraction_budget;
                if (ok) {
                    result = std::move(d);
                    break;
                }
                if (expired()) break;
            }
            if (result || expired()) break;
        }
        visited.pop_back();
        return result;
    }
};

}  // namespace

std::optional<Derivation> prove(const Sequent& goal, const RuleSet& rs, const ProveOptions& opt) {
    std::string why;
    if (!polarity_ok(goal, &why)) throw std::invalid_argument("prove: " + why);
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opt.timeout_ms);
    for (int depth = 1; depth <= opt.depth; ++depth) {
        Searcher s{rs, deadline, {}, opt.contraction_budget};
        auto d = s.search(goal, depth);
        if (d) return d;
        if (s.timed_out) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule interpretations
// ---------------------------------------------------------------------------

namespace {

struct InterpCtx {
    std::vector<VarDecl> vars;
    std::map<std::string, MF> assigned;
    int next = 1;

    MF var_for(const std::string& name, Sort s) {
        auto it = assigned.find(name);
        if (it != assigned.end()) return it->second;
        int id = next++;
        vars.push_back({id, s, VarKind::Free});
        // free variables are represented by nominal leaves with Free kind
        MF v = mNom(s == Sort::S ? MK::SNom : MK::NNom, id);
        assigned[name] = v;
        return v;
    }

    MF interpF(const MF& f) {
        switch (f->k) {
            case MK::MetaFS: case MK::MetaProp: return var_for(f->name, Sort::S);
            case MK::MetaFN: return var_for(f->name, Sort::N);
            default: break;
        }
        if (arity(f->k) == 0) return f;
        MF a = interpF(f->a);
        MF b = arity(f->k) == 2 ? interpF(f->b) : nullptr;
        return mk_raw(f->k, f->sort, a, b);
    }

    // variable ids must follow left-to-right traversal order
    MF binary(MK k, const St& s) {
        MF a = interp(s->a);
        MF b = interp(s->b);
        return mk(k, a, b);
    }

    MF interp(const St& s) {
        switch (s->k) {
            case STK::Formula: return interpF(s->f);
            case STK::MetaS: return var_for(s->meta, Sort::S);
            case STK::MetaN: return var_for(s->meta, Sort::N);
            case STK::HatTop: return mk(MK::Top);
            case STK::CheckBot: return mk(MK::Bot);
            case STK::HatOne: return mk(MK::One);
            case STK::CheckZero: return mk(MK::Zero);
            case STK::TildeNeg: return mk(MK::Neg, interp(s->a));
            case STK::TildeSim: return mk(MK::SimNeg, interp(s->a));
            case STK::HatAnd: return binary(MK::And, s);
            case STK::CheckOr: return binary(MK::Or, s);
            case STK::HatCap: return binary(MK::Cap, s);
            case STK::CheckCup: return binary(MK::Cup, s);
            case STK::HatDiamNu: return mk(MK::DiamNu, interp(s->a));
            case STK::CheckBoxNuc: return mk(MK::BoxNuc, interp(s->a));
            case STK::HatDiamIn: return mk(MK::DiamIn, interp(s->a));
            case STK::CheckBoxNotIn: return mk(MK::BoxNotIn, interp(s->a));
            case STK::CheckBoxNi: return mk(MK::BoxNi, interp(s->a));
            case STK::HatDiamNotNi: return mk(MK::DiamNotNi, interp(s->a));
            case STK::CheckBoxBNu: return mk(MK::BoxBNu, interp(s->a));
            case STK::HatDiamBNuC: return mk(MK::DiamBNuC, interp(s->a));
            case STK::CheckBoxArrNotNi: return mk(MK::BoxArrNotNi, interp(s->a));
            case STK::CheckBoxArrNotIn: return mk(MK::BoxArrNotIn, interp(s->a));
            case STK::CheckTri: return binary(MK::Triangle, s);
            case STK::HatBlackUp: return binary(MK::BlackTriUp, s);
            case STK::CheckBlackRight: return binary(MK::BlackTriRight, s);
            default:
                throw std::logic_error("interp: unexpected structure node");
        }
    }
};

}  // namespace

QuasiIneq interpret_schema(const RuleSchema& schema, Sig sig) {
    InterpCtx cx;
    QuasiIneq q;
    q.sig = sig;
    for (const auto& p : schema.prem) q.ante.push_back({cx.interp(p.ante), cx.interp(p.succ)});
    q.cons = {cx.interp(schema.concl.ante), cx.interp(schema.concl.succ)};
    q.vars = cx.vars;
    q.biconditional = schema.bidir;
    return q;
}

std::vector<QuasiIneq> interpret_rule(const Rule& r, Sig sig) {
    std::vector<QuasiIneq> out;
    for (const auto& s : r.schemas) out.push_back(interpret_schema(s, sig));
    return out;
}

bool rule_sound_on(const Rule& r, const TSNFrame& fr) {
    for (const auto& q : interpret_rule(r, Sig::MTNabla))
        if (!holds_on(q, fr)) return false;
    return true;
}

bool rule_sound_on(const Rule& r, const TSCFrame& fr) {
    for (const auto& q : interpret_rule(r, Sig::MTCond))
        if (!holds_on(q, fr)) return false;
    return true;
}

}  // namespace mtm
