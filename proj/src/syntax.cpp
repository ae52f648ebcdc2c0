#include "mtmodal/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace mtm {

// ---------------------------------------------------------------------------
// Single-type constructors
// ---------------------------------------------------------------------------

static SF mkS(SK k, std::string name, SF a, SF b) {
    auto n = std::make_shared<Single>();
    n->k = k;
    n->name = std::move(name);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

SF sProp(const std::string& name) { return mkS(SK::Prop, name, nullptr, nullptr); }
SF sTop() { return mkS(SK::Top, "", nullptr, nullptr); }
SF sBot() { return mkS(SK::Bot, "", nullptr, nullptr); }
SF sNeg(SF a) { return mkS(SK::Neg, "", std::move(a), nullptr); }
SF sAnd(SF a, SF b) { return mkS(SK::And, "", std::move(a), std::move(b)); }
SF sOr(SF a, SF b) { return mkS(SK::Or, "", std::move(a), std::move(b)); }
SF sNabla(SF a) { return mkS(SK::Nabla, "", std::move(a), nullptr); }
SF sCond(SF a, SF b) { return mkS(SK::Cond, "", std::move(a), std::move(b)); }
SF sImp(SF a, SF b) { return sOr(sNeg(std::move(a)), std::move(b)); }
SF sIff(SF a, SF b) { return sAnd(sImp(a, b), sImp(b, a)); }

bool equal(const SF& x, const SF& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->k != y->k || x->name != y->name) return false;
    return equal(x->a, y->a) && equal(x->b, y->b);
}

bool mode_ok(const SF& f, Mode m) {
    if (!f) return true;
    if (f->k == SK::Nabla && m != Mode::Nabla) return false;
    if (f->k == SK::Cond && m != Mode::Cond) return false;
    return mode_ok(f->a, m) && mode_ok(f->b, m);
}

void collect_props(const SF& f, std::vector<std::string>& out) {
    if (!f) return;
    if (f->k == SK::Prop) {
        if (std::find(out.begin(), out.end(), f->name) == out.end()) out.push_back(f->name);
    }
    collect_props(f->a, out);
    collect_props(f->b, out);
}

// ---------------------------------------------------------------------------
// Multi-type signature tables
// ---------------------------------------------------------------------------

int arity(MK k) {
    switch (k) {
        case MK::Prop: case MK::Top: case MK::Bot: case MK::One: case MK::Zero:
        case MK::SNom: case MK::SCoNom: case MK::NNom: case MK::NCoNom:
        case MK::MetaFS: case MK::MetaFN: case MK::MetaProp:
            return 0;
        case MK::And: case MK::Or: case MK::Cap: case MK::Cup:
        case MK::Triangle: case MK::BlackTriUp: case MK::BlackTriRight:
            return 2;
        default:
            return 1;
    }
}

Sort result_sort(MK k) {
    switch (k) {
        case MK::Prop: case MK::Top: case MK::Bot: case MK::Neg: case MK::And: case MK::Or:
        case MK::DiamNu: case MK::BoxNuc: case MK::Triangle:
        case MK::DiamIn: case MK::BoxNotIn: case MK::BoxArrNotIn: case MK::BlackTriUp:
        case MK::SNom: case MK::SCoNom: case MK::MetaFS: case MK::MetaProp:
            return Sort::S;
        default:
            return Sort::N;
    }
}

Sort arg_sort(MK k, int i) {
    switch (k) {
        case MK::Neg: case MK::And: case MK::Or:
            return Sort::S;
        case MK::SimNeg: case MK::Cap: case MK::Cup:
            return Sort::N;
        case MK::DiamNu: case MK::BoxNuc: case MK::DiamIn: case MK::BoxNotIn: case MK::BoxArrNotIn:
            return Sort::N;
        case MK::BoxNi: case MK::DiamNotNi: case MK::BoxArrNotNi: case MK::BoxBNu: case MK::DiamBNuC:
            return Sort::S;
        case MK::Triangle:   // N x S -> S
        case MK::BlackTriUp: // N x S -> S
            return i == 0 ? Sort::N : Sort::S;
        case MK::BlackTriRight: // S x S -> N
            return Sort::S;
        default:
            throw std::logic_error("arg_sort: nullary connective");
    }
}

bool coord_positive(MK k, int i) {
    switch (k) {
        case MK::Neg: case MK::SimNeg: case MK::BoxArrNotNi: case MK::BoxArrNotIn:
            return false;
        case MK::Triangle: case MK::BlackTriRight:
            return i != 0;
        default:
            return true;
    }
}

MF mk_raw(MK k, Sort claimed, MF a, MF b) {
    auto n = std::make_shared<MT>();
    n->k = k;
    n->sort = claimed;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

MF mk(MK k, MF a, MF b) {
    int ar = arity(k);
    if (ar >= 1) {
        if (!a || a->sort != arg_sort(k, 0)) throw std::logic_error("mk: sort mismatch in argument 1");
    }
    if (ar == 2) {
        if (!b || b->sort != arg_sort(k, 1)) throw std::logic_error("mk: sort mismatch in argument 2");
    }
    return mk_raw(k, result_sort(k), std::move(a), std::move(b));
}

MF mProp(const std::string& name) {
    auto n = mk_raw(MK::Prop, Sort::S);
    const_cast<MT*>(n.get())->name = name;
    return n;
}

MF mNom(MK kind, int id) {
    auto n = mk_raw(kind, result_sort(kind));
    const_cast<MT*>(n.get())->var = id;
    return n;
}

bool equal(const MF& x, const MF& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->k != y->k || x->name != y->name || x->var != y->var) return false;
    return equal(x->a, y->a) && equal(x->b, y->b);
}

bool sort_check(const MF& f) {
    if (!f) return true;
    if (f->sort != result_sort(f->k)) return false;
    int ar = arity(f->k);
    if (ar >= 1) {
        if (!f->a || f->a->sort != arg_sort(f->k, 0) || !sort_check(f->a)) return false;
    } else if (f->a) {
        return false;
    }
    if (ar == 2) {
        if (!f->b || f->b->sort != arg_sort(f->k, 1) || !sort_check(f->b)) return false;
    } else if (f->b) {
        return false;
    }
    return true;
}

static bool mt_allowed(MK k, Sig sig, bool extended) {
    switch (k) {
        case MK::Prop: case MK::Top: case MK::Bot: case MK::Neg: case MK::And: case MK::Or:
        case MK::One: case MK::Zero: case MK::SimNeg: case MK::Cap: case MK::Cup: case MK::BoxNi:
            return true;
        case MK::DiamNu: case MK::BoxNuc: case MK::DiamNotNi:
            return sig == Sig::MTNabla;
        case MK::Triangle: case MK::BoxArrNotNi:
            return sig == Sig::MTCond;
        case MK::DiamIn:
            return extended;
        case MK::BoxNotIn: case MK::BoxBNu: case MK::DiamBNuC:
            return extended && sig == Sig::MTNabla;
        case MK::BoxArrNotIn: case MK::BlackTriUp: case MK::BlackTriRight:
            return extended && sig == Sig::MTCond;
        case MK::SNom: case MK::SCoNom: case MK::NNom: case MK::NCoNom:
            return extended;
        case MK::MetaFS: case MK::MetaFN: case MK::MetaProp:
            return false;
    }
    return false;
}

static bool lang_check(const MF& f, Sig sig, bool extended) {
    if (!f) return true;
    if (!mt_allowed(f->k, sig, extended)) return false;
    return lang_check(f->a, sig, extended) && lang_check(f->b, sig, extended);
}

bool in_mt_language(const MF& f, Sig sig) { return sort_check(f) && lang_check(f, sig, false); }
bool is_alba_term(const MF& f, Sig sig) { return sort_check(f) && lang_check(f, sig, true); }

// the logical grammars of D.MTnabla / D.MT> (no Or/Top-free differences: Or, Cup,
// SimNeg, One, Zero are absent; Cap only on the conditional side)
static bool calc_allowed(MK k, Sig sig, Sort ctx) {
    (void)ctx;
    switch (k) {
        case MK::Prop: case MK::Top: case MK::Bot: case MK::Neg: case MK::And:
            return true;
        case MK::DiamNu: case MK::BoxNuc: case MK::DiamNotNi:
            return sig == Sig::MTNabla;
        case MK::Triangle: case MK::BoxArrNotNi:
            return sig == Sig::MTCond;
        case MK::BoxNi:
            return true;
        case MK::Cap:
            return sig == Sig::MTCond;
        default:
            return false;
    }
}

static bool calc_check(const MF& f, Sig sig) {
    if (!f) return true;
    if (!calc_allowed(f->k, sig, f->sort)) return false;
    return calc_check(f->a, sig) && calc_check(f->b, sig);
}

bool in_calculus_fragment(const MF& f, Sig sig) { return sort_check(f) && calc_check(f, sig); }

void collect_props(const MF& f, std::vector<std::string>& out) {
    if (!f) return;
    if (f->k == MK::Prop) {
        if (std::find(out.begin(), out.end(), f->name) == out.end()) out.push_back(f->name);
    }
    collect_props(f->a, out);
    collect_props(f->b, out);
}

bool contains_prop(const MF& f) {
    if (!f) return false;
    if (f->k == MK::Prop) return true;
    return contains_prop(f->a) || contains_prop(f->b);
}

MF substitute_prop(const MF& f, const std::string& name, const MF& repl) {
    if (!f) return f;
    if (f->k == MK::Prop) return f->name == name ? repl : f;
    if (arity(f->k) == 0) return f;
    MF a = substitute_prop(f->a, name, repl);
    MF b = substitute_prop(f->b, name, repl);
    if (a == f->a && b == f->b) return f;
    return mk_raw(f->k, f->sort, a, b);
}

MF substitute_var(const MF& f, int var, const MF& repl) {
    if (!f) return f;
    if (f->var == var &&
        (f->k == MK::SNom || f->k == MK::SCoNom || f->k == MK::NNom || f->k == MK::NCoNom))
        return repl;
    if (arity(f->k) == 0) return f;
    MF a = substitute_var(f->a, var, repl);
    MF b = substitute_var(f->b, var, repl);
    if (a == f->a && b == f->b) return f;
    return mk_raw(f->k, f->sort, a, b);
}

// ---------------------------------------------------------------------------
// Structures
// ---------------------------------------------------------------------------

int arity(STK k) {
    switch (k) {
        case STK::Formula: case STK::HatTop: case STK::CheckBot: case STK::HatOne:
        case STK::CheckZero: case STK::MetaS: case STK::MetaN: case STK::MetaFS:
        case STK::MetaFN: case STK::MetaProp:
            return 0;
        case STK::HatAnd: case STK::CheckOr: case STK::HatCap: case STK::CheckCup:
        case STK::CheckTri: case STK::HatBlackUp: case STK::CheckBlackRight:
            return 2;
        default:
            return 1;
    }
}

Sort result_sort_st(STK k) {
    switch (k) {
        case STK::HatTop: case STK::CheckBot: case STK::TildeNeg: case STK::HatAnd:
        case STK::CheckOr: case STK::HatDiamNu: case STK::CheckBoxNuc: case STK::HatDiamIn:
        case STK::CheckBoxNotIn: case STK::CheckTri: case STK::HatBlackUp:
        case STK::CheckBoxArrNotIn: case STK::MetaS: case STK::MetaFS: case STK::MetaProp:
            return Sort::S;
        case STK::Formula:
            throw std::logic_error("result_sort_st: formula leaf has its own sort");
        default:
            return Sort::N;
    }
}

Sort arg_sort_st(STK k, int i) {
    switch (k) {
        case STK::TildeNeg: case STK::HatAnd: case STK::CheckOr:
            return Sort::S;
        case STK::TildeSim: case STK::HatCap: case STK::CheckCup:
            return Sort::N;
        case STK::HatDiamNu: case STK::CheckBoxNuc: case STK::HatDiamIn: case STK::CheckBoxNotIn:
        case STK::CheckBoxArrNotIn:
            return Sort::N;
        case STK::CheckBoxNi: case STK::HatDiamNotNi: case STK::CheckBoxBNu: case STK::HatDiamBNuC:
        case STK::CheckBoxArrNotNi:
            return Sort::S;
        case STK::CheckTri: case STK::HatBlackUp:
            return i == 0 ? Sort::N : Sort::S;
        case STK::CheckBlackRight:
            return Sort::S;
        default:
            throw std::logic_error("arg_sort_st: nullary");
    }
}

bool coord_positive_st(STK k, int i) {
    switch (k) {
        case STK::TildeNeg: case STK::TildeSim: case STK::CheckBoxArrNotNi: case STK::CheckBoxArrNotIn:
            return false;
        case STK::CheckTri: case STK::CheckBlackRight:
            return i != 0;
        default:
            return true;
    }
}

int polarity_class(STK k) {
    switch (k) {
        case STK::HatTop: case STK::HatAnd: case STK::HatDiamNu: case STK::HatDiamIn:
        case STK::HatOne: case STK::HatCap: case STK::HatDiamNotNi: case STK::HatDiamBNuC:
        case STK::HatBlackUp:
            return +1;
        case STK::CheckBot: case STK::CheckOr: case STK::CheckBoxNuc: case STK::CheckBoxNotIn:
        case STK::CheckZero: case STK::CheckCup: case STK::CheckBoxNi: case STK::CheckBoxBNu:
        case STK::CheckTri: case STK::CheckBlackRight: case STK::CheckBoxArrNotNi:
        case STK::CheckBoxArrNotIn:
            return -1;
        default:
            return 0;
    }
}

St stF(MF f) {
    auto n = std::make_shared<Struct>();
    n->k = STK::Formula;
    n->f = std::move(f);
    return n;
}

St stMk(STK k, St a, St b) {
    int ar = arity(k);
    if (ar >= 1) {
        if (!a || sort_of(a) != arg_sort_st(k, 0)) throw std::logic_error("stMk: sort mismatch 1");
    }
    if (ar == 2) {
        if (!b || sort_of(b) != arg_sort_st(k, 1)) throw std::logic_error("stMk: sort mismatch 2");
    }
    auto n = std::make_shared<Struct>();
    n->k = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

St stMeta(STK k, const std::string& name) {
    auto n = std::make_shared<Struct>();
    n->k = k;
    n->meta = name;
    return n;
}

bool equal(const St& x, const St& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->k != y->k || x->meta != y->meta) return false;
    if (x->k == STK::Formula) return equal(x->f, y->f);
    return equal(x->a, y->a) && equal(x->b, y->b);
}

Sort sort_of(const St& s) {
    if (s->k == STK::Formula) return s->f->sort;
    return result_sort_st(s->k);
}

bool has_meta(const St& s) {
    if (!s) return false;
    switch (s->k) {
        case STK::MetaS: case STK::MetaN: case STK::MetaFS: case STK::MetaFN: case STK::MetaProp:
            return true;
        default:
            return has_meta(s->a) || has_meta(s->b);
    }
}

bool equal(const Sequent& x, const Sequent& y) {
    return equal(x.ante, y.ante) && equal(x.succ, y.succ);
}

// pol = +1 in antecedent-polarity context, -1 in succedent-polarity context
static bool polarity_walk(const St& s, int pol, std::string* why) {
    if (!s) return true;
    if (s->k == STK::Formula) return true;
    int cls = polarity_class(s->k);
    if (cls != 0 && cls != pol) {
        if (why) *why = "structural connective in wrong polarity position";
        return false;
    }
    int ar = arity(s->k);
    for (int i = 0; i < ar; ++i) {
        const St& c = i == 0 ? s->a : s->b;
        int cpol = coord_positive_st(s->k, i) ? pol : -pol;
        if (!polarity_walk(c, cpol, why)) return false;
    }
    return true;
}

bool polarity_ok(const Sequent& s, std::string* why) {
    return polarity_walk(s.ante, +1, why) && polarity_walk(s.succ, -1, why);
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    End, Ident, LPar, RPar,
    Neg, And, Or, Imp, Iff, Top, Bot, NablaT, CondT,
    DiamNu, BoxNuc, BoxNi, DiamNotNi, BoxArrNotNi, Tri, Cap, Sim, One, Zero, CupT,
    DiamIn, BoxNotIn, BoxArrNotIn, BoxBNu, DiamBNuC, BlackRight, BlackUp,
    Turnstile, Leq,
    StNeg, StAnd, StOr, StTop, StBot, StDiamNu, StBoxNuc, StDiamIn, StBoxNotIn,
    StBoxNi, StDiamNotNi, StBoxArrNotNi, StBoxArrNotIn, StBoxBNu, StDiamBNuC,
    StTri, StBlackUp, StBlackRight, StOne, StZero, StSim, StCap, StCup,
};

struct Lexeme {
    Tok t;
    std::string text;
    std::size_t pos;
};

struct FixedTok {
    const char* s;
    Tok t;
};

// longest-match first
const FixedTok kFixed[] = {
    {"<bnuc>", Tok::DiamBNuC}, {"<nni>", Tok::DiamNotNi}, {"[nni>", Tok::BoxArrNotNi},
    {"[nin>", Tok::BoxArrNotIn}, {"[nin]", Tok::BoxNotIn}, {"[bnu]", Tok::BoxBNu},
    {"[nuc]", Tok::BoxNuc}, {"<nu>", Tok::DiamNu}, {"[ni]", Tok::BoxNi}, {"<in>", Tok::DiamIn},
    {"<->", Tok::Iff}, {"->", Tok::Imp}, {"|>>", Tok::BlackRight}, {"|>", Tok::Tri},
    {"|-", Tok::Turnstile}, {"<=", Tok::Leq}, {"<|", Tok::BlackUp},
    {"~", Tok::Neg}, {"&", Tok::And}, {"|", Tok::Or}, {">", Tok::CondT}, {"^", Tok::Cap},
    {"1", Tok::One}, {"0", Tok::Zero}, {"(", Tok::LPar}, {")", Tok::RPar},
};

const FixedTok kStructural[] = {
    {"<bnuc>", Tok::StDiamBNuC}, {"<nni>", Tok::StDiamNotNi}, {"[nni>", Tok::StBoxArrNotNi},
    {"[nin>", Tok::StBoxArrNotIn}, {"[nin]", Tok::StBoxNotIn}, {"[bnu]", Tok::StBoxBNu},
    {"[nuc]", Tok::StBoxNuc}, {"<nu>", Tok::StDiamNu}, {"[ni]", Tok::StBoxNi},
    {"<in>", Tok::StDiamIn}, {"|>>", Tok::StBlackRight}, {"|>", Tok::StTri},
    {"<|", Tok::StBlackUp}, {"~", Tok::StNeg}, {"&", Tok::StAnd}, {"|", Tok::StOr},
    {"^", Tok::StCap}, {"1", Tok::StOne}, {"0", Tok::StZero},
    {"top", Tok::StTop}, {"bot", Tok::StBot}, {"sim", Tok::StSim}, {"cup", Tok::StCup},
};

struct Keyword {
    const char* s;
    Tok t;
};
const Keyword kKeywords[] = {
    {"top", Tok::Top}, {"bot", Tok::Bot}, {"nabla", Tok::NablaT},
    {"sim", Tok::Sim}, {"cup", Tok::CupT},
};

std::vector<Lexeme> lex(const std::string& in) {
    std::vector<Lexeme> out;
    std::size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        if (c == '#') break;  // comment to end of line/input
        if (c == '{') {
            std::size_t start = i;
            ++i;
            bool matched = false;
            for (const auto& ft : kStructural) {
                std::size_t len = std::char_traits<char>::length(ft.s);
                if (in.compare(i, len, ft.s) == 0 && i + len < in.size() && in[i + len] == '}') {
                    out.push_back({ft.t, std::string("{") + ft.s + "}", start});
                    i += len + 1;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw ParseError(start, "unknown structural token");
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = i;
            while (i < in.size() && ((in[i] >= 'a' && in[i] <= 'z') || (in[i] >= '0' && in[i] <= '9')))
                ++i;
            std::string word = in.substr(start, i - start);
            Tok t = Tok::Ident;
            for (const auto& kw : kKeywords)
                if (word == kw.s) {
                    t = kw.t;
                    break;
                }
            out.push_back({t, word, start});
            continue;
        }
        bool matched = false;
        for (const auto& ft : kFixed) {
            std::size_t len = std::char_traits<char>::length(ft.s);
            if (in.compare(i, len, ft.s) == 0) {
                out.push_back({ft.t, ft.s, i});
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", in.size()});
    return out;
}

// ---------------------------------------------------------------------------
// Parsers (recursive descent; binary connectives require parentheses except
// one top-level application per parenthesis level)
// ---------------------------------------------------------------------------

struct SingleParser {
    const std::vector<Lexeme>& ts;
    std::size_t i = 0;
    Mode mode;

    const Lexeme& peek() const { return ts[i]; }
    Lexeme eat() { return ts[i++]; }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(peek().pos, msg); }

    SF simple() {
        const Lexeme& l = peek();
        switch (l.t) {
            case Tok::Ident: eat(); return sProp(l.text);
            case Tok::Top: eat(); return sTop();
            case Tok::Bot: eat(); return sBot();
            case Tok::Neg: eat(); return sNeg(simple());
            case Tok::NablaT:
                if (mode != Mode::Nabla) fail("'nabla' is not in the conditional signature");
                eat();
                return sNabla(simple());
            case Tok::LPar: {
                eat();
                SF f = term();
                if (peek().t != Tok::RPar) fail("expected ')'");
                eat();
                return f;
            }
            default: fail("expected a formula");
        }
    }

    SF term() {
        SF lhs = simple();
        switch (peek().t) {
            case Tok::And: eat(); return sAnd(lhs, simple());
            case Tok::Or: eat(); return sOr(lhs, simple());
            case Tok::Imp: eat(); return sImp(lhs, simple());
            case Tok::Iff: eat(); return sIff(lhs, simple());
            case Tok::CondT:
                if (mode != Mode::Cond) fail("'>' is not in the monotone modal signature");
                eat();
                return sCond(lhs, simple());
            default: return lhs;
        }
    }
};

struct MTParser {
    const std::vector<Lexeme>& ts;
    std::size_t i = 0;
    Sig sig;
    bool extended;

    const Lexeme& peek() const { return ts[i]; }
    Lexeme eat() { return ts[i++]; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(peek().pos, msg); }

    void require(bool cond, const char* what) {
        if (!cond) fail(std::string(what) + " is not in this signature");
    }

    MF unary(MK k) {
        eat();
        MF c = simple();
        if (c->sort != arg_sort(k, 0))
            fail("sort mismatch: operator expects a " +
                 std::string(arg_sort(k, 0) == Sort::S ? "set-sort" : "neighbourhood-sort") +
                 " argument");
        return mk(k, c);
    }

    MF simple() {
        const Lexeme& l = peek();
        switch (l.t) {
            case Tok::Ident: eat(); return mProp(l.text);
            case Tok::Top: eat(); return mk(MK::Top);
            case Tok::Bot: eat(); return mk(MK::Bot);
            case Tok::One: eat(); return mk(MK::One);
            case Tok::Zero: eat(); return mk(MK::Zero);
            case Tok::Neg: eat(); {
                MF c = simple();
                if (c->sort != Sort::S) fail("'~' expects a set-sort argument");
                return mk(MK::Neg, c);
            }
            case Tok::Sim: eat(); {
                MF c = simple();
                if (c->sort != Sort::N) fail("'sim' expects a neighbourhood-sort argument");
                return mk(MK::SimNeg, c);
            }
            case Tok::DiamNu: require(sig == Sig::MTNabla, "<nu>"); return unary(MK::DiamNu);
            case Tok::BoxNuc: require(sig == Sig::MTNabla, "[nuc]"); return unary(MK::BoxNuc);
            case Tok::DiamNotNi: require(sig == Sig::MTNabla, "<nni>"); return unary(MK::DiamNotNi);
            case Tok::BoxNi: return unary(MK::BoxNi);
            case Tok::BoxArrNotNi: require(sig == Sig::MTCond, "[nni>"); return unary(MK::BoxArrNotNi);
            case Tok::DiamIn: require(extended, "<in>"); return unary(MK::DiamIn);
            case Tok::BoxNotIn: require(extended && sig == Sig::MTNabla, "[nin]"); return unary(MK::BoxNotIn);
            case Tok::BoxBNu: require(extended && sig == Sig::MTNabla, "[bnu]"); return unary(MK::BoxBNu);
            case Tok::DiamBNuC: require(extended && sig == Sig::MTNabla, "<bnuc>"); return unary(MK::DiamBNuC);
            case Tok::BoxArrNotIn: require(extended && sig == Sig::MTCond, "[nin>"); return unary(MK::BoxArrNotIn);
            case Tok::LPar: {
                eat();
                MF f = term();
                if (peek().t != Tok::RPar) fail("expected ')'");
                eat();
                return f;
            }
            default: fail("expected a formula");
        }
    }

    MF binop(MK k, MF lhs) {
        eat();
        MF rhs = simple();
        if (lhs->sort != arg_sort(k, 0) || rhs->sort != arg_sort(k, 1))
            fail("sort mismatch in binary connective");
        return mk(k, lhs, rhs);
    }

    MF term() { return term_continue(simple()); }

    MF term_continue(MF lhs) {
        switch (peek().t) {
            case Tok::And:
                if (lhs->sort != Sort::S) fail("'&' joins set-sort formulas");
                return binop(MK::And, lhs);
            case Tok::Or:
                if (lhs->sort != Sort::S) fail("'|' joins set-sort formulas");
                return binop(MK::Or, lhs);
            case Tok::Imp: {
                eat();
                MF rhs = simple();
                if (lhs->sort != Sort::S || rhs->sort != Sort::S) fail("'->' joins set-sort formulas");
                return mk(MK::Or, mk(MK::Neg, lhs), rhs);
            }
            case Tok::Iff: {
                eat();
                MF rhs = simple();
                if (lhs->sort != Sort::S || rhs->sort != Sort::S) fail("'<->' joins set-sort formulas");
                return mk(MK::And, mk(MK::Or, mk(MK::Neg, lhs), rhs),
                          mk(MK::Or, mk(MK::Neg, rhs), lhs));
            }
            case Tok::Cap:
                return binop(MK::Cap, lhs);
            case Tok::CupT:
                return binop(MK::Cup, lhs);
            case Tok::Tri:
                require(sig == Sig::MTCond, "|>");
                return binop(MK::Triangle, lhs);
            case Tok::BlackUp:
                require(extended && sig == Sig::MTCond, "<|");
                return binop(MK::BlackTriUp, lhs);
            case Tok::BlackRight:
                require(extended && sig == Sig::MTCond, "|>>");
                return binop(MK::BlackTriRight, lhs);
            default:
                return lhs;
        }
    }
};

struct StructParser {
    const std::vector<Lexeme>& ts;
    std::size_t i = 0;
    Sig sig;

    const Lexeme& peek() const { return ts[i]; }
    Lexeme eat() { return ts[i++]; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(peek().pos, msg); }

    bool st_allowed(STK k) {
        switch (k) {
            case STK::HatDiamNu: case STK::CheckBoxNuc: case STK::CheckBoxNotIn:
            case STK::HatDiamNotNi: case STK::CheckBoxBNu: case STK::HatDiamBNuC:
                return sig == Sig::MTNabla;
            case STK::CheckTri: case STK::HatBlackUp: case STK::CheckBlackRight:
            case STK::CheckBoxArrNotNi: case STK::CheckBoxArrNotIn:
                return sig == Sig::MTCond;
            default:
                return true;
        }
    }

    St stUnary(STK k) {
        if (!st_allowed(k)) fail("structural connective not in this signature");
        eat();
        St c = simple();
        if (sort_of(c) != arg_sort_st(k, 0)) fail("sort mismatch in structural connective");
        return stMk(k, c);
    }

    // a "simple" here is either a structural atom/unary or a *formula* simple,
    // parsed by handing the token stream to the formula parser
    St simple() {
        const Lexeme& l = peek();
        switch (l.t) {
            case Tok::StTop: eat(); return stMk(STK::HatTop);
            case Tok::StBot: eat(); return stMk(STK::CheckBot);
            case Tok::StOne: eat(); return stMk(STK::HatOne);
            case Tok::StZero: eat(); return stMk(STK::CheckZero);
            case Tok::StNeg: return stUnary(STK::TildeNeg);
            case Tok::StSim: return stUnary(STK::TildeSim);
            case Tok::StDiamNu: return stUnary(STK::HatDiamNu);
            case Tok::StBoxNuc: return stUnary(STK::CheckBoxNuc);
            case Tok::StDiamIn: return stUnary(STK::HatDiamIn);
            case Tok::StBoxNotIn: return stUnary(STK::CheckBoxNotIn);
            case Tok::StBoxNi: return stUnary(STK::CheckBoxNi);
            case Tok::StDiamNotNi: return stUnary(STK::HatDiamNotNi);
            case Tok::StBoxBNu: return stUnary(STK::CheckBoxBNu);
            case Tok::StDiamBNuC: return stUnary(STK::HatDiamBNuC);
            case Tok::StBoxArrNotNi: return stUnary(STK::CheckBoxArrNotNi);
            case Tok::StBoxArrNotIn: return stUnary(STK::CheckBoxArrNotIn);
            case Tok::LPar: {
                eat();
                St s = term();
                if (peek().t != Tok::RPar) fail("expected ')'");
                eat();
                return s;
            }
            default: {
                MTParser fp{ts, i, sig, false};
                MF f = fp.simple();
                i = fp.i;
                return stF(f);
            }
        }
    }

    St stBin(STK k, St lhs) {
        if (!st_allowed(k)) fail("structural connective not in this signature");
        eat();
        St rhs = simple();
        if (sort_of(lhs) != arg_sort_st(k, 0) || sort_of(rhs) != arg_sort_st(k, 1))
            fail("sort mismatch in structural connective");
        return stMk(k, lhs, rhs);
    }

    St term() {
        St lhs = simple();
        switch (peek().t) {
            case Tok::StAnd: return stBin(STK::HatAnd, lhs);
            case Tok::StOr: return stBin(STK::CheckOr, lhs);
            case Tok::StCap: return stBin(STK::HatCap, lhs);
            case Tok::StCup: return stBin(STK::CheckCup, lhs);
            case Tok::StTri: return stBin(STK::CheckTri, lhs);
            case Tok::StBlackUp: return stBin(STK::HatBlackUp, lhs);
            case Tok::StBlackRight: return stBin(STK::CheckBlackRight, lhs);
            // logical binary on formula children
            case Tok::And: case Tok::Or: case Tok::Cap: case Tok::CupT: case Tok::Tri:
            case Tok::Imp: case Tok::Iff: {
                if (lhs->k != STK::Formula) fail("logical connective applied to a structure");
                MTParser fp{ts, i, sig, false};
                MF f = fp.term_continue(lhs->f);
                i = fp.i;
                return stF(f);
            }
            default:
                return lhs;
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// public parse functions
// ---------------------------------------------------------------------------

SF parse_single(const std::string& text, Mode mode) {
    auto ts = lex(text);
    SingleParser p{ts, 0, mode};
    SF f = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    return f;
}

MF parse_mt(const std::string& text, Sig sig, bool extended) {
    auto ts = lex(text);
    MTParser p{ts, 0, sig, extended};
    MF f = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    return f;
}

St parse_structure(const std::string& text, Sig sig) {
    auto ts = lex(text);
    StructParser p{ts, 0, sig};
    St s = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    return s;
}

Sequent parse_sequent(const std::string& text, Sig sig) {
    auto ts = lex(text);
    StructParser p{ts, 0, sig};
    St lhs = p.term();
    if (p.peek().t != Tok::Turnstile) p.fail("expected '|-'");
    p.eat();
    St rhs = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    Sequent s{lhs, rhs};
    std::string why;
    if (sort_of(lhs) != sort_of(rhs)) throw ParseError(0, "sequent sides of different sorts");
    if (!polarity_ok(s, &why)) throw ParseError(0, why);
    return s;
}

MTSequent parse_mt_sequent(const std::string& text, Sig sig) {
    auto ts = lex(text);
    MTParser p{ts, 0, sig, false};
    MF lhs = p.term();
    if (p.peek().t != Tok::Turnstile) p.fail("expected '|-'");
    p.eat();
    MF rhs = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    if (lhs->sort != rhs->sort) throw ParseError(0, "sequent sides of different sorts");
    return {lhs, rhs};
}

std::pair<SF, SF> parse_single_sequent(const std::string& text, Mode mode) {
    auto ts = lex(text);
    SingleParser p{ts, 0, mode};
    SF lhs = p.term();
    if (p.peek().t != Tok::Turnstile) p.fail("expected '|-'");
    p.eat();
    SF rhs = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    return {lhs, rhs};
}

std::pair<MF, MF> parse_inequality(const std::string& text, Sig sig, bool extended) {
    auto ts = lex(text);
    MTParser p{ts, 0, sig, extended};
    MF lhs = p.term();
    if (p.peek().t != Tok::Leq) p.fail("expected '<='");
    p.eat();
    MF rhs = p.term();
    if (p.peek().t != Tok::End) p.fail("trailing input");
    if (lhs->sort != rhs->sort) throw ParseError(0, "inequality sides of different sorts");
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------

std::string render(const SF& f) {
    switch (f->k) {
        case SK::Prop: return f->name;
        case SK::Top: return "top";
        case SK::Bot: return "bot";
        case SK::Neg: return "~ " + render(f->a);
        case SK::And: return "(" + render(f->a) + " & " + render(f->b) + ")";
        case SK::Or: return "(" + render(f->a) + " | " + render(f->b) + ")";
        case SK::Nabla: return "nabla " + render(f->a);
        case SK::Cond: return "(" + render(f->a) + " > " + render(f->b) + ")";
    }
    return "?";
}

std::string render(const MF& f) {
    switch (f->k) {
        case MK::Prop: return f->name;
        case MK::Top: return "top";
        case MK::Bot: return "bot";
        case MK::One: return "1";
        case MK::Zero: return "0";
        case MK::Neg: return "~ " + render(f->a);
        case MK::SimNeg: return "sim " + render(f->a);
        case MK::And: return "(" + render(f->a) + " & " + render(f->b) + ")";
        case MK::Or: return "(" + render(f->a) + " | " + render(f->b) + ")";
        case MK::Cap: return "(" + render(f->a) + " ^ " + render(f->b) + ")";
        case MK::Cup: return "(" + render(f->a) + " cup " + render(f->b) + ")";
        case MK::DiamNu: return "<nu> " + render(f->a);
        case MK::BoxNuc: return "[nuc] " + render(f->a);
        case MK::Triangle: return "(" + render(f->a) + " |> " + render(f->b) + ")";
        case MK::BoxNi: return "[ni] " + render(f->a);
        case MK::DiamNotNi: return "<nni> " + render(f->a);
        case MK::BoxArrNotNi: return "[nni> " + render(f->a);
        case MK::DiamIn: return "<in> " + render(f->a);
        case MK::BoxNotIn: return "[nin] " + render(f->a);
        case MK::BoxArrNotIn: return "[nin> " + render(f->a);
        case MK::BoxBNu: return "[bnu] " + render(f->a);
        case MK::DiamBNuC: return "<bnuc> " + render(f->a);
        case MK::BlackTriUp: return "(" + render(f->a) + " <| " + render(f->b) + ")";
        case MK::BlackTriRight: return "(" + render(f->a) + " |>> " + render(f->b) + ")";
        case MK::SNom: return "j" + std::to_string(f->var);
        case MK::SCoNom: return "m" + std::to_string(f->var);
        case MK::NNom: return "i" + std::to_string(f->var);
        case MK::NCoNom: return "n" + std::to_string(f->var);
        case MK::MetaFS: case MK::MetaFN: case MK::MetaProp: return "?" + f->name;
    }
    return "?";
}

std::string render(const St& s) {
    switch (s->k) {
        case STK::Formula: return render(s->f);
        case STK::HatTop: return "{top}";
        case STK::CheckBot: return "{bot}";
        case STK::HatOne: return "{1}";
        case STK::CheckZero: return "{0}";
        case STK::TildeNeg: return "{~} " + render(s->a);
        case STK::TildeSim: return "{sim} " + render(s->a);
        case STK::HatAnd: return "(" + render(s->a) + " {&} " + render(s->b) + ")";
        case STK::CheckOr: return "(" + render(s->a) + " {|} " + render(s->b) + ")";
        case STK::HatCap: return "(" + render(s->a) + " {^} " + render(s->b) + ")";
        case STK::CheckCup: return "(" + render(s->a) + " {cup} " + render(s->b) + ")";
        case STK::HatDiamNu: return "{<nu>} " + render(s->a);
        case STK::CheckBoxNuc: return "{[nuc]} " + render(s->a);
        case STK::HatDiamIn: return "{<in>} " + render(s->a);
        case STK::CheckBoxNotIn: return "{[nin]} " + render(s->a);
        case STK::CheckBoxNi: return "{[ni]} " + render(s->a);
        case STK::HatDiamNotNi: return "{<nni>} " + render(s->a);
        case STK::CheckBoxBNu: return "{[bnu]} " + render(s->a);
        case STK::HatDiamBNuC: return "{<bnuc>} " + render(s->a);
        case STK::CheckBoxArrNotNi: return "{[nni>} " + render(s->a);
        case STK::CheckBoxArrNotIn: return "{[nin>} " + render(s->a);
        case STK::CheckTri: return "(" + render(s->a) + " {|>} " + render(s->b) + ")";
        case STK::HatBlackUp: return "(" + render(s->a) + " {<|} " + render(s->b) + ")";
        case STK::CheckBlackRight: return "(" + render(s->a) + " {|>>} " + render(s->b) + ")";
        case STK::MetaS: case STK::MetaN: case STK::MetaFS: case STK::MetaFN: case STK::MetaProp:
            return "?" + s->meta;
    }
    return "?";
}

std::string render(const Sequent& s) { return render(s.ante) + " |- " + render(s.succ); }
std::string render(const MTSequent& s) { return render(s.lhs) + " |- " + render(s.rhs); }

}  // namespace mtm
