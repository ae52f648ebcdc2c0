#include "mtmodal/alba.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mtmodal/inductive.hpp"
#include "mtmodal/translate.hpp"

namespace mtm {

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string var_name(const QuasiIneq& q, int id) {
    for (const auto& v : q.vars) {
        if (v.id != id) continue;
        const char* prefix = "v";
        if (v.kind == VarKind::Nom) prefix = v.sort == Sort::S ? "j" : "i";
        else if (v.kind == VarKind::CoNom) prefix = v.sort == Sort::S ? "m" : "n";
        else prefix = v.sort == Sort::S ? "x" : "g";
        return std::string(prefix) + std::to_string(v.id);
    }
    return "v" + std::to_string(id);
}

static std::string ineq_str(const Ineq& i) { return render(i.l) + " <= " + render(i.r); }

std::string render(const QuasiIneq& q) {
    std::ostringstream os;
    os << "forall";
    if (q.vars.empty()) os << " -";
    for (const auto& v : q.vars) os << " " << var_name(q, v.id);
    {
        std::vector<std::string> ps;
        collect_props(q.cons.l, ps);
        collect_props(q.cons.r, ps);
        for (const auto& i : q.ante) {
            collect_props(i.l, ps);
            collect_props(i.r, ps);
        }
        for (const auto& p : ps) os << " " << p;
    }
    os << " [ ";
    if (!q.ante.empty()) {
        for (std::size_t i = 0; i < q.ante.size(); ++i) {
            if (i) os << " & ";
            os << ineq_str(q.ante[i]);
        }
        os << (q.biconditional ? " <=> " : " => ");
    }
    os << ineq_str(q.cons) << " ]";
    return os.str();
}

bool is_pure(const QuasiIneq& q) {
    for (const auto& i : q.ante)
        if (contains_prop(i.l) || contains_prop(i.r)) return false;
    return !contains_prop(q.cons.l) && !contains_prop(q.cons.r);
}

// ---------------------------------------------------------------------------
// First approximation
// ---------------------------------------------------------------------------

namespace {

bool is_constant(const MF& t) {
    return t->k == MK::Top || t->k == MK::Bot || t->k == MK::One || t->k == MK::Zero;
}

struct Stuck {};

struct FABuilder {
    Sig sig;
    bool neg_skeleton;
    int next_id = 1;
    std::vector<VarDecl> vars;
    std::vector<Ineq> ante;

    MF fresh(Sort s, bool nominal) {
        int id = next_id++;
        vars.push_back({id, s, nominal ? VarKind::Nom : VarKind::CoNom});
        MK k = s == Sort::S ? (nominal ? MK::SNom : MK::SCoNom)
                            : (nominal ? MK::NNom : MK::NCoNom);
        return mNom(k, id);
    }

    MF bracket(const MF& t, int sign) {
        if (sign > 0) {
            MF j = fresh(t->sort, true);
            ante.push_back({j, t});
            return j;
        }
        MF m = fresh(t->sort, false);
        ante.push_back({t, m});
        return m;
    }

    bool pia_hereditary(const MF& t, int sign) const {
        if (arity(t->k) == 0) return true;
        if (neg_skeleton && (t->k == MK::Neg || t->k == MK::SimNeg)) return false;
        unsigned caps = node_caps(t->k, sign);
        if (!(caps & (kCapSRA | kCapSRR))) return false;
        for (int i = 0; i < arity(t->k); ++i) {
            const MF& c = i == 0 ? t->a : t->b;
            int cs = coord_positive(t->k, i) ? sign : -sign;
            if (!pia_hereditary(c, cs)) return false;
        }
        return true;
    }

    MF decompose(const MF& t, int sign, bool max_mode) {
        if (is_constant(t)) return t;
        if (arity(t->k) == 0) return bracket(t, sign);
        unsigned caps = node_caps(t->k, sign);
        bool skel = caps & (kCapDeltaAdjoint | kCapSLR);
        bool stop = max_mode ? pia_hereditary(t, sign) : !skel;
        if (stop) {
            if (!max_mode && !pia_hereditary(t, sign)) throw Stuck{};
            return bracket(t, sign);
        }
        if (!skel) throw Stuck{};
        MF a, b;
        a = decompose(t->a, coord_positive(t->k, 0) ? sign : -sign, max_mode);
        if (arity(t->k) == 2) b = decompose(t->b, coord_positive(t->k, 1) ? sign : -sign, max_mode);
        return mk_raw(t->k, t->sort, a, b);
    }

    MF side(const MF& t, int sign, FAMode mode) {
        switch (mode) {
            case FAMode::Keep:
                return t;
            case FAMode::Whole:
                return bracket(t, sign);
            case FAMode::DecomposeMax:
            case FAMode::DecomposeMin: {
                std::size_t nv = vars.size(), na = ante.size();
                try {
                    return decompose(t, sign, mode == FAMode::DecomposeMax);
                } catch (const Stuck&) {
                    vars.resize(nv);
                    ante.resize(na);
                    next_id = 1 + (int)nv;
                    return bracket(t, sign);
                }
            }
        }
        throw std::logic_error("side");
    }
};

}  // namespace

QuasiIneq as_quasi(const MF& lhs, const MF& rhs, Sig sig) {
    QuasiIneq q;
    q.sig = sig;
    q.cons = {lhs, rhs};
    return q;
}

QuasiIneq first_approximation(const MF& lhs, const MF& rhs, Sig sig, FAOptions opts) {
    FABuilder b{sig, opts.neg_skeleton};
    MF l = b.side(lhs, +1, opts.left);
    MF r = b.side(rhs, -1, opts.right);
    QuasiIneq q;
    q.sig = sig;
    q.vars = std::move(b.vars);
    q.ante = std::move(b.ante);
    q.cons = {l, r};
    return q;
}

// ---------------------------------------------------------------------------
// Adjunction / residuation on one inequality
// ---------------------------------------------------------------------------

namespace {

Ineq& ineq_at(QuasiIneq& q, int index) {
    if (index < 0) return q.cons;
    if (index >= (int)q.ante.size()) throw std::invalid_argument("no inequality at this position");
    return q.ante[index];
}

}  // namespace

namespace {

// boxes on the right move to diamonds on the left, and dually; `tri_coord`
// picks the residual for the binary connectives
bool adjoint_right(Ineq& i, int tri_coord) {
    const MF l = i.l, r = i.r;
    switch (r->k) {
        case MK::BoxNi: i = {mk(MK::DiamIn, l), r->a}; return true;
        case MK::BoxNuc: i = {mk(MK::DiamBNuC, l), r->a}; return true;
        case MK::BoxNotIn: i = {mk(MK::DiamNotNi, l), r->a}; return true;
        case MK::BoxBNu: i = {mk(MK::DiamNu, l), r->a}; return true;
        case MK::BoxArrNotNi: i = {r->a, mk(MK::BoxArrNotIn, l)}; return true;  // Galois
        case MK::BoxArrNotIn: i = {r->a, mk(MK::BoxArrNotNi, l)}; return true;
        case MK::Neg: i = {r->a, mk(MK::Neg, l)}; return true;
        case MK::SimNeg: i = {r->a, mk(MK::SimNeg, l)}; return true;
        case MK::Triangle:
            if (tri_coord == 0) i = {r->a, mk(MK::BlackTriRight, l, r->b)};
            else i = {mk(MK::BlackTriUp, r->a, l), r->b};
            return true;
        default: return false;
    }
}

bool adjoint_left(Ineq& i) {
    const MF l = i.l, r = i.r;
    switch (l->k) {
        case MK::DiamNu: i = {l->a, mk(MK::BoxBNu, r)}; return true;
        case MK::DiamIn: i = {l->a, mk(MK::BoxNi, r)}; return true;
        case MK::DiamNotNi: i = {l->a, mk(MK::BoxNotIn, r)}; return true;
        case MK::DiamBNuC: i = {l->a, mk(MK::BoxNuc, r)}; return true;
        case MK::Neg: i = {mk(MK::Neg, r), l->a}; return true;
        case MK::SimNeg: i = {mk(MK::SimNeg, r), l->a}; return true;
        case MK::BlackTriUp: i = {l->b, mk(MK::Triangle, l->a, r)}; return true;
        default: return false;
    }
}

}  // namespace

// which = 1: act on the right-hand connective first (default); which = 0:
// act on the left-hand connective first (also selects the first coordinate
// residual for the binary |> )
QuasiIneq apply_adjunction(const QuasiIneq& q0, int index, int which) {
    QuasiIneq q = q0;
    Ineq& i = ineq_at(q, index);
    bool done = which == 0 ? (adjoint_left(i) || adjoint_right(i, which))
                           : (adjoint_right(i, which) || adjoint_left(i));
    if (!done)
        throw std::invalid_argument("apply_adjunction: no adjoint registered at this position");
    return q;
}

QuasiIneq apply_splitting(const QuasiIneq& q0, int index) {
    QuasiIneq q = q0;
    if (index < 0 || index >= (int)q.ante.size())
        throw std::invalid_argument("apply_splitting: antecedent index out of range");
    Ineq i = q.ante[index];
    if (i.r->k == MK::And || i.r->k == MK::Cap) {
        q.ante[index] = {i.l, i.r->a};
        q.ante.insert(q.ante.begin() + index + 1, {i.l, i.r->b});
        return q;
    }
    if (i.l->k == MK::Or || i.l->k == MK::Cup) {
        q.ante[index] = {i.l->a, i.r};
        q.ante.insert(q.ante.begin() + index + 1, {i.l->b, i.r});
        return q;
    }
    throw std::invalid_argument("apply_splitting: inequality does not split");
}

// ---------------------------------------------------------------------------
// Ackermann-style elimination
// ---------------------------------------------------------------------------

namespace {

struct Target {
    bool is_prop;
    std::string prop;
    int var;
    Sort sort;
};

bool is_target(const MF& t, const Target& g) {
    if (g.is_prop) return t->k == MK::Prop && t->name == g.prop;
    return t->var == g.var &&
           (t->k == MK::SNom || t->k == MK::SCoNom || t->k == MK::NNom || t->k == MK::NCoNom);
}

void occ_signs(const MF& t, const Target& g, int sign, bool& pos, bool& neg) {
    if (is_target(t, g)) {
        (sign > 0 ? pos : neg) = true;
        return;
    }
    for (int i = 0; i < arity(t->k); ++i) {
        const MF& c = i == 0 ? t->a : t->b;
        occ_signs(c, g, coord_positive(t->k, i) ? sign : -sign, pos, neg);
    }
}

bool occurs(const MF& t, const Target& g) {
    bool p = false, n = false;
    occ_signs(t, g, +1, p, n);
    return p || n;
}

// occurrences must have the given sign only
bool only_sign(const MF& t, const Target& g, int want) {
    bool p = false, n = false;
    occ_signs(t, g, +1, p, n);
    return want > 0 ? !n : !p;
}

MF subst(const MF& t, const Target& g, const MF& repl) {
    if (g.is_prop) return substitute_prop(t, g.prop, repl);
    return substitute_var(t, g.var, repl);
}

QuasiIneq eliminate(const QuasiIneq& q0, const Target& g, bool from_below) {
    QuasiIneq q;
    q.sig = q0.sig;
    q.biconditional = q0.biconditional;
    std::vector<MF> bounds;
    std::vector<Ineq> rest;
    for (const auto& i : q0.ante) {
        if (from_below && is_target(i.r, g) && !occurs(i.l, g)) {
            bounds.push_back(i.l);
            continue;
        }
        if (!from_below && is_target(i.l, g) && !occurs(i.r, g)) {
            bounds.push_back(i.r);
            continue;
        }
        rest.push_back(i);
    }
    // polarity side conditions: from_below needs the target positive in
    // antecedent left sides / consequent right side, negative in the others;
    // from_above is dual
    int want_al = from_below ? +1 : -1;
    for (const auto& i : rest) {
        if (!only_sign(i.l, g, want_al) || !only_sign(i.r, g, -want_al))
            throw std::invalid_argument("ackermann: occurrence polarity violates the rule");
    }
    if (!only_sign(q0.cons.l, g, -want_al) || !only_sign(q0.cons.r, g, want_al))
        throw std::invalid_argument("ackermann: occurrence polarity violates the rule");

    MF repl;
    if (bounds.empty()) {
        MK unit = from_below ? (g.sort == Sort::S ? MK::Bot : MK::Zero)
                             : (g.sort == Sort::S ? MK::Top : MK::One);
        repl = mk(unit);
    } else {
        repl = bounds[0];
        MK join = from_below ? (g.sort == Sort::S ? MK::Or : MK::Cup)
                             : (g.sort == Sort::S ? MK::And : MK::Cap);
        for (std::size_t i = 1; i < bounds.size(); ++i) repl = mk(join, repl, bounds[i]);
    }

    for (const auto& i : rest) q.ante.push_back({subst(i.l, g, repl), subst(i.r, g, repl)});
    q.cons = {subst(q0.cons.l, g, repl), subst(q0.cons.r, g, repl)};
    for (const auto& v : q0.vars)
        if (g.is_prop || v.id != g.var) q.vars.push_back(v);
    return q;
}

}  // namespace

QuasiIneq ackermann(const QuasiIneq& q, const std::string& prop, bool from_below) {
    return eliminate(q, Target{true, prop, -1, Sort::S}, from_below);
}

QuasiIneq eliminate_var(const QuasiIneq& q, int var_id, bool from_below) {
    Sort s = Sort::S;
    bool found = false;
    for (const auto& v : q.vars)
        if (v.id == var_id) {
            s = v.sort;
            found = true;
        }
    if (!found) throw std::invalid_argument("eliminate_var: unknown variable");
    return eliminate(q, Target{false, "", var_id, s}, from_below);
}

// ---------------------------------------------------------------------------
// Scripted runs
// ---------------------------------------------------------------------------

namespace {

MTSequent axiom_inequality(AxiomId id) {
    SF ax = axiom_formula(id);
    Mode m = axiom_mode(id);
    // implications A -> B become the inequality A <= B; everything else top <= ax
    if (ax->k == SK::Or && ax->a->k == SK::Neg) {
        // sugar-expanded implication
        return translate_sequent(ax->a->a, ax->b, m);
    }
    return translate_sequent(sTop(), ax, m);
}

}  // namespace

AlbaRun run_alba(AxiomId id) {
    AlbaRun run;
    run.id = id;
    run.sig = axiom_mode(id) == Mode::Nabla ? Sig::MTNabla : Sig::MTCond;
    run.source = axiom_inequality(id);
    const MF& L = run.source.lhs;
    const MF& R = run.source.rhs;
    auto push = [&](const std::string& label, QuasiIneq q) {
        run.steps.push_back({label, std::move(q)});
    };
    auto cur = [&]() -> const QuasiIneq& { return run.steps.back().q; };
    push("source", as_quasi(L, R, run.sig));

    switch (id) {
        case AxiomId::N:
            push("first approx.", first_approximation(L, R, run.sig, {FAMode::Keep, FAMode::DecomposeMax}));
            break;
        case AxiomId::P:
            push("first approx.", first_approximation(L, R, run.sig, {FAMode::Keep, FAMode::DecomposeMax}));
            break;
        case AxiomId::C: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Residuation", apply_adjunction(cur(), 0));
            push("Residuation", apply_adjunction(cur(), 1));
            push("Ackermann", ackermann(cur(), "p", true));
            push("Ackermann", ackermann(cur(), "q", true));
            push("Residuation", apply_adjunction(cur(), 0));
            break;
        }
        case AxiomId::T: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Adjunction", apply_adjunction(cur(), 0));
            push("Ackermann", ackermann(cur(), "p", true));
            push("inverse approx.", eliminate_var(cur(), 2, true));
            break;
        }
        case AxiomId::Four: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Adjunction", apply_adjunction(cur(), 1));
            push("Ackermann", ackermann(cur(), "p", false));
            break;
        }
        case AxiomId::FourPrime: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Residuation", apply_adjunction(cur(), 0));
            push("Ackermann", ackermann(cur(), "p", true));
            push("inverse approx.", eliminate_var(cur(), 2, true));
            break;
        }
        case AxiomId::Five: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Residuation", apply_adjunction(cur(), 0));
            push("Residuation", apply_adjunction(cur(), 0, 0));
            push("Ackermann", ackermann(cur(), "p", true));
            push("inverse approx.", eliminate_var(cur(), 2, true));
            break;
        }
        case AxiomId::B: {
            push("first approx.", first_approximation(L, R, run.sig, {FAMode::DecomposeMax, FAMode::Keep}));
            push("Ackermann", ackermann(cur(), "p", true));
            break;
        }
        case AxiomId::D: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Residuation", apply_adjunction(cur(), 0));
            push("Ackermann", ackermann(cur(), "p", true));
            break;
        }
        case AxiomId::CS: {
            push("first approx.", first_approximation(L, R, run.sig, {}));
            push("Splitting rule", apply_splitting(cur(), 0));
            push("Splitting rule", apply_splitting(cur(), 2));
            push("Residuation", apply_adjunction(cur(), 3));
            push("Ackermann", ackermann(cur(), "p", false));
            push("Ackermann", ackermann(cur(), "q", true));
            push("Ackermann", eliminate_var(cur(), 3, true));
            break;
        }
        case AxiomId::CEM: {
            FAOptions o{FAMode::Keep, FAMode::DecomposeMax, true};
            push("first approx.", first_approximation(L, R, run.sig, o));
            push("Splitting", apply_splitting(cur(), 0));
            push("Splitting", apply_splitting(cur(), 3));
            push("Residuation", apply_adjunction(cur(), 1));
            push("Residuation", apply_adjunction(cur(), 4));
            push("Ackermann", ackermann(cur(), "p", false));
            push("Ackermann", ackermann(cur(), "q", true));
            push("Currying", eliminate_var(cur(), 4, false));
            break;
        }
        case AxiomId::ID: {
            push("first approx.", first_approximation(L, R, run.sig, {FAMode::Keep, FAMode::DecomposeMin}));
            push("Adjunction", apply_adjunction(cur(), 0));
            push("Ackermann", ackermann(cur(), "p", true));
            push("Ackermann", eliminate_var(cur(), 3, true));
            break;
        }
        case AxiomId::CN: {
            push("first approx.", first_approximation(L, R, run.sig, {FAMode::Keep, FAMode::DecomposeMax}));
            push("Splitting", apply_splitting(cur(), 0));
            push("Splitting", apply_splitting(cur(), 3));
            push("Residuation", apply_adjunction(cur(), 1));
            push("Residuation", apply_adjunction(cur(), 4));
            push("Ackermann", ackermann(cur(), "p", false));
            push("Ackermann", ackermann(cur(), "q", false));
            break;
        }
        case AxiomId::Tcond: {
            push("Variable elimination", ackermann(cur(), "p", true));
            break;
        }
    }
    return run;
}

// ---------------------------------------------------------------------------
// Semantic evaluation
// ---------------------------------------------------------------------------

namespace {

template <typename Frame>
struct Evaluator {
    const Frame& fr;
    const QuasiIneq& q;
    int nx, ny;

    std::vector<const VarDecl*> vdecls;
    std::vector<std::string> props;
    VarEnv env;
    Valuation val;

    Evaluator(const Frame& f, const QuasiIneq& qq, int nx_, int ny_)
        : fr(f), q(qq), nx(nx_), ny(ny_) {
        for (const auto& v : q.vars) vdecls.push_back(&v);
        for (const auto& i : q.ante) {
            collect_props(i.l, props);
            collect_props(i.r, props);
        }
        collect_props(q.cons.l, props);
        collect_props(q.cons.r, props);
    }

    std::vector<Mask> domain(const VarDecl& v) const {
        std::vector<Mask> d;
        int n = v.sort == Sort::S ? nx : ny;
        switch (v.kind) {
            case VarKind::Nom:
                for (int i = 0; i < n; ++i) d.push_back(1ull << i);
                break;
            case VarKind::CoNom:
                for (int i = 0; i < n; ++i) d.push_back(full_mask(n) & ~(1ull << i));
                break;
            case VarKind::Free:
                for (Mask m = 0; m < (1ull << n); ++m) d.push_back(m);
                break;
        }
        return d;
    }

    bool ineq_holds(const Ineq& i) const {
        return subset(eval_mt(fr, val, i.l, &env), eval_mt(fr, val, i.r, &env));
    }

    bool check_assignment() const {
        if (q.biconditional) {
            bool a = true;
            for (const auto& i : q.ante)
                if (!ineq_holds(i)) a = false;
            bool c = ineq_holds(q.cons);
            return a == c;
        }
        for (const auto& i : q.ante)
            if (!ineq_holds(i)) return true;  // antecedent fails, implication holds
        return ineq_holds(q.cons);
    }

    // variables whose assignment is complete allow early antecedent pruning
    bool assign_vars(std::size_t k) {
        if (k == vdecls.size()) return assign_props(0);
        for (Mask m : domain(*vdecls[k])) {
            env[vdecls[k]->id] = m;
            if (!q.biconditional) {
                bool prune = false;
                for (const auto& i : q.ante) {
                    if (contains_prop(i.l) || contains_prop(i.r)) continue;
                    if (!vars_bound(i, k + 1)) continue;
                    if (!ineq_holds_novalcheck(i)) {
                        prune = true;
                        break;
                    }
                }
                if (prune) continue;
            }
            if (!assign_vars(k + 1)) return false;
        }
        return true;
    }

    bool vars_bound(const Ineq& i, std::size_t upto) const {
        std::function<bool(const MF&)> ok = [&](const MF& t) -> bool {
            if (t->var >= 0 &&
                (t->k == MK::SNom || t->k == MK::SCoNom || t->k == MK::NNom || t->k == MK::NCoNom)) {
                for (std::size_t j = 0; j < upto; ++j)
                    if (vdecls[j]->id == t->var) return true;
                return false;
            }
            for (int c = 0; c < arity(t->k); ++c)
                if (!ok(c == 0 ? t->a : t->b)) return false;
            return true;
        };
        return ok(i.l) && ok(i.r);
    }

    bool ineq_holds_novalcheck(const Ineq& i) const {
        return subset(eval_mt(fr, Valuation{}, i.l, &env), eval_mt(fr, Valuation{}, i.r, &env));
    }

    bool assign_props(std::size_t k) {
        if (k == props.size()) return check_assignment();
        for (Mask m = 0; m < (1ull << nx); ++m) {
            val[props[k]] = m;
            if (!assign_props(k + 1)) return false;
        }
        return true;
    }

    bool run() { return assign_vars(0); }
};

}  // namespace

bool holds_on(const QuasiIneq& q, const TSNFrame& fr) {
    Evaluator<TSNFrame> ev(fr, q, fr.nx, fr.ny);
    return ev.run();
}

bool holds_on(const QuasiIneq& q, const TSCFrame& fr) {
    Evaluator<TSCFrame> ev(fr, q, fr.nx, fr.ny);
    return ev.run();
}

bool verify_pure(const QuasiIneq& q, const TSNFrame& fr) {
    if (!is_pure(q)) throw std::invalid_argument("verify_pure: quasi-inequality is not pure");
    return holds_on(q, fr);
}

bool verify_pure(const QuasiIneq& q, const TSCFrame& fr) {
    if (!is_pure(q)) throw std::invalid_argument("verify_pure: quasi-inequality is not pure");
    return holds_on(q, fr);
}

}  // namespace mtm
