#include "mtmodal/correspondence.hpp"

namespace mtm {

std::string axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::N: return "N";
        case AxiomId::P: return "P";
        case AxiomId::C: return "C";
        case AxiomId::T: return "T";
        case AxiomId::Four: return "4";
        case AxiomId::FourPrime: return "4'";
        case AxiomId::Five: return "5";
        case AxiomId::B: return "B";
        case AxiomId::D: return "D";
        case AxiomId::CS: return "CS";
        case AxiomId::CEM: return "CEM";
        case AxiomId::ID: return "ID";
        case AxiomId::CN: return "CN";
        case AxiomId::Tcond: return "T>";
    }
    return "?";
}

AxiomId axiom_by_name(const std::string& name) {
    for (AxiomId id : kAllAxioms)
        if (axiom_name(id) == name) return id;
    if (name == "4p" || name == "4prime") return AxiomId::FourPrime;
    if (name == "Tcond" || name == "tcond" || name == "t>") return AxiomId::Tcond;
    throw std::invalid_argument("unknown axiom '" + name + "'");
}

Mode axiom_mode(AxiomId id) {
    switch (id) {
        case AxiomId::CS: case AxiomId::CEM: case AxiomId::ID: case AxiomId::CN: case AxiomId::Tcond:
            return Mode::Cond;
        default:
            return Mode::Nabla;
    }
}

SF axiom_formula(AxiomId id) {
    SF p = sProp("p"), q = sProp("q");
    switch (id) {
        case AxiomId::N: return sNabla(sTop());
        case AxiomId::P: return sNeg(sNabla(sBot()));
        case AxiomId::C: return sImp(sAnd(sNabla(p), sNabla(q)), sNabla(sAnd(p, q)));
        case AxiomId::T: return sImp(sNabla(p), p);
        case AxiomId::Four: return sImp(sNabla(sNabla(p)), sNabla(p));
        case AxiomId::FourPrime: return sImp(sNabla(p), sNabla(sNabla(p)));
        case AxiomId::Five: return sImp(sNeg(sNabla(sNeg(p))), sNabla(sNeg(sNabla(sNeg(p)))));
        case AxiomId::B: return sImp(p, sNabla(sNeg(sNabla(sNeg(p)))));
        case AxiomId::D: return sImp(sNabla(p), sNeg(sNabla(sNeg(p))));
        case AxiomId::CS: return sImp(sAnd(p, q), sCond(p, q));
        case AxiomId::CEM: return sOr(sCond(p, q), sCond(p, sNeg(q)));
        case AxiomId::ID: return sCond(p, p);
        case AxiomId::CN: return sOr(sCond(p, q), sCond(q, p));
        case AxiomId::Tcond: return sImp(sCond(sBot(), sNeg(p)), p);
    }
    throw std::logic_error("axiom_formula");
}

// ---------------------------------------------------------------------------
// First-order frame conditions, by direct enumeration
// ---------------------------------------------------------------------------

bool frame_condition(AxiomId id, const NFrame& fr) {
    int n = fr.size, ns = fr.nsub();
    Mask W = full_mask(n);
    switch (id) {
        case AxiomId::N:
            for (int w = 0; w < n; ++w)
                if (!fr.member(w, W)) return false;
            return true;
        case AxiomId::P:
            for (int w = 0; w < n; ++w)
                if (fr.member(w, 0)) return false;
            return true;
        case AxiomId::C:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if (fr.member(w, x))
                        for (int y = 0; y < ns; ++y)
                            if (fr.member(w, y) && !fr.member(w, (Mask)x & (Mask)y)) return false;
            return true;
        case AxiomId::T:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if (fr.member(w, x) && !((x >> w) & 1)) return false;
            return true;
        case AxiomId::Four:
            // exists X in nu(w) with X subset of {x | Y in nu(x)} implies Y in nu(w)
            for (int w = 0; w < n; ++w)
                for (int y = 0; y < ns; ++y) {
                    bool hyp = false;
                    for (int x = 0; x < ns && !hyp; ++x)
                        if (fr.member(w, x)) {
                            bool all = true;
                            for (int u = 0; u < n && all; ++u)
                                if ((x >> u) & 1)
                                    if (!fr.member(u, y)) all = false;
                            if (all) hyp = true;
                        }
                    if (hyp && !fr.member(w, y)) return false;
                }
            return true;
        case AxiomId::FourPrime:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if (fr.member(w, x)) {
                        Mask m = 0;
                        for (int u = 0; u < n; ++u)
                            if (fr.member(u, x)) m |= (1ull << u);
                        if (!fr.member(w, m)) return false;
                    }
            return true;
        case AxiomId::Five:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if (!fr.member(w, x)) {
                        Mask m = 0;
                        for (int u = 0; u < n; ++u)
                            if (fr.member(u, x)) m |= (1ull << u);
                        if (!fr.member(w, W & ~m)) return false;
                    }
            return true;
        case AxiomId::B:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if ((x >> w) & 1) {
                        Mask xc = W & ~(Mask)x;
                        Mask m = 0;
                        for (int u = 0; u < n; ++u)
                            if (fr.member(u, xc)) m |= (1ull << u);
                        if (!fr.member(w, W & ~m)) return false;
                    }
            return true;
        case AxiomId::D:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < ns; ++x)
                    if (fr.member(w, x) && fr.member(w, W & ~(Mask)x)) return false;
            return true;
        default:
            throw std::invalid_argument("frame_condition: conditional axiom on an n-frame");
    }
}

bool frame_condition(AxiomId id, const CFrame& fr) {
    int n = fr.size, ns = fr.nsub();
    switch (id) {
        case AxiomId::CS:
            // x in Z implies f(x,Z) subset of {x}  (guard recovered from the ALBA run;
            // the bare table row omits "x in Z")
            for (int x = 0; x < n; ++x)
                for (int z = 0; z < ns; ++z)
                    if ((z >> x) & 1)
                        if (!subset(fr.sel(x, z), 1ull << x)) return false;
            return true;
        case AxiomId::CEM:
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < ns; ++z)
                    if (popcount(fr.sel(y, z)) > 1) return false;
            return true;
        case AxiomId::ID:
            for (int x = 0; x < n; ++x)
                for (int z = 0; z < ns; ++z)
                    if (!subset(fr.sel(x, z), (Mask)z)) return false;
            return true;
        case AxiomId::CN:
            // (y not in X and x not in Y) implies x not in f(z,X) or y not in f(z,Y)
            for (int z = 0; z < n; ++z)
                for (int X = 0; X < ns; ++X)
                    for (int Y = 0; Y < ns; ++Y)
                        for (int x = 0; x < n; ++x)
                            for (int y = 0; y < n; ++y) {
                                if ((X >> y) & 1) continue;
                                if ((Y >> x) & 1) continue;
                                if (((fr.sel(z, X) >> x) & 1) && ((fr.sel(z, Y) >> y) & 1))
                                    return false;
                            }
            return true;
        case AxiomId::Tcond:
            // the printed axiom (bot > ~p) -> p is valid on no frame with a world,
            // so its true correspondent is the impossible condition
            return false;
        default:
            throw std::invalid_argument("frame_condition: neighbourhood axiom on a c-frame");
    }
}

EquivResult check_equiv(AxiomId id, const NFrame& fr) {
    if (axiom_mode(id) != Mode::Nabla)
        throw std::invalid_argument("check_equiv: conditional axiom on an n-frame");
    bool v = valid(fr, axiom_formula(id));
    bool c = frame_condition(id, fr);
    return {v, c, v == c};
}

EquivResult check_equiv(AxiomId id, const CFrame& fr) {
    if (axiom_mode(id) != Mode::Cond)
        throw std::invalid_argument("check_equiv: neighbourhood axiom on a c-frame");
    bool v = valid(fr, axiom_formula(id));
    bool c = frame_condition(id, fr);
    return {v, c, v == c};
}

}  // namespace mtm
