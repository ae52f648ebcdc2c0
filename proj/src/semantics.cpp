#include "mtmodal/semantics.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace mtm {

int popcount(Mask m) { return std::popcount(m); }

Rel converse(const Rel& r) {
    Rel c(r.nt, r.ns);
    for (int s = 0; s < r.ns; ++s)
        for (int t = 0; t < r.nt; ++t)
            if (r.get(s, t)) c.set(t, s);
    return c;
}

Mask apply_unary(const Rel& rel, UnaryOp kind, Mask arg) {
    if (!subset(arg, full_mask(rel.nt)))
        throw std::invalid_argument("apply_unary: argument exceeds target carrier");
    Mask out = 0;
    for (int s = 0; s < rel.ns; ++s) {
        Mask succ = rel.row[s];
        bool in = false;
        switch (kind) {
            case UnaryOp::Diam: in = (succ & arg) != 0; break;                 // some successor in arg
            case UnaryOp::Box: in = subset(succ, arg); break;                  // all successors in arg
            case UnaryOp::BoxArr: in = (succ & arg) == 0; break;               // no successor in arg
            case UnaryOp::DiamArr: in = !subset(succ, arg); break;             // some successor outside
        }
        if (in) out |= (1ull << s);
    }
    return out;
}

Mask apply_ternary(const TSCFrame& fr, TernaryOp kind, Mask a, Mask b) {
    Mask out = 0;
    switch (kind) {
        case TernaryOp::Tri: {  // a subset Y, b subset X -> subset X
            if (!subset(a, full_mask(fr.ny)) || !subset(b, full_mask(fr.nx)))
                throw std::invalid_argument("apply_ternary: carrier mismatch");
            for (int x = 0; x < fr.nx; ++x) {
                bool ok = true;
                for (int y = 0; y < fr.ny && ok; ++y)
                    if ((a >> y) & 1)
                        if (!subset(fr.t(x, y), b)) ok = false;
                if (ok) out |= (1ull << x);
            }
            break;
        }
        case TernaryOp::BlackUp: {  // a subset Y, b subset X -> subset X (image)
            if (!subset(a, full_mask(fr.ny)) || !subset(b, full_mask(fr.nx)))
                throw std::invalid_argument("apply_ternary: carrier mismatch");
            for (int x = 0; x < fr.nx; ++x)
                if ((b >> x) & 1)
                    for (int y = 0; y < fr.ny; ++y)
                        if ((a >> y) & 1) out |= fr.t(x, y);
            break;
        }
        case TernaryOp::BlackRight: {  // a, b subsets X -> subset Y
            if (!subset(a, full_mask(fr.nx)) || !subset(b, full_mask(fr.nx)))
                throw std::invalid_argument("apply_ternary: carrier mismatch");
            for (int y = 0; y < fr.ny; ++y) {
                bool ok = true;
                for (int x = 0; x < fr.nx && ok; ++x)
                    if ((a >> x) & 1)
                        if (!subset(fr.t(x, y), b)) ok = false;
                if (ok) out |= (1ull << y);
            }
            break;
        }
    }
    return out;
}

bool is_monotone(const NFrame& fr) {
    int ns = fr.nsub();
    for (int w = 0; w < fr.size; ++w)
        for (Mask z = 0; z < (Mask)ns; ++z)
            if (fr.member(w, z))
                for (int e = 0; e < fr.size; ++e) {
                    Mask sup = z | (1ull << e);
                    if (!fr.member(w, sup)) return false;
                }
    return true;
}

NOps::NOps(const TSNFrame& f)
    : fr(f), ni_conv(converse(f.ni)), nni_conv(converse(f.nni)),
      nu_conv(converse(f.nu)), nuc_conv(converse(f.nuc)) {}

Mask NOps::box_ni(Mask d) const { return apply_unary(fr.ni, UnaryOp::Box, d); }
Mask NOps::diam_nni(Mask d) const { return apply_unary(fr.nni, UnaryOp::Diam, d); }
Mask NOps::diam_nu(Mask u) const { return apply_unary(fr.nu, UnaryOp::Diam, u); }
Mask NOps::box_nuc(Mask u) const { return apply_unary(fr.nuc, UnaryOp::Box, u); }
Mask NOps::diam_in(Mask u) const { return apply_unary(ni_conv, UnaryOp::Diam, u); }
Mask NOps::box_notin(Mask u) const { return apply_unary(nni_conv, UnaryOp::Box, u); }
Mask NOps::box_bnu(Mask d) const { return apply_unary(nu_conv, UnaryOp::Box, d); }
Mask NOps::diam_bnuc(Mask d) const { return apply_unary(nuc_conv, UnaryOp::Diam, d); }

bool is_supported(const TSNFrame& fr) {
    NOps ops(fr);
    Mask fx = full_mask(fr.nx);
    for (Mask d = 0; d <= fx; ++d) {
        if (ops.diam_nu(ops.box_ni(d)) != ops.box_nuc(ops.diam_nni(d))) return false;
        if (d == fx) break;
    }
    return true;
}

COps::COps(const TSCFrame& f) : fr(f), ni_conv(converse(f.ni)), nni_conv(converse(f.nni)) {}
Mask COps::box_ni(Mask d) const { return apply_unary(fr.ni, UnaryOp::Box, d); }
Mask COps::box_arr_nni(Mask d) const { return apply_unary(fr.nni, UnaryOp::BoxArr, d); }
Mask COps::diam_in(Mask u) const { return apply_unary(ni_conv, UnaryOp::Diam, u); }
Mask COps::box_arr_nin(Mask u) const { return apply_unary(nni_conv, UnaryOp::BoxArr, u); }
Mask COps::tri(Mask u, Mask d) const { return apply_ternary(fr, TernaryOp::Tri, u, d); }
Mask COps::black_up(Mask u, Mask c) const { return apply_ternary(fr, TernaryOp::BlackUp, u, c); }
Mask COps::black_right(Mask c, Mask d) const { return apply_ternary(fr, TernaryOp::BlackRight, c, d); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

static Mask valuation_of(const Valuation& v, const std::string& name) {
    auto it = v.find(name);
    if (it == v.end()) throw std::invalid_argument("unbound proposition '" + name + "'");
    return it->second;
}

Mask eval_single(const NFrame& fr, const Valuation& v, const SF& f) {
    Mask W = full_mask(fr.size);
    switch (f->k) {
        case SK::Prop: return valuation_of(v, f->name) & W;
        case SK::Top: return W;
        case SK::Bot: return 0;
        case SK::Neg: return W & ~eval_single(fr, v, f->a);
        case SK::And: return eval_single(fr, v, f->a) & eval_single(fr, v, f->b);
        case SK::Or: return eval_single(fr, v, f->a) | eval_single(fr, v, f->b);
        case SK::Nabla: {
            Mask x = eval_single(fr, v, f->a);
            Mask out = 0;
            for (int w = 0; w < fr.size; ++w)
                if (fr.member(w, x)) out |= (1ull << w);
            return out;
        }
        case SK::Cond: throw std::invalid_argument("'>' evaluated on a neighbourhood frame");
    }
    throw std::logic_error("eval_single");
}

Mask eval_single(const CFrame& fr, const Valuation& v, const SF& f) {
    Mask W = full_mask(fr.size);
    switch (f->k) {
        case SK::Prop: return valuation_of(v, f->name) & W;
        case SK::Top: return W;
        case SK::Bot: return 0;
        case SK::Neg: return W & ~eval_single(fr, v, f->a);
        case SK::And: return eval_single(fr, v, f->a) & eval_single(fr, v, f->b);
        case SK::Or: return eval_single(fr, v, f->a) | eval_single(fr, v, f->b);
        case SK::Cond: {
            Mask x = eval_single(fr, v, f->a);
            Mask y = eval_single(fr, v, f->b);
            Mask out = 0;
            for (int w = 0; w < fr.size; ++w)
                if (subset(fr.sel(w, x), y)) out |= (1ull << w);
            return out;
        }
        case SK::Nabla: throw std::invalid_argument("'nabla' evaluated on a conditional frame");
    }
    throw std::logic_error("eval_single");
}

static Mask var_of(const VarEnv* env, int id) {
    if (!env) throw std::invalid_argument("nominal variable outside an assignment");
    auto it = env->find(id);
    if (it == env->end()) throw std::invalid_argument("unbound nominal variable");
    return it->second;
}

Mask eval_mt(const TSNFrame& fr, const Valuation& v, const MF& f, const VarEnv* env) {
    NOps ops(fr);
    Mask FX = full_mask(fr.nx), FY = full_mask(fr.ny);
    std::function<Mask(const MF&)> go = [&](const MF& t) -> Mask {
        switch (t->k) {
            case MK::Prop: return valuation_of(v, t->name) & FX;
            case MK::Top: return FX;
            case MK::Bot: return 0;
            case MK::One: return FY;
            case MK::Zero: return 0;
            case MK::Neg: return FX & ~go(t->a);
            case MK::SimNeg: return FY & ~go(t->a);
            case MK::And: return go(t->a) & go(t->b);
            case MK::Or: return go(t->a) | go(t->b);
            case MK::Cap: return go(t->a) & go(t->b);
            case MK::Cup: return go(t->a) | go(t->b);
            case MK::DiamNu: return ops.diam_nu(go(t->a));
            case MK::BoxNuc: return ops.box_nuc(go(t->a));
            case MK::BoxNi: return ops.box_ni(go(t->a));
            case MK::DiamNotNi: return ops.diam_nni(go(t->a));
            case MK::DiamIn: return ops.diam_in(go(t->a));
            case MK::BoxNotIn: return ops.box_notin(go(t->a));
            case MK::BoxBNu: return ops.box_bnu(go(t->a));
            case MK::DiamBNuC: return ops.diam_bnuc(go(t->a));
            case MK::SNom: case MK::SCoNom: return var_of(env, t->var) & FX;
            case MK::NNom: case MK::NCoNom: return var_of(env, t->var) & FY;
            default:
                throw std::invalid_argument("conditional-signature term on an n-type frame");
        }
    };
    return go(f);
}

Mask eval_mt(const TSCFrame& fr, const Valuation& v, const MF& f, const VarEnv* env) {
    COps ops(fr);
    Mask FX = full_mask(fr.nx), FY = full_mask(fr.ny);
    std::function<Mask(const MF&)> go = [&](const MF& t) -> Mask {
        switch (t->k) {
            case MK::Prop: return valuation_of(v, t->name) & FX;
            case MK::Top: return FX;
            case MK::Bot: return 0;
            case MK::One: return FY;
            case MK::Zero: return 0;
            case MK::Neg: return FX & ~go(t->a);
            case MK::SimNeg: return FY & ~go(t->a);
            case MK::And: return go(t->a) & go(t->b);
            case MK::Or: return go(t->a) | go(t->b);
            case MK::Cap: return go(t->a) & go(t->b);
            case MK::Cup: return go(t->a) | go(t->b);
            case MK::BoxNi: return ops.box_ni(go(t->a));
            case MK::BoxArrNotNi: return ops.box_arr_nni(go(t->a));
            case MK::DiamIn: return ops.diam_in(go(t->a));
            case MK::BoxArrNotIn: return ops.box_arr_nin(go(t->a));
            case MK::Triangle: return ops.tri(go(t->a), go(t->b));
            case MK::BlackTriUp: return ops.black_up(go(t->a), go(t->b));
            case MK::BlackTriRight: return ops.black_right(go(t->a), go(t->b));
            case MK::SNom: case MK::SCoNom: return var_of(env, t->var) & FX;
            case MK::NNom: case MK::NCoNom: return var_of(env, t->var) & FY;
            default:
                throw std::invalid_argument("monotone-signature term on a c-type frame");
        }
    };
    return go(f);
}

// ---------------------------------------------------------------------------
// Validity: enumerate valuations of the occurring propositions
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> props_of(const SF& a, const SF& b) {
    std::vector<std::string> ps;
    collect_props(a, ps);
    if (b) collect_props(b, ps);
    if ((int)ps.size() > kMaxValidityProps)
        throw ResourceLimit("too many propositions for valuation enumeration");
    return ps;
}

std::vector<std::string> props_of(const MF& a, const MF& b) {
    std::vector<std::string> ps;
    collect_props(a, ps);
    if (b) collect_props(b, ps);
    if ((int)ps.size() > kMaxValidityProps)
        throw ResourceLimit("too many propositions for valuation enumeration");
    return ps;
}

// iterate all assignments of props into P(carrier); f returns false to abort
template <typename F>
bool for_each_valuation(const std::vector<std::string>& ps, int carrier, F f) {
    if (ps.size() * (std::size_t)carrier > 32)
        throw ResourceLimit("valuation space too large");
    std::size_t total = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) total *= (std::size_t)1 << carrier;
    Valuation v;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (const auto& p : ps) {
            v[p] = (Mask)(c & (((std::size_t)1 << carrier) - 1));
            c >>= carrier;
        }
        if (!f(v)) return false;
    }
    return true;
}

}  // namespace

bool valid(const NFrame& fr, const SF& lhs, const SF& rhs) {
    auto ps = props_of(lhs, rhs);
    return for_each_valuation(ps, fr.size, [&](const Valuation& v) {
        return subset(eval_single(fr, v, lhs), eval_single(fr, v, rhs));
    });
}

bool valid(const CFrame& fr, const SF& lhs, const SF& rhs) {
    auto ps = props_of(lhs, rhs);
    return for_each_valuation(ps, fr.size, [&](const Valuation& v) {
        return subset(eval_single(fr, v, lhs), eval_single(fr, v, rhs));
    });
}

bool valid(const NFrame& fr, const SF& f) { return valid(fr, sTop(), f); }
bool valid(const CFrame& fr, const SF& f) { return valid(fr, sTop(), f); }

bool valid(const TSNFrame& fr, const MTSequent& s) {
    auto ps = props_of(s.lhs, s.rhs);
    return for_each_valuation(ps, fr.nx, [&](const Valuation& v) {
        return subset(eval_mt(fr, v, s.lhs), eval_mt(fr, v, s.rhs));
    });
}

bool valid(const TSCFrame& fr, const MTSequent& s) {
    auto ps = props_of(s.lhs, s.rhs);
    return for_each_valuation(ps, fr.nx, [&](const Valuation& v) {
        return subset(eval_mt(fr, v, s.lhs), eval_mt(fr, v, s.rhs));
    });
}

template <typename Frame, typename Form, typename Eval>
static std::optional<Valuation> counterm(const Frame& fr, int carrier, const Form& lhs,
                                         const Form& rhs, Eval ev) {
    std::vector<std::string> ps;
    collect_props(lhs, ps);
    collect_props(rhs, ps);
    if ((int)ps.size() > kMaxValidityProps)
        throw ResourceLimit("too many propositions for valuation enumeration");
    std::optional<Valuation> found;
    for_each_valuation(ps, carrier, [&](const Valuation& v) {
        if (!subset(ev(v, lhs), ev(v, rhs))) {
            found = v;
            return false;
        }
        return true;
    });
    return found;
}

std::optional<Valuation> countermodel(const NFrame& fr, const SF& lhs, const SF& rhs) {
    return counterm(fr, fr.size, lhs, rhs,
                    [&](const Valuation& v, const SF& f) { return eval_single(fr, v, f); });
}
std::optional<Valuation> countermodel(const CFrame& fr, const SF& lhs, const SF& rhs) {
    return counterm(fr, fr.size, lhs, rhs,
                    [&](const Valuation& v, const SF& f) { return eval_single(fr, v, f); });
}
std::optional<Valuation> countermodel(const TSNFrame& fr, const MTSequent& s) {
    return counterm(fr, fr.nx, s.lhs, s.rhs,
                    [&](const Valuation& v, const MF& f) { return eval_mt(fr, v, f); });
}
std::optional<Valuation> countermodel(const TSCFrame& fr, const MTSequent& s) {
    return counterm(fr, fr.nx, s.lhs, s.rhs,
                    [&](const Valuation& v, const MF& f) { return eval_mt(fr, v, f); });
}

// ---------------------------------------------------------------------------
// Enumeration / sampling
// ---------------------------------------------------------------------------

std::vector<Mask> upward_closed_families(int n) {
    int ns = 1 << n;
    std::vector<Mask> out;
    for (Mask fam = 0; fam < (1ull << ns); ++fam) {
        bool ok = true;
        for (int z = 0; z < ns && ok; ++z)
            if ((fam >> z) & 1)
                for (int e = 0; e < n; ++e)
                    if (!((fam >> (z | (1 << e))) & 1)) {
                        ok = false;
                        break;
                    }
        if (ok) out.push_back(fam);
    }
    return out;
}

std::vector<NFrame> all_monotone_nframes(int n) {
    auto fams = upward_closed_families(n);
    std::vector<NFrame> out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        NFrame fr;
        fr.size = n;
        fr.nu.resize(n);
        for (int w = 0; w < n; ++w) fr.nu[w] = fams[idx[w]];
        out.push_back(fr);
        int w = 0;
        while (w < n && ++idx[w] == fams.size()) idx[w++] = 0;
        if (w == n) break;
    }
    return out;
}

std::vector<CFrame> all_cframes(int n) {
    int ns = 1 << n;
    std::size_t slots = (std::size_t)n * ns;
    if (slots * n > 24) throw ResourceLimit("c-frame enumeration is infeasible at this size");
    std::vector<CFrame> out;
    std::size_t total = (std::size_t)1 << (slots * n);
    for (std::size_t code = 0; code < total; ++code) {
        CFrame fr;
        fr.size = n;
        fr.f.resize(slots);
        std::size_t c = code;
        for (std::size_t s = 0; s < slots; ++s) {
            fr.f[s] = (Mask)(c & (ns - 1));
            c >>= n;
        }
        out.push_back(fr);
    }
    return out;
}

CFrame random_cframe(int n, std::mt19937_64& rng) {
    CFrame fr;
    fr.size = n;
    int ns = 1 << n;
    fr.f.resize((std::size_t)n * ns);
    std::uniform_int_distribution<int> dist(0, ns - 1);
    for (auto& m : fr.f) m = (Mask)dist(rng);
    return fr;
}

std::vector<CFrame> boundary_cframes(int n) {
    int ns = 1 << n;
    CFrame empty, ident, center;
    empty.size = ident.size = center.size = n;
    empty.f.assign((std::size_t)n * ns, 0);
    ident.f.resize((std::size_t)n * ns);
    center.f.resize((std::size_t)n * ns);
    for (int w = 0; w < n; ++w)
        for (int z = 0; z < ns; ++z) {
            ident.f[(std::size_t)w * ns + z] = (Mask)z;
            center.f[(std::size_t)w * ns + z] = (Mask)z & (1ull << w);
        }
    return {empty, ident, center};
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json mask_to_list(Mask m, int n) {
    json a = json::array();
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) a.push_back(i);
    return a;
}

Mask list_to_mask(const json& a, int n) {
    Mask m = 0;
    for (const auto& e : a) {
        int i = e.get<int>();
        if (i < 0 || i >= n) throw std::invalid_argument("frame file: element out of range");
        m |= (1ull << i);
    }
    return m;
}

Rel pairs_to_rel(const json& a, int ns, int nt) {
    Rel r(ns, nt);
    for (const auto& e : a) {
        int s = e.at(0).get<int>(), t = e.at(1).get<int>();
        if (s < 0 || s >= ns || t < 0 || t >= nt)
            throw std::invalid_argument("frame file: relation pair out of range");
        r.set(s, t);
    }
    return r;
}

json rel_to_pairs(const Rel& r) {
    json a = json::array();
    for (int s = 0; s < r.ns; ++s)
        for (int t = 0; t < r.nt; ++t)
            if (r.get(s, t)) a.push_back(json::array({s, t}));
    return a;
}

}  // namespace

FrameFile load_frame(const std::string& text) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    FrameFile out{};
    if (kind == "nframe") {
        out.kind = FrameFile::Kind::N;
        int n = j.at("size").get<int>();
        if (n < 1 || n > 6) throw std::invalid_argument("nframe: size out of range");
        out.n.size = n;
        out.n.nu.assign(n, 0);
        const auto& nu = j.at("nu");
        if ((int)nu.size() != n) throw std::invalid_argument("nframe: nu must list one family per world");
        for (int w = 0; w < n; ++w)
            for (const auto& zs : nu[w]) out.n.nu[w] |= (1ull << list_to_mask(zs, n));
    } else if (kind == "cframe") {
        out.kind = FrameFile::Kind::C;
        int n = j.at("size").get<int>();
        if (n < 1 || n > 6) throw std::invalid_argument("cframe: size out of range");
        out.c.size = n;
        int ns = 1 << n;
        out.c.f.assign((std::size_t)n * ns, 0);
        const auto& f = j.at("f");
        if ((int)f.size() != n) throw std::invalid_argument("cframe: f must list one table per world");
        for (int w = 0; w < n; ++w) {
            if ((int)f[w].size() != ns)
                throw std::invalid_argument("cframe: each world needs a value for all 2^size subsets");
            for (int z = 0; z < ns; ++z)
                out.c.f[(std::size_t)w * ns + z] = list_to_mask(f[w][z], n);
        }
    } else if (kind == "ts-nframe") {
        out.kind = FrameFile::Kind::TSN;
        int nx = j.at("x").get<int>(), ny = j.at("y").get<int>();
        if (nx < 1 || nx > 64 || ny < 1 || ny > 64)
            throw std::invalid_argument("ts-nframe: carrier out of range");
        out.tsn.nx = nx;
        out.tsn.ny = ny;
        out.tsn.ni = pairs_to_rel(j.at("r_ni"), ny, nx);
        out.tsn.nni = pairs_to_rel(j.at("r_nni"), ny, nx);
        out.tsn.nu = pairs_to_rel(j.at("r_nu"), nx, ny);
        out.tsn.nuc = pairs_to_rel(j.at("r_nuc"), nx, ny);
    } else if (kind == "ts-cframe") {
        out.kind = FrameFile::Kind::TSC;
        int nx = j.at("x").get<int>(), ny = j.at("y").get<int>();
        if (nx < 1 || nx > 64 || ny < 1 || ny > 64)
            throw std::invalid_argument("ts-cframe: carrier out of range");
        out.tsc.nx = nx;
        out.tsc.ny = ny;
        out.tsc.ni = pairs_to_rel(j.at("r_ni"), ny, nx);
        out.tsc.nni = pairs_to_rel(j.at("r_nni"), ny, nx);
        out.tsc.tf.assign((std::size_t)nx * ny, 0);
        for (const auto& e : j.at("t_f")) {
            int x = e.at(0).get<int>(), y = e.at(1).get<int>(), x2 = e.at(2).get<int>();
            if (x < 0 || x >= nx || y < 0 || y >= ny || x2 < 0 || x2 >= nx)
                throw std::invalid_argument("ts-cframe: triple out of range");
            out.tsc.tf[(std::size_t)x * ny + y] |= (1ull << x2);
        }
    } else {
        throw std::invalid_argument("unknown frame kind '" + kind + "'");
    }
    return out;
}

FrameFile load_frame_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open frame file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_frame(ss.str());
}

std::string frame_json(const NFrame& fr) {
    json j;
    j["kind"] = "nframe";
    j["size"] = fr.size;
    json nu = json::array();
    for (int w = 0; w < fr.size; ++w) {
        json fam = json::array();
        for (int z = 0; z < fr.nsub(); ++z)
            if (fr.member(w, z)) fam.push_back(mask_to_list(z, fr.size));
        nu.push_back(fam);
    }
    j["nu"] = nu;
    return j.dump();
}

std::string frame_json(const CFrame& fr) {
    json j;
    j["kind"] = "cframe";
    j["size"] = fr.size;
    json f = json::array();
    for (int w = 0; w < fr.size; ++w) {
        json row = json::array();
        for (int z = 0; z < fr.nsub(); ++z) row.push_back(mask_to_list(fr.sel(w, z), fr.size));
        f.push_back(row);
    }
    j["f"] = f;
    return j.dump();
}

std::string frame_json(const TSNFrame& fr) {
    json j;
    j["kind"] = "ts-nframe";
    j["x"] = fr.nx;
    j["y"] = fr.ny;
    j["r_ni"] = rel_to_pairs(fr.ni);
    j["r_nni"] = rel_to_pairs(fr.nni);
    j["r_nu"] = rel_to_pairs(fr.nu);
    j["r_nuc"] = rel_to_pairs(fr.nuc);
    return j.dump();
}

std::string frame_json(const TSCFrame& fr) {
    json j;
    j["kind"] = "ts-cframe";
    j["x"] = fr.nx;
    j["y"] = fr.ny;
    j["r_ni"] = rel_to_pairs(fr.ni);
    j["r_nni"] = rel_to_pairs(fr.nni);
    json t = json::array();
    for (int x = 0; x < fr.nx; ++x)
        for (int y = 0; y < fr.ny; ++y)
            for (int x2 = 0; x2 < fr.nx; ++x2)
                if ((fr.t(x, y) >> x2) & 1) t.push_back(json::array({x, y, x2}));
    j["t_f"] = t;
    return j.dump();
}

}  // namespace mtm
