#include "mtmodal/constructions.hpp"

#include <sstream>

namespace mtm {

Mask nabla_of_frame(const NFrame& fr, Mask x) {
    Mask out = 0;
    for (int w = 0; w < fr.size; ++w)
        if (fr.member(w, x)) out |= (1ull << w);
    return out;
}

Mask cond_of_frame(const CFrame& fr, Mask x, Mask y) {
    Mask out = 0;
    for (int w = 0; w < fr.size; ++w)
        if (subset(fr.sel(w, x), y)) out |= (1ull << w);
    return out;
}

NablaTable nabla_table(const NFrame& fr) {
    NablaTable t;
    t.size = fr.size;
    t.t.resize(fr.nsub());
    for (int z = 0; z < fr.nsub(); ++z) t.t[z] = nabla_of_frame(fr, z);
    return t;
}

CondTable cond_table(const CFrame& fr) {
    CondTable t;
    t.size = fr.size;
    t.t.resize((std::size_t)fr.nsub() * fr.nsub());
    for (int a = 0; a < fr.nsub(); ++a)
        for (int b = 0; b < fr.nsub(); ++b)
            t.t[((std::size_t)a << fr.size) | b] = cond_of_frame(fr, a, b);
    return t;
}

bool table_monotone(const NablaTable& t) {
    int ns = 1 << t.size;
    for (int z = 0; z < ns; ++z)
        for (int e = 0; e < t.size; ++e)
            if (!subset(t.t[z], t.t[z | (1 << e)])) return false;
    return true;
}

bool table_meet_preserving(const CondTable& t) {
    int ns = 1 << t.size;
    Mask W = full_mask(t.size);
    for (int a = 0; a < ns; ++a) {
        if (t.at(a, W) != W) return false;  // empty meet
        for (int b = 0; b < ns; ++b)
            for (int c = 0; c < ns; ++c)
                if (t.at(a, (Mask)b & (Mask)c) != (t.at(a, b) & t.at(a, c))) return false;
    }
    return true;
}

NFrame frame_of_nabla(const NablaTable& t) {
    if (!table_monotone(t)) {
        // report a witness in the error message
        int ns = 1 << t.size;
        for (int z = 0; z < ns; ++z)
            for (int e = 0; e < t.size; ++e)
                if (!subset(t.t[z], t.t[z | (1 << e)])) {
                    std::ostringstream os;
                    os << "frame_of_nabla: not monotone at subsets " << z << " <= "
                       << (z | (1 << e));
                    throw std::invalid_argument(os.str());
                }
    }
    NFrame fr;
    fr.size = t.size;
    fr.nu.assign(t.size, 0);
    for (int w = 0; w < t.size; ++w)
        for (int z = 0; z < (1 << t.size); ++z)
            if ((t.t[z] >> w) & 1) fr.nu[w] |= (1ull << z);
    return fr;
}

CFrame frame_of_cond(const CondTable& t) {
    if (!table_meet_preserving(t))
        throw std::invalid_argument("frame_of_cond: operation is not meet-preserving in its second coordinate");
    CFrame fr;
    fr.size = t.size;
    int ns = 1 << t.size;
    fr.f.assign((std::size_t)t.size * ns, 0);
    for (int w = 0; w < t.size; ++w)
        for (int x = 0; x < ns; ++x) {
            Mask inter = full_mask(t.size);
            for (int y = 0; y < ns; ++y)
                if ((t.at(x, y) >> w) & 1) inter &= (Mask)y;
            fr.f[(std::size_t)w * ns + x] = inter;
        }
    return fr;
}

// ---------------------------------------------------------------------------
// star: single-type frame -> two-sorted frame over (W, P(W))
// ---------------------------------------------------------------------------

TSNFrame star(const NFrame& fr) {
    TSNFrame k;
    k.nx = fr.size;
    k.ny = fr.nsub();
    k.ni = Rel(k.ny, k.nx);
    k.nni = Rel(k.ny, k.nx);
    k.nu = Rel(k.nx, k.ny);
    k.nuc = Rel(k.nx, k.ny);
    for (int z = 0; z < k.ny; ++z) {
        k.ni.row[z] = (Mask)z;
        k.nni.row[z] = full_mask(k.nx) & ~(Mask)z;
    }
    for (int w = 0; w < k.nx; ++w) {
        k.nu.row[w] = fr.nu[w];
        k.nuc.row[w] = full_mask(k.ny) & ~fr.nu[w];
    }
    return k;
}

TSCFrame star(const CFrame& fr) {
    TSCFrame k;
    k.nx = fr.size;
    k.ny = fr.nsub();
    k.ni = Rel(k.ny, k.nx);
    k.nni = Rel(k.ny, k.nx);
    for (int z = 0; z < k.ny; ++z) {
        k.ni.row[z] = (Mask)z;
        k.nni.row[z] = full_mask(k.nx) & ~(Mask)z;
    }
    k.tf.assign((std::size_t)k.nx * k.ny, 0);
    for (int x = 0; x < k.nx; ++x)
        for (int y = 0; y < k.ny; ++y)
            k.tf[(std::size_t)x * k.ny + y] = fr.sel(x, (Mask)y);
    return k;
}

NFrame costar(const TSNFrame& fr) {
    if (fr.nx > 6) throw ResourceLimit("costar: first carrier too large");
    if (!is_supported(fr)) throw std::invalid_argument("costar: frame is not supported");
    NOps ops(fr);
    NFrame out;
    out.size = fr.nx;
    out.nu.assign(fr.nx, 0);
    for (Mask d = 0; d < (1ull << fr.nx); ++d) {
        Mask set = ops.diam_nu(ops.box_ni(d));
        for (int x = 0; x < fr.nx; ++x)
            if ((set >> x) & 1) out.nu[x] |= (1ull << d);
    }
    return out;
}

CFrame costar(const TSCFrame& fr) {
    if (fr.nx > 6) throw ResourceLimit("costar: first carrier too large");
    COps ops(fr);
    CFrame out;
    out.size = fr.nx;
    int ns = 1 << fr.nx;
    out.f.assign((std::size_t)fr.nx * ns, 0);
    for (int d = 0; d < ns; ++d) {
        Mask block = ops.box_ni((Mask)d) & ops.box_arr_nni((Mask)d);
        std::vector<Mask> inter(fr.nx, full_mask(fr.nx));
        for (int c = 0; c < ns; ++c) {
            Mask set = ops.tri(block, (Mask)c);
            for (int x = 0; x < fr.nx; ++x)
                if ((set >> x) & 1) inter[x] &= (Mask)c;
        }
        for (int x = 0; x < fr.nx; ++x) out.f[(std::size_t)x * ns + d] = inter[x];
    }
    return out;
}

NablaTable bullet_down(const TSNFrame& fr) {
    if (!is_supported(fr)) throw std::invalid_argument("bullet_down: frame is not supported");
    if (fr.nx > 6) throw ResourceLimit("bullet_down: first carrier too large");
    NOps ops(fr);
    NablaTable t;
    t.size = fr.nx;
    t.t.resize(1ull << fr.nx);
    for (Mask a = 0; a < (1ull << fr.nx); ++a) t.t[a] = ops.diam_nu(ops.box_ni(a));
    return t;
}

CondTable bullet_down(const TSCFrame& fr) {
    if (fr.nx > 6) throw ResourceLimit("bullet_down: first carrier too large");
    COps ops(fr);
    CondTable t;
    t.size = fr.nx;
    int ns = 1 << fr.nx;
    t.t.resize((std::size_t)ns * ns);
    for (int a = 0; a < ns; ++a) {
        Mask block = ops.box_ni((Mask)a) & ops.box_arr_nni((Mask)a);
        for (int b = 0; b < ns; ++b) t.t[((std::size_t)a << fr.nx) | b] = ops.tri(block, (Mask)b);
    }
    return t;
}

TSNFrame bullet_up(const NablaTable& t) {
    if (t.size > 5) throw ResourceLimit("bullet_up: size bound exceeded");
    if (!table_monotone(t)) throw std::invalid_argument("bullet_up: operation is not monotone");
    // atoms of the first algebra are worlds, atoms of the second are subsets
    TSNFrame k;
    k.nx = t.size;
    k.ny = 1 << t.size;
    k.ni = Rel(k.ny, k.nx);
    k.nni = Rel(k.ny, k.nx);
    k.nu = Rel(k.nx, k.ny);
    k.nuc = Rel(k.nx, k.ny);
    for (int b = 0; b < k.ny; ++b) {
        k.ni.row[b] = (Mask)b;
        k.nni.row[b] = full_mask(k.nx) & ~(Mask)b;
    }
    for (int w = 0; w < k.nx; ++w)
        for (int b = 0; b < k.ny; ++b) {
            bool in = (t.at((Mask)b) >> w) & 1;
            if (in) k.nu.set(w, b);
            else k.nuc.set(w, b);
        }
    return k;
}

TSCFrame bullet_up(const CondTable& t) {
    if (t.size > 5) throw ResourceLimit("bullet_up: size bound exceeded");
    if (!table_meet_preserving(t))
        throw std::invalid_argument("bullet_up: operation is not meet-preserving in its second coordinate");
    TSCFrame k;
    k.nx = t.size;
    k.ny = 1 << t.size;
    k.ni = Rel(k.ny, k.nx);
    k.nni = Rel(k.ny, k.nx);
    for (int b = 0; b < k.ny; ++b) {
        k.ni.row[b] = (Mask)b;
        k.nni.row[b] = full_mask(k.nx) & ~(Mask)b;
    }
    k.tf.assign((std::size_t)k.nx * k.ny, 0);
    Mask W = full_mask(t.size);
    for (int x = 0; x < k.nx; ++x)
        for (int b = 0; b < k.ny; ++b)
            for (int w = 0; w < k.nx; ++w) {
                Mask coat = W & ~(1ull << w);
                if (!((t.at((Mask)b, coat) >> x) & 1)) k.tf[(std::size_t)x * k.ny + b] |= (1ull << w);
            }
    return k;
}

// ---------------------------------------------------------------------------
// (K+)+ : read the relations back off the complex-algebra operations
// ---------------------------------------------------------------------------

TSNFrame frame_of_complex(const TSNFrame& fr) {
    NOps ops(fr);
    TSNFrame k;
    k.nx = fr.nx;
    k.ny = fr.ny;
    k.ni = Rel(fr.ny, fr.nx);
    k.nni = Rel(fr.ny, fr.nx);
    k.nu = Rel(fr.nx, fr.ny);
    k.nuc = Rel(fr.nx, fr.ny);
    Mask FX = full_mask(fr.nx);
    for (int y = 0; y < fr.ny; ++y)
        for (int x = 0; x < fr.nx; ++x) {
            Mask xc = FX & ~(1ull << x);
            if (!((ops.box_ni(xc) >> y) & 1)) k.ni.set(y, x);
            if ((ops.diam_nni(1ull << x) >> y) & 1) k.nni.set(y, x);
        }
    Mask FY = full_mask(fr.ny);
    for (int x = 0; x < fr.nx; ++x)
        for (int y = 0; y < fr.ny; ++y) {
            Mask yc = FY & ~(1ull << y);
            if ((ops.diam_nu(1ull << y) >> x) & 1) k.nu.set(x, y);
            if (!((ops.box_nuc(yc) >> x) & 1)) k.nuc.set(x, y);
        }
    return k;
}

TSCFrame frame_of_complex(const TSCFrame& fr) {
    COps ops(fr);
    TSCFrame k;
    k.nx = fr.nx;
    k.ny = fr.ny;
    k.ni = Rel(fr.ny, fr.nx);
    k.nni = Rel(fr.ny, fr.nx);
    k.tf.assign((std::size_t)fr.nx * fr.ny, 0);
    Mask FX = full_mask(fr.nx);
    for (int y = 0; y < fr.ny; ++y)
        for (int x = 0; x < fr.nx; ++x) {
            Mask xc = FX & ~(1ull << x);
            if (!((ops.box_ni(xc) >> y) & 1)) k.ni.set(y, x);
            if (!((ops.box_arr_nni(1ull << x) >> y) & 1)) k.nni.set(y, x);
        }
    for (int x2 = 0; x2 < fr.nx; ++x2)
        for (int y = 0; y < fr.ny; ++y)
            for (int x = 0; x < fr.nx; ++x) {
                Mask xc = FX & ~(1ull << x);
                if (!((ops.tri(1ull << y, xc) >> x2) & 1))
                    k.tf[(std::size_t)x2 * fr.ny + y] |= (1ull << x);
            }
    return k;
}

}  // namespace mtm
