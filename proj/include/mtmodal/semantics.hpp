#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtmodal/syntax.hpp"

namespace mtm {

// Subsets of a carrier (at most 64 elements) are bitmasks.
using Mask = std::uint64_t;

inline Mask full_mask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
int popcount(Mask m);

// A binary relation S x T stored as one target-mask row per source element.
struct Rel {
    int ns = 0, nt = 0;
    std::vector<Mask> row;  // row[s] subset of T

    Rel() = default;
    Rel(int ns_, int nt_) : ns(ns_), nt(nt_), row(ns_, 0) {}
    bool get(int s, int t) const { return (row[s] >> t) & 1; }
    void set(int s, int t, bool v = true) {
        if (v) row[s] |= (1ull << t); else row[s] &= ~(1ull << t);
    }
    bool operator==(const Rel& o) const { return ns == o.ns && nt == o.nt && row == o.row; }
};

Rel converse(const Rel& r);

enum class UnaryOp { Diam, Box, BoxArr, DiamArr };
// <R>, [R], [R>, <R] along the rows of rel
Mask apply_unary(const Rel& rel, UnaryOp kind, Mask arg);

// ---------------------------------------------------------------------------
// Frames
// ---------------------------------------------------------------------------

struct NFrame {
    int size = 0;                // worlds 0..size-1, at most 6
    std::vector<Mask> nu;        // nu[w]: bits over subset indices 0..2^size-1

    int nsub() const { return 1 << size; }
    bool member(int w, Mask Z) const { return (nu[w] >> Z) & 1; }
    bool operator==(const NFrame& o) const { return size == o.size && nu == o.nu; }
};

struct CFrame {
    int size = 0;
    std::vector<Mask> f;         // f[w * 2^size + Z] = subset of W

    int nsub() const { return 1 << size; }
    Mask sel(int w, Mask Z) const { return f[(std::size_t)w * nsub() + Z]; }
    bool operator==(const CFrame& o) const { return size == o.size && f == o.f; }
};

struct TSNFrame {
    int nx = 0, ny = 0;
    Rel ni, nni;   // Y -> X
    Rel nu, nuc;   // X -> Y
    bool operator==(const TSNFrame& o) const {
        return nx == o.nx && ny == o.ny && ni == o.ni && nni == o.nni && nu == o.nu && nuc == o.nuc;
    }
};

struct TSCFrame {
    int nx = 0, ny = 0;
    Rel ni, nni;                 // Y -> X
    std::vector<Mask> tf;        // tf[x * ny + y] = subset of X

    Mask t(int x, int y) const { return tf[(std::size_t)x * ny + y]; }
    bool operator==(const TSCFrame& o) const {
        return nx == o.nx && ny == o.ny && ni == o.ni && nni == o.nni && tf == o.tf;
    }
};

enum class TernaryOp { Tri, BlackUp, BlackRight };
// |> : (U in P(Y), D in P(X)) -> P(X);  <| : (U, C) -> P(X);  |>> : (C, D) -> P(Y)
Mask apply_ternary(const TSCFrame& fr, TernaryOp kind, Mask a, Mask b);

bool is_monotone(const NFrame& fr);
bool is_supported(const TSNFrame& fr);

// complex-algebra operations of a two-sorted frame (n-signature)
struct NOps {
    const TSNFrame& fr;
    Rel ni_conv, nni_conv, nu_conv, nuc_conv;
    explicit NOps(const TSNFrame& f);
    Mask box_ni(Mask d) const;      // [ni]  : P(X) -> P(Y)
    Mask diam_nni(Mask d) const;    // <nni> : P(X) -> P(Y)
    Mask diam_nu(Mask u) const;     // <nu>  : P(Y) -> P(X)
    Mask box_nuc(Mask u) const;     // [nuc] : P(Y) -> P(X)
    Mask diam_in(Mask u) const;     // <in>  : P(Y) -> P(X)
    Mask box_notin(Mask u) const;   // [nin] : P(Y) -> P(X)
    Mask box_bnu(Mask d) const;     // [bnu] : P(X) -> P(Y)
    Mask diam_bnuc(Mask d) const;   // <bnuc>: P(X) -> P(Y)
};

struct COps {
    const TSCFrame& fr;
    Rel ni_conv, nni_conv;
    explicit COps(const TSCFrame& f);
    Mask box_ni(Mask d) const;          // [ni]  : P(X) -> P(Y)
    Mask box_arr_nni(Mask d) const;     // [nni> : P(X) -> P(Y)
    Mask diam_in(Mask u) const;         // <in>  : P(Y) -> P(X)
    Mask box_arr_nin(Mask u) const;     // [nin> : P(Y) -> P(X)
    Mask tri(Mask u, Mask d) const;     // |>    : P(Y) x P(X) -> P(X)
    Mask black_up(Mask u, Mask c) const;    // <|  : P(Y) x P(X) -> P(X)
    Mask black_right(Mask c, Mask d) const; // |>> : P(X) x P(X) -> P(Y)
};

// ---------------------------------------------------------------------------
// Evaluation and validity
// ---------------------------------------------------------------------------

using Valuation = std::map<std::string, Mask>;

Mask eval_single(const NFrame& fr, const Valuation& v, const SF& f);
Mask eval_single(const CFrame& fr, const Valuation& v, const SF& f);

// environment for nominal/conominal variables (by id)
using VarEnv = std::map<int, Mask>;
Mask eval_mt(const TSNFrame& fr, const Valuation& v, const MF& f, const VarEnv* env = nullptr);
Mask eval_mt(const TSCFrame& fr, const Valuation& v, const MF& f, const VarEnv* env = nullptr);

constexpr int kMaxValidityProps = 4;

bool valid(const NFrame& fr, const SF& lhs, const SF& rhs);
bool valid(const CFrame& fr, const SF& lhs, const SF& rhs);
bool valid(const NFrame& fr, const SF& f);   // top |- f
bool valid(const CFrame& fr, const SF& f);
bool valid(const TSNFrame& fr, const MTSequent& s);
bool valid(const TSCFrame& fr, const MTSequent& s);

std::optional<Valuation> countermodel(const NFrame& fr, const SF& lhs, const SF& rhs);
std::optional<Valuation> countermodel(const CFrame& fr, const SF& lhs, const SF& rhs);
std::optional<Valuation> countermodel(const TSNFrame& fr, const MTSequent& s);
std::optional<Valuation> countermodel(const TSCFrame& fr, const MTSequent& s);

// ---------------------------------------------------------------------------
// Frame enumeration and sampling
// ---------------------------------------------------------------------------

// all upward-closed families over P(W), |W| = n
std::vector<Mask> upward_closed_families(int n);
std::vector<NFrame> all_monotone_nframes(int n);
std::vector<CFrame> all_cframes(int n);  // feasible for n = 1 only
CFrame random_cframe(int n, std::mt19937_64& rng);
// f == empty; f(w,Z) = Z; f(w,Z) = {w} n Z
std::vector<CFrame> boundary_cframes(int n);

// ---------------------------------------------------------------------------
// JSON frame files
// ---------------------------------------------------------------------------

struct FrameFile {
    enum class Kind { N, C, TSN, TSC } kind;
    NFrame n;
    CFrame c;
    TSNFrame tsn;
    TSCFrame tsc;
};

FrameFile load_frame(const std::string& json_text);
FrameFile load_frame_file(const std::string& path);
std::string frame_json(const NFrame& fr);
std::string frame_json(const CFrame& fr);
std::string frame_json(const TSNFrame& fr);
std::string frame_json(const TSCFrame& fr);

}  // namespace mtm
