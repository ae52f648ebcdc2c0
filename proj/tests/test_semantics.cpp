#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "mtmodal/constructions.hpp"
#include "mtmodal/semantics.hpp"
#include "mtmodal/translate.hpp"

using namespace mtm;

namespace {

NFrame nframe1(std::initializer_list<Mask> fam0) {
    NFrame fr;
    fr.size = 1;
    fr.nu.assign(1, 0);
    for (Mask z : fam0) fr.nu[0] |= (1ull << z);
    return fr;
}

}  // namespace

TEST_CASE("unary operators from relations") {
    // empty relation: box is everything, diamond nothing
    Rel empty(2, 2);
    CHECK(apply_unary(empty, UnaryOp::Box, 0b01) == 0b11);
    CHECK(apply_unary(empty, UnaryOp::Diam, 0b01) == 0);

    // S=T={0,1}, rel={(0,0),(0,1),(1,1)}, box {1} -> {1}
    Rel r(2, 2);
    r.set(0, 0);
    r.set(0, 1);
    r.set(1, 1);
    CHECK(apply_unary(r, UnaryOp::Box, 0b10) == 0b10);
    CHECK(apply_unary(r, UnaryOp::Diam, 0b10) == 0b11);
    CHECK(apply_unary(r, UnaryOp::BoxArr, 0b10) == 0);
    CHECK(apply_unary(r, UnaryOp::BoxArr, 0b00) == 0b11);
    CHECK(apply_unary(r, UnaryOp::DiamArr, 0b10) == 0b01);
    CHECK_THROWS_AS(apply_unary(r, UnaryOp::Box, 0b100), std::invalid_argument);
}

TEST_CASE("adjunction laws hold extensionally") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int ns = 1 + (int)(rng() % 3), nt = 1 + (int)(rng() % 3);
        Rel r(ns, nt);
        for (int s = 0; s < ns; ++s) r.row[s] = rng() & full_mask(nt);
        Rel rc = converse(r);
        for (Mask T = 0; T <= full_mask(nt); ++T) {
            for (Mask S = 0; S <= full_mask(ns); ++S) {
                // <R>T <= S iff T <= [R^-1]S
                CHECK(subset(apply_unary(r, UnaryOp::Diam, T), S) ==
                      subset(T, apply_unary(rc, UnaryOp::Box, S)));
                // S <= [R]T iff <R^-1>S <= T
                CHECK(subset(S, apply_unary(r, UnaryOp::Box, T)) ==
                      subset(apply_unary(rc, UnaryOp::Diam, S), T));
                // S <= [R>T iff T <= [R^-1>S
                CHECK(subset(S, apply_unary(r, UnaryOp::BoxArr, T)) ==
                      subset(T, apply_unary(rc, UnaryOp::BoxArr, S)));
                // <R]T <= S iff <R^-1]S <= T
                CHECK(subset(apply_unary(r, UnaryOp::DiamArr, T), S) ==
                      subset(apply_unary(rc, UnaryOp::DiamArr, S), T));
                if (S == full_mask(ns)) break;
            }
            if (T == full_mask(nt)) break;
        }
    }
}

TEST_CASE("ternary operators and the residuation triple") {
    // T_f = {} gives full triangle, empty blacktriangle
    TSCFrame k;
    k.nx = 1;
    k.ny = 2;
    k.ni = Rel(2, 1);
    k.nni = Rel(2, 1);
    k.tf.assign(2, 0);
    CHECK(apply_ternary(k, TernaryOp::Tri, 0b11, 0) == 0b1);
    CHECK(apply_ternary(k, TernaryOp::BlackUp, 0b11, 0b1) == 0);

    // X={0}, Y={0,1}, T_f={(0,1,0)}: {1} |> {0} = {0}; {1} |> {} = {}
    k.tf[1] = 0b1;
    CHECK(apply_ternary(k, TernaryOp::Tri, 0b10, 0b1) == 0b1);
    CHECK(apply_ternary(k, TernaryOp::Tri, 0b10, 0) == 0);

    // residuation triple on random small frames
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        TSCFrame f;
        f.nx = 2;
        f.ny = 3;
        f.ni = Rel(3, 2);
        f.nni = Rel(3, 2);
        f.tf.assign((std::size_t)f.nx * f.ny, 0);
        for (auto& m : f.tf) m = rng() & full_mask(f.nx);
        for (Mask s = 0; s <= full_mask(f.nx); ++s)
            for (Mask t = 0; t <= full_mask(f.ny); ++t)
                for (Mask u = 0; u <= full_mask(f.nx); ++u) {
                    bool a = subset(s, apply_ternary(f, TernaryOp::Tri, t, u));
                    bool b = subset(apply_ternary(f, TernaryOp::BlackUp, t, s), u);
                    bool c = subset(t, apply_ternary(f, TernaryOp::BlackRight, s, u));
                    CHECK(a == b);
                    CHECK(b == c);
                }
    }
}

TEST_CASE("eval_single on n-frames and c-frames") {
    NFrame f = nframe1({1});  // nu(0) = {{0}}
    Valuation v{{"p", 1}};
    CHECK(eval_single(f, v, parse_single("nabla p", Mode::Nabla)) == 1);
    v["p"] = 0;
    CHECK(eval_single(f, v, parse_single("nabla p", Mode::Nabla)) == 0);

    CFrame g;  // f(0,.) = {} everywhere
    g.size = 1;
    g.f.assign(2, 0);
    CHECK(eval_single(g, Valuation{{"p", 0}, {"q", 0}},
                      parse_single("(p > q)", Mode::Cond)) == 1);

    CHECK_THROWS_AS(eval_single(f, Valuation{}, parse_single("p", Mode::Nabla)),
                    std::invalid_argument);
}

TEST_CASE("eval_mt on the lifted frame") {
    NFrame f = nframe1({1});
    TSNFrame k = star(f);
    Valuation v{{"p", 1}};
    CHECK(eval_mt(k, v, parse_mt("<nu> [ni] p", Sig::MTNabla)) == 1);
    CHECK(eval_mt(k, v, parse_mt("[ni] top", Sig::MTNabla)) == full_mask(k.ny));

    TSCFrame kc;
    kc.nx = 1;
    kc.ny = 2;
    kc.ni = Rel(2, 1);
    kc.nni = Rel(2, 1);
    kc.tf.assign(2, 0);
    Valuation vc{{"p", 1}, {"q", 0}};
    CHECK(eval_mt(kc, vc, parse_mt("([ni] p |> q)", Sig::MTCond)) == 1);
}

TEST_CASE("validity and countermodels") {
    NFrame f = nframe1({1});  // W in nu(0)
    auto [l, r] = parse_single_sequent("top |- nabla top", Mode::Nabla);
    CHECK(valid(f, l, r));

    NFrame f2 = nframe1({});
    CHECK_FALSE(valid(f2, l, r));
    auto cm = countermodel(f2, l, r);
    REQUIRE(cm.has_value());

    auto [l3, r3] = parse_single_sequent("p |- p", Mode::Nabla);
    CHECK(valid(f, l3, r3));
    CHECK_FALSE(countermodel(f, l3, r3).has_value());

    SF big = parse_single("((p1 & p2) & (p3 & p4)) & p5", Mode::Nabla);
    CHECK_THROWS_AS(valid(f, big, big), ResourceLimit);
}

TEST_CASE("monotonicity and supportedness") {
    NFrame mono;
    mono.size = 2;
    mono.nu.assign(2, 0);
    mono.nu[0] = (1ull << 1) | (1ull << 3);  // {{0},{0,1}}
    CHECK(is_monotone(mono));

    NFrame notmono;
    notmono.size = 2;
    notmono.nu.assign(2, 0);
    notmono.nu[0] = (1ull << 1);  // {{0}} but not {0,1}
    CHECK_FALSE(is_monotone(notmono));

    for (const NFrame& fr : all_monotone_nframes(2)) CHECK(is_supported(star(fr)));

    // a deliberately unsupported frame: R_nu and R_nuc both empty, so the
    // diamond route is constantly empty while the box route is constantly full
    TSNFrame bad;
    bad.nx = 1;
    bad.ny = 2;
    bad.ni = Rel(2, 1);
    bad.ni.row[1] = 1;
    bad.nni = Rel(2, 1);
    bad.nni.row[0] = 1;
    bad.nu = Rel(1, 2);
    bad.nuc = Rel(1, 2);
    CHECK_FALSE(is_supported(bad));
}

TEST_CASE("supported frames identify the two nabla readings") {
    for (const NFrame& fr : all_monotone_nframes(2)) {
        TSNFrame k = star(fr);
        NOps ops(k);
        for (Mask d = 0; d <= full_mask(k.nx); ++d) {
            CHECK(ops.diam_nu(ops.box_ni(d)) == ops.box_nuc(ops.diam_nni(d)));
            if (d == full_mask(k.nx)) break;
        }
    }
}

TEST_CASE("nabla evaluation is monotone") {
    for (const NFrame& fr : all_monotone_nframes(2)) {
        SF nabla_p = parse_single("nabla p", Mode::Nabla);
        for (Mask x = 0; x <= full_mask(fr.size); ++x) {
            for (Mask y = x; y <= full_mask(fr.size); ++y) {
                if (!subset(x, y)) continue;
                CHECK(subset(eval_single(fr, Valuation{{"p", x}}, nabla_p),
                             eval_single(fr, Valuation{{"p", y}}, nabla_p)));
                if (y == full_mask(fr.size)) break;
            }
            if (x == full_mask(fr.size)) break;
        }
    }
}

TEST_CASE("translation invariance on small frames") {
    std::mt19937_64 rng(1234);
    std::vector<std::string> props{"p", "q"};
    auto frames1 = all_monotone_nframes(1);
    auto frames2 = all_monotone_nframes(2);
    std::vector<NFrame> frames = frames1;
    frames.insert(frames.end(), frames2.begin(), frames2.end());
    for (int i = 0; i < 200; ++i) {
        SF lhs = mtmgen::gen_single(3, Mode::Nabla, props, rng);
        SF rhs = mtmgen::gen_single(3, Mode::Nabla, props, rng);
        MTSequent tr = translate_sequent(lhs, rhs, Mode::Nabla);
        for (const NFrame& fr : frames) {
            REQUIRE(valid(fr, lhs, rhs) == valid(star(fr), tr));
        }
    }
    for (int i = 0; i < 100; ++i) {
        SF lhs = mtmgen::gen_single(3, Mode::Cond, props, rng);
        SF rhs = mtmgen::gen_single(3, Mode::Cond, props, rng);
        MTSequent tr = translate_sequent(lhs, rhs, Mode::Cond);
        for (int j = 0; j < 10; ++j) {
            CFrame fr = random_cframe(2, rng);
            REQUIRE(valid(fr, lhs, rhs) == valid(star(fr), tr));
        }
        for (const CFrame& fr : boundary_cframes(2)) {
            REQUIRE(valid(fr, lhs, rhs) == valid(star(fr), tr));
        }
    }
}

TEST_CASE("frame json round trips") {
    NFrame f = nframe1({1});
    FrameFile ff = load_frame(frame_json(f));
    REQUIRE(ff.kind == FrameFile::Kind::N);
    CHECK(ff.n == f);

    CFrame g = boundary_cframes(2)[1];
    FrameFile fg = load_frame(frame_json(g));
    REQUIRE(fg.kind == FrameFile::Kind::C);
    CHECK(fg.c == g);

    TSNFrame k = star(f);
    FrameFile fk = load_frame(frame_json(k));
    REQUIRE(fk.kind == FrameFile::Kind::TSN);
    CHECK(fk.tsn == k);

    TSCFrame kc = star(g);
    FrameFile fc = load_frame(frame_json(kc));
    REQUIRE(fc.kind == FrameFile::Kind::TSC);
    CHECK(fc.tsc == kc);

    CHECK_THROWS_AS(load_frame("{\"kind\":\"zframe\"}"), std::invalid_argument);
}

TEST_CASE("frame enumeration counts") {
    CHECK(upward_closed_families(1).size() == 3);
    CHECK(upward_closed_families(2).size() == 6);
    CHECK(upward_closed_families(3).size() == 20);
    CHECK(all_monotone_nframes(2).size() == 36);
    CHECK(all_monotone_nframes(3).size() == 8000);
    CHECK(all_cframes(1).size() == 4);
}
