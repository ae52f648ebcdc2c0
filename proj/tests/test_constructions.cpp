#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mtmodal/constructions.hpp"

using namespace mtm;

TEST_CASE("complex algebra operations") {
    NFrame f;  // W={0}, nu(0)={{0}}
    f.size = 1;
    f.nu.assign(1, 1ull << 1);
    CHECK(nabla_of_frame(f, 1) == 1);
    CHECK(nabla_of_frame(f, 0) == 0);

    CFrame g;  // f(0,{0})={0}, f(0,{})={}
    g.size = 1;
    g.f.assign(2, 0);
    g.f[1] = 1;
    CHECK(cond_of_frame(g, 1, 1) == 1);
    CHECK(cond_of_frame(g, 1, 0) == 0);

    // nabla of any monotone frame is monotone as a set function
    for (const NFrame& fr : all_monotone_nframes(2)) CHECK(table_monotone(nabla_table(fr)));
}

TEST_CASE("frames from operations") {
    // identity nabla on P({0}) gives nu(0) = {{0}}
    NablaTable t;
    t.size = 1;
    t.t = {0, 1};
    NFrame fr = frame_of_nabla(t);
    CHECK(fr.nu[0] == (1ull << 1));

    NablaTable bad;
    bad.size = 1;
    bad.t = {1, 0};  // not monotone
    CHECK_THROWS_AS(frame_of_nabla(bad), std::invalid_argument);
}

TEST_CASE("duality round trips at |W| <= 2") {
    for (int n : {1, 2}) {
        for (const NFrame& fr : all_monotone_nframes(n)) {
            // (F*)_* = F
            CHECK(frame_of_nabla(nabla_table(fr)) == fr);
        }
        // (A_*)* = A over all monotone operations
        for (Mask f0 : upward_closed_families(n)) {
            NFrame fr;
            fr.size = n;
            fr.nu.assign(n, f0);
            NablaTable t = nabla_table(fr);
            CHECK(nabla_table(frame_of_nabla(t)) == t);
        }
    }
    // conditional side, sampled
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        CFrame fr = random_cframe(2, rng);
        CHECK(frame_of_cond(cond_table(fr)) == fr);
        CondTable t = cond_table(fr);
        CHECK(cond_table(frame_of_cond(t)) == t);
    }
    for (const CFrame& fr : boundary_cframes(2)) CHECK(frame_of_cond(cond_table(fr)) == fr);
}

TEST_CASE("star produces the expected two-sorted frame") {
    NFrame f;
    f.size = 1;
    f.nu.assign(1, 1ull << 1);
    TSNFrame k = star(f);
    CHECK(k.nx == 1);
    CHECK(k.ny == 2);
    CHECK(k.nu.get(0, 1));       // R_nu = {(0,{0})}
    CHECK_FALSE(k.nu.get(0, 0));
    CHECK(k.nuc.get(0, 0));      // R_nuc = {(0,{})}
    CHECK_FALSE(k.nuc.get(0, 1));
    CHECK(k.ni.get(1, 0));       // R_ni = {({0},0)}
    CHECK(k.nni.get(0, 0));      // R_nni = {({},0)}

    for (const NFrame& fr : all_monotone_nframes(2)) CHECK(is_supported(star(fr)));
}

TEST_CASE("costar undoes star") {
    for (int n : {1, 2}) {
        for (const NFrame& fr : all_monotone_nframes(n)) CHECK(costar(star(fr)) == fr);
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        CFrame fr = random_cframe(2, rng);
        CHECK(costar(star(fr)) == fr);
    }
    // star / costar fixed point characterisation on the image
    for (const NFrame& fr : all_monotone_nframes(2)) {
        TSNFrame k = star(fr);
        CHECK(star(costar(k)) == k);
    }
    // unsupported input is reported
    TSNFrame bad;
    bad.nx = 1;
    bad.ny = 2;
    bad.ni = Rel(2, 1);
    bad.ni.row[1] = 1;
    bad.nni = Rel(2, 1);
    bad.nni.row[0] = 1;
    bad.nu = Rel(1, 2);
    bad.nuc = Rel(1, 2);
    CHECK_THROWS_AS(costar(bad), std::invalid_argument);
}

TEST_CASE("bullet_down recovers the single-type operation") {
    for (const NFrame& fr : all_monotone_nframes(2)) {
        NablaTable t = bullet_down(star(fr));
        CHECK(t == nabla_table(fr));
    }
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        CFrame fr = random_cframe(2, rng);
        CHECK(bullet_down(star(fr)) == cond_table(fr));
    }
    // empty R_nu gives the constant-empty operation
    TSNFrame k;
    k.nx = 2;
    k.ny = 4;
    k.ni = Rel(4, 2);
    k.nni = Rel(4, 2);
    for (int z = 0; z < 4; ++z) {
        k.ni.row[z] = (Mask)z;
        k.nni.row[z] = full_mask(2) & ~(Mask)z;
    }
    k.nu = Rel(2, 4);
    k.nuc = Rel(2, 4);
    for (int w = 0; w < 2; ++w) k.nuc.row[w] = full_mask(4);
    REQUIRE(is_supported(k));
    NablaTable t = bullet_down(k);
    for (Mask z = 0; z < 4; ++z) CHECK(t.at(z) == 0);
}

TEST_CASE("bullet_up builds the canonical two-sorted presentation") {
    // [ni]{0} over A = P({0}) is {{}, {0}}
    NablaTable ident;
    ident.size = 1;
    ident.t = {0, 1};
    TSNFrame k = bullet_up(ident);
    NOps ops(k);
    CHECK(ops.box_ni(1) == full_mask(k.ny));
    // <nu> of the empty set is bottom
    CHECK(ops.diam_nu(0) == 0);
    CHECK(is_supported(k));

    // (C^bullet)_bullet = C for all monotone operations with |W| <= 2
    for (int n : {1, 2}) {
        for (Mask fam : upward_closed_families(n)) {
            NFrame fr;
            fr.size = n;
            fr.nu.assign(n, fam);
            NablaTable t = nabla_table(fr);
            CHECK(bullet_down(bullet_up(t)) == t);
            // and bullet_up of the complex algebra is exactly star
            CHECK(bullet_up(t) == star(fr));
        }
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        CFrame fr = random_cframe(2, rng);
        CondTable t = cond_table(fr);
        CHECK(bullet_down(bullet_up(t)) == t);
        CHECK(bullet_up(t) == star(fr));
    }

    NablaTable bad;
    bad.size = 1;
    bad.t = {1, 0};
    CHECK_THROWS_AS(bullet_up(bad), std::invalid_argument);
}

TEST_CASE("discrete duality for two-sorted frames is the identity of encodings") {
    // exhaustive at |X| = 2, |Y| = 3 on the n-side
    int nx = 2, ny = 3;
    std::mt19937_64 rng(23);
    std::size_t rel_space = 1ull << (nx * ny);
    for (Mask mi = 0; mi < rel_space; ++mi)
        for (Mask mn = 0; mn < rel_space; mn += 3) {  // decimated double loop for runtime
            TSNFrame k;
            k.nx = nx;
            k.ny = ny;
            k.ni = Rel(ny, nx);
            k.nni = Rel(ny, nx);
            k.nu = Rel(nx, ny);
            k.nuc = Rel(nx, ny);
            for (int y = 0; y < ny; ++y) {
                k.ni.row[y] = (mi >> (y * nx)) & full_mask(nx);
                k.nni.row[y] = (mn >> (y * nx)) & full_mask(nx);
            }
            k.nu.row[0] = (Mask)(rng() & full_mask(ny));
            k.nu.row[1] = (Mask)(rng() & full_mask(ny));
            k.nuc.row[0] = (Mask)(rng() & full_mask(ny));
            k.nuc.row[1] = (Mask)(rng() & full_mask(ny));
            REQUIRE(frame_of_complex(k) == k);
        }
    // c-side with random ternary tables
    for (int i = 0; i < 2000; ++i) {
        TSCFrame k;
        k.nx = 2;
        k.ny = 3;
        k.ni = Rel(3, 2);
        k.nni = Rel(3, 2);
        for (int y = 0; y < 3; ++y) {
            k.ni.row[y] = rng() & full_mask(2);
            k.nni.row[y] = rng() & full_mask(2);
        }
        k.tf.assign(6, 0);
        for (auto& m : k.tf) m = rng() & full_mask(2);
        REQUIRE(frame_of_complex(k) == k);
    }
}

TEST_CASE("prop 2 round trips at |W| = 3 are exact") {
    auto frames = all_monotone_nframes(3);
    REQUIRE(frames.size() == 8000);
    for (const NFrame& fr : frames) REQUIRE(frame_of_nabla(nabla_table(fr)) == fr);
}
