#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "mtmodal/syntax.hpp"

using namespace mtm;

TEST_CASE("single-type parsing") {
    SF f = parse_single("nabla p", Mode::Nabla);
    CHECK(f->k == SK::Nabla);
    CHECK(f->a->k == SK::Prop);
    CHECK(f->a->name == "p");

    SF g = parse_single("(p > q)", Mode::Cond);
    CHECK(g->k == SK::Cond);
    CHECK(g->a->name == "p");
    CHECK(g->b->name == "q");

    CHECK_THROWS_AS(parse_single("(p > q)", Mode::Nabla), ParseError);
    CHECK_THROWS_AS(parse_single("nabla p", Mode::Cond), ParseError);
    CHECK_THROWS_AS(parse_single("p &", Mode::Nabla), ParseError);
    CHECK_THROWS_AS(parse_single("p & q & r", Mode::Nabla), ParseError);

    // sugar
    SF h = parse_single("p -> q", Mode::Nabla);
    CHECK(h->k == SK::Or);
    CHECK(h->a->k == SK::Neg);
}

TEST_CASE("multi-type parsing and sorts") {
    MF f = parse_mt("<nu> [ni] p", Sig::MTNabla);
    CHECK(f->k == MK::DiamNu);
    CHECK(f->a->k == MK::BoxNi);
    CHECK(f->a->a->name == "p");

    MF g = parse_mt("(([ni] p ^ [nni> p) |> q)", Sig::MTCond);
    CHECK(g->k == MK::Triangle);
    CHECK(g->a->k == MK::Cap);
    CHECK(g->a->a->k == MK::BoxNi);
    CHECK(g->a->b->k == MK::BoxArrNotNi);
    CHECK(g->b->name == "q");

    CHECK_THROWS_AS(parse_mt("[ni] [ni] p", Sig::MTNabla), ParseError);   // sort mismatch
    CHECK_THROWS_AS(parse_mt("<nu> p", Sig::MTNabla), ParseError);        // S under <nu>
    CHECK_THROWS_AS(parse_mt("<nni> p", Sig::MTCond), ParseError);        // wrong signature
    CHECK_THROWS_AS(parse_mt("<in> [ni] p", Sig::MTNabla), ParseError);   // adjoint not exposed
    CHECK(parse_mt("<in> [ni] p", Sig::MTNabla, true)->k == MK::DiamIn);
}

TEST_CASE("rendering is canonical") {
    CHECK(render(sNabla(sProp("p"))) == "nabla p");
    CHECK(render(parse_mt("<nu> [ni] p", Sig::MTNabla)) == "<nu> [ni] p");
    MTSequent s{mProp("p"), mProp("p")};
    CHECK(render(s) == "p |- p");
    CHECK(render(parse_single("nabla p & nabla q", Mode::Nabla)) ==
          "(nabla p & nabla q)");
}

TEST_CASE("round trip: single-type languages") {
    std::mt19937_64 rng(1729);
    std::vector<std::string> props{"p", "q", "r"};
    for (Mode mode : {Mode::Nabla, Mode::Cond}) {
        for (int i = 0; i < 1000; ++i) {
            SF t = mtmgen::gen_single(6, mode, props, rng);
            SF back = parse_single(render(t), mode);
            REQUIRE(equal(t, back));
        }
    }
}

TEST_CASE("round trip: multi-type languages") {
    std::mt19937_64 rng(1730);
    std::vector<std::string> props{"p", "q", "r"};
    for (Sig sig : {Sig::MTNabla, Sig::MTCond}) {
        for (int i = 0; i < 1000; ++i) {
            MF t = mtmgen::gen_mt(6, sig, Sort::S, props, rng);
            MF back = parse_mt(render(t), sig);
            REQUIRE(equal(t, back));
            REQUIRE(sort_check(t));
            REQUIRE(in_mt_language(t, sig));
        }
    }
}

TEST_CASE("sort checker rejects ill-sorted trees") {
    // hand-built ill-sorted corpus: twenty trees with a wrong child sort
    std::vector<MF> bad;
    MF p = mProp("p");
    MF one = mk(MK::One);
    bad.push_back(mk_raw(MK::BoxNi, Sort::N, one));                 // [ni] expects S
    bad.push_back(mk_raw(MK::DiamNu, Sort::S, p));                  // <nu> expects N
    bad.push_back(mk_raw(MK::Neg, Sort::S, one));                   // ~ expects S
    bad.push_back(mk_raw(MK::SimNeg, Sort::N, p));                  // sim expects N
    bad.push_back(mk_raw(MK::And, Sort::S, p, one));                // & joins S
    bad.push_back(mk_raw(MK::Cap, Sort::N, one, p));                // ^ joins N
    bad.push_back(mk_raw(MK::Triangle, Sort::S, p, p));             // |> expects N first
    bad.push_back(mk_raw(MK::Triangle, Sort::S, one, one));         // |> expects S second
    bad.push_back(mk_raw(MK::BoxNuc, Sort::S, p));                  // [nuc] expects N
    bad.push_back(mk_raw(MK::DiamNotNi, Sort::N, one));             // <nni> expects S
    bad.push_back(mk_raw(MK::BoxArrNotNi, Sort::N, one));           // [nni> expects S
    bad.push_back(mk_raw(MK::Cup, Sort::N, p, one));                // cup joins N
    bad.push_back(mk_raw(MK::Or, Sort::S, one, one));               // | joins S
    bad.push_back(mk_raw(MK::BoxNi, Sort::S, p));                   // wrong result sort
    bad.push_back(mk_raw(MK::Prop, Sort::N));                       // props are S-sort
    bad.push_back(mk_raw(MK::DiamIn, Sort::S, p));                  // <in> expects N
    bad.push_back(mk_raw(MK::BoxNotIn, Sort::S, p));                // [nin] expects N
    bad.push_back(mk_raw(MK::BlackTriUp, Sort::S, p, p));           // <| expects N first
    bad.push_back(mk_raw(MK::BlackTriRight, Sort::N, one, p));      // |>> expects S first
    bad.push_back(mk_raw(MK::BoxBNu, Sort::N, one));                // [bnu] expects S
    REQUIRE(bad.size() == 20);
    for (const auto& t : bad) CHECK_FALSE(sort_check(t));
}

TEST_CASE("structures parse with polarity checking") {
    Sequent s = parse_sequent("{<nu>} [ni] p |- p", Sig::MTNabla);
    CHECK(s.ante->k == STK::HatDiamNu);
    CHECK(s.succ->k == STK::Formula);
    CHECK(render(s) == "{<nu>} [ni] p |- p");

    // hat connective on the succedent side is rejected
    CHECK_THROWS(parse_sequent("p |- {<nu>} [ni] p", Sig::MTNabla));
    // but a hat under a polarity-reversing position is fine
    Sequent t = parse_sequent("{top} |- {~} {<nu>} [ni] p", Sig::MTNabla);
    CHECK(polarity_ok(t));

    Sequent u = parse_sequent("{top} |- ([ni] p {^} [nni> p) {|>} p", Sig::MTCond);
    CHECK(u.succ->k == STK::CheckTri);

    // round trip on structural sequents
    {
        Sequent q = parse_sequent("{<nu>} [ni] p |- p", Sig::MTNabla);
        CHECK(equal(q, parse_sequent(render(q), Sig::MTNabla)));
    }
    {
        Sequent q = parse_sequent("{top} |- ([ni] p {^} [nni> p) {|>} p", Sig::MTCond);
        CHECK(equal(q, parse_sequent(render(q), Sig::MTCond)));
    }
    {
        Sequent q = parse_sequent("[nni> p |- {[nni>} {<in>} [ni] p", Sig::MTCond);
        CHECK(equal(q, parse_sequent(render(q), Sig::MTCond)));
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_single("p & & q", Mode::Nabla);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}
