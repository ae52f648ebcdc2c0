#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "mtmodal/alba.hpp"
#include "mtmodal/inductive.hpp"
#include "mtmodal/translate.hpp"

using namespace mtm;

namespace {

// the translated axiom as an inequality lhs <= rhs
std::pair<MF, MF> translated(AxiomId id) {
    SF ax = axiom_formula(id);
    Mode m = axiom_mode(id);
    if (ax->k == SK::Or && ax->a->k == SK::Neg) {
        MTSequent s = translate_sequent(ax->a->a, ax->b, m);
        return {s.lhs, s.rhs};
    }
    MTSequent s = translate_sequent(sTop(), ax, m);
    return {s.lhs, s.rhs};
}

void leaf_signs(const SignedTree& t, std::vector<int>& out) {
    if (t.children.empty()) {
        out.push_back(t.sign);
        return;
    }
    for (const auto& c : t.children) leaf_signs(c, out);
}

}  // namespace

TEST_CASE("sign propagation") {
    // +(~p): leaf gets -
    SignedTree t = signed_tree(parse_mt("~ p", Sig::MTNabla), +1);
    REQUIRE(t.children.size() == 1);
    CHECK(t.children[0].sign == -1);

    // -([ni] p): leaf -, node SLR
    SignedTree u = signed_tree(parse_mt("[ni] p", Sig::MTNabla), -1);
    CHECK(u.children[0].sign == -1);
    CHECK(caps_name(u.caps) == "SLR");

    // +(a |> A): first child -, second +, node SRA
    SignedTree v = signed_tree(parse_mt("([ni] p |> q)", Sig::MTCond), +1);
    CHECK(v.children[0].sign == -1);
    CHECK(v.children[1].sign == +1);
    CHECK(caps_name(v.caps) == "SRA");
}

TEST_CASE("flipping the root sign flips every leaf sign") {
    std::mt19937_64 rng(77);
    std::vector<std::string> props{"p", "q"};
    for (int i = 0; i < 300; ++i) {
        Sig sig = i % 2 ? Sig::MTNabla : Sig::MTCond;
        MF f = mtmgen::gen_mt(4, sig, Sort::S, props, rng);
        std::vector<int> pos, neg;
        leaf_signs(signed_tree(f, +1), pos);
        leaf_signs(signed_tree(f, -1), neg);
        REQUIRE(pos.size() == neg.size());
        for (std::size_t j = 0; j < pos.size(); ++j) REQUIRE(pos[j] == -neg[j]);
    }
}

TEST_CASE("good branches") {
    // +(<nu>[ni]p): PIA below skeleton
    SignedTree t = signed_tree(parse_mt("<nu> [ni] p", Sig::MTNabla), +1);
    auto bs = branches(t);
    REQUIRE(bs.size() == 1);
    CHECK(is_good_branch(bs[0]));

    // +(<nu>[ni]<nu>[ni]p): skeleton above PIA above skeleton
    SignedTree u = signed_tree(parse_mt("<nu> [ni] <nu> [ni] p", Sig::MTNabla), +1);
    auto bu = branches(u);
    REQUIRE(bu.size() == 1);
    CHECK_FALSE(is_good_branch(bu[0]));

    // a single-leaf branch is good
    SignedTree w = signed_tree(parse_mt("p", Sig::MTNabla), +1);
    auto bw = branches(w);
    REQUIRE(bw.size() == 1);
    CHECK(bw[0].nodes.empty());
    CHECK(is_good_branch(bw[0]));
}

TEST_CASE("classifier reproduces the analytic column") {
    for (AxiomId id : {AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::T, AxiomId::D, AxiomId::CS,
                       AxiomId::CEM, AxiomId::ID, AxiomId::CN}) {
        auto [l, r] = translated(id);
        INFO(axiom_name(id));
        ClassifyResult res = classify({l, r, std::nullopt, std::nullopt});
        CHECK(res.verdict == ClassifyResult::Verdict::AnalyticInductive);
    }
    for (AxiomId id : {AxiomId::Four, AxiomId::FourPrime, AxiomId::Five, AxiomId::B,
                       AxiomId::Tcond}) {
        auto [l, r] = translated(id);
        INFO(axiom_name(id));
        ClassifyResult res = classify({l, r, std::nullopt, std::nullopt});
        CHECK(res.verdict == ClassifyResult::Verdict::NotAnalytic);
    }
}

TEST_CASE("classifier matches the paper's witness for axiom C") {
    auto [l, r] = translated(AxiomId::C);
    // epsilon(p) = epsilon(q) = 1, p < q
    std::vector<int> eps{1, 1};
    PropOrder om(2, std::vector<bool>(2, false));
    om[0][1] = true;
    ClassifyResult res = classify({l, r, eps, om});
    CHECK(res.verdict == ClassifyResult::Verdict::AnalyticInductive);
}

TEST_CASE("classifier input bounds") {
    MF big = parse_mt("((p1 & p2) & (p3 & p4)) & p5", Sig::MTNabla);
    CHECK_THROWS_AS(classify({big, big, std::nullopt, std::nullopt}), ResourceLimit);
}
