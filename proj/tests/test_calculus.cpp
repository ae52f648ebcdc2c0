#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "mtmodal/calculus.hpp"
#include "mtmodal/constructions.hpp"
#include "mtmodal/translate.hpp"

using namespace mtm;

namespace {

std::string data_dir() { return std::string(MTM_SOURCE_DIR) + "/data/derivations"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RuleSet full_rules(Sig sig) {
    std::set<AxiomId> exts;
    if (sig == Sig::MTNabla)
        exts = {AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::D, AxiomId::T};
    else
        exts = {AxiomId::ID, AxiomId::CS, AxiomId::CEM, AxiomId::CN};
    return ruleset(sig, exts, true);
}

// random formulas inside the calculus fragments
MF gen_calc(int depth, Sig sig, Sort sort, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    const char* props[2] = {"p", "q"};
    if (sort == Sort::S) {
        switch (pick(rng)) {
            case 0: return mProp(props[rng() % 2]);
            case 1: return mk(rng() & 1 ? MK::Top : MK::Bot);
            case 2: return mk(MK::Neg, gen_calc(depth - 1, sig, Sort::S, rng));
            case 3: case 4:
                return mk(MK::And, gen_calc(depth - 1, sig, Sort::S, rng),
                          gen_calc(depth - 1, sig, Sort::S, rng));
            default:
                if (sig == Sig::MTCond)
                    return mk(MK::Triangle, gen_calc(depth - 1, sig, Sort::N, rng),
                              gen_calc(depth - 1, sig, Sort::S, rng));
                return mk(rng() & 1 ? MK::DiamNu : MK::BoxNuc,
                          gen_calc(depth - 1, sig, Sort::N, rng));
        }
    }
    if (sig == Sig::MTCond && depth > 0 && (rng() % 4 == 0))
        return mk(MK::Cap, gen_calc(depth - 1, sig, Sort::N, rng),
                  gen_calc(depth - 1, sig, Sort::N, rng));
    if (sig == Sig::MTCond && (rng() & 1))
        return mk(MK::BoxArrNotNi, gen_calc(depth - 1, sig, Sort::S, rng));
    if (sig == Sig::MTNabla && (rng() & 1))
        return mk(MK::DiamNotNi, gen_calc(depth - 1, sig, Sort::S, rng));
    return mk(MK::BoxNi, gen_calc(depth - 1, sig, Sort::S, rng));
}

}  // namespace

TEST_CASE("ruleset assembly") {
    RuleSet base = ruleset(Sig::MTNabla, {}, false);
    CHECK(base.find("Id"));
    CHECK(base.find("nu_L"));
    CHECK_FALSE(base.find("Cut_S"));
    CHECK_FALSE(base.find("T"));
    CHECK_FALSE(base.find("tri_L"));

    RuleSet ext = ruleset(Sig::MTCond, {AxiomId::ID}, false);
    CHECK(ext.find("ID"));
    CHECK(ext.find("tri_L"));
    CHECK_FALSE(ext.find("nu_L"));

    CHECK_THROWS_AS(ruleset(Sig::MTNabla, {AxiomId::CS}, false), std::invalid_argument);
    CHECK_THROWS_AS(ruleset(Sig::MTCond, {AxiomId::N}, false), std::invalid_argument);
    // the printed T> axiom has no analytic rule
    CHECK_THROWS_AS(ruleset(Sig::MTCond, {AxiomId::Tcond}, false), std::invalid_argument);
}

TEST_CASE("derivation corpus passes the checker") {
    for (const char* name : {"n", "p", "t", "id", "cs", "cem", "c", "d", "cn", "m", "rcea",
                             "rck2", "rck3", "btri_lemma"}) {
        std::string text = slurp(data_dir() + "/" + std::string(name) + ".drv");
        Sig sig = detect_sig(text);
        Derivation d = parse_derivation(text, sig);
        CheckResult r = check_derivation(d, full_rules(sig));
        INFO(name << ": " << r.path << " " << r.reason);
        REQUIRE(r.ok);
    }
}

TEST_CASE("closedness and the hypothesis leaves") {
    std::string t = slurp(data_dir() + "/t.drv");
    CHECK(derivation_closed(parse_derivation(t, Sig::MTNabla)));
    std::string m = slurp(data_dir() + "/m.drv");
    CHECK_FALSE(derivation_closed(parse_derivation(m, Sig::MTNabla)));
}

TEST_CASE("checker reports failures with a path") {
    // rename the T rule to P: schema mismatch at the root
    std::string text = slurp(data_dir() + "/t.drv");
    std::string broken = text;
    broken.replace(broken.find("\nT:") + 1, 2, "P:");
    Derivation d = parse_derivation(broken, Sig::MTNabla);
    CheckResult r = check_derivation(d, full_rules(Sig::MTNabla));
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root");

    // unknown rule name
    std::string unk = text;
    unk.replace(unk.find("ni_L"), 4, "nu_X");
    CheckResult r2 = check_derivation(parse_derivation(unk, Sig::MTNabla),
                                      full_rules(Sig::MTNabla));
    CHECK_FALSE(r2.ok);
    CHECK(r2.reason.find("unknown rule") != std::string::npos);
}

TEST_CASE("derivation print / parse round trip") {
    for (const char* name : {"t", "id", "rck2"}) {
        std::string text = slurp(data_dir() + "/" + std::string(name) + ".drv");
        Sig sig = detect_sig(text);
        Derivation d = parse_derivation(text, sig);
        Derivation d2 = parse_derivation(print_derivation(d), sig);
        CHECK(print_derivation(d) == print_derivation(d2));
    }
}

TEST_CASE("prove: basics") {
    RuleSet rs = ruleset(Sig::MTNabla, {}, false);
    auto d = prove(parse_sequent("p |- p", Sig::MTNabla), rs, {4, 2000, 2});
    REQUIRE(d.has_value());
    CHECK(d->rule == "Id");

    auto none = prove(parse_sequent("p |- q", Sig::MTNabla), rs, {6, 2000, 2});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("prove: translated axioms with matching extensions") {
    struct Goal {
        AxiomId ext;
        Sig sig;
        const char* goal;
    };
    for (const Goal& g : {Goal{AxiomId::N, Sig::MTNabla, "top |- [nuc] <nni> top"},
                          Goal{AxiomId::P, Sig::MTNabla, "top |- ~ <nu> [ni] bot"},
                          Goal{AxiomId::T, Sig::MTNabla, "<nu> [ni] p |- p"},
                          Goal{AxiomId::ID, Sig::MTCond,
                               "top |- (([ni] p ^ [nni> p) |> p)"}}) {
        RuleSet rs = ruleset(g.sig, {g.ext}, false);
        INFO(g.goal);
        auto d = prove(parse_sequent(g.goal, g.sig), rs, {14, 10000, 2});
        REQUIRE(d.has_value());
        CheckResult r = check_derivation(*d, rs);
        INFO(print_derivation(*d));
        REQUIRE(r.ok);
        CHECK(derivation_closed(*d));
    }
}

TEST_CASE("identity expansion: A |- A is cut-free provable") {
    std::mt19937_64 rng(314);
    for (Sig sig : {Sig::MTNabla, Sig::MTCond}) {
        RuleSet rs = ruleset(sig, {}, false);
        for (int i = 0; i < 30; ++i) {
            MF a = gen_calc(2, sig, Sort::S, rng);
            Sequent goal{stF(a), stF(a)};
            INFO(render(goal));
            auto d = prove(goal, rs, {14, 5000, 2});
            REQUIRE(d.has_value());
            CHECK(check_derivation(*d, rs).ok);
        }
    }
}

TEST_CASE("cut admissibility smoke") {
    // goals (A {&} B) |- (A {|} B): provable with Cut through A at depth <= 8
    // (weakening each side of A |- A), and cut-free within depth 14
    std::mt19937_64 rng(2718);
    int done = 0;
    for (Sig sig : {Sig::MTNabla, Sig::MTCond}) {
        RuleSet cutfree = ruleset(sig, {}, false);
        RuleSet withcut = ruleset(sig, {}, true);
        while (done < (sig == Sig::MTNabla ? 25 : 50)) {
            MF a = gen_calc(1, sig, Sort::S, rng);
            MF b = gen_calc(1, sig, Sort::S, rng);
            Sequent axa{stF(a), stF(a)};
            auto da = prove(axa, cutfree, {6, 3000, 2});
            if (!da) continue;  // identity too deep for the cut-depth budget, skip
            // with cut: W_S(da) gives A&B |- A; W_S(da) gives A |- A|B; Cut joins
            Derivation left{Sequent{stMk(STK::HatAnd, stF(a), stF(b)), stF(a)}, "W_S", {*da}};
            Derivation right{Sequent{stF(a), stMk(STK::CheckOr, stF(a), stF(b))}, "W_S", {*da}};
            Derivation cut{Sequent{left.seq.ante, right.seq.succ}, "Cut_S", {left, right}};
            REQUIRE(check_derivation(cut, withcut).ok);
            // the cut-free prover reaches the same goal within depth 14
            auto d = prove(cut.seq, cutfree, {14, 10000, 2});
            INFO(render(cut.seq));
            REQUIRE(d.has_value());
            REQUIRE(check_derivation(*d, cutfree).ok);
            ++done;
        }
    }
    CHECK(done == 50);
}

TEST_CASE("rule interpretations") {
    RuleSet rs = full_rules(Sig::MTNabla);
    // display postulate <in>/[ni]: forall g x [ <in> g <= x <=> g <= [ni] x ]
    const Rule* dp = rs.find("dp_ni");
    REQUIRE(dp);
    auto qs = interpret_rule(*dp, Sig::MTNabla);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].biconditional);
    CHECK(render(qs[0].ante[0].l) == "<in> i1");

    // extension rule C: forall g d h [ <nni> (<in> g & <in> d) <= h
    //                                   => (<nu> g & <nu> d) <= [nuc] h ]
    const Rule* c = rs.find("C");
    REQUIRE(c);
    auto qc = interpret_rule(*c, Sig::MTNabla);
    REQUIRE(qc.size() == 1);
    CHECK_FALSE(qc[0].biconditional);
    CHECK(render(qc[0].ante[0].l) == "<nni> (<in> i1 & <in> i2)");
    CHECK(render(qc[0].cons.l) == "(<nu> i1 & <nu> i2)");
    CHECK(render(qc[0].cons.r) == "[nuc] i3");

    // extension rule P: forall g [ g <= [ni] bot => top <= ~ <nu> g ]
    const Rule* p = rs.find("P");
    REQUIRE(p);
    auto qp = interpret_rule(*p, Sig::MTNabla);
    CHECK(render(qp[0].ante[0].r) == "[ni] bot");
    CHECK(render(qp[0].cons.r) == "~ <nu> i1");
}

TEST_CASE("base rules are sound on every small frame") {
    auto frames = all_monotone_nframes(2);
    RuleSet rsn = ruleset(Sig::MTNabla, {}, true);
    for (const NFrame& fr : frames) {
        TSNFrame k = star(fr);
        for (const auto& r : rsn.rules) {
            INFO(r.name);
            REQUIRE(rule_sound_on(r, k));
        }
    }
    std::mt19937_64 rng(555);
    RuleSet rsc = ruleset(Sig::MTCond, {}, true);
    std::vector<CFrame> cframes = all_cframes(1);
    for (int i = 0; i < 30; ++i) cframes.push_back(random_cframe(2, rng));
    for (const CFrame& fr : cframes) {
        TSCFrame k = star(fr);
        for (const auto& r : rsc.rules) {
            INFO(r.name);
            REQUIRE(rule_sound_on(r, k));
        }
    }
}

TEST_CASE("extension rules are sound where their condition holds") {
    auto frames = all_monotone_nframes(2);
    auto f1 = all_monotone_nframes(1);
    frames.insert(frames.end(), f1.begin(), f1.end());
    for (AxiomId id : {AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::D, AxiomId::T}) {
        RuleSet rs = ruleset(Sig::MTNabla, {id}, false);
        const Rule* r = rs.find(axiom_name(id));
        REQUIRE(r);
        for (const NFrame& fr : frames) {
            if (!frame_condition(id, fr)) continue;
            INFO(axiom_name(id));
            REQUIRE(rule_sound_on(*r, star(fr)));
        }
    }
    std::mt19937_64 rng(808);
    std::vector<CFrame> cframes = all_cframes(1);
    for (int i = 0; i < 150; ++i) cframes.push_back(random_cframe(2, rng));
    for (const CFrame& b : boundary_cframes(2)) cframes.push_back(b);
    for (AxiomId id : {AxiomId::ID, AxiomId::CS, AxiomId::CEM, AxiomId::CN}) {
        RuleSet rs = ruleset(Sig::MTCond, {id}, false);
        const Rule* r = rs.find(axiom_name(id));
        REQUIRE(r);
        for (const CFrame& fr : cframes) {
            if (!frame_condition(id, fr)) continue;
            INFO(axiom_name(id));
            REQUIRE(rule_sound_on(*r, star(fr)));
        }
    }
}

TEST_CASE("proved goals are semantically valid (soundness cross-check)") {
    std::mt19937_64 rng(4242);
    auto frames = all_monotone_nframes(2);
    RuleSet rs = ruleset(Sig::MTNabla, {AxiomId::N, AxiomId::C}, false);
    int proved = 0;
    for (int i = 0; i < 100; ++i) {
        MF l = gen_calc(3, Sig::MTNabla, Sort::S, rng);
        MF r = gen_calc(3, Sig::MTNabla, Sort::S, rng);
        Sequent goal{stF(l), stF(r)};
        auto d = prove(goal, rs, {7, 300, 2});
        if (!d) continue;
        ++proved;
        REQUIRE(check_derivation(*d, rs).ok);
        MTSequent s{l, r};
        for (const NFrame& fr : frames) {
            if (!frame_condition(AxiomId::N, fr) || !frame_condition(AxiomId::C, fr)) continue;
            INFO(render(s));
            REQUIRE(valid(star(fr), s));
        }
    }
    CHECK(proved >= 10);  // the generator must exercise the prover
}

TEST_CASE("conservativity spot check via the translation") {
    std::mt19937_64 rng(999);
    std::vector<std::string> props{"p", "q"};
    auto frames = all_monotone_nframes(2);
    RuleSet rs = ruleset(Sig::MTNabla, {}, false);
    int proved = 0;
    for (int i = 0; i < 150; ++i) {
        SF l = [&] {
            switch (rng() % 4) {
                case 0: return sProp(props[rng() % 2]);
                case 1: return sNabla(sProp(props[rng() % 2]));
                case 2: return sAnd(sProp(props[rng() % 2]), sNabla(sProp(props[rng() % 2])));
                default: return sNeg(sProp(props[rng() % 2]));
            }
        }();
        SF r = rng() & 1 ? l : sProp(props[rng() % 2]);
        MTSequent tr = translate_sequent(l, r, Mode::Nabla);
        Sequent goal{stF(tr.lhs), stF(tr.rhs)};
        auto d = prove(goal, rs, {8, 300, 2});
        if (!d) continue;
        ++proved;
        for (const NFrame& fr : frames) REQUIRE(valid(fr, l, r));
    }
    CHECK(proved >= 10);
}
