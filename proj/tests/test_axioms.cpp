#include <catch2/catch_amalgamated.hpp>

#include "argrank/axioms.hpp"
#include "test_helpers.hpp"

using namespace argrank;
using testing_support::f1;
using testing_support::f3;
using testing_support::f4;

TEST_CASE("SC violations by CP-majority and Banzhaf") {
    {
        AF af = f3();
        ArgumentRanking r = apply(SocialRankingId::cp_majority, ExtRankingId::r_ad, af);
        CheckReport rep = check_sc(af, r);
        REQUIRE_FALSE(rep.holds);
        CHECK(rep.witnesses.front().x == af.index_of("a"));
        CHECK(rep.witnesses.front().y == af.index_of("c"));
    }
    {
        AF af = f4();
        ArgumentRanking r = apply(SocialRankingId::banzhaf, ExtRankingId::r_ad, af);
        CheckReport rep = check_sc(af, r);
        REQUIRE_FALSE(rep.holds);
        CHECK(rep.witnesses.front().x == af.index_of("b"));
        CHECK(rep.witnesses.front().y == af.index_of("a"));
    }
    {
        // no self-attackers: vacuously satisfied
        AF af = f1();
        ArgumentRanking r = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
        CHECK(check_sc(af, r).holds);
    }
}

TEST_CASE("sigma-C on F1") {
    AF af = f1();
    ArgumentRanking lex = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
    CHECK(check_sigma_c(af, SemanticsId::co, lex).holds);

    // the singleton ranking ties credulous c with rejected b
    ArgumentRanking st = apply(SocialRankingId::singleton, ExtRankingId::r_ad, af);
    CheckReport rep = check_sigma_c(af, SemanticsId::co, st);
    REQUIRE_FALSE(rep.holds);
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.x == af.index_of("c") && w.y == af.index_of("b")) found = true;
    CHECK(found);

    AF free({"x", "y"}, {});
    ArgumentRanking r = apply(SocialRankingId::lex_cel, ExtRankingId::r_ad, free);
    CHECK(check_sigma_c(free, SemanticsId::co, r).holds);  // nothing rejected
}

TEST_CASE("sigma-sk-C on F1") {
    AF af = f1();
    ArgumentRanking lex = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
    CHECK(check_sigma_sk_c(af, SemanticsId::co, lex).holds);

    // the best-rank ranking ties skeptical a with credulous c
    ArgumentRanking foc = apply(SocialRankingId::focusing, ExtRankingId::r_ad, af);
    CheckReport rep = check_sigma_sk_c(af, SemanticsId::co, foc);
    REQUIRE_FALSE(rep.holds);
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.x == af.index_of("a") && w.y == af.index_of("c")) found = true;
    CHECK(found);

    AF solo({"a"}, {});
    ArgumentRanking r = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, solo);
    CHECK(check_sigma_sk_c(solo, SemanticsId::co, r).holds);
}

TEST_CASE("refinement is the conjunction") {
    AF af = f1();
    ArgumentRanking lex = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
    CHECK(check_refinement(af, SemanticsId::co, lex).holds);
    ArgumentRanking foc = apply(SocialRankingId::focusing, ExtRankingId::r_ad, af);
    CheckReport rep = check_refinement(af, SemanticsId::co, foc);
    CHECK_FALSE(rep.holds);  // sk-C part fails
    ArgumentRanking st = apply(SocialRankingId::singleton, ExtRankingId::r_ad, af);
    CHECK_FALSE(check_refinement(af, SemanticsId::co, st).holds);  // both parts fail
}

TEST_CASE("sigma-generalisation checks") {
    AF af = f1();
    CHECK(check_generalisation(af, ExtRankingId::r_co, SemanticsId::co).holds);
    CHECK(check_generalisation(af, ExtRankingId::r_pr, SemanticsId::pr).holds);

    // r-ad does not generalise co: the empty set is maximal but not complete
    AF chain({"a", "b"}, {{0, 1}});
    CheckReport rep = check_generalisation(chain, ExtRankingId::r_ad, SemanticsId::co);
    REQUIRE_FALSE(rep.holds);
    CHECK_FALSE(rep.witnesses.empty());
    CHECK_FALSE(check_generalisation(chain, ExtRankingId::r_ad, SemanticsId::co,
                                     PrincipleId::sigma_soundness)
                    .holds);
    CHECK(check_generalisation(chain, ExtRankingId::r_ad, SemanticsId::co,
                               PrincipleId::sigma_completeness)
              .holds);
}

TEST_CASE("Pareto-efficiency checker") {
    AF af = f1();
    ExtensionPreorder pre(af, ExtRankingId::r_co);
    RankTable rt = rank_table(pre);
    CHECK(check_pareto(rt, lex_cel(rt, ExtRankingId::r_co)).holds);

    // all-tied ranking on a table with a dominance pair must be flagged
    ArgumentRanking tied(af.size(), SocialRankingId::lex_cel, ExtRankingId::r_co);
    CheckReport rep = check_pareto(rt, tied);
    REQUIRE_FALSE(rep.holds);
    CHECK_FALSE(rep.witnesses.empty());

    // one-stratum table: premise never fires
    AF free({"x", "y"}, {});
    RankTable flat = rank_table(ExtensionPreorder(free, ExtRankingId::r_ad));
    ArgumentRanking tied2(2, SocialRankingId::lex_cel, ExtRankingId::r_ad);
    CHECK(check_pareto(flat, tied2).holds);
}

TEST_CASE("Dominating-set checker") {
    AF af = f1();
    ExtensionPreorder pre(af, ExtRankingId::r_ad);
    RankTable rt = rank_table(pre);
    CHECK(check_dominating_set(pre, lex_cel(rt, ExtRankingId::r_ad)).holds);

    // singleton ties c with b although {a,c} dominates every b-set
    CheckReport rep = check_dominating_set(pre, singleton_rank(rt, ExtRankingId::r_ad));
    REQUIRE_FALSE(rep.holds);
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.x == af.index_of("c") && w.y == af.index_of("b")) found = true;
    CHECK(found);
}

namespace {

// Deliberately IWS-violating ranking: compares only the counts in the worst
// stratum (fewer bad sets = better).
argrank::ArgumentRanking fewest_worst_sets(const argrank::RankTable& rt) {
    using namespace argrank;
    ArgumentRanking r(rt.n, SocialRankingId::lex_cel, ExtRankingId::r_ad);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y) {
            int cx = rt.count_in_rank(x, rt.width);
            int cy = rt.count_in_rank(y, rt.width);
            r.set_outcome(x, y, cx < cy   ? ComparisonOutcome::strictly_better
                                : cy < cx ? ComparisonOutcome::strictly_worse
                                          : ComparisonOutcome::equivalent);
        }
    return r;
}

}  // namespace

TEST_CASE("independence from the worst set") {
    RankTable rt = table_from_ranks(2, {1, 1, 2, 2});  // {} {a} | {b} {ab}

    SECTION("identity perturbation always holds") {
        RankTable same = perturb_worst_stratum(rt, Perturbation::identity());
        CHECK(same.rank == rt.rank);
        CHECK(check_iws(rt, same, [](const RankTable& t) { return lex_cel(t, ExtRankingId::r_ad); }).holds);
    }

    SECTION("a worst-stratum-only ranking loses its strict preference") {
        RankTable star = perturb_worst_stratum(rt, Perturbation::parity());
        CHECK(star.width == 3);
        ArgumentRanking before = fewest_worst_sets(rt);
        REQUIRE(before.strictly(0, 1));  // a beats b on the original table
        CheckReport rep = check_iws(rt, star, fewest_worst_sets);
        REQUIRE_FALSE(rep.holds);
        CHECK(rep.witnesses.front().x == 0);
        CHECK(rep.witnesses.front().y == 1);
    }

    SECTION("premise violations are errors, not axiom violations") {
        RankTable bad = table_from_ranks(2, {2, 1, 2, 2});
        CHECK_THROWS_AS(
            check_iws(rt, bad, [](const RankTable& t) { return lex_cel(t, ExtRankingId::r_ad); }),
            std::invalid_argument);
    }
}

TEST_CASE("perturbation family satisfies the worst-split premise") {
    AF af = f1();
    for (ExtRankingId tau : kAllExtRankings) {
        RankTable rt = rank_table(ExtensionPreorder(af, tau));
        for (const Perturbation& p : iws_perturbation_family()) {
            RankTable star = perturb_worst_stratum(rt, p);
            CHECK_NOTHROW(require_iws_premise(rt, star));
            for (ArgSet e = 0; e < rt.rank.size(); ++e) {
                if (rt.rank[e] < rt.width) CHECK(star.rank[e] == rt.rank[e]);
                else CHECK(star.rank[e] >= rt.width);
            }
        }
    }
}

TEST_CASE("supermajority impossibility family") {
    AF af = supermajority_family(3, 3);
    CHECK(af.size() == 5);
    CHECK(af.attack_list().size() == 4);  // l + 1
    CHECK(supermajority_family(1, 3).attack_list().size() == 4);
    CHECK_THROWS_AS(supermajority_family(3, 2), std::invalid_argument);

    ExtensionPreorder pre(af, ExtRankingId::r_cf);
    RankTable rt = rank_table(pre);
    ArgumentRanking lex = lex_cel(rt, ExtRankingId::r_cf);
    CHECK(check_sc(af, lex).holds);
    CHECK(check_sigma_c(af, SemanticsId::cf, lex).holds);

    CheckReport rep = check_k_supermajority(rt, lex, 3);
    REQUIRE_FALSE(rep.holds);
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.x == af.index_of("b") && w.y == af.index_of("a") && w.count_x == 4 &&
            w.count_y == 1)
            found = true;
    CHECK(found);  // advantage sets {Z : |Z| >= 2} vs {{}}
}

TEST_CASE("k-supermajority is vacuous on a flat table") {
    AF free({"x", "y", "z"}, {});
    RankTable rt = rank_table(ExtensionPreorder(free, ExtRankingId::r_ad));
    ArgumentRanking tied(3, SocialRankingId::lex_cel, ExtRankingId::r_ad);
    CHECK(check_k_supermajority(rt, tied, 1).holds);
}

TEST_CASE("enumeration counts and determinism") {
    long long count = 0;
    enumerate_afs(1, [&](const AF&) { ++count; });
    CHECK(count == 2);
    count = 0;
    enumerate_afs(2, [&](const AF&) { ++count; });
    CHECK(count == 16);
    count = 0;
    std::vector<std::size_t> first_attack_counts;
    enumerate_afs(3, [&](const AF& af) {
        ++count;
        if (first_attack_counts.size() < 3) first_attack_counts.push_back(af.attack_list().size());
    });
    CHECK(count == 512);
    CHECK(first_attack_counts == std::vector<std::size_t>{0, 1, 1});
    CHECK_THROWS_AS(enumerate_afs(5, [](const AF&) {}), capacity_error);

    // sampling is seed-deterministic
    std::vector<std::vector<std::pair<int, int>>> run1, run2;
    sample_afs(5, 5, 42, [&](const AF& af) { run1.push_back(af.attack_list()); });
    sample_afs(5, 5, 42, [&](const AF& af) { run2.push_back(af.attack_list()); });
    CHECK(run1 == run2);
}

TEST_CASE("realisability search") {
    PreorderTarget positive;
    positive.labels = {"a", "b"};
    positive.weak = {{singleton(0), 3u}, {singleton(1), 3u}};  // {a}>= {a,b}, {b}>= {a,b}
    auto witness = realisable(positive, ExtRankingId::r_cf);
    REQUIRE(witness.has_value());
    CHECK(target_matches(positive, ExtensionPreorder(*witness, ExtRankingId::r_cf)));
    // a single directed attack also realises it
    AF known_witness({"a", "b"}, {{0, 1}});
    CHECK(target_matches(positive, ExtensionPreorder(known_witness, ExtRankingId::r_cf)));

    PreorderTarget negative;
    negative.labels = {"a", "b"};
    negative.weak = {{3u, singleton(0)}};
    negative.strict = {{3u, singleton(0)}};  // {a,b} > {a}
    CHECK_FALSE(realisable(negative, ExtRankingId::r_cf).has_value());

    // round trip: constraints read off an induced preorder are realisable
    AF source({"a", "b"}, {{0, 1}});
    ExtensionPreorder pre(source, ExtRankingId::r_cf);
    PreorderTarget round;
    round.labels = {"a", "b"};
    for (ArgSet e = 0; e <= 3u; ++e)
        for (ArgSet f = 0; f <= 3u; ++f)
            if (e != f && pre.at_least(e, f)) round.weak.emplace_back(e, f);
    auto again = realisable(round, ExtRankingId::r_cf);
    REQUIRE(again.has_value());
    CHECK(target_matches(round, ExtensionPreorder(*again, ExtRankingId::r_cf)));
}

TEST_CASE("check witnesses re-verify against raw compare calls") {
    AF af = f1();
    ExtensionPreorder pre(af, ExtRankingId::r_ad);
    RankTable rt = rank_table(pre);
    ArgumentRanking st = singleton_rank(rt, ExtRankingId::r_ad);
    CheckReport rep = check_dominating_set(pre, st);
    REQUIRE_FALSE(rep.holds);
    for (const auto& w : rep.witnesses) {
        REQUIRE(w.has_sets);
        // the witnessing set strictly dominates every set containing y
        ArgSet rest = af.all() & ~singleton(w.y);
        ArgSet base = 0;
        for (;;) {
            REQUIRE(pre.strictly_better(w.set_x, base | singleton(w.y)));
            if (base == rest) break;
            base = (base - rest) & rest;
        }
        REQUIRE(contains(w.set_x, w.x));
        REQUIRE_FALSE(st.strictly(w.x, w.y));
    }
}
