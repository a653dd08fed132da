#include <catch2/catch_amalgamated.hpp>

#include "argrank/verify.hpp"

using namespace argrank;

// The heavy exhaustive battery lives in the verify suite (and the acceptance
// binary runs it up to n=4). Here it runs to n=3 plus seeded samples so the
// unit suite stays fast while covering every instancewise theorem.
TEST_CASE("theorem suite is clean up to n=3") {
    VerifyOptions o;
    o.max_n = 3;
    auto rep = run_verification(o);
    CHECK(rep.afs == 2 + 16 + 512);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.first_violation);
        CHECK(c.violations == 0);
    }
}

TEST_CASE("theorem suite is clean on seeded samples at n=5") {
    VerifyOptions o;
    o.max_n = 0;
    o.samples = {{5, 40}};
    o.seed = 31337;
    auto rep = run_verification(o);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.first_violation);
        CHECK(c.violations == 0);
    }
}

TEST_CASE("preorder transitivity spot check against compare") {
    // direct property form, independent of the suite plumbing
    sample_afs(4, 30, 8, [](const AF& af) {
        for (ExtRankingId tau : kAllExtRankings) {
            ExtensionPreorder pre(af, tau);
            for (ArgSet e = 0; e <= af.all(); ++e) {
                REQUIRE(pre.at_least(e, e));
                for (ArgSet f = 0; f <= af.all(); ++f) {
                    if (!pre.at_least(e, f)) continue;
                    for (ArgSet g = 0; g <= af.all(); ++g)
                        if (pre.at_least(f, g)) REQUIRE(pre.at_least(e, g));
                }
            }
        }
    });
}

TEST_CASE("strict dominance bounds the rank difference") {
    sample_afs(5, 20, 12, [](const AF& af) {
        for (ExtRankingId tau : {ExtRankingId::r_co, ExtRankingId::r_gr}) {
            ExtensionPreorder pre(af, tau);
            RankTable rt = rank_table(pre);
            for (ArgSet e = 0; e <= af.all(); ++e)
                for (ArgSet f = 0; f <= af.all(); ++f) {
                    auto o = pre.compare(e, f);
                    if (o == ComparisonOutcome::strictly_better)
                        REQUIRE(rt.rank[e] < rt.rank[f]);
                    if (o == ComparisonOutcome::equivalent)
                        REQUIRE(rt.rank[e] == rt.rank[f]);
                }
        }
    });
}
