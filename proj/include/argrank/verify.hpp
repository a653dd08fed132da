#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "argrank/axioms.hpp"

namespace argrank {

// One line of the theorem-suite report.
struct SuiteCheck {
    std::string name;
    long long instances = 0;
    long long violations = 0;
    long long skipped = 0;  // vacuous-skeptical instances, counted separately
    std::string first_violation;
};

struct VerifyReport {
    std::vector<SuiteCheck> checks;
    long long afs = 0;

    SuiteCheck& line(const std::string& name) {
        for (auto& c : checks)
            if (c.name == name) return c;
        checks.emplace_back();
        checks.back().name = name;
        return checks.back();
    }

    void tally(const std::string& name, bool holds, const std::string& desc,
               long long skipped = 0) {
        SuiteCheck& c = line(name);
        ++c.instances;
        c.skipped += skipped;
        if (!holds) {
            if (c.violations == 0) c.first_violation = desc;
            ++c.violations;
        }
    }

    bool ok() const {
        for (const auto& c : checks)
            if (c.violations > 0) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_n = 4;                               // exhaustive enumeration 1..max_n
    std::vector<std::pair<int, int>> samples;    // (n, count) seeded batches
    std::uint64_t seed = 1;
    int iws_exhaustive_n = 3;                    // lex-cel split-IWS criterion bound
};

namespace detail {

// Pairs (x, y, witness set) for which the Dominating-set premise holds on
// this preorder; independent of any argument ranking, computed once.
struct DominancePair {
    int x, y;
    ArgSet witness;
};

inline std::vector<DominancePair> dominating_pairs(const ExtensionPreorder& pre) {
    std::vector<DominancePair> out;
    int n = pre.af().size();
    ArgSet all = pre.af().all();
    for (int y = 0; y < n; ++y) {
        ArgSet dominated_x_union = 0;  // args x with a witnessing set found
        std::vector<ArgSet> witness(n, 0);
        ArgSet rest = all & ~singleton(y);
        for (ArgSet x_set = 0; x_set <= all; ++x_set) {
            if (subset_of(x_set, dominated_x_union)) continue;  // nothing new to witness
            bool dom = true;
            ArgSet base = 0;
            for (;;) {
                if (!pre.strictly_better(x_set, base | singleton(y))) { dom = false; break; }
                if (base == rest) break;
                base = (base - rest) & rest;
            }
            if (!dom) continue;
            for_each_member(x_set, [&](int x) {
                if (x != y && witness[x] == 0) witness[x] = x_set;
            });
            dominated_x_union |= x_set;
        }
        for (int x = 0; x < n; ++x)
            if (x != y && witness[x] != 0) out.push_back({x, y, witness[x]});
    }
    return out;
}

// Coarsening used by the implication premise family: everything at rank >= t collapses
// into one worst stratum.
inline RankTable coarsen(const RankTable& rt, int t) {
    std::vector<int> raw(rt.rank.size());
    for (ArgSet e = 0; e < rt.rank.size(); ++e) raw[e] = std::min(rt.rank[e], t);
    return table_from_ranks(rt.n, std::move(raw), std::nullopt);
}

}  // namespace detail

// Runs the instancewise theorem checks on one framework. af_desc names the
// framework in violation messages.
inline void verify_one(const AF& af, VerifyReport& rep, const std::string& af_desc,
                       int iws_exhaustive_n) {
    ++rep.afs;
    int n = af.size();
    if (n > 6) throw capacity_error("theorem suite runs on n <= 6");

    // --- classical semantics invariants ---
    auto cf_e = extensions(af, SemanticsId::cf);
    auto ad_e = extensions(af, SemanticsId::ad);
    auto co_e = extensions(af, SemanticsId::co);
    auto pr_e = extensions(af, SemanticsId::pr);
    auto stb_e = extensions(af, SemanticsId::stb);
    auto sst_e = extensions(af, SemanticsId::sst);
    ArgSet gr = grounded_fixpoint(af);

    {
        bool least = complete(af, gr);
        for (ArgSet e : co_e)
            if (!subset_of(gr, e)) least = false;
        rep.tally("grounded fixpoint = least complete extension", least, af_desc);
    }
    {
        auto included = [](const std::vector<ArgSet>& small, const std::vector<ArgSet>& big) {
            for (ArgSet e : small)
                if (std::find(big.begin(), big.end(), e) == big.end()) return false;
            return true;
        };
        bool chain = included(stb_e, sst_e) && included(sst_e, pr_e) && included(pr_e, co_e) &&
                     included(co_e, ad_e) && included(ad_e, cf_e);
        rep.tally("stb <= sst <= pr <= co <= ad <= cf", chain, af_desc);
        rep.tally("nonempty stable implies stable = semi-stable",
                  stb_e.empty() || stb_e == sst_e, af_desc);
    }
    {
        bool monotone = true;
        for (ArgSet big = 0; big <= af.all() && monotone; ++big) {
            ArgSet f_big = characteristic(af, big);
            for (ArgSet e = big;; e = (e - 1) & big) {  // all subsets of big
                if (!subset_of(characteristic(af, e), f_big)) { monotone = false; break; }
                if (e == 0) break;
            }
        }
        rep.tally("characteristic function monotone", monotone, af_desc);
    }

    // --- per extension-ranking semantics ---
    for (ExtRankingId tau : kAllExtRankings) {
        ExtensionPreorder pre(af, tau);
        std::string ctx = af_desc + ", " + to_string(tau);
        std::size_t total = pre.subset_count();

        // weak relation as row bitmasks (n <= 6 in the suites)
        std::vector<std::uint64_t> row(total, 0);
        for (ArgSet e = 0; e < total; ++e)
            for (ArgSet f = 0; f < total; ++f)
                if (pre.at_least(e, f)) row[e] |= std::uint64_t{1} << f;

        {
            bool reflexive = true, transitive = true;
            for (ArgSet e = 0; e < total; ++e)
                if (!((row[e] >> e) & 1u)) reflexive = false;
            for (ArgSet e = 0; e < total && transitive; ++e)
                for (ArgSet f = 0; f < total; ++f)
                    if (((row[e] >> f) & 1u) && (row[f] & ~row[e]) != 0) {
                        transitive = false;
                        break;
                    }
            rep.tally("extension ranking is a preorder", reflexive && transitive, ctx);

            std::vector<std::uint64_t> strict(total, 0);
            for (ArgSet e = 0; e < total; ++e)
                for (ArgSet f = 0; f < total; ++f)
                    if (((row[e] >> f) & 1u) && !((row[f] >> e) & 1u))
                        strict[e] |= std::uint64_t{1} << f;
            bool strict_ok = true;
            for (ArgSet e = 0; e < total && strict_ok; ++e) {
                if ((strict[e] >> e) & 1u) strict_ok = false;
                for (ArgSet f = 0; f < total && strict_ok; ++f)
                    if (((strict[e] >> f) & 1u) && (strict[f] & ~strict[e]) != 0)
                        strict_ok = false;
            }
            rep.tally("strict dominance irreflexive and transitive", strict_ok, ctx);
        }

        RankTable rt = rank_table(pre);
        {
            RankTable naive = rank_table_naive(pre);
            rep.tally("rank DP equals naive longest-chain oracle", rt.rank == naive.rank, ctx);
        }
        {
            bool consistent = true;
            for (ArgSet e = 0; e < total && consistent; ++e)
                for (ArgSet f = 0; f < total; ++f) {
                    bool ef = (row[e] >> f) & 1u, fe = (row[f] >> e) & 1u;
                    if (ef && !fe && !(rt.rank[e] < rt.rank[f])) { consistent = false; break; }
                    if (ef && fe && rt.rank[e] != rt.rank[f]) { consistent = false; break; }
                }
            rep.tally("strict dominance lowers rank, equivalence preserves it", consistent, ctx);
        }

        rep.tally("respects conflicts", check_respects_conflicts(pre).holds, ctx);

        if (tau != ExtRankingId::r_cf) {
            SemanticsId sigma = generalised_semantics(tau);
            rep.tally("sigma-generalisation of r-sigma",
                      check_generalisation(af, tau, sigma).holds, ctx);
        }

        // --- lex-cel over this preorder ---
        ArgumentRanking lex = lex_cel(rt, tau);
        {
            auto vecs = lex_cel_vectors(rt);
            bool sums = true;
            for (const auto& v : vecs) {
                long long s = 0;
                for (int c : v) s += c;
                if (s != (1ll << (n - 1))) sums = false;
            }
            rep.tally("lex-cel vectors sum to 2^(n-1)", sums, ctx);
            rep.tally("lex-cel total and transitive", lex.is_total() && lex.is_transitive(),
                      ctx);
        }

        auto dom_pairs = detail::dominating_pairs(pre);
        auto passes_ds = [&](const ArgumentRanking& r) {
            for (const auto& p : dom_pairs)
                if (!r.strictly(p.x, p.y)) return false;
            return true;
        };

        rep.tally("lex-cel satisfies Pareto-efficiency", check_pareto(rt, lex).holds, ctx);
        rep.tally("lex-cel satisfies Dominating set", passes_ds(lex), ctx);

        if (tau != ExtRankingId::r_cf) {
            SemanticsId sigma = generalised_semantics(tau);
            CheckReport sc = check_sc(af, lex);
            CheckReport c = check_sigma_c(af, sigma, lex);
            CheckReport skc = check_sigma_sk_c(af, sigma, lex);
            CheckReport refine = check_refinement(af, sigma, lex);
            rep.tally("lex-cel satisfies SC", sc.holds, ctx);
            rep.tally("lex-cel satisfies sigma-C", c.holds, ctx, c.skipped_vacuous);
            rep.tally("lex-cel satisfies sigma-sk-C", skc.holds, ctx,
                      skc.skipped_vacuous);
            rep.tally("lex-cel satisfies sigma-Refinement", refine.holds, ctx,
                      refine.skipped_vacuous);

            // lex-cel weak preference must imply best-rank weak preference.
            ArgumentRanking foc = focusing_rank(rt, tau);
            bool prop1 = true;
            for (int x = 0; x < n && prop1; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && lex.at_least(x, y) && !foc.at_least(x, y)) {
                        prop1 = false;
                        break;
                    }
            rep.tally("lex-cel refines the best-rank ranking", prop1, ctx);
        }

        // --- Pareto + IWS imply Dominating set, over the premise family ---
        {
            std::vector<RankTable> splits;
            for (const Perturbation& p : iws_perturbation_family())
                splits.push_back(perturb_worst_stratum(rt, p));
            std::vector<RankTable> coarse;
            for (int t = 2; t < rt.width; ++t) coarse.push_back(detail::coarsen(rt, t));

            for (SocialRankingId xi : kAllSocialRankings) {
                auto fn = [&](const RankTable& t) { return ranking_from_table(xi, t, tau); };
                ArgumentRanking r = fn(rt);
                bool premise = check_pareto(rt, r).holds;
                for (const RankTable& c : coarse) {
                    if (!premise) break;
                    premise = check_pareto(c, fn(c)).holds && check_iws(c, rt, fn).holds;
                }
                for (const RankTable& s : splits) {
                    if (!premise) break;
                    premise = check_iws(rt, s, fn).holds;
                }
                if (xi == SocialRankingId::lex_cel)
                    rep.tally("lex-cel satisfies Pareto + IWS across the premise family",
                              premise, ctx);
                rep.tally("Pareto + IWS imply Dominating set",
                          !premise || passes_ds(r),
                          ctx + ", " + to_string(xi));
            }
        }

        // --- compatibility implies Dominating set on induced preorders ---
        // For r-ad the premise also needs SC: a dominating set is always
        // conflict-free, so a self-attacking dominated argument is handled by
        // SC while the admissibility argument covers the rest.
        if (tau == ExtRankingId::r_cf || tau == ExtRankingId::r_ad) {
            SemanticsId sigma = generalised_semantics(tau);
            const char* name = tau == ExtRankingId::r_cf
                                   ? "cf-C over r-cf implies Dominating set"
                                   : "ad-C with SC over r-ad implies Dominating set";
            for (SocialRankingId xi : kAllSocialRankings) {
                ArgumentRanking r = xi == SocialRankingId::cp_majority ? cp_majority(pre)
                                    : xi == SocialRankingId::banzhaf   ? banzhaf(pre)
                                                                       : ranking_from_table(xi, rt, tau);
                CheckReport c = check_sigma_c(af, sigma, r);
                bool premise = c.holds;
                if (tau == ExtRankingId::r_ad) premise = premise && check_sc(af, r).holds;
                rep.tally(name, !premise || passes_ds(r), ctx + ", " + to_string(xi),
                          c.skipped_vacuous);
            }
        }

        // --- lex-cel strict preferences survive worst-stratum splits (small n) ---
        if (n <= iws_exhaustive_n && tau != ExtRankingId::r_cf) {
            bool ok = true;
            for (const Perturbation& p : iws_perturbation_family()) {
                RankTable star = perturb_worst_stratum(rt, p);
                if (!check_iws(rt, star, [&](const RankTable& t) { return lex_cel(t, tau); })
                         .holds)
                    ok = false;
            }
            rep.tally("lex-cel IWS under worst-stratum splits (n <= 3)", ok, ctx);
        }
    }

    // --- permutation equivariance of lex-cel over r-co, fixed reversal ---
    if (n > 1) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
        std::vector<std::pair<int, int>> attacks;
        for (auto [s, d] : af.attack_list()) attacks.emplace_back(perm[s], perm[d]);
        AF permuted(af.names(), attacks);
        ArgumentRanking a = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
        ArgumentRanking b = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, permuted);
        bool equivariant = true;
        for (int x = 0; x < n && equivariant; ++x)
            for (int y = 0; y < n; ++y)
                if (a.outcome(x, y) != b.outcome(perm[x], perm[y])) {
                    equivariant = false;
                    break;
                }
        rep.tally("lex-cel permutation equivariance (r-co, reversal)", equivariant, af_desc);
    }
}

// The impossibility family: lex-cel over r-cf passes SC and cf-C yet violates
// rank k-super-majority, with brute-force-derived advantage counts.
inline void verify_supermajority_family(VerifyReport& rep,
                                        const std::vector<int>& ks = {1, 2, 3, 5}) {
    for (int k : ks) {
        int ell = std::max(k, 3);
        AF af = supermajority_family(k, ell);
        std::string ctx = "supermajority_family(" + std::to_string(k) + "," +
                          std::to_string(ell) + ")";
        ExtensionPreorder pre(af, ExtRankingId::r_cf);
        RankTable rt = rank_table(pre);
        ArgumentRanking lex = lex_cel(rt, ExtRankingId::r_cf);
        rep.tally("supermajority family: lex-cel passes SC",
                  check_sc(af, lex).holds, ctx);
        rep.tally("supermajority family: lex-cel passes cf-C",
                  check_sigma_c(af, SemanticsId::cf, lex).holds, ctx);
        CheckReport super = check_k_supermajority(rt, lex, k);
        bool witness_ab = false;
        long long expect_b = (1ll << ell) - ell - 1;  // contexts of size >= 2
        for (const auto& w : super.witnesses)
            if (w.x == 1 && w.y == 0 && w.count_x == expect_b && w.count_y == 1)
                witness_ab = true;
        rep.tally("supermajority family: k-super-majority violated with the derived counts",
                  !super.holds && witness_ab, ctx);
    }
}

inline VerifyReport run_verification(const VerifyOptions& opts) {
    VerifyReport rep;
    for (int n = 1; n <= opts.max_n; ++n)
        enumerate_afs(n, [&](const AF& af) {
            verify_one(af, rep, "enumerated n=" + std::to_string(n), opts.iws_exhaustive_n);
        });
    for (const auto& batch : opts.samples) {
        int n = batch.first, count = batch.second;
        sample_afs(n, count, opts.seed, [&](const AF& af) {
            verify_one(af, rep, "sampled n=" + std::to_string(n) + " seed=" +
                       std::to_string(opts.seed), opts.iws_exhaustive_n);
        });
    }
    verify_supermajority_family(rep);
    return rep;
}

}  // namespace argrank
