#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argrank/social_ranking.hpp"

namespace argrank {

enum class PrincipleId {
    sc,
    sigma_c,
    sigma_sk_c,
    sigma_refinement,
    sigma_soundness,
    sigma_completeness,
    sigma_generalisation,
    respects_conflicts,
    pareto_efficiency,
    dominating_set,
    independence_worst_set,
    rank_k_supermajority,
};

inline constexpr const char* to_string(PrincipleId p) {
    switch (p) {
        case PrincipleId::sc: return "sc";
        case PrincipleId::sigma_c: return "sigma-c";
        case PrincipleId::sigma_sk_c: return "sigma-sk-c";
        case PrincipleId::sigma_refinement: return "sigma-refinement";
        case PrincipleId::sigma_soundness: return "sigma-soundness";
        case PrincipleId::sigma_completeness: return "sigma-completeness";
        case PrincipleId::sigma_generalisation: return "sigma-generalisation";
        case PrincipleId::respects_conflicts: return "respects-conflicts";
        case PrincipleId::pareto_efficiency: return "pareto-efficiency";
        case PrincipleId::dominating_set: return "dominating-set";
        case PrincipleId::independence_worst_set: return "independence-worst-set";
        case PrincipleId::rank_k_supermajority: return "rank-k-supermajority";
    }
    return "?";
}

inline std::optional<PrincipleId> parse_principle(std::string_view s) {
    for (PrincipleId p : {PrincipleId::sc, PrincipleId::sigma_c, PrincipleId::sigma_sk_c,
                          PrincipleId::sigma_refinement, PrincipleId::sigma_soundness,
                          PrincipleId::sigma_completeness, PrincipleId::sigma_generalisation,
                          PrincipleId::respects_conflicts, PrincipleId::pareto_efficiency,
                          PrincipleId::dominating_set, PrincipleId::independence_worst_set,
                          PrincipleId::rank_k_supermajority})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

// One violating tuple. Argument fields are indices (-1 unused); set fields are
// meaningful when has_sets; counts back rank-count principles; note carries
// the violated requirement in words.
struct CheckWitness {
    int x = -1;
    int y = -1;
    bool has_sets = false;
    ArgSet set_x = 0;
    ArgSet set_y = 0;
    long long count_x = -1;
    long long count_y = -1;
    std::string note;
};

struct CheckReport {
    explicit CheckReport(PrincipleId p, std::optional<SemanticsId> s = std::nullopt)
        : principle(p), sigma(s) {}

    PrincipleId principle;
    std::optional<SemanticsId> sigma;
    bool holds = true;
    std::vector<CheckWitness> witnesses;
    int skipped_vacuous = 0;  // instances skipped because sigma(F) was empty

    void violate(CheckWitness w) {
        holds = false;
        witnesses.push_back(std::move(w));
    }
};

// SC: non-self-attackers strictly above self-attackers.
inline CheckReport check_sc(const AF& af, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::sc};
    for (int x = 0; x < af.size(); ++x) {
        if (af.attacks(x, x)) continue;
        for (int y = 0; y < af.size(); ++y) {
            if (x == y || !af.attacks(y, y)) continue;
            if (!r.strictly(x, y))
                rep.violate({x, y, false, 0, 0, -1, -1,
                             std::string("requires ") + af.name(x) + " > " + af.name(y) +
                                 ", got " + to_string(r.outcome(x, y))});
        }
    }
    return rep;
}

// sigma-C: credulously accepted strictly above rejected.
inline CheckReport check_sigma_c(const AF& af, SemanticsId sigma, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::sigma_c, sigma};
    StatusReport st = status(af, sigma);
    if (st.vacuous_skeptical) {  // sigma(F) empty: no credulous arguments exist
        rep.skipped_vacuous = 1;
        return rep;
    }
    ArgSet cred = st.credulous_set();
    for (int x = 0; x < af.size(); ++x) {
        if (!contains(cred, x)) continue;
        for (int y = 0; y < af.size(); ++y) {
            if (st.status[y] != AcceptanceStatus::rejected) continue;
            if (!r.strictly(x, y))
                rep.violate({x, y, false, 0, 0, -1, -1,
                             std::string("credulous ") + af.name(x) + " not above rejected " +
                                 af.name(y) + " (" + to_string(r.outcome(x, y)) + ")"});
        }
    }
    return rep;
}

// sigma-sk-C: skeptically accepted strictly above everything else.
inline CheckReport check_sigma_sk_c(const AF& af, SemanticsId sigma, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::sigma_sk_c, sigma};
    StatusReport st = status(af, sigma);
    if (st.vacuous_skeptical) {  // sk undefined when sigma(F) is empty
        rep.skipped_vacuous = 1;
        return rep;
    }
    for (int x = 0; x < af.size(); ++x) {
        if (st.status[x] != AcceptanceStatus::skeptical) continue;
        for (int y = 0; y < af.size(); ++y) {
            if (y == x || st.status[y] == AcceptanceStatus::skeptical) continue;
            if (!r.strictly(x, y))
                rep.violate({x, y, false, 0, 0, -1, -1,
                             std::string("skeptical ") + af.name(x) + " not above " +
                                 af.name(y) + " (" + to_string(r.outcome(x, y)) + ")"});
        }
    }
    return rep;
}

// sigma-Refinement = sigma-C and sigma-sk-C; witnesses merged.
inline CheckReport check_refinement(const AF& af, SemanticsId sigma, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::sigma_refinement, sigma};
    for (CheckReport sub : {check_sigma_c(af, sigma, r), check_sigma_sk_c(af, sigma, r)}) {
        rep.skipped_vacuous += sub.skipped_vacuous;
        if (!sub.holds) {
            rep.holds = false;
            for (auto& w : sub.witnesses) {
                w.note = std::string(to_string(sub.principle)) + ": " + w.note;
                rep.witnesses.push_back(std::move(w));
            }
        }
    }
    return rep;
}

namespace detail {

inline std::string set_to_string(const AF& af, ArgSet e) {
    std::string s = "{";
    bool first = true;
    for_each_member(e, [&](int i) {
        if (!first) s += ",";
        s += af.name(i);
        first = false;
    });
    return s + "}";
}

}  // namespace detail

// max_tau(F) against sigma(F): soundness (subset), completeness (superset) or
// both. Witnesses are the sets in the offending difference.
inline CheckReport check_generalisation(const AF& af, ExtRankingId tau, SemanticsId sigma,
                                        PrincipleId flavor = PrincipleId::sigma_generalisation) {
    CheckReport rep{flavor, sigma};
    ExtensionPreorder pre(af, tau);
    auto mp = most_plausible(pre);
    auto exts = extensions(af, sigma);
    auto in = [](const std::vector<ArgSet>& v, ArgSet e) {
        return std::find(v.begin(), v.end(), e) != v.end();
    };
    bool want_sound = flavor != PrincipleId::sigma_completeness;
    bool want_complete = flavor != PrincipleId::sigma_soundness;
    if (want_sound)
        for (ArgSet e : mp)
            if (!in(exts, e))
                rep.violate({-1, -1, true, e, 0, -1, -1,
                             "most plausible but not a " + std::string(to_string(sigma)) +
                                 " extension: " + detail::set_to_string(af, e)});
    if (want_complete)
        for (ArgSet e : exts)
            if (!in(mp, e))
                rep.violate({-1, -1, true, e, 0, -1, -1,
                             std::string(to_string(sigma)) +
                                 " extension but not most plausible: " +
                                 detail::set_to_string(af, e)});
    return rep;
}

// Conflict-free sets strictly above non-conflict-free ones, for the extension
// ranking itself.
inline CheckReport check_respects_conflicts(const ExtensionPreorder& pre) {
    CheckReport rep{PrincipleId::respects_conflicts};
    const AF& af = pre.af();
    ArgSet end = af.all();
    for (ArgSet e = 0;; ++e) {
        if (conflict_free(af, e)) {
            for (ArgSet f = 0;; ++f) {
                if (!conflict_free(af, f) && !pre.strictly_better(e, f))
                    rep.violate({-1, -1, true, e, f, -1, -1,
                                 detail::set_to_string(af, e) + " not strictly above " +
                                     detail::set_to_string(af, f)});
                if (f == end) break;
            }
        }
        if (e == end) break;
    }
    return rep;
}

// Pareto-efficiency over a rank table: coordinatewise rank dominance of x over
// y across all contexts Z forces x strictly above y.
inline CheckReport check_pareto(const RankTable& rt, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::pareto_efficiency};
    for (int x = 0; x < rt.n; ++x)
        for (int y = 0; y < rt.n; ++y) {
            if (x == y) continue;
            ArgSet others = full_set(rt.n) & ~singleton(x) & ~singleton(y);
            bool all_leq = true;
            bool some_strict = false;
            ArgSet z = 0;
            for (;;) {
                int rx = rt.rank[z | singleton(x)];
                int ry = rt.rank[z | singleton(y)];
                if (rx > ry) { all_leq = false; break; }
                if (rx < ry) some_strict = true;
                if (z == others) break;
                z = (z - others) & others;
            }
            if (all_leq && some_strict && !r.strictly(x, y))
                rep.violate({x, y, false, 0, 0, -1, -1,
                             "rank-dominance requires x > y, got " +
                                 std::string(to_string(r.outcome(x, y)))});
        }
    return rep;
}

// Dominating set: if some set containing x strictly dominates every set
// containing y, then x strictly above y. Scans each x-set against the full
// y-frontier; O(4^n) pairs, desk scale.
inline CheckReport check_dominating_set(const ExtensionPreorder& pre, const ArgumentRanking& r) {
    CheckReport rep{PrincipleId::dominating_set};
    int n = pre.af().size();
    ArgSet all = pre.af().all();
    // dominates_all[y] = sets X with X strictly better than every Y containing y.
    std::vector<std::vector<ArgSet>> dominates_all(n);
    for (int y = 0; y < n; ++y) {
        ArgSet rest = all & ~singleton(y);
        for (ArgSet x_set = 0; x_set <= all; ++x_set) {
            bool dom = true;
            ArgSet base = 0;
            for (;;) {
                if (!pre.strictly_better(x_set, base | singleton(y))) { dom = false; break; }
                if (base == rest) break;
                base = (base - rest) & rest;
            }
            if (dom) dominates_all[y].push_back(x_set);
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            for (ArgSet d : dominates_all[y]) {
                if (!contains(d, x)) continue;
                if (!r.strictly(x, y))
                    rep.violate({x, y, true, d, 0, -1, -1,
                                 detail::set_to_string(pre.af(), d) +
                                     " dominates every set with " + pre.af().name(y) +
                                     " but x > y fails (" + to_string(r.outcome(x, y)) + ")"});
                break;  // one witnessing set is enough per pair
            }
        }
    return rep;
}

// Rank k-super majority: a k-fold strict-rank-advantage count forces weak
// preference.
inline CheckReport check_k_supermajority(const RankTable& rt, const ArgumentRanking& r, int k) {
    CheckReport rep{PrincipleId::rank_k_supermajority};
    for (int x = 0; x < rt.n; ++x)
        for (int y = 0; y < rt.n; ++y) {
            if (x == y) continue;
            ArgSet others = full_set(rt.n) & ~singleton(x) & ~singleton(y);
            long long adv_x = 0, adv_y = 0;
            ArgSet z = 0;
            for (;;) {
                int rx = rt.rank[z | singleton(x)];
                int ry = rt.rank[z | singleton(y)];
                if (rx < ry) ++adv_x;
                if (ry < rx) ++adv_y;
                if (z == others) break;
                z = (z - others) & others;
            }
            if (adv_x > k * adv_y && !r.at_least(x, y))
                rep.violate({x, y, false, 0, 0, adv_x, adv_y,
                             "advantage " + std::to_string(adv_x) + " > " + std::to_string(k) +
                                 "*" + std::to_string(adv_y) + " but x >= y fails"});
        }
    return rep;
}

// Deterministic splits of the worst stratum for testing Independence from the
// worst set.
struct Perturbation {
    enum class Kind { identity, parity, seeded };
    Kind kind = Kind::identity;
    std::uint64_t seed = 0;
    int parts = 3;

    static Perturbation identity() { return {}; }
    static Perturbation parity() { return {Kind::parity, 0, 2}; }
    static Perturbation seeded(std::uint64_t seed, int parts = 3) {
        return {Kind::seeded, seed, parts};
    }
};

// Table identical below the worst rank w, with the old worst stratum split
// into >= 1 strata at ranks >= w.
inline RankTable perturb_worst_stratum(const RankTable& rt, const Perturbation& p) {
    std::vector<int> raw(rt.rank.size());
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> dist(0, std::max(1, p.parts) - 1);
    for (ArgSet e = 0; e < rt.rank.size(); ++e) {
        if (rt.rank[e] < rt.width) {
            raw[e] = rt.rank[e];
            continue;
        }
        // Sub-level within the old worst stratum; empty sub-levels are
        // compacted away by table_from_ranks.
        int sub = 0;
        switch (p.kind) {
            case Perturbation::Kind::identity: break;
            case Perturbation::Kind::parity: sub = static_cast<int>(e & 1u); break;
            case Perturbation::Kind::seeded: sub = dist(rng); break;
        }
        raw[e] = rt.width + sub;
    }
    return table_from_ranks(rt.n, std::move(raw), std::nullopt);
}

// The canonical perturbation family used by the suites: identity, the parity
// split, and five seeded splits.
inline std::vector<Perturbation> iws_perturbation_family(std::uint64_t base_seed = 0) {
    std::vector<Perturbation> fam{Perturbation::identity(), Perturbation::parity()};
    for (std::uint64_t i = 1; i <= 5; ++i) fam.push_back(Perturbation::seeded(base_seed + i));
    return fam;
}

// Checks the worst-split premise: ranks below w preserved, worst stratum pushed to
// ranks >= w. Throws std::invalid_argument when the pair does not qualify, so
// generator bugs cannot masquerade as axiom violations.
inline void require_iws_premise(const RankTable& rt, const RankTable& rt_star) {
    if (rt_star.rank.size() != rt.rank.size())
        throw std::invalid_argument("iws: tables over different ground sets");
    for (ArgSet e = 0; e < rt.rank.size(); ++e) {
        if (rt.rank[e] < rt.width && rt_star.rank[e] != rt.rank[e])
            throw std::invalid_argument("iws premise violated: rank below w changed");
        if (rt.rank[e] == rt.width && rt_star.rank[e] < rt.width)
            throw std::invalid_argument("iws premise violated: worst stratum moved above w");
    }
}

// Independence from the worst set for a table-evaluated ranking function:
// every strict preference under the original table persists under the
// perturbed one.
template <class RankingFn>
CheckReport check_iws(const RankTable& rt, const RankTable& rt_star, RankingFn&& fn) {
    require_iws_premise(rt, rt_star);
    CheckReport rep{PrincipleId::independence_worst_set};
    ArgumentRanking before = fn(rt);
    ArgumentRanking after = fn(rt_star);
    for (int x = 0; x < rt.n; ++x)
        for (int y = 0; y < rt.n; ++y)
            if (x != y && before.strictly(x, y) && !after.strictly(x, y))
                rep.violate({x, y, false, 0, 0, -1, -1,
                             "strict preference lost under worst-stratum split (" +
                                 std::string(to_string(after.outcome(x, y))) + ")"});
    return rep;
}

// The proof family behind the k-super-majority impossibility: arguments
// a, b, c1..cl with attacks (b,b) and (ci,a).
inline AF supermajority_family(int k, int ell) {
    if (ell < 3 || ell < k) throw std::invalid_argument("supermajority_family needs l >= max(k,3)");
    std::vector<std::string> names{"a", "b"};
    for (int i = 1; i <= ell; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::pair<int, int>> attacks{{1, 1}};
    for (int i = 0; i < ell; ++i) attacks.emplace_back(2 + i, 0);
    return AF(std::move(names), attacks);
}

namespace detail {

inline std::vector<std::string> default_labels(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

inline AF af_from_matrix(const std::vector<std::string>& labels, std::uint64_t matrix) {
    int n = static_cast<int>(labels.size());
    std::vector<std::pair<int, int>> attacks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((matrix >> (i * n + j)) & 1u) attacks.emplace_back(i, j);
    return AF(labels, attacks);
}

}  // namespace detail

// Every digraph on n labelled arguments, attack-matrix integer ascending
// (bit i*n+j set <=> attack i -> j). 2^(n^2) frameworks; n <= 4.
template <class F>
void enumerate_afs(int n, F&& f) {
    if (n < 1 || n > 4)
        throw capacity_error("exhaustive enumeration limited to n <= 4 (got n=" +
                             std::to_string(n) + ")");
    auto labels = detail::default_labels(n);
    std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t m = 0; m < count; ++m) f(detail::af_from_matrix(labels, m));
}

// Seeded uniform sample of attack matrices; deterministic order.
template <class F>
void sample_afs(int n, int count, std::uint64_t seed, F&& f) {
    if (n < 1 || n > 8) throw capacity_error("sampled enumeration limited to n <= 8");
    auto labels = detail::default_labels(n);
    std::mt19937_64 rng(seed);
    std::uint64_t mask = (n * n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
    for (int i = 0; i < count; ++i) f(detail::af_from_matrix(labels, rng() & mask));
}

// Target preorder for the realisability search: mandatory relations over
// subsets of the label universe. weak pairs are the reflexive-transitive
// closure of all given lines; strict/equal keep the original lines.
struct PreorderTarget {
    std::vector<std::string> labels;
    std::vector<std::pair<ArgSet, ArgSet>> weak;    // lhs at least as plausible as rhs
    std::vector<std::pair<ArgSet, ArgSet>> strict;  // lhs strictly more plausible
    std::vector<std::pair<ArgSet, ArgSet>> equal;
};

inline bool target_matches(const PreorderTarget& t, const ExtensionPreorder& pre) {
    for (auto [l, r] : t.weak)
        if (!pre.at_least(l, r)) return false;
    for (auto [l, r] : t.strict)
        if (!pre.strictly_better(l, r)) return false;
    for (auto [l, r] : t.equal)
        if (pre.compare(l, r) != ComparisonOutcome::equivalent) return false;
    return true;
}

// Exhaustive search for an AF over the target's labels whose induced preorder
// satisfies every required relation; first witness in matrix order, or absence.
inline std::optional<AF> realisable(const PreorderTarget& target, ExtRankingId tau) {
    int n = static_cast<int>(target.labels.size());
    if (n < 1 || n > 4) throw capacity_error("realisability search limited to 1..4 labels");
    std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t m = 0; m < count; ++m) {
        AF af = detail::af_from_matrix(target.labels, m);
        if (target_matches(target, ExtensionPreorder(af, tau))) return af;
    }
    return std::nullopt;
}

}  // namespace argrank
