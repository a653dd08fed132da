#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argrank/ext_ranking.hpp"

namespace argrank {

enum class SocialRankingId { lex_cel, singleton, focusing, cp_majority, banzhaf };

inline constexpr SocialRankingId kAllSocialRankings[] = {
    SocialRankingId::lex_cel, SocialRankingId::singleton, SocialRankingId::focusing,
    SocialRankingId::cp_majority, SocialRankingId::banzhaf};

inline constexpr const char* to_string(SocialRankingId s) {
    switch (s) {
        case SocialRankingId::lex_cel: return "lex-cel";
        case SocialRankingId::singleton: return "singleton";
        case SocialRankingId::focusing: return "focusing";
        case SocialRankingId::cp_majority: return "cp-majority";
        case SocialRankingId::banzhaf: return "banzhaf";
    }
    return "?";
}

inline std::optional<SocialRankingId> parse_social_ranking(std::string_view s) {
    for (SocialRankingId id : kAllSocialRankings)
        if (s == to_string(id)) return id;
    return std::nullopt;
}

// Preorder over arguments as a full pairwise matrix. The matrix is stored raw
// because CP-majority output need not be transitive; strata are derived only
// once the relation is verified to be a total preorder.
class ArgumentRanking {
public:
    ArgumentRanking(int n, SocialRankingId sr, ExtRankingId er)
        : n_(n), sr_(sr), er_(er),
          m_(static_cast<std::size_t>(n) * n, ComparisonOutcome::equivalent) {}

    int size() const { return n_; }
    SocialRankingId social_ranking() const { return sr_; }
    ExtRankingId ext_ranking() const { return er_; }

    ComparisonOutcome outcome(int x, int y) const { return m_[x * n_ + y]; }
    void set_outcome(int x, int y, ComparisonOutcome o) {
        m_[x * n_ + y] = o;
        m_[y * n_ + x] = flip(o);
    }

    // x at least as strong as y.
    bool at_least(int x, int y) const {
        ComparisonOutcome o = outcome(x, y);
        return o == ComparisonOutcome::strictly_better || o == ComparisonOutcome::equivalent;
    }
    bool strictly(int x, int y) const {
        return outcome(x, y) == ComparisonOutcome::strictly_better;
    }
    bool equivalent(int x, int y) const {
        return outcome(x, y) == ComparisonOutcome::equivalent;
    }

    bool is_total() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (outcome(x, y) == ComparisonOutcome::incomparable) return false;
        return true;
    }

    bool is_transitive() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                if (!at_least(x, y)) continue;
                for (int z = 0; z < n_; ++z)
                    if (at_least(y, z) && !at_least(x, z)) return false;
            }
        return true;
    }

    // Strata best-first; only defined for verified total preorders.
    std::optional<std::vector<std::vector<int>>> strata() const {
        if (!is_total() || !is_transitive()) return std::nullopt;
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return strictly(x, y); });
        std::vector<std::vector<int>> out;
        for (int i : order) {
            if (out.empty() || !equivalent(out.back().front(), i)) out.push_back({});
            out.back().push_back(i);
        }
        return out;
    }

private:
    int n_;
    SocialRankingId sr_;
    ExtRankingId er_;
    std::vector<ComparisonOutcome> m_;
};

namespace detail {

inline ComparisonOutcome outcome_from_weak(bool xy, bool yx) {
    if (xy && yx) return ComparisonOutcome::equivalent;
    if (xy) return ComparisonOutcome::strictly_better;
    if (yx) return ComparisonOutcome::strictly_worse;
    return ComparisonOutcome::incomparable;
}

}  // namespace detail

// Per-argument sequence (x_{1,>=},...,x_{w,>=}) of rank-stratum membership
// counts; entries sum to 2^{n-1}.
inline std::vector<std::vector<int>> lex_cel_vectors(const RankTable& rt) {
    std::vector<std::vector<int>> v(rt.n, std::vector<int>(rt.width, 0));
    for (int k = 1; k <= rt.width; ++k)
        for (ArgSet e : rt.strata[k - 1])
            for_each_member(e, [&](int x) { ++v[x][k - 1]; });
    return v;
}

// x above y iff x's count vector lexicographically exceeds y's; total preorder.
inline ArgumentRanking lex_cel(const RankTable& rt, ExtRankingId er) {
    auto v = lex_cel_vectors(rt);
    ArgumentRanking r(rt.n, SocialRankingId::lex_cel, er);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y) {
            ComparisonOutcome o = ComparisonOutcome::equivalent;
            for (int k = 0; k < rt.width; ++k) {
                if (v[x][k] == v[y][k]) continue;
                o = v[x][k] > v[y][k] ? ComparisonOutcome::strictly_better
                                      : ComparisonOutcome::strictly_worse;
                break;
            }
            r.set_outcome(x, y, o);
        }
    return r;
}

inline ArgumentRanking lex_cel(const RankTable& rt) {
    return lex_cel(rt, rt.provenance.value_or(ExtRankingId::r_co));
}

// Singleton semantics ST_tau: a at least as strong as b iff {a} is ranked at
// least as high as {b}, i.e. rank({a}) <= rank({b}).
inline ArgumentRanking singleton_rank(const RankTable& rt, ExtRankingId er) {
    ArgumentRanking r(rt.n, SocialRankingId::singleton, er);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y) {
            int rx = rt.rank[singleton(x)];
            int ry = rt.rank[singleton(y)];
            r.set_outcome(x, y, detail::outcome_from_weak(rx <= ry, ry <= rx));
        }
    return r;
}

inline ArgumentRanking singleton_rank(const RankTable& rt) {
    return singleton_rank(rt, rt.provenance.value_or(ExtRankingId::r_ad));
}

// Existential best-set operator: a at least as strong as b iff some set containing a is
// ranked at least as high as every set containing b; with ranks this is a
// comparison of best ranks over containing sets.
inline ArgumentRanking focusing_rank(const RankTable& rt, ExtRankingId er) {
    std::vector<int> best(rt.n, rt.width + 1);
    for (ArgSet e = 0; e < rt.rank.size(); ++e)
        for_each_member(e, [&](int x) { best[x] = std::min(best[x], rt.rank[e]); });
    ArgumentRanking r(rt.n, SocialRankingId::focusing, er);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y)
            r.set_outcome(x, y,
                          detail::outcome_from_weak(best[x] <= best[y], best[y] <= best[x]));
    return r;
}

inline ArgumentRanking focusing_rank(const RankTable& rt) {
    return focusing_rank(rt, rt.provenance.value_or(ExtRankingId::r_ad));
}

// CP-majority pairwise win counts: d_xy = |{S in P(A\{x,y}) : S u {x} strictly
// better than S u {y}}|. Enumerates contexts by iterating the complement mask.
inline std::pair<long long, long long> cp_counts(const ExtensionPreorder& pre, int x, int y) {
    ArgSet others = pre.af().all() & ~singleton(x) & ~singleton(y);
    long long dxy = 0, dyx = 0;
    ArgSet s = 0;
    for (;;) {
        ComparisonOutcome o = pre.compare(s | singleton(x), s | singleton(y));
        if (o == ComparisonOutcome::strictly_better) ++dxy;
        if (o == ComparisonOutcome::strictly_worse) ++dyx;
        if (s == others) break;
        s = (s - others) & others;  // next subset of others
    }
    return {dxy, dyx};
}

// x weakly above y iff d_xy <= d_yx. The comparison runs opposite to the raw
// win counts; this is the reading under which the known SC counterexamples
// (mutual attack plus a self-attacker) come out as stated. Not necessarily
// transitive; consumers read the raw matrix.
inline ArgumentRanking cp_majority(const ExtensionPreorder& pre) {
    ArgumentRanking r(pre.af().size(), SocialRankingId::cp_majority, pre.id());
    for (int x = 0; x < pre.af().size(); ++x)
        for (int y = x + 1; y < pre.af().size(); ++y) {
            auto [dxy, dyx] = cp_counts(pre, x, y);
            r.set_outcome(x, y, detail::outcome_from_weak(dxy <= dyx, dyx <= dxy));
        }
    return r;
}

// Ordinal Banzhaf score: s_x = |{S not containing x : S u {x} strictly better
// than S}| - |{S : S strictly better than S u {x}}|.
inline long long banzhaf_score(const ExtensionPreorder& pre, int x) {
    ArgSet others = pre.af().all() & ~singleton(x);
    long long up = 0, down = 0;
    ArgSet s = 0;
    for (;;) {
        ComparisonOutcome o = pre.compare(s | singleton(x), s);
        if (o == ComparisonOutcome::strictly_better) ++up;
        if (o == ComparisonOutcome::strictly_worse) ++down;
        if (s == others) break;
        s = (s - others) & others;
    }
    return up - down;
}

// x weakly above y iff s_x <= s_y (same inverted reading as cp_majority, and
// the one that reproduces the stated SC counterexample); total preorder.
inline ArgumentRanking banzhaf(const ExtensionPreorder& pre) {
    int n = pre.af().size();
    std::vector<long long> score(n);
    for (int x = 0; x < n; ++x) score[x] = banzhaf_score(pre, x);
    ArgumentRanking r(n, SocialRankingId::banzhaf, pre.id());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            r.set_outcome(x, y,
                          detail::outcome_from_weak(score[x] <= score[y], score[y] <= score[x]));
    return r;
}

// Table forms of CP-majority and Banzhaf: the context comparisons read ranks
// instead of the raw strict relation. Used where only a rank table exists
// (perturbed tables); coincides with the preorder form on total preorders.
inline ArgumentRanking cp_majority_table(const RankTable& rt, ExtRankingId er) {
    ArgumentRanking r(rt.n, SocialRankingId::cp_majority, er);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y) {
            ArgSet others = full_set(rt.n) & ~singleton(x) & ~singleton(y);
            long long dxy = 0, dyx = 0;
            ArgSet s = 0;
            for (;;) {
                int rx = rt.rank[s | singleton(x)];
                int ry = rt.rank[s | singleton(y)];
                if (rx < ry) ++dxy;
                if (ry < rx) ++dyx;
                if (s == others) break;
                s = (s - others) & others;
            }
            r.set_outcome(x, y, detail::outcome_from_weak(dxy <= dyx, dyx <= dxy));
        }
    return r;
}

inline ArgumentRanking banzhaf_table(const RankTable& rt, ExtRankingId er) {
    std::vector<long long> score(rt.n, 0);
    for (int x = 0; x < rt.n; ++x) {
        ArgSet others = full_set(rt.n) & ~singleton(x);
        ArgSet s = 0;
        for (;;) {
            int with = rt.rank[s | singleton(x)];
            int without = rt.rank[s];
            if (with < without) ++score[x];
            if (without < with) --score[x];
            if (s == others) break;
            s = (s - others) & others;
        }
    }
    ArgumentRanking r(rt.n, SocialRankingId::banzhaf, er);
    for (int x = 0; x < rt.n; ++x)
        for (int y = x + 1; y < rt.n; ++y)
            r.set_outcome(x, y,
                          detail::outcome_from_weak(score[x] <= score[y], score[y] <= score[x]));
    return r;
}

// Evaluates a social ranking function on a bare rank table.
inline ArgumentRanking ranking_from_table(SocialRankingId sr, const RankTable& rt,
                                          ExtRankingId er) {
    switch (sr) {
        case SocialRankingId::lex_cel: return lex_cel(rt, er);
        case SocialRankingId::singleton: return singleton_rank(rt, er);
        case SocialRankingId::focusing: return focusing_rank(rt, er);
        case SocialRankingId::cp_majority: return cp_majority_table(rt, er);
        case SocialRankingId::banzhaf: return banzhaf_table(rt, er);
    }
    throw std::invalid_argument("unknown social ranking");
}

// Dispatch xi_tau over a framework; provenance recorded in the result.
inline ArgumentRanking apply(SocialRankingId sr, ExtRankingId er, const AF& af) {
    ExtensionPreorder pre(af, er);
    switch (sr) {
        case SocialRankingId::lex_cel: return lex_cel(rank_table(pre), er);
        case SocialRankingId::singleton: return singleton_rank(rank_table(pre), er);
        case SocialRankingId::focusing: return focusing_rank(rank_table(pre), er);
        case SocialRankingId::cp_majority: return cp_majority(pre);
        case SocialRankingId::banzhaf: return banzhaf(pre);
    }
    throw std::invalid_argument("unknown social ranking");
}

}  // namespace argrank
