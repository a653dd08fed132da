#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argrank/base_relations.hpp"
#include "argrank/errors.hpp"
#include "argrank/semantics.hpp"

namespace argrank {

enum class ComparisonOutcome { strictly_better, equivalent, strictly_worse, incomparable };

inline constexpr ComparisonOutcome flip(ComparisonOutcome o) {
    switch (o) {
        case ComparisonOutcome::strictly_better: return ComparisonOutcome::strictly_worse;
        case ComparisonOutcome::strictly_worse: return ComparisonOutcome::strictly_better;
        default: return o;
    }
}

inline constexpr const char* to_string(ComparisonOutcome o) {
    switch (o) {
        case ComparisonOutcome::strictly_better: return "STRICTLY_BETTER";
        case ComparisonOutcome::equivalent: return "EQUIVALENT";
        case ComparisonOutcome::strictly_worse: return "STRICTLY_WORSE";
        case ComparisonOutcome::incomparable: return "INCOMPARABLE";
    }
    return "?";
}

enum class ExtRankingId { r_cf, r_ad, r_co, r_pr, r_gr, r_sst };

inline constexpr ExtRankingId kAllExtRankings[] = {ExtRankingId::r_cf,  ExtRankingId::r_ad,
                                                   ExtRankingId::r_co,  ExtRankingId::r_pr,
                                                   ExtRankingId::r_gr,  ExtRankingId::r_sst};

// The five composite extension-ranking semantics; r-cf is the CF base ranking alone.
inline constexpr ExtRankingId kCompositeRankings[] = {ExtRankingId::r_ad, ExtRankingId::r_co,
                                                  ExtRankingId::r_pr, ExtRankingId::r_gr,
                                                  ExtRankingId::r_sst};

inline constexpr const char* to_string(ExtRankingId t) {
    switch (t) {
        case ExtRankingId::r_cf: return "r-cf";
        case ExtRankingId::r_ad: return "r-ad";
        case ExtRankingId::r_co: return "r-co";
        case ExtRankingId::r_pr: return "r-pr";
        case ExtRankingId::r_gr: return "r-gr";
        case ExtRankingId::r_sst: return "r-sst";
    }
    return "?";
}

inline std::optional<ExtRankingId> parse_ext_ranking(std::string_view s) {
    for (ExtRankingId id : kAllExtRankings)
        if (s == to_string(id)) return id;
    return std::nullopt;
}

// The semantics an extension-ranking generalises (r-sigma <-> sigma); r-cf
// pairs with cf.
inline constexpr SemanticsId generalised_semantics(ExtRankingId t) {
    switch (t) {
        case ExtRankingId::r_cf: return SemanticsId::cf;
        case ExtRankingId::r_ad: return SemanticsId::ad;
        case ExtRankingId::r_co: return SemanticsId::co;
        case ExtRankingId::r_pr: return SemanticsId::pr;
        case ExtRankingId::r_gr: return SemanticsId::gr;
        case ExtRankingId::r_sst: return SemanticsId::sst;
    }
    return SemanticsId::cf;
}

// Lazily-usable pairwise comparator over 2^A induced by an extension-ranking
// semantics. Base signatures are memoized for the whole powerset up front;
// a comparison is then a handful of subset tests. Immutable after
// construction, safe to share. Powerset-wide consumers cost O(4^n) pairs.
class ExtensionPreorder {
public:
    ExtensionPreorder(AF af, ExtRankingId id) : af_(std::move(af)), id_(id) {
        sigs_.reserve(std::size_t{1} << af_.size());
        for (ArgSet e = 0; e <= af_.all(); ++e) sigs_.push_back(base_signature(af_, e));
    }

    const AF& af() const { return af_; }
    ExtRankingId id() const { return id_; }
    const BaseSignature& signature(ArgSet e) const { return sigs_[e]; }
    std::size_t subset_count() const { return sigs_.size(); }

    // E at least as plausible as F (the weak lexicographic relation).
    bool at_least(ArgSet e, ArgSet f) const {
        const BaseSignature& a = sigs_[e];
        const BaseSignature& b = sigs_[f];
        bool cf_ab = cf_subset(a, b);
        bool cf_ba = cf_subset(b, a);
        if (id_ == ExtRankingId::r_cf) return cf_ab;
        if (cf_ab && !cf_ba) return true;   // strict at the CF tier
        if (!(cf_ab && cf_ba)) return false;
        bool ud_ab = subset_of(a.ud, b.ud);
        bool ud_ba = subset_of(b.ud, a.ud);
        if (id_ == ExtRankingId::r_ad) return ud_ab;
        if (ud_ab && !ud_ba) return true;   // strict at r-ad
        if (!(ud_ab && ud_ba)) return false;
        if (id_ == ExtRankingId::r_pr) return subset_of(f, e);
        bool dn_ab = subset_of(a.dn, b.dn);
        bool dn_ba = subset_of(b.dn, a.dn);
        if (id_ == ExtRankingId::r_co) return dn_ab;
        if (dn_ab && !dn_ba) return true;   // strict at r-co
        if (!(dn_ab && dn_ba)) return false;
        if (id_ == ExtRankingId::r_gr) return subset_of(e, f);
        return subset_of(a.ua, b.ua);       // r-sst
    }

    bool strictly_better(ArgSet e, ArgSet f) const {
        return at_least(e, f) && !at_least(f, e);
    }

    ComparisonOutcome compare(ArgSet e, ArgSet f) const {
        bool ab = at_least(e, f);
        bool ba = at_least(f, e);
        if (ab && ba) return ComparisonOutcome::equivalent;
        if (ab) return ComparisonOutcome::strictly_better;
        if (ba) return ComparisonOutcome::strictly_worse;
        return ComparisonOutcome::incomparable;
    }

private:
    AF af_;
    ExtRankingId id_;
    std::vector<BaseSignature> sigs_;
};

// max_tau(F): subsets with no strict dominator.
inline std::vector<ArgSet> most_plausible(const ExtensionPreorder& pre) {
    std::vector<ArgSet> out;
    ArgSet end = pre.af().all();
    for (ArgSet e = 0;; ++e) {
        bool maximal = true;
        for (ArgSet f = 0; maximal; ++f) {
            if (f != e && pre.strictly_better(f, e)) maximal = false;
            if (f == end) break;
        }
        if (maximal) out.push_back(e);
        if (e == end) break;
    }
    return out;
}

// rank(X) = 1 + length of the longest strict chain above X; strata list every
// subset per rank. Ranks are exactly 1..width with no gaps. Also represents
// perturbed tables that no AF induces (provenance empty).
struct RankTable {
    int n = 0;
    std::vector<int> rank;                   // indexed by bitmask, 1-based ranks
    std::vector<std::vector<ArgSet>> strata; // strata[k-1], each sorted by mask
    int width = 0;
    std::optional<ExtRankingId> provenance;

    // x_{k,>=}: number of rank-k subsets containing x.
    int count_in_rank(int x, int k) const {
        if (k < 1 || k > width)
            throw std::out_of_range("rank " + std::to_string(k) + " out of range [1," +
                                    std::to_string(width) + "]");
        int c = 0;
        for (ArgSet e : strata[k - 1])
            if (contains(e, x)) ++c;
        return c;
    }
};

// Rebuilds strata/width from a raw rank assignment, compacting ranks to
// 1..width without gaps while preserving their order.
inline RankTable table_from_ranks(int n, std::vector<int> raw,
                                  std::optional<ExtRankingId> provenance = std::nullopt) {
    std::vector<int> distinct(raw);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    RankTable rt;
    rt.n = n;
    rt.width = static_cast<int>(distinct.size());
    rt.provenance = provenance;
    rt.rank.resize(raw.size());
    rt.strata.assign(rt.width, {});
    for (ArgSet e = 0; e < raw.size(); ++e) {
        int k = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), raw[e]) -
                                 distinct.begin()) + 1;
        rt.rank[e] = k;
        rt.strata[k - 1].push_back(e);
    }
    return rt;
}

namespace detail {

// Hashable key identifying the equivalence class of a subset under the chosen
// semantics. For r-pr/r-gr the second tier compares the sets themselves, so
// the set joins the key (classes collapse only for identical sets).
inline std::uint64_t class_key(const ExtensionPreorder& pre, ArgSet e) {
    const BaseSignature& s = pre.signature(e);
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int u = 0; u < pre.af().size(); ++u) mix(s.cf_rows[u]);
    switch (pre.id()) {
        case ExtRankingId::r_cf: break;
        case ExtRankingId::r_ad: mix(s.ud); break;
        case ExtRankingId::r_co: mix(s.ud); mix(s.dn); break;
        case ExtRankingId::r_pr: mix(s.ud); mix(e); break;
        case ExtRankingId::r_gr: mix(s.ud); mix(s.dn); mix(e); break;
        case ExtRankingId::r_sst: mix(s.ud); mix(s.dn); mix(s.ua); break;
    }
    return h;
}

}  // namespace detail

// Rank by grouping subsets into equivalence classes, building the strict
// dominance DAG over classes and running longest-path DP in topological
// (memoized-DFS) order. Must coincide with rank_table_naive.
inline RankTable rank_table(const ExtensionPreorder& pre) {
    const std::size_t total = pre.subset_count();
    std::vector<int> class_of(total);
    std::vector<ArgSet> rep;  // representative subset per class
    {
        std::unordered_map<std::uint64_t, std::vector<int>> buckets;
        for (ArgSet e = 0; e < total; ++e) {
            auto& bucket = buckets[detail::class_key(pre, e)];
            int idx = -1;
            for (int c : bucket)  // guard against hash collisions
                if (pre.compare(rep[c], e) == ComparisonOutcome::equivalent) { idx = c; break; }
            if (idx < 0) {
                idx = static_cast<int>(rep.size());
                rep.push_back(e);
                bucket.push_back(idx);
            }
            class_of[e] = idx;
        }
    }

    const int classes = static_cast<int>(rep.size());
    std::vector<int> longest(classes, -1);  // longest strict chain above, in classes
    auto chain_above = [&](auto&& self, int c) -> int {
        if (longest[c] >= 0) return longest[c];
        longest[c] = 0;  // preorder => the strict class relation is acyclic
        int best = 0;
        for (int d = 0; d < classes; ++d)
            if (d != c && pre.strictly_better(rep[d], rep[c]))
                best = std::max(best, self(self, d) + 1);
        return longest[c] = best;
    };

    std::vector<int> raw(total);
    for (ArgSet e = 0; e < total; ++e) raw[e] = chain_above(chain_above, class_of[e]) + 1;
    return table_from_ranks(pre.af().size(), std::move(raw), pre.id());
}

// Oracle form: rank(X) = 1 + max{rank(Y) : Y strictly better than X}, memoized
// per subset, max over the empty set = 0.
inline RankTable rank_table_naive(const ExtensionPreorder& pre) {
    const std::size_t total = pre.subset_count();
    std::vector<int> memo(total, 0);
    auto rank_of = [&](auto&& self, ArgSet e) -> int {
        if (memo[e] != 0) return memo[e];
        int best = 0;
        for (ArgSet f = 0; f < total; ++f)
            if (f != e && pre.strictly_better(f, e))
                best = std::max(best, self(self, f));
        return memo[e] = best + 1;
    };
    std::vector<int> raw(total);
    for (ArgSet e = 0; e < total; ++e) raw[e] = rank_of(rank_of, e);
    return table_from_ranks(pre.af().size(), std::move(raw), pre.id());
}

}  // namespace argrank
