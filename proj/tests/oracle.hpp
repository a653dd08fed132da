#pragma once

// Independent reference implementations used as test oracles. Everything here
// works on std::set<int> / std::set<pair> and follows the definitions
// literally, with none of the bitmask machinery of the library under test.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "argrank/af.hpp"
#include "argrank/ext_ranking.hpp"

namespace oracle {

using IntSet = std::set<int>;
using PairSet = std::set<std::pair<int, int>>;

inline IntSet to_set(argrank::ArgSet e) {
    IntSet out;
    argrank::for_each_member(e, [&](int i) { out.insert(i); });
    return out;
}

inline PairSet attacks_of(const argrank::AF& af) {
    PairSet r;
    for (auto [s, d] : af.attack_list()) r.insert({s, d});
    return r;
}

inline bool is_subset(const IntSet& a, const IntSet& b) {
    for (int x : a)
        if (!b.count(x)) return false;
    return true;
}

inline bool is_subset(const PairSet& a, const PairSet& b) {
    for (auto& x : a)
        if (!b.count(x)) return false;
    return true;
}

inline bool defends(const argrank::AF& af, const IntSet& e, int a) {
    PairSet r = attacks_of(af);
    for (int b = 0; b < af.size(); ++b) {
        if (!r.count({b, a})) continue;
        bool countered = false;
        for (int c : e)
            if (r.count({c, b})) countered = true;
        if (!countered) return false;
    }
    return true;
}

inline IntSet characteristic(const argrank::AF& af, const IntSet& e) {
    IntSet out;
    for (int a = 0; a < af.size(); ++a)
        if (defends(af, e, a)) out.insert(a);
    return out;
}

inline IntSet attackers_of_set(const argrank::AF& af, const IntSet& e) {
    IntSet out;
    PairSet r = attacks_of(af);
    for (auto [s, d] : r)
        if (e.count(d)) out.insert(s);
    return out;
}

inline IntSet f_star(const argrank::AF& af, const IntSet& e) {
    IntSet blocked = attackers_of_set(af, e);
    IntSet x = e;
    for (;;) {
        IntSet fx = characteristic(af, x);
        IntSet next = x;
        for (int a : fx)
            if (!blocked.count(a)) next.insert(a);
        if (next == x) return x;
        x = next;
    }
}

struct Base {
    PairSet cf;
    IntSet ud, dn, ua;
};

inline Base base(const argrank::AF& af, const IntSet& e) {
    Base b;
    PairSet r = attacks_of(af);
    for (auto& p : r)
        if (e.count(p.first) && e.count(p.second)) b.cf.insert(p);
    IntSet fe = characteristic(af, e);
    for (int a : e)
        if (!fe.count(a)) b.ud.insert(a);
    IntSet fs = f_star(af, e);
    for (int a : fs)
        if (!e.count(a)) b.dn.insert(a);
    for (int a = 0; a < af.size(); ++a) {
        if (e.count(a)) continue;
        bool attacked = false;
        for (int s : e)
            if (r.count({s, a})) attacked = true;
        if (!attacked) b.ua.insert(a);
    }
    return b;
}

// Literal tier-by-tier evaluation through the strict/equivalent abbreviations.
inline bool at_least(const argrank::AF& af, argrank::ExtRankingId tau, const IntSet& e,
                     const IntSet& f) {
    using argrank::ExtRankingId;
    Base a = base(af, e), b = base(af, f);
    auto strict = [](bool xy, bool yx) { return xy && !yx; };
    auto equiv = [](bool xy, bool yx) { return xy && yx; };

    if (tau == ExtRankingId::r_cf) return is_subset(a.cf, b.cf);

    auto rad = [&](const Base& x, const Base& y) {
        bool cxy = is_subset(x.cf, y.cf), cyx = is_subset(y.cf, x.cf);
        if (cxy && !cyx) return true;
        if (!(cxy && cyx)) return false;
        return is_subset(x.ud, y.ud);
    };
    bool ad_ab = rad(a, b), ad_ba = rad(b, a);
    if (tau == ExtRankingId::r_ad) return ad_ab;
    if (tau == ExtRankingId::r_pr)
        return strict(ad_ab, ad_ba) || (equiv(ad_ab, ad_ba) && is_subset(f, e));

    auto rco = [&](const Base& x, const Base& y, const IntSet&, const IntSet&) {
        bool axy = rad(x, y), ayx = rad(y, x);
        if (axy && !ayx) return true;
        if (!(axy && ayx)) return false;
        return is_subset(x.dn, y.dn);
    };
    bool co_ab = rco(a, b, e, f), co_ba = rco(b, a, f, e);
    if (tau == ExtRankingId::r_co) return co_ab;
    if (tau == ExtRankingId::r_gr)
        return strict(co_ab, co_ba) || (equiv(co_ab, co_ba) && is_subset(e, f));
    // r-sst
    return strict(co_ab, co_ba) || (equiv(co_ab, co_ba) && is_subset(a.ua, b.ua));
}

inline bool strictly(const argrank::AF& af, argrank::ExtRankingId tau, const IntSet& e,
                     const IntSet& f) {
    return at_least(af, tau, e, f) && !at_least(af, tau, f, e);
}

// rank(X) = 1 + longest strict chain above X, by plain recursion over subsets.
inline int rank(const argrank::AF& af, argrank::ExtRankingId tau, argrank::ArgSet x,
                std::map<argrank::ArgSet, int>& memo) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (argrank::ArgSet y = 0; y <= af.all(); ++y) {
        if (y == x) continue;
        if (strictly(af, tau, to_set(y), to_set(x))) {
            int r = rank(af, tau, y, memo);
            if (r > best) best = r;
        }
    }
    return memo[x] = best + 1;
}

}  // namespace oracle
