#pragma once

#include <array>
#include <utility>
#include <vector>

#include "argrank/af.hpp"

namespace argrank {

// F*_F(E): least fixpoint of X_1 = E, X_i = X_{i-1} u (F(X_{i-1}) \ E^-).
// Monotone over a finite lattice, terminates within n iterations.
inline ArgSet f_star(const AF& af, ArgSet e) {
    ArgSet blocked = af.attackers_of(e);
    ArgSet x = e;
    for (;;) {
        ArgSet next = x | (characteristic(af, x) & ~blocked);
        if (next == x) return x;
        x = next;
    }
}

// The four base-relation outputs of a set. CF is kept per source argument
// (cf_rows[u] = targets v with (u,v) an attack inside E) so that equality and
// inclusion stay word-wise.
struct BaseSignature {
    std::array<ArgSet, kMaxArgs> cf_rows;
    ArgSet ud = 0;  // E \ F(E)
    ArgSet dn = 0;  // F*(E) \ E
    ArgSet ua = 0;  // arguments outside E unattacked by E

    bool operator==(const BaseSignature&) const = default;
};

inline BaseSignature base_signature(const AF& af, ArgSet e) {
    BaseSignature sig;
    sig.cf_rows.fill(0);
    for_each_member(e, [&](int u) { sig.cf_rows[u] = af.attacked(u) & e; });
    sig.ud = e & ~characteristic(af, e);
    sig.dn = f_star(af, e) & ~e;
    sig.ua = af.all() & ~e & ~af.attacked_by(e);
    return sig;
}

inline bool cf_equal(const BaseSignature& a, const BaseSignature& b) {
    return a.cf_rows == b.cf_rows;
}

// CF(a) subseteq CF(b), pairwise on attacks.
inline bool cf_subset(const BaseSignature& a, const BaseSignature& b) {
    for (int u = 0; u < kMaxArgs; ++u)
        if (!subset_of(a.cf_rows[u], b.cf_rows[u])) return false;
    return true;
}

inline int cf_size(const BaseSignature& a) {
    int total = 0;
    for (ArgSet row : a.cf_rows) total += set_size(row);
    return total;
}

// Attack pairs of CF(E), sorted by (src, dst).
inline std::vector<std::pair<int, int>> cf_pairs(const BaseSignature& a) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < kMaxArgs; ++u)
        for_each_member(a.cf_rows[u], [&](int v) { out.emplace_back(u, v); });
    return out;
}

}  // namespace argrank
