#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argrank/arg_set.hpp"
#include "argrank/errors.hpp"

namespace argrank {

// Abstract argumentation framework: a directed attack graph over at most
// kMaxArgs named arguments. Immutable after construction; attackers/attacked
// are kept mutually consistent by construction.
class AF {
public:
    AF(std::vector<std::string> names, const std::vector<std::pair<int, int>>& attacks)
        : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("AF needs at least one argument");
        if (static_cast<int>(names_.size()) > kMaxArgs)
            throw capacity_error("AF has " + std::to_string(names_.size()) +
                                 " arguments, capacity is " + std::to_string(kMaxArgs));
        n_ = static_cast<int>(names_.size());
        for (int i = 0; i < n_; ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("argument name must be nonempty");
            for (int j = 0; j < i; ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate argument name '" + names_[i] + "'");
        }
        attackers_.fill(0);
        attacked_.fill(0);
        for (auto [src, dst] : attacks) {
            check_index(src);
            check_index(dst);
            attacked_[src] |= singleton(dst);
            attackers_[dst] |= singleton(src);
        }
    }

    int size() const { return n_; }
    ArgSet all() const { return full_set(n_); }

    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // -1 if no argument carries this label.
    int index_of(std::string_view label) const {
        for (int i = 0; i < n_; ++i)
            if (names_[i] == label) return i;
        return -1;
    }

    bool attacks(int src, int dst) const { return contains(attacked_[src], dst); }

    // a^-_F and a^+_F.
    ArgSet attackers(int i) const {
        check_index(i);
        return attackers_[i];
    }
    ArgSet attacked(int i) const {
        check_index(i);
        return attacked_[i];
    }

    // E^-_F and E^+_F.
    ArgSet attackers_of(ArgSet e) const {
        ArgSet out = 0;
        for_each_member(e, [&](int i) { out |= attackers_[i]; });
        return out;
    }
    ArgSet attacked_by(ArgSet e) const {
        ArgSet out = 0;
        for_each_member(e, [&](int i) { out |= attacked_[i]; });
        return out;
    }

    // Attack pairs sorted by (src, dst).
    std::vector<std::pair<int, int>> attack_list() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for_each_member(attacked_[i], [&](int j) { out.emplace_back(i, j); });
        return out;
    }

    bool operator==(const AF& o) const {
        return names_ == o.names_ && attacked_ == o.attacked_;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("argument index " + std::to_string(i) +
                                    " out of range [0," + std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::array<ArgSet, kMaxArgs> attackers_;
    std::array<ArgSet, kMaxArgs> attacked_;
};

// True iff every attacker of a is attacked by some member of e.
inline bool defends(const AF& af, ArgSet e, int a) {
    af.check_index(a);
    return subset_of(af.attackers(a), af.attacked_by(e));
}

// Characteristic function F_F(E) = { a in A | E defends a }.
inline ArgSet characteristic(const AF& af, ArgSet e) {
    ArgSet attacked = af.attacked_by(e);
    ArgSet out = 0;
    for (int a = 0; a < af.size(); ++a)
        if (subset_of(af.attackers(a), attacked)) out |= singleton(a);
    return out;
}

// Witnessing bijection gamma with (a,b) in R iff (gamma(a),gamma(b)) in R',
// or nullopt. Backtracking search, desk scale.
inline std::optional<std::vector<int>> find_isomorphism(const AF& f, const AF& g) {
    if (f.size() != g.size()) return std::nullopt;
    int n = f.size();

    // Degree profile must match under any isomorphism.
    auto profile = [](const AF& af, int i) {
        return std::make_tuple(set_size(af.attackers(i)), set_size(af.attacked(i)),
                               af.attacks(i, i));
    };

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int i, int gi) {
        for (int j = 0; j <= i; ++j) {
            if (map[j] < 0) continue;
            if (f.attacks(i, j) != g.attacks(gi, map[j])) return false;
            if (f.attacks(j, i) != g.attacks(map[j], gi)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int gi = 0; gi < n; ++gi) {
            if (used[gi] || profile(f, i) != profile(g, gi)) continue;
            map[i] = gi;
            if (consistent(i, gi)) {
                used[gi] = true;
                if (self(self, i + 1)) return true;
                used[gi] = false;
            }
            map[i] = -1;
        }
        return false;
    };

    if (rec(rec, 0)) return map;
    return std::nullopt;
}

}  // namespace argrank
