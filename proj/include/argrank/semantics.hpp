#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argrank/af.hpp"

namespace argrank {

enum class SemanticsId { cf, ad, co, pr, gr, stb, sst };

inline constexpr const char* to_string(SemanticsId s) {
    switch (s) {
        case SemanticsId::cf: return "cf";
        case SemanticsId::ad: return "ad";
        case SemanticsId::co: return "co";
        case SemanticsId::pr: return "pr";
        case SemanticsId::gr: return "gr";
        case SemanticsId::stb: return "stb";
        case SemanticsId::sst: return "sst";
    }
    return "?";
}

inline std::optional<SemanticsId> parse_semantics(std::string_view s) {
    for (SemanticsId id : {SemanticsId::cf, SemanticsId::ad, SemanticsId::co,
                           SemanticsId::pr, SemanticsId::gr, SemanticsId::stb,
                           SemanticsId::sst})
        if (s == to_string(id)) return id;
    return std::nullopt;
}

inline bool conflict_free(const AF& af, ArgSet e) {
    ArgSet rest = e;
    bool ok = true;
    for_each_member(rest, [&](int i) {
        if ((af.attacked(i) & e) != 0) ok = false;
    });
    return ok;
}

inline bool admissible(const AF& af, ArgSet e) {
    return conflict_free(af, e) && subset_of(e, characteristic(af, e));
}

inline bool complete(const AF& af, ArgSet e) {
    return conflict_free(af, e) && characteristic(af, e) == e;
}

inline bool stable(const AF& af, ArgSet e) {
    return conflict_free(af, e) && af.attacked_by(e) == (af.all() & ~e);
}

// E u E^+, the range of E.
inline ArgSet range_of(const AF& af, ArgSet e) { return e | af.attacked_by(e); }

// Least fixed point of the characteristic function, iterated from the empty
// set. Fast path for gr; tests cross-check it against the powerset filter.
inline ArgSet grounded_fixpoint(const AF& af) {
    ArgSet e = 0;
    for (;;) {
        ArgSet next = characteristic(af, e);
        if (next == e) return e;
        e = next;
    }
}

// Exact set of sigma-extensions, filtered from the enumerated powerset and
// canonically ordered by bitmask value. O(2^n) over n <= kMaxArgs.
inline std::vector<ArgSet> extensions(const AF& af, SemanticsId sem) {
    std::vector<ArgSet> out;
    ArgSet end = af.all();
    switch (sem) {
        case SemanticsId::cf:
        case SemanticsId::ad:
        case SemanticsId::co:
        case SemanticsId::stb: {
            for (ArgSet e = 0;; ++e) {
                bool keep = sem == SemanticsId::cf   ? conflict_free(af, e)
                            : sem == SemanticsId::ad ? admissible(af, e)
                            : sem == SemanticsId::co ? complete(af, e)
                                                     : stable(af, e);
                if (keep) out.push_back(e);
                if (e == end) break;
            }
            return out;
        }
        case SemanticsId::pr: {
            auto comps = extensions(af, SemanticsId::co);
            for (ArgSet e : comps) {
                bool maximal = true;
                for (ArgSet f : comps)
                    if (proper_subset_of(e, f)) maximal = false;
                if (maximal) out.push_back(e);
            }
            return out;
        }
        case SemanticsId::gr:
            return {grounded_fixpoint(af)};
        case SemanticsId::sst: {
            auto comps = extensions(af, SemanticsId::co);
            for (ArgSet e : comps) {
                bool maximal = true;
                for (ArgSet f : comps)
                    if (proper_subset_of(range_of(af, e), range_of(af, f))) maximal = false;
                if (maximal) out.push_back(e);
            }
            return out;
        }
    }
    return out;
}

enum class AcceptanceStatus { skeptical, credulous_only, rejected };

inline constexpr const char* to_string(AcceptanceStatus s) {
    switch (s) {
        case AcceptanceStatus::skeptical: return "skeptical";
        case AcceptanceStatus::credulous_only: return "credulous-only";
        case AcceptanceStatus::rejected: return "rejected";
    }
    return "?";
}

// Partition of A into sk / cred \ sk / rej. When sigma(F) is empty (possible
// for stb) every argument is rejected and vacuous_skeptical is raised instead
// of silently calling everything skeptical.
struct StatusReport {
    SemanticsId semantics;
    std::vector<AcceptanceStatus> status;
    bool vacuous_skeptical = false;

    ArgSet skeptical_set() const {
        ArgSet s = 0;
        for (int i = 0; i < static_cast<int>(status.size()); ++i)
            if (status[i] == AcceptanceStatus::skeptical) s |= singleton(i);
        return s;
    }
    ArgSet credulous_set() const {  // sk u cred-only
        ArgSet s = 0;
        for (int i = 0; i < static_cast<int>(status.size()); ++i)
            if (status[i] != AcceptanceStatus::rejected) s |= singleton(i);
        return s;
    }
};

inline StatusReport status(const AF& af, SemanticsId sem) {
    auto exts = extensions(af, sem);
    StatusReport rep{sem, std::vector<AcceptanceStatus>(af.size()), false};
    if (exts.empty()) {
        rep.vacuous_skeptical = true;
        for (auto& s : rep.status) s = AcceptanceStatus::rejected;
        return rep;
    }
    ArgSet in_all = af.all();
    ArgSet in_some = 0;
    for (ArgSet e : exts) {
        in_all &= e;
        in_some |= e;
    }
    for (int i = 0; i < af.size(); ++i)
        rep.status[i] = contains(in_all, i)    ? AcceptanceStatus::skeptical
                        : contains(in_some, i) ? AcceptanceStatus::credulous_only
                                               : AcceptanceStatus::rejected;
    return rep;
}

}  // namespace argrank
