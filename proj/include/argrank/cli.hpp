#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "argrank/io.hpp"

namespace argrank::cli {

// Exit codes: 0 success / principle holds, 1 principle violated,
// 2 usage or parse error, 3 capacity error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Ranking commands refuse large frameworks: the powerset algorithms cost
// O(4^n) pairs. Default guard 14, ARGRANK_MAX_ARGS overrides, kMaxArgs is the
// hard cap, --force lifts the guard.
inline int ranking_guard() {
    int guard = 14;
    if (const char* env = std::getenv("ARGRANK_MAX_ARGS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) guard = static_cast<int>(v);
    }
    return std::min(guard, kMaxArgs);
}

inline void check_ranking_size(const AF& af, bool force) {
    if (force) return;
    int guard = ranking_guard();
    if (af.size() > guard)
        throw capacity_error("framework has " + std::to_string(af.size()) +
                             " arguments; ranking commands are guarded at " +
                             std::to_string(guard) + " (pass --force to override)");
}

inline ArgSet parse_set_of(const AF& af, const std::string& tok) {
    std::string body = tok;
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    ArgSet out = 0;
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string label =
            body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int idx = af.index_of(label);
        if (idx < 0) throw std::runtime_error("unknown argument '" + label + "' in set '" + tok + "'");
        out |= singleton(idx);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct OutputOptions {
    bool json = false;
    bool ascii = false;

    const char* succ() const { return ascii ? " > " : " ≻ "; }
    const char* equiv() const { return ascii ? " = " : " ≃ "; }
};

inline std::string set_text(const AF& af, ArgSet e) {
    std::string s = "{";
    bool first = true;
    for_each_member(e, [&](int i) {
        if (!first) s += ",";
        s += af.name(i);
        first = false;
    });
    return s + "}";
}

inline std::string strata_text(const AF& af, const std::vector<std::vector<int>>& strata,
                               const OutputOptions& opt) {
    std::string s;
    for (std::size_t g = 0; g < strata.size(); ++g) {
        if (g) s += opt.succ();
        for (std::size_t i = 0; i < strata[g].size(); ++i) {
            if (i) s += opt.equiv();
            s += af.name(strata[g][i]);
        }
    }
    return s;
}

inline void print_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

inline void print_ranking(std::ostream& out, const AF& af, const ArgumentRanking& r,
                          const OutputOptions& opt) {
    if (opt.json) {
        print_json(out, ranking_to_json(af, r));
        return;
    }
    auto strata = r.strata();
    if (strata) {
        out << strata_text(af, *strata, opt) << "\n";
    } else {
        out << "(not a total preorder; pairwise matrix)\n";
    }
    for (int x = 0; x < af.size(); ++x) {
        out << af.name(x) << ":";
        for (int y = 0; y < af.size(); ++y)
            out << " " << (opt.ascii ? to_string(r.outcome(x, y)) : outcome_glyph(r.outcome(x, y)));
        out << "\n";
    }
}

inline void print_report(std::ostream& out, const AF& af, const CheckReport& rep,
                         const OutputOptions& opt) {
    if (opt.json) {
        print_json(out, report_to_json(af, rep));
        return;
    }
    out << to_string(rep.principle);
    if (rep.sigma) out << "[" << to_string(*rep.sigma) << "]";
    out << ": " << (rep.holds ? "holds" : "VIOLATED");
    if (rep.skipped_vacuous) out << " (vacuous: sigma(F) empty)";
    out << "\n";
    for (const auto& w : rep.witnesses) {
        out << "  witness:";
        if (w.x >= 0) out << " x=" << af.name(w.x);
        if (w.y >= 0) out << " y=" << af.name(w.y);
        if (w.has_sets) out << " X=" << set_text(af, w.set_x) << " Y=" << set_text(af, w.set_y);
        if (w.count_x >= 0) out << " count_x=" << w.count_x;
        if (w.count_y >= 0) out << " count_y=" << w.count_y;
        out << " -- " << w.note << "\n";
    }
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"argrank: extension semantics, extension rankings and social-ranking-based "
                 "argument rankings for abstract argumentation frameworks"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string input_format = "auto";
    bool force = false;
    bool ascii = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--input-format", input_format, "Input format override")
        ->check(CLI::IsMember({"auto", "apx", "iccma"}));
    app.add_flag("--force", force, "Lift the argument-count guard on ranking commands");
    app.add_flag("--ascii", ascii, "ASCII relation symbols in text output");

    std::string file, semantics = "co", er = "r-co", sr = "lex-cel", sigma, principles;
    std::vector<std::string> sets;
    int k = 1;
    int max_n = 4;
    std::vector<int> sample_ns;
    std::vector<int> sample_counts;
    std::uint64_t seed = 1;

    CLI::App* c_ext = app.add_subcommand("extensions", "Enumerate sigma-extensions");
    c_ext->add_option("file", file)->required();
    c_ext->add_option("--semantics", semantics, "cf|ad|co|pr|gr|stb|sst");

    CLI::App* c_status = app.add_subcommand("status", "Skeptical/credulous/rejected statuses");
    c_status->add_option("file", file)->required();
    c_status->add_option("--semantics", semantics, "cf|ad|co|pr|gr|stb|sst");

    CLI::App* c_erank = app.add_subcommand("erank", "Rank stratification of the powerset");
    c_erank->add_option("file", file)->required();
    c_erank->add_option("--er", er, "r-cf|r-ad|r-co|r-pr|r-gr|r-sst");

    CLI::App* c_arank = app.add_subcommand("arank", "Argument ranking via a social ranking");
    c_arank->add_option("file", file)->required();
    c_arank->add_option("--sr", sr, "lex-cel|singleton|focusing|cp-majority|banzhaf");
    c_arank->add_option("--er", er, "underlying extension ranking");

    CLI::App* c_cmp = app.add_subcommand("compare", "Compare two argument sets");
    c_cmp->add_option("file", file)->required();
    c_cmp->add_option("--er", er, "extension ranking");
    c_cmp->add_option("--set", sets, "comma-joined labels, {} for empty (exactly twice)")
        ->expected(2)->required();

    CLI::App* c_check = app.add_subcommand("check", "Check principles on one framework");
    c_check->add_option("file", file)->required();
    c_check->add_option("--principle", principles, "comma-separated principle list")->required();
    c_check->add_option("--sr", sr, "social ranking");
    c_check->add_option("--er", er, "extension ranking");
    c_check->add_option("--sigma", sigma, "extension semantics for sigma-principles");
    c_check->add_option("--k", k, "k for rank-k-supermajority");

    CLI::App* c_verify = app.add_subcommand("verify", "Run the exhaustive theorem suite");
    c_verify->add_option("--max-n", max_n, "exhaustive bound (1..4)")->check(CLI::Range(1, 4));
    c_verify->add_option("--n", sample_ns, "sampled framework size (repeatable)");
    c_verify->add_option("--samples", sample_counts, "sample count per --n (repeatable)");
    c_verify->add_option("--seed", seed, "sampling seed");

    CLI::App* c_realise = app.add_subcommand("realise", "Search for an AF realising a preorder");
    c_realise->add_option("file", file, "preorder file")->required();
    c_realise->add_option("--er", er, "extension ranking");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    detail::OutputOptions opt{format == "json", ascii};

    try {
        InputFormat fmt = input_format == "apx"     ? InputFormat::apx
                          : input_format == "iccma" ? InputFormat::iccma
                                                    : InputFormat::auto_detect;

        if (app.got_subcommand(c_verify)) {
            if (sample_ns.size() != sample_counts.size())
                throw std::runtime_error("--n and --samples must be given the same number of times");
            VerifyOptions vo;
            vo.max_n = max_n;
            vo.seed = seed;
            for (std::size_t i = 0; i < sample_ns.size(); ++i)
                vo.samples.emplace_back(sample_ns[i], sample_counts[i]);
            VerifyReport rep = run_verification(vo);
            if (opt.json) {
                detail::print_json(out, verify_to_json(rep));
            } else {
                for (const auto& c : rep.checks) {
                    out << (c.violations ? "FAIL " : "ok   ") << c.name << "  [" << c.instances
                        << " instances";
                    if (c.skipped) out << ", " << c.skipped << " vacuous-skipped";
                    out << "]";
                    if (c.violations)
                        out << "  violations=" << c.violations << " first=" << c.first_violation;
                    out << "\n";
                }
                out << (rep.ok() ? "all checks passed" : "COUNTEREXAMPLES FOUND") << " ("
                    << rep.afs << " frameworks)\n";
            }
            return rep.ok() ? kExitOk : kExitViolated;
        }

        if (app.got_subcommand(c_realise)) {
            auto tau = parse_ext_ranking(er);
            if (!tau) throw std::runtime_error("unknown extension ranking '" + er + "'");
            PreorderTarget target = parse_preorder_target(detail::read_input(file));
            auto witness = realisable(target, *tau);
            if (opt.json) {
                ordered_json j;
                j["er"] = er;
                j["realisable"] = witness.has_value();
                j["witness"] = witness ? af_to_json(*witness) : ordered_json(nullptr);
                detail::print_json(out, j);
            } else if (witness) {
                out << "realised by:\n" << write_apx(*witness);
            } else {
                out << "not realisable in scope\n";
            }
            return kExitOk;
        }

        AF af = parse_af(detail::read_input(file), fmt, file);

        if (app.got_subcommand(c_ext) || app.got_subcommand(c_status)) {
            auto sem = parse_semantics(semantics);
            if (!sem) throw std::runtime_error("unknown semantics '" + semantics + "'");
            if (app.got_subcommand(c_ext)) {
                auto exts = extensions(af, *sem);
                if (opt.json) {
                    detail::print_json(out, extensions_to_json(af, *sem, exts));
                } else {
                    for (ArgSet e : exts) out << detail::set_text(af, e) << "\n";
                }
            } else {
                StatusReport rep = status(af, *sem);
                if (opt.json) {
                    detail::print_json(out, status_to_json(af, rep));
                } else {
                    for (int i = 0; i < af.size(); ++i)
                        out << af.name(i) << ": " << to_string(rep.status[i]) << "\n";
                    if (rep.vacuous_skeptical)
                        out << "(vacuous: no " << semantics << " extension exists)\n";
                }
            }
            return kExitOk;
        }

        auto tau = parse_ext_ranking(er);
        if (!tau) throw std::runtime_error("unknown extension ranking '" + er + "'");

        if (app.got_subcommand(c_cmp)) {
            ExtensionPreorder pre(af, *tau);
            ArgSet left = detail::parse_set_of(af, sets[0]);
            ArgSet right = detail::parse_set_of(af, sets[1]);
            ComparisonOutcome o = pre.compare(left, right);
            if (opt.json) {
                ordered_json j;
                j["er"] = er;
                j["left"] = set_to_json(af, left);
                j["right"] = set_to_json(af, right);
                j["outcome"] = to_string(o);
                detail::print_json(out, j);
            } else {
                out << to_string(o) << "\n";
            }
            return kExitOk;
        }

        detail::check_ranking_size(af, force);

        if (app.got_subcommand(c_erank)) {
            RankTable rt = rank_table(ExtensionPreorder(af, *tau));
            if (opt.json) {
                detail::print_json(out, rank_table_to_json(af, rt));
            } else {
                for (int level = 1; level <= rt.width; ++level) {
                    out << "rank " << level << ":";
                    for (ArgSet e : rt.strata[level - 1]) out << " " << detail::set_text(af, e);
                    out << "\n";
                }
            }
            return kExitOk;
        }

        if (app.got_subcommand(c_arank)) {
            auto xi = parse_social_ranking(sr);
            if (!xi) throw std::runtime_error("unknown social ranking '" + sr + "'");
            detail::print_ranking(out, af, apply(*xi, *tau, af), opt);
            return kExitOk;
        }

        // check
        std::vector<PrincipleId> plist;
        {
            std::size_t pos = 0;
            while (pos <= principles.size()) {
                std::size_t comma = principles.find(',', pos);
                std::string tok = principles.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                auto p = parse_principle(tok);
                if (!p) throw std::runtime_error("unknown principle '" + tok + "'");
                plist.push_back(*p);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        std::optional<SemanticsId> sig;
        if (!sigma.empty()) {
            sig = parse_semantics(sigma);
            if (!sig) throw std::runtime_error("unknown semantics '" + sigma + "'");
        }
        auto xi = parse_social_ranking(sr);
        if (!xi) throw std::runtime_error("unknown social ranking '" + sr + "'");

        ExtensionPreorder pre(af, *tau);
        RankTable rt = rank_table(pre);
        ArgumentRanking ranking = apply(*xi, *tau, af);

        bool all_hold = true;
        for (PrincipleId p : plist) {
            CheckReport rep = [&]() -> CheckReport {
                switch (p) {
                    case PrincipleId::sc: return check_sc(af, ranking);
                    case PrincipleId::sigma_c:
                    case PrincipleId::sigma_sk_c:
                    case PrincipleId::sigma_refinement: {
                        if (!sig)
                            throw std::runtime_error(std::string("principle ") + to_string(p) +
                                                     " needs --sigma");
                        if (p == PrincipleId::sigma_c) return check_sigma_c(af, *sig, ranking);
                        if (p == PrincipleId::sigma_sk_c)
                            return check_sigma_sk_c(af, *sig, ranking);
                        return check_refinement(af, *sig, ranking);
                    }
                    case PrincipleId::sigma_soundness:
                    case PrincipleId::sigma_completeness:
                    case PrincipleId::sigma_generalisation: {
                        if (!sig)
                            throw std::runtime_error(std::string("principle ") + to_string(p) +
                                                     " needs --sigma");
                        return check_generalisation(af, *tau, *sig, p);
                    }
                    case PrincipleId::respects_conflicts: return check_respects_conflicts(pre);
                    case PrincipleId::pareto_efficiency: return check_pareto(rt, ranking);
                    case PrincipleId::dominating_set: return check_dominating_set(pre, ranking);
                    case PrincipleId::independence_worst_set: {
                        CheckReport agg(PrincipleId::independence_worst_set);
                        for (const Perturbation& pert : iws_perturbation_family()) {
                            RankTable star = perturb_worst_stratum(rt, pert);
                            CheckReport one = check_iws(rt, star, [&](const RankTable& t) {
                                return ranking_from_table(*xi, t, *tau);
                            });
                            if (!one.holds) {
                                agg.holds = false;
                                for (auto& w : one.witnesses) agg.witnesses.push_back(std::move(w));
                            }
                        }
                        return agg;
                    }
                    case PrincipleId::rank_k_supermajority:
                        return check_k_supermajority(rt, ranking, k);
                }
                throw std::runtime_error("unhandled principle");
            }();
            all_hold = all_hold && rep.holds;
            detail::print_report(out, af, rep, opt);
        }
        return all_hold ? kExitOk : kExitViolated;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace argrank::cli
