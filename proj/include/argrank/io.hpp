#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "argrank/axioms.hpp"
#include "argrank/verify.hpp"

namespace argrank {

using ordered_json = nlohmann::ordered_json;

enum class InputFormat { auto_detect, apx, iccma };

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }
};

inline bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::string read_label(Cursor& c) {
    c.skip_ws();
    if (c.done() || !label_char(c.peek()))
        c.fail(c.done() ? "unexpected end of input, expected label"
                        : std::string("unexpected character '") + c.peek() +
                              "', expected label");
    std::string out;
    while (!c.done() && label_char(c.peek())) {
        out += c.peek();
        c.advance();
    }
    return out;
}

inline void expect(Cursor& c, char ch) {
    c.skip_ws();
    if (c.done() || c.peek() != ch)
        c.fail(c.done() ? std::string("unexpected end of input, expected '") + ch + "'"
                        : std::string("expected '") + ch + "' before '" + c.peek() + "'");
    c.advance();
}

}  // namespace detail

// APX: facts `arg(<label>).` / `att(<label>,<label>).`, whitespace
// insignificant, labels [A-Za-z0-9_]+. Attack labels may be declared by a
// later arg-fact; duplicate arg-facts are an error, duplicate att-facts are
// idempotent. Argument ids follow first arg-fact appearance.
inline AF parse_apx(std::string_view text) {
    detail::Cursor c{text};
    std::vector<std::string> names;
    struct Att {
        std::string src, dst;
        int line, col;
    };
    std::vector<Att> atts;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        int fact_line = c.line, fact_col = c.col;
        std::string kw = detail::read_label(c);
        if (kw == "arg") {
            detail::expect(c, '(');
            std::string label = detail::read_label(c);
            detail::expect(c, ')');
            detail::expect(c, '.');
            for (const auto& n : names)
                if (n == label)
                    throw parse_error("duplicate declaration of argument '" + label + "'",
                                      fact_line, fact_col);
            names.push_back(label);
        } else if (kw == "att") {
            detail::expect(c, '(');
            std::string src = detail::read_label(c);
            detail::expect(c, ',');
            std::string dst = detail::read_label(c);
            detail::expect(c, ')');
            detail::expect(c, '.');
            atts.push_back({std::move(src), std::move(dst), fact_line, fact_col});
        } else {
            throw parse_error("unknown fact '" + kw + "', expected arg(...) or att(...)",
                              fact_line, fact_col);
        }
    }
    if (names.empty()) throw parse_error("no arg(...) facts found", c.line, 0);
    auto index = [&](const std::string& label, int line, int col) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == label) return static_cast<int>(i);
        throw parse_error("undeclared label '" + label + "' in att(...)", line, col);
    };
    std::vector<std::pair<int, int>> attacks;
    for (const auto& a : atts)
        attacks.emplace_back(index(a.src, a.line, a.col), index(a.dst, a.line, a.col));
    return AF(std::move(names), attacks);
}

// ICCMA'23 `p af <n>` format: header, then one `<i> <j>` attack per line with
// 1-based indices; `#` lines are comments. Synthetic names a1..an.
inline AF parse_iccma(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> attacks;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v(line);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        if (v.empty() || v.front() == '#') continue;
        std::istringstream ls{std::string(v)};
        if (n < 0) {
            std::string p, af_kw;
            if (!(ls >> p >> af_kw >> n) || p != "p" || af_kw != "af" || n < 0 || !(ls >> std::ws).eof())
                throw parse_error("expected header 'p af <n>'", lineno, 0);
            if (n == 0)
                throw parse_error("empty framework (n=0) is not representable", lineno, 0);
            if (n > kMaxArgs)
                throw capacity_error("framework has " + std::to_string(n) +
                                     " arguments, capacity is " + std::to_string(kMaxArgs));
            continue;
        }
        long long i, j;
        if (!(ls >> i >> j) || !(ls >> std::ws).eof())
            throw parse_error("expected attack line '<i> <j>'", lineno, 0);
        if (i < 1 || i > n || j < 1 || j > n)
            throw parse_error("attack " + std::to_string(i) + " " + std::to_string(j) +
                                  " out of range 1.." + std::to_string(n),
                              lineno, 0);
        attacks.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    if (n < 0) throw parse_error("missing 'p af <n>' header", lineno, 0);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return AF(std::move(names), attacks);
}

inline AF parse_af(std::string_view text, InputFormat fmt,
                   std::string_view filename_hint = {}) {
    if (fmt == InputFormat::auto_detect) {
        if (filename_hint.ends_with(".apx"))
            fmt = InputFormat::apx;
        else if (filename_hint.ends_with(".af") || filename_hint.ends_with(".iccma"))
            fmt = InputFormat::iccma;
        else {
            // First meaningful content decides: 'p'/'#' lines mean ICCMA.
            std::size_t i = 0;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            fmt = (i < text.size() && (text[i] == 'p' || text[i] == '#')) ? InputFormat::iccma
                                                                          : InputFormat::apx;
        }
    }
    return fmt == InputFormat::apx ? parse_apx(text) : parse_iccma(text);
}

inline std::string write_apx(const AF& af) {
    std::string out;
    for (int i = 0; i < af.size(); ++i) out += "arg(" + af.name(i) + ").\n";
    for (auto [s, d] : af.attack_list()) out += "att(" + af.name(s) + "," + af.name(d) + ").\n";
    return out;
}

inline std::string write_iccma(const AF& af) {
    std::string out = "p af " + std::to_string(af.size()) + "\n";
    for (auto [s, d] : af.attack_list())
        out += std::to_string(s + 1) + " " + std::to_string(d + 1) + "\n";
    return out;
}

// ---- JSON encoding ----
// Sets are sorted label arrays; set lists are ordered by bitmask value;
// incomparability is explicit. Output is byte-stable for identical inputs.

inline ordered_json set_to_json(const AF& af, ArgSet e) {
    std::vector<std::string> labels;
    for_each_member(e, [&](int i) { labels.push_back(af.name(i)); });
    std::sort(labels.begin(), labels.end());
    ordered_json arr = ordered_json::array();
    for (auto& l : labels) arr.push_back(std::move(l));
    return arr;
}

inline const char* outcome_glyph(ComparisonOutcome o) {
    switch (o) {
        case ComparisonOutcome::strictly_better: return "≻";   // ≻
        case ComparisonOutcome::strictly_worse: return "≺";    // ≺
        case ComparisonOutcome::equivalent: return "≃";        // ≃
        case ComparisonOutcome::incomparable: return "⋈";      // ⋈
    }
    return "?";
}

inline ordered_json extensions_to_json(const AF& af, SemanticsId sem,
                                       const std::vector<ArgSet>& exts) {
    ordered_json j;
    j["semantics"] = to_string(sem);
    j["count"] = exts.size();
    ordered_json arr = ordered_json::array();
    for (ArgSet e : exts) arr.push_back(set_to_json(af, e));
    j["extensions"] = arr;
    return j;
}

inline ordered_json status_to_json(const AF& af, const StatusReport& rep) {
    ordered_json j;
    j["semantics"] = to_string(rep.semantics);
    j["vacuous_skeptical"] = rep.vacuous_skeptical;
    ordered_json st = ordered_json::object();
    for (int i = 0; i < af.size(); ++i) st[af.name(i)] = to_string(rep.status[i]);
    j["statuses"] = st;
    return j;
}

inline ordered_json rank_table_to_json(const AF& af, const RankTable& rt) {
    ordered_json j;
    if (rt.provenance) j["er"] = to_string(*rt.provenance);
    j["width"] = rt.width;
    ordered_json strata = ordered_json::array();
    for (const auto& stratum : rt.strata) {
        ordered_json level = ordered_json::array();
        for (ArgSet e : stratum) level.push_back(set_to_json(af, e));
        strata.push_back(level);
    }
    j["strata"] = strata;
    return j;
}

inline ordered_json ranking_to_json(const AF& af, const ArgumentRanking& r) {
    ordered_json j;
    j["sr"] = to_string(r.social_ranking());
    j["er"] = to_string(r.ext_ranking());
    bool total = r.is_total(), transitive = r.is_transitive();
    j["total"] = total;
    j["transitive"] = transitive;
    auto strata = r.strata();
    if (strata) {
        ordered_json s = ordered_json::array();
        for (const auto& grp : *strata) {
            ordered_json level = ordered_json::array();
            for (int i : grp) level.push_back(af.name(i));
            s.push_back(level);
        }
        j["strata"] = s;
    } else {
        j["strata"] = nullptr;
    }
    ordered_json order = ordered_json::array();
    for (int i = 0; i < af.size(); ++i) order.push_back(af.name(i));
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < af.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (int y = 0; y < af.size(); ++y) row.push_back(outcome_glyph(r.outcome(x, y)));
        rows.push_back(row);
    }
    j["matrix"] = ordered_json{{"order", order}, {"rows", rows}};
    return j;
}

inline ordered_json witness_to_json(const AF& af, const CheckWitness& w) {
    ordered_json j = ordered_json::object();
    if (w.x >= 0) j["x"] = af.name(w.x);
    if (w.y >= 0) j["y"] = af.name(w.y);
    if (w.has_sets) {
        j["set_x"] = set_to_json(af, w.set_x);
        j["set_y"] = set_to_json(af, w.set_y);
    }
    if (w.count_x >= 0) j["count_x"] = w.count_x;
    if (w.count_y >= 0) j["count_y"] = w.count_y;
    j["note"] = w.note;
    return j;
}

inline ordered_json report_to_json(const AF& af, const CheckReport& rep) {
    ordered_json j;
    j["principle"] = to_string(rep.principle);
    if (rep.sigma) j["sigma"] = to_string(*rep.sigma);
    j["holds"] = rep.holds;
    j["skipped_vacuous"] = rep.skipped_vacuous;
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(af, w));
    j["witnesses"] = ws;
    return j;
}

inline ordered_json verify_to_json(const VerifyReport& rep) {
    ordered_json j;
    j["ok"] = rep.ok();
    j["frameworks"] = rep.afs;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["instances"] = c.instances;
        e["violations"] = c.violations;
        e["skipped_vacuous"] = c.skipped;
        if (c.violations > 0) e["first_violation"] = c.first_violation;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

inline ordered_json af_to_json(const AF& af) {
    ordered_json j;
    ordered_json args = ordered_json::array();
    for (int i = 0; i < af.size(); ++i) args.push_back(af.name(i));
    j["arguments"] = args;
    ordered_json atts = ordered_json::array();
    for (auto [s, d] : af.attack_list())
        atts.push_back(ordered_json::array({af.name(s), af.name(d)}));
    j["attacks"] = atts;
    return j;
}

// ---- preorder target files for `realise` ----
// Lines `SET >= SET` / `SET > SET` / `SET == SET`; a SET is comma-joined
// labels, optionally braced, `{}` for empty. `#` comments. Reflexivity is
// implicit; the weak relation is transitively closed before matching, and a
// strict line whose two sides end up weakly equivalent is rejected.

namespace detail {

inline ArgSet parse_target_set(const std::string& tok, const std::vector<std::string>& labels,
                               int lineno) {
    std::string body = tok;
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    ArgSet out = 0;
    std::size_t pos = 0;
    if (body.empty()) return out;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string label = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (label.empty()) throw parse_error("empty label in set '" + tok + "'", lineno, 0);
        int idx = -1;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) idx = static_cast<int>(i);
        if (idx < 0) throw parse_error("unknown label '" + label + "'", lineno, 0);
        out |= singleton(idx);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

inline PreorderTarget parse_preorder_target(std::string_view text) {
    // First pass: collect labels so sets can be parsed into masks.
    struct Line {
        std::string lhs, op, rhs;
        int lineno;
    };
    std::vector<Line> lines;
    std::vector<std::string> labels;
    auto note_labels = [&](const std::string& tok, int lineno) {
        std::string body = tok;
        if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
            body = body.substr(1, body.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size() && !body.empty()) {
            std::size_t comma = body.find(',', pos);
            std::string label = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            if (label.empty()) throw parse_error("empty label in set '" + tok + "'", lineno, 0);
            for (char ch : label)
                if (!detail::label_char(ch))
                    throw parse_error("bad character in label '" + label + "'", lineno, 0);
            if (std::find(labels.begin(), labels.end(), label) == labels.end())
                labels.push_back(label);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view v(raw);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        if (v.empty() || v.front() == '#') continue;
        std::istringstream ls{std::string(v)};
        std::string lhs, op, rhs, extra;
        if (!(ls >> lhs >> op >> rhs) || (ls >> extra))
            throw parse_error("expected 'SET (>=|>|==) SET'", lineno, 0);
        if (op != ">=" && op != ">" && op != "==")
            throw parse_error("unknown relation '" + op + "', expected >=, > or ==", lineno, 0);
        note_labels(lhs, lineno);
        note_labels(rhs, lineno);
        lines.push_back({lhs, op, rhs, lineno});
    }
    if (labels.empty()) throw parse_error("no relations found", lineno, 0);
    if (labels.size() > static_cast<std::size_t>(kMaxArgs))
        throw capacity_error("preorder target mentions " + std::to_string(labels.size()) +
                             " labels, capacity is " + std::to_string(kMaxArgs));
    std::sort(labels.begin(), labels.end());

    PreorderTarget target;
    target.labels = labels;

    // Transitive closure over the mentioned sets only (reflexivity implicit).
    std::vector<ArgSet> nodes;
    auto node_of = [&](ArgSet m) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == m) return static_cast<int>(i);
        nodes.push_back(m);
        return static_cast<int>(nodes.size()) - 1;
    };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> strict_edges;
    for (const auto& ln : lines) {
        int l = node_of(detail::parse_target_set(ln.lhs, labels, ln.lineno));
        int r = node_of(detail::parse_target_set(ln.rhs, labels, ln.lineno));
        edges.emplace_back(l, r);
        if (ln.op == "==") {
            edges.emplace_back(r, l);
            target.equal.emplace_back(nodes[l], nodes[r]);
        }
        if (ln.op == ">") strict_edges.emplace_back(l, r);
    }
    std::size_t count = nodes.size();
    std::vector<std::vector<bool>> weak(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) weak[i][i] = true;
    for (auto [l, r] : edges) weak[l][r] = true;
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i) {
            if (!weak[i][k]) continue;
            for (std::size_t j = 0; j < count; ++j)
                if (weak[k][j]) weak[i][j] = true;
        }
    for (auto [l, r] : strict_edges) {
        if (weak[r][l])
            throw parse_error("strict relation contradicted by a weak cycle between its sides",
                              0, 0);
        target.strict.emplace_back(nodes[l], nodes[r]);
    }
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (i != j && weak[i][j]) target.weak.emplace_back(nodes[i], nodes[j]);
    return target;
}

}  // namespace argrank
