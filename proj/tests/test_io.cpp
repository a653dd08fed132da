#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "argrank/io.hpp"
#include "test_helpers.hpp"

using namespace argrank;
using testing_support::data_file;
using testing_support::f1;
using testing_support::slurp;

TEST_CASE("APX parsing") {
    AF af = parse_apx("arg(a). arg(b). att(a,b).");
    CHECK(af.size() == 2);
    CHECK(af.attacks(0, 1));
    CHECK_FALSE(af.attacks(1, 0));

    AF f = parse_apx(slurp(data_file("f1.apx")));
    CHECK(f == f1());

    // duplicate att-facts are idempotent, later declarations are fine
    AF g = parse_apx("att(x,y). arg(y). arg(x). att(x,y).");
    CHECK(g.size() == 2);
    CHECK(g.name(0) == "y");
    CHECK(g.attacks(1, 0));

    // whitespace and newlines between facts are insignificant
    CHECK(parse_apx("arg(a).arg(b).\n\natt( a , b ).") == parse_apx("arg(a). arg(b). att(a,b)."));
}

TEST_CASE("APX parse errors carry positions") {
    CHECK_THROWS_AS(parse_apx("att(a,b)."), parse_error);
    CHECK_THROWS_AS(parse_apx("arg(a). arg(a)."), parse_error);
    CHECK_THROWS_AS(parse_apx("arg(a) arg(b)."), parse_error);
    CHECK_THROWS_AS(parse_apx("argh(a)."), parse_error);
    CHECK_THROWS_AS(parse_apx(""), parse_error);
    CHECK_THROWS_AS(parse_apx("arg(a). att(a)."), parse_error);

    try {
        parse_apx("arg(a).\natt(a,zz).");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }

    std::string big;
    for (int i = 0; i < 17; ++i) big += "arg(x" + std::to_string(i) + ").";
    CHECK_THROWS_AS(parse_apx(big), capacity_error);
}

TEST_CASE("ICCMA parsing") {
    AF af = parse_iccma("p af 2\n1 2\n");
    CHECK(af.size() == 2);
    CHECK(af.name(0) == "a1");
    CHECK(af.attacks(0, 1));

    AF f = parse_iccma(slurp(data_file("f1.af")));
    auto iso = find_isomorphism(f, f1());
    CHECK(iso.has_value());
    CHECK(f.attack_list() == f1().attack_list());

    CHECK_THROWS_AS(parse_iccma("p af 1\n2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_iccma("p af 0\n"), parse_error);
    CHECK_THROWS_AS(parse_iccma("1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_iccma("p af 2\n1\n"), parse_error);
    CHECK_THROWS_AS(parse_iccma(""), parse_error);
    CHECK_THROWS_AS(parse_iccma("p af 99\n"), capacity_error);
}

TEST_CASE("format auto-detection") {
    CHECK(parse_af("p af 1\n", InputFormat::auto_detect).name(0) == "a1");
    CHECK(parse_af("# comment\np af 1\n", InputFormat::auto_detect).name(0) == "a1");
    CHECK(parse_af("arg(q).", InputFormat::auto_detect).name(0) == "q");
    CHECK(parse_af("arg(q).", InputFormat::auto_detect, "x.apx").name(0) == "q");
    CHECK(parse_af("p af 1\n", InputFormat::auto_detect, "x.af").name(0) == "a1");
}

TEST_CASE("round trip through both formats") {
    auto check_af = [](const AF& af) {
        AF apx = parse_apx(write_apx(af));
        REQUIRE(apx == af);
        AF iccma = parse_iccma(write_iccma(af));
        REQUIRE(iccma.attack_list() == af.attack_list());
        REQUIRE(find_isomorphism(iccma, af).has_value());
    };
    enumerate_afs(3, check_af);
    sample_afs(6, 40, 17, check_af);
    check_af(f1());
}

TEST_CASE("parser survives a mutation fuzz corpus") {
    std::mt19937_64 rng(2024);
    std::string apx = slurp(data_file("f1.apx"));
    std::string iccma = slurp(data_file("f1.af"));
    const std::string alphabet = "arg(t).,p f109 \n#";
    for (int round = 0; round < 4000; ++round) {
        std::string doc = (round % 2) ? apx : iccma;
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits && !doc.empty(); ++e) {
            std::size_t pos = rng() % doc.size();
            switch (rng() % 3) {
                case 0: doc[pos] = alphabet[rng() % alphabet.size()]; break;
                case 1: doc.erase(pos, 1); break;
                default: doc.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
            }
        }
        try {
            AF af = (round % 2) ? parse_apx(doc) : parse_iccma(doc);
            (void)af;
        } catch (const parse_error&) {
        } catch (const capacity_error&) {
        }
    }
    SUCCEED("no crash");
}

TEST_CASE("JSON rankings match the worked examples") {
    AF af = f1();
    {
        ArgumentRanking r = apply(SocialRankingId::lex_cel, ExtRankingId::r_co, af);
        ordered_json j = ranking_to_json(af, r);
        CHECK(j["strata"] == ordered_json::parse(R"([["a"],["d"],["c"],["b"]])"));
        CHECK(j["total"] == true);
        CHECK(j["matrix"]["rows"][0][1] == "≻");  // a above b
        CHECK(j["matrix"]["rows"][1][0] == "≺");
        CHECK(j["matrix"]["rows"][0][0] == "≃");
    }
    {
        ArgumentRanking r = apply(SocialRankingId::singleton, ExtRankingId::r_ad, af);
        ordered_json j = ranking_to_json(af, r);
        CHECK(j["strata"] == ordered_json::parse(R"([["a","d"],["b","c"]])"));
    }
    {
        // incomparability is encoded explicitly
        ArgumentRanking partial(2, SocialRankingId::singleton, ExtRankingId::r_ad);
        partial.set_outcome(0, 1, ComparisonOutcome::incomparable);
        AF two({"a", "b"}, {});
        ordered_json j = ranking_to_json(two, partial);
        CHECK(j["strata"].is_null());
        CHECK(j["matrix"]["rows"][0][1] == "⋈");
    }
}

TEST_CASE("JSON set lists are sorted and canonical") {
    AF af = f1();
    auto exts = extensions(af, SemanticsId::co);
    ordered_json j = extensions_to_json(af, SemanticsId::co, exts);
    CHECK(j["extensions"] == ordered_json::parse(R"([["a"],["a","c"],["a","d"]])"));
    ordered_json s = status_to_json(af, status(af, SemanticsId::co));
    CHECK(s["statuses"]["a"] == "skeptical");
    CHECK(s["statuses"]["b"] == "rejected");
    CHECK(s["vacuous_skeptical"] == false);
}

TEST_CASE("rank table JSON") {
    AF af = f1();
    RankTable rt = rank_table(ExtensionPreorder(af, ExtRankingId::r_co));
    ordered_json j = rank_table_to_json(af, rt);
    CHECK(j["er"] == "r-co");
    CHECK(j["width"] == 8);
    CHECK(j["strata"][0] == ordered_json::parse(R"([["a"],["a","c"],["a","d"]])"));
    CHECK(j["strata"][1] == ordered_json::parse(R"([[],["d"]])"));
}

TEST_CASE("preorder target parsing") {
    PreorderTarget t = parse_preorder_target("{a} >= {a,b}\n{b} >= {a,b}\n");
    CHECK(t.labels == std::vector<std::string>{"a", "b"});
    CHECK(t.strict.empty());
    CHECK(t.weak.size() == 2);

    PreorderTarget braceless = parse_preorder_target("a,b > a\n");
    CHECK(braceless.strict.size() == 1);
    CHECK(braceless.weak.size() == 1);

    // transitive closure derives new weak pairs
    PreorderTarget chain = parse_preorder_target("{a} >= {b}\n{b} >= {c}\n");
    bool derived = false;
    for (auto [l, r] : chain.weak)
        if (l == singleton(0) && r == singleton(2)) derived = true;
    CHECK(derived);

    // empty set syntax
    PreorderTarget empty = parse_preorder_target("{} >= {a}\n");
    CHECK(empty.weak.front().first == 0u);

    CHECK_THROWS_AS(parse_preorder_target(""), parse_error);
    CHECK_THROWS_AS(parse_preorder_target("{a} >> {b}\n"), parse_error);
    CHECK_THROWS_AS(parse_preorder_target("{a} >= {b?}\n"), parse_error);
    // a strict line contradicted by a weak cycle
    CHECK_THROWS_AS(parse_preorder_target("{a} > {b}\n{b} >= {a}\n"), parse_error);
}
