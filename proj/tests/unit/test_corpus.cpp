#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "aener/corpus.hpp"
#include "aener/csv.hpp"
#include "aener/error.hpp"
#include "aener/rng.hpp"
#include "aener/synth.hpp"
#include "aener/unicode.hpp"
#include "support/fixtures.hpp"

using namespace aener;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "aener_test_corpus";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

bool has(const std::vector<Violation>& v, Invariant inv) {
  for (const auto& x : v) {
    if (x.invariant == inv) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("unicode decode/encode and offsets") {
  const std::string s = "caf\xC3\xA9 \xF0\x9F\x92\x89 shot";  // café 💉 shot
  const auto u = unicode::decode(s);
  CHECK(u.size() == 11);
  CHECK(unicode::length(s) == 11);
  CHECK(unicode::encode(u) == s);
  CHECK(unicode::slice(u, 0, 4) == "caf\xC3\xA9");
  CHECK_THROWS_AS(unicode::decode("\xC3"), DataError);
  CHECK_THROWS_AS(unicode::decode("\xC0\xAF"), DataError);  // overlong
  CHECK(unicode::fold(U'É') == U'é');
  CHECK(unicode::fold(U'Q') == U'q');
}

TEST_CASE("load_corpus: empty file yields empty corpus") {
  CHECK(load_corpus(temp_file("empty.jsonl", "")).empty());
}

TEST_CASE("load_corpus: sore-arm post fixture") {
  const auto corpus = load_corpus(fixtures::fixture_path("sore_arm_post.jsonl"));
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].spans.size() == 3);
  CHECK(corpus[0].spans == fixtures::sore_arm_document().spans);
  for (const auto& s : corpus[0].spans) {
    CHECK(corpus[0].text.substr(static_cast<std::size_t>(s.start),
                                static_cast<std::size_t>(s.end - s.start)) == s.surface);
  }
}

TEST_CASE("load_corpus: surface with trailing space names the whitespace invariant") {
  const auto p = temp_file(
      "ws.jsonl",
      R"({"doc_id":"d1","source":"twitter","text":"sore arm today","spans":[{"start":0,"end":5,"type":"ae","surface":"sore "}]})"
      "\n");
  try {
    load_corpus(p);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("d1") != std::string::npos);
    CHECK(msg.find("whitespace") != std::string::npos);
  }
}

TEST_CASE("load_corpus: malformed line reports its line number") {
  const auto p = temp_file("bad.jsonl",
                           R"({"doc_id":"a","source":"vaers","text":"x","spans":[]})"
                           "\n{not json\n");
  try {
    load_corpus(p);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("load_corpus: unknown entity label and duplicate ids are rejected") {
  CHECK_THROWS_AS(
      load_corpus(temp_file("label.jsonl",
                            R"({"doc_id":"a","source":"vaers","text":"dose","spans":[{"start":0,"end":4,"type":"dose","surface":"dose"}]})"
                            "\n")),
      DataError);
  const std::string line = R"({"doc_id":"a","source":"vaers","text":"x","spans":[]})";
  CHECK_THROWS_AS(load_corpus(temp_file("dup.jsonl", line + "\n" + line + "\n")), DataError);
}

TEST_CASE("canonical serialization round trip") {
  // Keys in a different order and spans unsorted: canonical form fixes both.
  const std::string scrambled =
      R"({"spans":[{"surface":"fever","type":"ae","end":12,"start":7},{"type":"vaccine","start":0,"end":6,"surface":"Pfizer"}],"text":"Pfizer fever é","source":"twitter","doc_id":"t:1"})"
      "\n";
  std::istringstream in(scrambled);
  const auto corpus = read_corpus(in);
  std::ostringstream first;
  write_corpus(corpus, first);
  CHECK(first.str() ==
        "{\"doc_id\":\"t:1\",\"source\":\"twitter\",\"text\":\"Pfizer fever \xC3\xA9\","
        "\"spans\":[{\"start\":0,\"end\":6,\"type\":\"vaccine\",\"surface\":\"Pfizer\"},"
        "{\"start\":7,\"end\":12,\"type\":\"ae\",\"surface\":\"fever\"}]}\n");
  std::istringstream again(first.str());
  std::ostringstream second;
  write_corpus(read_corpus(again), second);
  CHECK(second.str() == first.str());
}

TEST_CASE("round trip holds for generated corpora") {
  const auto gold = gen_gold({7, 50, 0, 6});
  std::ostringstream a;
  write_corpus(gold, a);
  std::istringstream in(a.str());
  std::ostringstream b;
  write_corpus(read_corpus(in), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("validate") {
  AnnotatedDocument doc;
  doc.doc_id = "d";
  doc.text = "aaaaa bbbbb ccc";
  CHECK(validate(doc).empty());

  doc.spans = {{5, 5, EntityType::ae, ""}};
  CHECK(has(validate(doc), Invariant::start_before_end));

  doc.spans = {{0, 5, EntityType::ae, "aaaaa"}, {3, 8, EntityType::ae, "aa bb"}};
  CHECK(has(validate(doc), Invariant::same_type_overlap));

  // Cross-type overlap is allowed.
  doc.spans = {{0, 5, EntityType::ae, "aaaaa"}, {3, 8, EntityType::vaccine, "aa bb"}};
  CHECK(validate(doc).empty());

  doc.spans = {{0, 5, EntityType::ae, "aaaaa"}, {0, 5, EntityType::ae, "aaaaa"}};
  CHECK(has(validate(doc), Invariant::distinct_triples));

  doc.spans = {{10, 20, EntityType::ae, "x"}};
  CHECK(has(validate(doc), Invariant::in_bounds));

  doc.spans = {{0, 5, EntityType::ae, "AAAAA"}};
  CHECK(has(validate(doc), Invariant::surface_matches));

  doc.spans = {{4, 6, EntityType::ae, "a "}};
  CHECK(has(validate(doc), Invariant::no_outer_space));
}

TEST_CASE("validate counts offsets in scalar values") {
  AnnotatedDocument doc;
  doc.doc_id = "u";
  doc.text = "\xC3\xA9t\xC3\xA9 fever";  // été fever
  doc.spans = {{4, 9, EntityType::ae, "fever"}};
  CHECK(validate(doc).empty());
}

TEST_CASE("csv parser handles RFC 4180 quoting") {
  const auto t = csv::parse("A,B\r\n1,\"x, \"\"y\"\"\nz\"\r\n2,\r\n");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "x, \"y\"\nz");
  CHECK(t.rows[1][1].empty());
  CHECK_THROWS_AS(t.require_column("C"), DataError);
  CHECK_THROWS_AS(csv::parse("A\n\"open"), DataError);
}

TEST_CASE("ingest_vaers: inner join with VAX_TYPE filter") {
  const auto corpus = ingest_vaers(fixtures::fixture_path("vaers_data.csv"),
                                   fixtures::fixture_path("vaers_vax.csv"),
                                   fixtures::fixture_path("vaers_symptoms.csv"), "COVID19");
  REQUIRE(corpus.size() == 3);
  CHECK(corpus[0].doc_id == "vaers:0916600");
  CHECK(corpus[1].doc_id == "vaers:0916602");  // two vax rows, one document
  CHECK(corpus[2].doc_id == "vaers:0916603");
  CHECK(corpus[1].text == "Moderna vaccine first dose: chills,\nfatigue and nausea.");
  CHECK(corpus[0].meta.at("symptoms") == "Pain in extremity; Pyrexia; Headache");
  CHECK(corpus[2].meta.empty());
  for (const auto& d : corpus) {
    CHECK(d.spans.empty());
    CHECK(d.source == Source::vaers);
    CHECK(validate(d).empty());
  }
}

TEST_CASE("ingest_vaers: small hand-traced join") {
  const auto data = temp_file("d.csv", "VAERS_ID,SYMPTOM_TEXT\n1,fever\n2,rash\n3,orphan\n");
  const auto vax = temp_file("v.csv", "VAERS_ID,VAX_TYPE\n1,COVID19\n2,FLU\n");
  const auto corpus = ingest_vaers(data, vax, std::nullopt, "COVID19");
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].doc_id == "vaers:1");

  CHECK(ingest_vaers(data, temp_file("empty.csv", ""), std::nullopt, "COVID19").empty());
  CHECK(ingest_vaers(data, temp_file("hdr.csv", "VAERS_ID,VAX_TYPE\n"), std::nullopt, "COVID19").empty());
}

TEST_CASE("ingest_vaers: errors") {
  const auto vax = temp_file("v2.csv", "VAERS_ID,VAX_TYPE\n1,COVID19\n");
  CHECK_THROWS_AS(ingest_vaers(temp_file("nt.csv", "VAERS_ID,TEXT\n1,x\n"), vax, std::nullopt, "COVID19"),
                  DataError);
  CHECK_THROWS_AS(ingest_vaers(temp_file("dupid.csv", "VAERS_ID,SYMPTOM_TEXT\n1,a\n1,b\n"), vax,
                               std::nullopt, "COVID19"),
                  DataError);
  CHECK_THROWS_AS(ingest_vaers(temp_file("ok.csv", "VAERS_ID,SYMPTOM_TEXT\n1,a\n"),
                               temp_file("nvt.csv", "VAERS_ID,TYPE\n1,COVID19\n"), std::nullopt,
                               "COVID19"),
                  DataError);
}

TEST_CASE("ingest_vaers: Latin-1 narratives are transcoded") {
  const auto data = temp_file("l1.csv", "VAERS_ID,SYMPTOM_TEXT\n9,fi\xE8vre\n");
  const auto vax = temp_file("l1v.csv", "VAERS_ID,VAX_TYPE\n9,COVID19\n");
  const auto corpus = ingest_vaers(data, vax, std::nullopt, "COVID19");
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].text == "fi\xC3\xA8vre");
}

TEST_CASE("filter_social: metadata rules") {
  FilterRules rules;
  SocialRecord rt{"1", "covid shot", true, false, 10, std::nullopt};
  SocialRecord quote{"2", "covid shot", false, true, 10, std::nullopt};
  SocialRecord famous{"3", "covid shot", false, false, 10001, std::nullopt};
  SocialRecord at_cap{"4", "covid shot", false, false, 10000, std::nullopt};
  const auto r = filter_social({rt, quote, famous, at_cap}, rules, Source::twitter);
  REQUIRE(r.kept.size() == 1);
  CHECK(r.kept[0].doc_id == "twitter:4");
  CHECK(r.rejected.at(RejectReason::retweet) == 1);
  CHECK(r.rejected.at(RejectReason::quote) == 1);
  CHECK(r.rejected.at(RejectReason::followers) == 1);
}

TEST_CASE("filter_social: date window is inclusive") {
  FilterRules rules;
  rules.date_from = "2020-12-01";
  rules.date_to = "2022-12-31";
  SocialRecord before{"a", "x", {}, {}, {}, "2020-11-30T23:59:59Z"};
  SocialRecord first{"b", "x", {}, {}, {}, "2020-12-01T00:00:00Z"};
  SocialRecord last{"c", "x", {}, {}, {}, "2022-12-31"};
  SocialRecord after{"d", "x", {}, {}, {}, "2023-01-01"};
  SocialRecord undated{"e", "x", {}, {}, {}, std::nullopt};
  const auto r = filter_social({before, first, last, after, undated}, rules, Source::reddit);
  CHECK(r.kept.size() == 3);
  CHECK(r.rejected.at(RejectReason::date) == 2);
}

TEST_CASE("filter_social: conjunctive keyword sets, case-insensitive whole words") {
  FilterRules rules;
  rules.keyword_sets = {{"COVID19", "covid", "Covid-19"},
                        {"Moderna", "Pfizer", "Johnson", "Janssen", "AstraZeneca", "Novavax", "J&J"},
                        {"I", "my", "mine", "me", "myself"}};
  auto kept = [&](const std::string& text) {
    return filter_social({SocialRecord{"", text, {}, {}, {}, {}}}, rules, Source::reddit).kept.size() == 1;
  };
  CHECK(kept("I got Moderna for covid"));
  CHECK(kept("my J&J shot after COVID-19, ugh"));
  CHECK_FALSE(kept("got Moderna for covid"));       // no self-reference
  CHECK_FALSE(kept("I got Modernas for covid"));    // whole-word only
  CHECK_FALSE(kept("I got J for covid"));
  CHECK(contains_phrase("Side effects: sore arm!", "SORE ARM"));
  CHECK_FALSE(contains_phrase("sorearm", "sore arm"));
}

TEST_CASE("filter_social: AE lexicon") {
  FilterRules rules;
  rules.ae_lexicon = {"fever", "sore arm"};
  const auto r = filter_social({SocialRecord{"1", "had a fever", {}, {}, {}, {}},
                                SocialRecord{"2", "all fine", {}, {}, {}, {}}},
                               rules, Source::twitter);
  CHECK(r.kept.size() == 1);
  CHECK(r.rejected.at(RejectReason::lexicon) == 1);
}

TEST_CASE("filter_social is monotone in keyword sets") {
  const std::vector<std::string> vocab = {"i", "my", "covid", "moderna", "pfizer", "fever",
                                          "arm", "shot", "J&J", "dose"};
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SocialRecord> recs;
    for (int r = 0; r < 10; ++r) {
      std::string text;
      const auto len = 1 + rng.below(6);
      for (std::uint64_t w = 0; w < len; ++w) text += vocab[rng.below(vocab.size())] + " ";
      recs.push_back({std::to_string(r), text, {}, {}, {}, {}});
    }
    FilterRules rules;
    rules.keyword_sets.resize(1 + rng.below(3));
    for (auto& set : rules.keyword_sets) set.push_back(vocab[rng.below(vocab.size())]);
    const auto before = filter_social(recs, rules, Source::reddit);

    auto grown = rules;
    grown.keyword_sets[rng.below(grown.keyword_sets.size())].push_back(vocab[rng.below(vocab.size())]);
    const auto after = filter_social(recs, grown, Source::reddit);

    std::set<std::string> kept_after;
    for (const auto& d : after.kept) kept_after.insert(d.doc_id);
    for (const auto& d : before.kept) CHECK(kept_after.count(d.doc_id) == 1);
  }
}

TEST_CASE("filter rules file") {
  const auto lex = temp_file("lex.txt", "# AE terms\nfever\n\nsore arm\n");
  const auto rules_path = temp_file(
      "rules.json",
      R"({"keyword_sets":[["covid"],["moderna"]],"date_from":"2020-12-01","date_to":"2022-12-31","follower_cap":10000,"ae_lexicon":"lex.txt"})");
  const auto rules = load_filter_rules(rules_path);
  CHECK(rules.keyword_sets.size() == 2);
  CHECK(rules.ae_lexicon == std::vector<std::string>{"fever", "sore arm"});
  CHECK(*rules.follower_cap == 10000);
  CHECK_THROWS_AS(load_filter_rules(temp_file("bad_rules.json", R"({"keywords":[]})")), DataError);
  CHECK_THROWS_AS(load_filter_rules(temp_file("bad_date.json", R"({"date_from":"12/01/2020"})")),
                  DataError);
}

TEST_CASE("split sizes") {
  CHECK(split_sizes(10, {8, 1, 1}) == SplitSizes{8, 1, 1});
  CHECK(split_sizes(23, {8, 1, 1}) == SplitSizes{18, 2, 3});
  CHECK(split_sizes(0, {8, 1, 1}) == SplitSizes{0, 0, 0});
  CHECK_THROWS_AS(split_sizes(5, {0, 0, 0}), UsageError);
  CHECK(parse_ratios("8:1:1") == std::array<std::uint64_t, 3>{8, 1, 1});
  CHECK_THROWS_AS(parse_ratios("8:1"), UsageError);
  CHECK_THROWS_AS(parse_ratios("8:1:1:1"), UsageError);
  CHECK_THROWS_AS(parse_ratios("a:b:c"), UsageError);
}

TEST_CASE("split_corpus partitions for every n up to 1000") {
  Corpus pool;
  for (std::size_t i = 0; i < 1000; ++i) {
    pool.push_back(AnnotatedDocument{"d" + std::to_string(i), Source::synthetic, "x", {}, {}});
  }
  const std::array<std::array<std::uint64_t, 3>, 3> ratio_sets = {{{8, 1, 1}, {3, 0, 2}, {1, 1, 1}}};
  for (std::size_t n = 0; n <= 1000; ++n) {
    const Corpus c(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    const auto& ratios = ratio_sets[n % ratio_sets.size()];
    const auto parts = split_corpus(c, {ratios, n});
    const std::uint64_t sum = ratios[0] + ratios[1] + ratios[2];
    REQUIRE(parts.train.size() == n * ratios[0] / sum);
    REQUIRE(parts.val.size() == n * ratios[1] / sum);
    REQUIRE(parts.test.size() == n - parts.train.size() - parts.val.size());

    std::multiset<std::string> ids;
    for (const auto* part : {&parts.train, &parts.val, &parts.test}) {
      for (const auto& d : *part) ids.insert(d.doc_id);
    }
    std::multiset<std::string> expected;
    for (const auto& d : c) expected.insert(d.doc_id);
    REQUIRE(ids == expected);
  }
}

TEST_CASE("split_corpus is deterministic per seed") {
  const auto corpus = gen_gold({3, 40, 1, 3});
  const auto a = split_corpus(corpus, {{8, 1, 1}, 42});
  const auto b = split_corpus(corpus, {{8, 1, 1}, 42});
  const auto c = split_corpus(corpus, {{8, 1, 1}, 43});
  auto ids = [](const Corpus& x) {
    std::vector<std::string> v;
    for (const auto& d : x) v.push_back(d.doc_id);
    return v;
  };
  CHECK(ids(a.train) == ids(b.train));
  CHECK(ids(a.test) == ids(b.test));
  CHECK(ids(a.train) != ids(c.train));
}

TEST_CASE("entity_stats") {
  CHECK(entity_stats({}).overall == EntityCounts{});

  AnnotatedDocument doc{"d", Source::twitter, "fever chills Pfizer", {}, {}};
  doc.spans = {{0, 5, EntityType::ae, "fever"},
               {6, 12, EntityType::ae, "chills"},
               {13, 19, EntityType::vaccine, "Pfizer"}};
  const auto s = entity_stats({doc});
  CHECK(s.overall.by_type[index_of(EntityType::ae)] == 2);
  CHECK(s.overall.by_type[index_of(EntityType::vaccine)] == 1);
  CHECK(s.overall.by_type[index_of(EntityType::shot)] == 0);
  CHECK(s.by_source.at(Source::twitter).documents == 1);

  const auto post = entity_stats({fixtures::sore_arm_document()});
  CHECK(post.overall.by_type[index_of(EntityType::vaccine)] == 1);
  CHECK(post.overall.by_type[index_of(EntityType::ae)] == 2);

  const auto table = format_stats_table({{"train", s}, {"test", post}});
  CHECK(table.find("total") != std::string::npos);
}
