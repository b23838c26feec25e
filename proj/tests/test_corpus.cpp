#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "l1forge/brat.hpp"
#include "l1forge/corpus_io.hpp"
#include "l1forge/corpus_ops.hpp"
#include "l1forge/errors.hpp"
#include "l1forge/rng.hpp"
#include "l1forge/tokenize.hpp"
#include "l1forge/utf8.hpp"

using namespace l1forge;

namespace {

AnnotatedSentence sent(std::string id, std::string text, Source source = Source::realec) {
    AnnotatedSentence s;
    s.id = std::move(id);
    s.text = std::move(text);
    s.source = source;
    return s;
}

Span span_at(const std::string& text, const std::string& surface, ErrorTag tag,
             std::optional<std::string> correction = std::nullopt) {
    const auto byte_pos = text.find(surface);
    REQUIRE(byte_pos != std::string::npos);
    Span s;
    s.start = utf8::length(std::string_view(text).substr(0, byte_pos));
    s.end = s.start + utf8::length(surface);
    s.tag = tag;
    s.correction = std::move(correction);
    return s;
}

}  // namespace

TEST_CASE("tokenize splits the running example into six classified tokens") {
    const auto tokens = tokenize("In 1999 the share decreased.");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].surface == "In");
    CHECK(tokens[1].surface == "1999");
    CHECK(tokens[1].pos == CoarsePos::year);
    CHECK(tokens[2].surface == "the");
    CHECK(tokens[3].surface == "share");
    CHECK(tokens[3].pos == CoarsePos::noun);
    CHECK(tokens[4].surface == "decreased");
    CHECK(tokens[4].pos == CoarsePos::verb_past);
    CHECK(tokens[5].surface == ".");
    CHECK(tokens[5].pos == CoarsePos::punct);
}

TEST_CASE("tokenize edge cases") {
    CHECK(tokenize("").empty());

    const auto lone = tokenize("cassa");
    REQUIRE(lone.size() == 1);
    CHECK((lone[0].pos == CoarsePos::noun || lone[0].pos == CoarsePos::other));

    const auto quoted = tokenize("(\"well,\" he said)");
    std::string joined;
    for (const auto& t : quoted) joined += t.surface;
    CHECK(joined == "(\"well,\"hesaid)");

    const auto irregular = tokenize("The rates fell.");
    CHECK(irregular[2].pos == CoarsePos::verb_past);

    const auto aux = tokenize("It was low.");
    CHECK(aux[1].pos == CoarsePos::other);  // auxiliaries are not injection sites
}

TEST_CASE("tokenize offsets reconstruct the sentence") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        const std::size_t len = rng.index(30);
        for (std::size_t i = 0; i < len; ++i) {
            switch (rng.index(6)) {
                case 0: text += ' '; break;
                case 1: text += 'a'; break;
                case 2: text += '.'; break;
                case 3: text += "\xd0\xba"; break;  // Cyrillic к
                case 4: text += 'Z'; break;
                default: text += ','; break;
            }
        }
        const auto tokens = tokenize(text);
        std::size_t covered = 0;
        std::size_t prev_end = 0;
        for (const auto& t : tokens) {
            CHECK(utf8::substr(text, t.start, t.end) == t.surface);
            CHECK(t.start >= prev_end);
            prev_end = t.end;
            covered += t.end - t.start;
        }
        std::size_t non_ws = 0;
        for (const auto& d : utf8::decode_all(text)) {
            if (!utf8::is_space(d.cp)) ++non_ws;
        }
        CHECK(covered == non_ws);
    }
}

TEST_CASE("brat import maps a single annotation onto one sentence") {
    const std::string doc = "A cassa is big.";
    const std::string ann = "T1\tTransliteration 2 7\tcassa\n";
    const auto result = import_brat(doc, ann, "essay");
    REQUIRE(result.sentences.size() == 1);
    const auto& s = result.sentences[0];
    CHECK(s.id == "essay-1");
    CHECK(s.text == doc);
    REQUIRE(s.spans.size() == 1);
    CHECK(s.spans[0].start == 2);
    CHECK(s.spans[0].end == 7);
    CHECK(s.spans[0].tag == ErrorTag::Transliteration);
    CHECK_FALSE(s.spans[0].correction.has_value());
}

TEST_CASE("brat import: empty annotation file, notes, unknown tags") {
    const std::string doc = "First part here. Second part there.";

    const auto empty = import_brat(doc, "", "e");
    REQUIRE(empty.sentences.size() == 2);
    CHECK(empty.sentences[0].spans.empty());
    CHECK(empty.sentences[1].spans.empty());

    const std::string ann =
        "T1\tSynonyms 6 10\tpart\n"
        "#1\tAnnotatorNotes T1\tsection\n"
        "T2\tIntroRemark 0 5\tFirst\n"
        "A1\tNegation T1\n";
    const auto result = import_brat(doc, ann, "e");
    CHECK(result.dropped_unknown_tags == 1);
    CHECK(result.ignored_standoff_lines == 1);
    REQUIRE(result.sentences[0].spans.size() == 1);
    CHECK(result.sentences[0].spans[0].correction == "section");
}

TEST_CASE("brat import rejects inconsistent and malformed input") {
    const std::string doc = "A cassa is big. Next one.";
    CHECK_THROWS_WITH_AS(import_brat(doc, "T1\tTransliteration 2 7\tkassa\n", "e"),
                         doctest::Contains("does not match"), Error);
    CHECK_THROWS_WITH_AS(import_brat(doc, "not a standoff line\n", "e"),
                         doctest::Contains("line 1"), Error);
    // [2, 20) crosses the boundary between the two sentences
    CHECK_THROWS_WITH_AS(import_brat(doc, "T7\tSynonyms 2 20\tcassa is big. Next\n", "e"),
                         doctest::Contains("T7"), Error);
}

TEST_CASE("brat segmentation honors abbreviations and offsets Cyrillic correctly") {
    const std::string doc = "We saw it e.g. here. Next one starts.";
    const auto ranges = segment_sentences(doc);
    REQUIRE(ranges.size() == 2);
    CHECK(utf8::substr(doc, ranges[0].start, ranges[0].end) == "We saw it e.g. here.");

    // Cyrillic letters are single codepoints; offsets are codepoint-based
    const std::string cyr_doc = "Тут касса stands. More text here.";
    const std::string ann = "T1\tTransliteration 4 9\tкасса\n";
    const auto result = import_brat(cyr_doc, ann, "c");
    REQUIRE(result.sentences.size() == 2);
    REQUIRE(result.sentences[0].spans.size() == 1);
    CHECK(result.sentences[0].span_surface(result.sentences[0].spans[0]) == "касса");
}

TEST_CASE("corpus jsonl round-trips and is byte-stable") {
    Corpus corpus;
    auto s1 = sent("a-1", "The distance can be overcame by the train.");
    s1.spans = {span_at(s1.text, "overcame", ErrorTag::Synonyms, "covered")};
    auto s2 = sent("a-2", "Он пришёл в the kassa.", Source::llm);
    s2.spans = {span_at(s2.text, "kassa", ErrorTag::Transliteration, "касса")};
    s2.split = Split::test;
    auto s3 = sent("a-3", "No spans here.", Source::ppo);
    corpus.sentences = {s1, s2, s3};

    std::ostringstream first;
    write_corpus_stream(corpus, first);
    std::istringstream back(first.str());
    const Corpus reread = read_corpus_stream(back);
    CHECK(reread.sentences == corpus.sentences);

    std::ostringstream second;
    write_corpus_stream(reread, second);
    CHECK(second.str() == first.str());
}

TEST_CASE("corpus jsonl reports schema violations with record context") {
    const std::string good =
        R"({"id":"x","text":"ok here","source":"rule","split":null,"spans":[]})";
    const std::string inverted =
        R"({"id":"y","text":"bad","source":"rule","split":null,)"
        R"("spans":[{"start":3,"end":1,"tag":"Synonyms","correction":null}]})";
    const std::string unknown_tag =
        R"({"id":"z","text":"bad tag","source":"rule","split":null,)"
        R"("spans":[{"start":0,"end":3,"tag":"Grammar","correction":null}]})";

    std::istringstream ok_in(good + "\n");
    CHECK(read_corpus_stream(ok_in).size() == 1);

    std::istringstream bad_in(good + "\n" + inverted + "\n");
    CHECK_THROWS_WITH_AS(read_corpus_stream(bad_in), doctest::Contains("record 2"), Error);

    std::istringstream tag_in(unknown_tag + "\n");
    CHECK_THROWS_WITH_AS(read_corpus_stream(tag_in), doctest::Contains("Grammar"), Error);

    std::istringstream dup_in(good + "\n" + good + "\n");
    CHECK_THROWS_WITH_AS(read_corpus_stream(dup_in), doctest::Contains("duplicate"), Error);
}

TEST_CASE("provenance sidecar round-trips through files") {
    const auto dir = std::filesystem::temp_directory_path() / "l1forge_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "c.jsonl").string();

    Corpus corpus;
    corpus.sentences = {sent("p-1", "Sidecar test sentence.")};
    corpus.provenance["command"] = "unit-test";
    write_corpus(corpus, path);
    CHECK(std::filesystem::exists(path + ".prov.json"));
    const Corpus reread = read_corpus(path);
    CHECK(reread.provenance.at("command") == "unit-test");
    std::filesystem::remove_all(dir);
}

TEST_CASE("filter_min_tokens keeps the five-token boundary and is idempotent") {
    Corpus corpus;
    corpus.sentences = {
        sent("f-1", "It fell down."),      // 4 tokens with the period
        sent("f-2", "It fell down now."),  // 5 tokens
        sent("f-3", "The share decreased a lot yesterday."),
    };
    const Corpus filtered = filter_min_tokens(corpus);
    REQUIRE(filtered.size() == 2);
    CHECK(filtered.sentences[0].id == "f-2");

    const Corpus again = filter_min_tokens(filtered);
    CHECK(again.sentences == filtered.sentences);

    CHECK(filter_min_tokens(Corpus{}).empty());
}

TEST_CASE("split_corpus follows the floor rule and the seed") {
    auto make = [](std::size_t n) {
        Corpus c;
        for (std::size_t i = 0; i < n; ++i) {
            c.sentences.push_back(sent("s-" + std::to_string(i), "Sentence number here."));
        }
        return c;
    };

    const auto [train10, test10] = split_corpus(make(10), 0.8, 42);
    CHECK(train10.size() == 8);
    CHECK(test10.size() == 2);
    for (const auto& s : train10.sentences) CHECK(s.split == Split::train);
    for (const auto& s : test10.sentences) CHECK(s.split == Split::test);

    const auto [train_a, test_a] = split_corpus(make(101), 0.8, 7);
    const auto [train_b, test_b] = split_corpus(make(101), 0.8, 7);
    CHECK(train_a.sentences == train_b.sentences);
    CHECK(test_a.sentences == test_b.sentences);
    CHECK(train_a.size() == 80);  // floor(80.8)

    // disjoint and covering
    std::set<std::string> ids;
    for (const auto& s : train_a.sentences) ids.insert(s.id);
    for (const auto& s : test_a.sentences) {
        CHECK(ids.insert(s.id).second);
    }
    CHECK(ids.size() == 101);

    CHECK_THROWS_AS(split_corpus(make(4), 1.0, 1), Error);
}

TEST_CASE("corpus_stats counts spans by tag, source and split") {
    Corpus corpus;
    auto s1 = sent("t-1", "Money goes to the kassa today.", Source::rule);
    s1.spans = {span_at(s1.text, "kassa", ErrorTag::Transliteration, "cashier")};
    auto s2 = sent("t-2", "Prices go to the banka now.", Source::rule);
    s2.spans = {span_at(s2.text, "banka", ErrorTag::Transliteration, "bank")};
    corpus.sentences = {s1, s2};

    const CorpusStats stats = corpus_stats(corpus);
    CHECK(stats.total_spans == 2);
    CHECK(stats.span_counts.at({ErrorTag::Transliteration, Source::rule, "none"}) == 2);
    CHECK(stats.sentence_counts.at({Source::rule, "none"}) == 2);

    const CorpusStats empty = corpus_stats(Corpus{});
    CHECK(empty.total_spans == 0);
    CHECK(empty.span_counts.empty());

    // sum of the table equals total spans on a randomized corpus
    Rng rng(3);
    Corpus random;
    std::size_t expected = 0;
    for (int i = 0; i < 50; ++i) {
        auto s = sent("r-" + std::to_string(i), "Alpha beta gamma delta epsilon zeta.");
        const std::size_t n_spans = rng.index(3);
        for (std::size_t k = 0; k < n_spans; ++k) {
            Span sp;
            sp.start = k;
            sp.end = k + 2;
            sp.tag = all_error_tags()[rng.index(kErrorTagCount)];
            if (std::find(s.spans.begin(), s.spans.end(), sp) != s.spans.end()) continue;
            s.spans.push_back(sp);
            ++expected;
        }
        s.normalize();
        random.sentences.push_back(std::move(s));
    }
    const CorpusStats random_stats = corpus_stats(random);
    std::size_t sum = 0;
    for (const auto& [key, count] : random_stats.span_counts) sum += count;
    CHECK(sum == expected);
    CHECK(random_stats.total_spans == expected);
}
