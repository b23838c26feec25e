#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <set>

#include "l1forge/dedup.hpp"
#include "l1forge/errors.hpp"
#include "l1forge/llm_client.hpp"
#include "l1forge/markup.hpp"
#include "l1forge/prompts.hpp"
#include "l1forge/review.hpp"
#include "l1forge/testing/mock_llm.hpp"
#include "l1forge/utf8.hpp"

using namespace l1forge;
using l1forge::testing::MockLlmServer;

namespace {

AnnotatedSentence plain(std::string id, std::string text, Source source = Source::llm) {
    AnnotatedSentence s;
    s.id = std::move(id);
    s.text = std::move(text);
    s.source = source;
    return s;
}

Corpus example_corpus(std::size_t n) {
    Corpus c;
    for (std::size_t i = 0; i < n; ++i) {
        c.sentences.push_back(plain("src-" + std::to_string(i),
                                    "Example sentence number " + std::to_string(i) + " here.",
                                    Source::realec));
    }
    return c;
}

}  // namespace

TEST_CASE("generation prompt carries the instruction and all examples") {
    std::vector<std::string> examples;
    for (int i = 0; i < 10; ++i) examples.push_back("Sample " + std::to_string(i) + ".");

    const std::string prompt = build_generation_prompt(examples, 0);
    CHECK(prompt.rfind(generation_instruction(0), 0) == 0);
    for (const auto& example : examples) {
        CHECK(prompt.find(example) != std::string::npos);
    }
    CHECK(prompt.find("10. ") != std::string::npos);

    CHECK(build_generation_prompt(examples, 0) == prompt);  // deterministic
    CHECK(build_generation_prompt(examples, 1) != prompt);
    CHECK_THROWS_AS(build_generation_prompt(examples, 4, 4), Error);
}

TEST_CASE("annotation prompt embeds instructions and the markup contract") {
    const std::string prompt =
        build_annotation_prompt(default_annotation_instructions(), {"One sentence."});
    CHECK(prompt.find("One sentence.") != std::string::npos);
    CHECK(prompt.find("<err tag=") != std::string::npos);
    CHECK(prompt.find("WordFormTransmission") != std::string::npos);
    CHECK(build_annotation_prompt(default_annotation_instructions(), {"One sentence."}) ==
          prompt);
    CHECK_THROWS_AS(build_annotation_prompt("", {"One sentence."}), Error);
}

TEST_CASE("markup parser extracts spans with stripped-text offsets") {
    const auto result = parse_annotated_output(
        "The share <err tag=\"TenseSemantics\" corr=\"decreased\">decreases</err> in 1999.");
    CHECK(result.sentence.text == "The share decreases in 1999.");
    REQUIRE(result.sentence.spans.size() == 1);
    const Span& span = result.sentence.spans[0];
    CHECK(span.start == 10);
    CHECK(span.end == 19);
    CHECK(span.tag == ErrorTag::TenseSemantics);
    CHECK(span.correction == "decreased");
    CHECK(result.sentence.source == Source::llm);
}

TEST_CASE("markup parser edge cases") {
    const auto none = parse_annotated_output("No markup at all here.");
    CHECK(none.sentence.spans.empty());
    CHECK(none.sentence.text == "No markup at all here.");

    CHECK_THROWS_AS(parse_annotated_output("Broken <err tag=\"Synonyms\">piece"), Error);
    CHECK_THROWS_AS(parse_annotated_output("Closes </err> without opening."), Error);
    CHECK_THROWS_AS(
        parse_annotated_output("<err tag=\"Synonyms\">a <err tag=\"Synonyms\">b</err></err>"),
        Error);

    const auto unknown =
        parse_annotated_output("A <err tag=\"Spelling\" corr=\"x\">typo</err> here.");
    CHECK(unknown.sentence.spans.empty());
    CHECK(unknown.dropped_unknown_tags == 1);
    CHECK(unknown.sentence.text == "A typo here.");

    // attribute order is free
    const auto reversed = parse_annotated_output(
        "He went to <err corr=\"cashier\" tag=\"Transliteration\">kassa</err> fast.");
    REQUIRE(reversed.sentence.spans.size() == 1);
    CHECK(reversed.sentence.spans[0].tag == ErrorTag::Transliteration);
    CHECK(reversed.sentence.spans[0].correction == "cashier");

    // offsets are codepoints even with Cyrillic inside
    const auto cyr = parse_annotated_output(
        "Он сказал <err tag=\"Transliteration\" corr=\"касса\">kassa</err> тихо.");
    REQUIRE(cyr.sentence.spans.size() == 1);
    CHECK(cyr.sentence.span_surface(cyr.sentence.spans[0]) == "kassa");
}

TEST_CASE("markup round-trips on well-formed input") {
    const std::string canonical =
        "The share <err tag=\"TenseSemantics\" corr=\"decreased\">decreases</err> in "
        "<err tag=\"Transliteration\">1999</err>.";
    const auto parsed = parse_annotated_output(canonical);
    CHECK(render_markup(parsed.sentence) == canonical);

    AnnotatedSentence s = plain("rt", "Money comes to the kassa.");
    Span span;
    span.start = 19;
    span.end = 24;
    span.tag = ErrorTag::Transliteration;
    span.correction = "cashier";
    s.spans = {span};
    const auto reparsed = parse_annotated_output(render_markup(s));
    CHECK(reparsed.sentence.text == s.text);
    CHECK(reparsed.sentence.spans == s.spans);
}

TEST_CASE("dedup drops exact duplicates and keeps disjoint sentences") {
    Corpus corpus;
    corpus.sentences = {
        plain("a", "The same exact sentence right here."),
        plain("b", "The same exact sentence right here."),
        plain("c", "Totally unrelated words appear now."),
    };
    const DedupResult result = dedup_near_duplicates(corpus, 0.9);
    REQUIRE(result.corpus.size() == 2);
    CHECK(result.dropped == 1);
    CHECK(result.corpus.sentences[0].id == "a");
    CHECK(result.corpus.sentences[1].id == "c");

    // idempotent, and no kept pair reaches the threshold
    const DedupResult again = dedup_near_duplicates(result.corpus, 0.9);
    CHECK(again.corpus.sentences == result.corpus.sentences);
    for (std::size_t i = 0; i < result.corpus.size(); ++i) {
        for (std::size_t j = i + 1; j < result.corpus.size(); ++j) {
            CHECK(trigram_jaccard(result.corpus.sentences[i].text,
                                  result.corpus.sentences[j].text) < 0.9);
        }
    }

    CHECK_THROWS_AS(dedup_near_duplicates(corpus, 0.0), Error);
    CHECK_THROWS_AS(dedup_near_duplicates(corpus, 1.5), Error);
}

TEST_CASE("trigram jaccard boundary behaviour") {
    CHECK(trigram_jaccard("abcde", "abcde") == 1.0);
    CHECK(trigram_jaccard("abc", "xyz") == 0.0);
    CHECK(trigram_jaccard("ab", "ab") == 1.0);   // too short for trigrams, equal
    CHECK(trigram_jaccard("ab", "cd") == 0.0);   // too short, different
    const double partial = trigram_jaccard("abcd", "abce");
    CHECK(partial > 0.0);
    CHECK(partial < 1.0);
}

TEST_CASE("review sheets export, parse and apply") {
    Corpus corpus;
    for (int i = 0; i < 40; ++i) {
        corpus.sentences.push_back(plain("llm-" + std::to_string(i), "Generated case."));
    }
    ReviewSheet sheet = make_review_sheet(corpus);
    REQUIRE(sheet.rows.size() == 40);
    for (auto& row : sheet.rows) row.verdict = Verdict::accept;
    sheet.rows[3].verdict = Verdict::reject;
    sheet.rows[17].verdict = Verdict::reject;

    const Corpus reviewed = apply_review(corpus, sheet);
    CHECK(reviewed.size() == 38);

    ReviewSheet untouched = make_review_sheet(corpus);
    CHECK_THROWS_AS(apply_review(corpus, untouched), Error);
    CHECK(apply_review(corpus, untouched, /*keep_unreviewed=*/true).size() == 40);

    ReviewSheet bad;
    bad.rows.push_back({"ghost", "x", "-", Verdict::accept});
    CHECK_THROWS_WITH_AS(apply_review(corpus, bad), doctest::Contains("ghost"), Error);

    CHECK(apply_review(Corpus{}, ReviewSheet{}).empty());

    const auto dir = std::filesystem::temp_directory_path() / "l1forge_review_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "sheet.tsv").string();
    write_review_sheet(sheet, path);
    const ReviewSheet reread = read_review_sheet(path);
    REQUIRE(reread.rows.size() == sheet.rows.size());
    CHECK(reread.rows[3].verdict == Verdict::reject);
    CHECK(reread.rows[0].verdict == Verdict::accept);
    std::filesystem::remove_all(dir);
}

TEST_CASE("extract_candidates strips numbering and splits single-line replies") {
    const auto lines = extract_candidates("1. First sentence here.\n2) Second one.\n- Third.");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "First sentence here.");
    CHECK(lines[1] == "Second one.");
    CHECK(lines[2] == "Third.");

    const auto split = extract_candidates("First thing happened. Then another Thing came.");
    CHECK(split.size() == 2);

    CHECK(extract_candidates("").empty());
}

TEST_CASE("generate_batch drives the mock endpoint with the configured knobs") {
    MockLlmServer server;
    int counter = 0;
    server.set_responder([&counter](const nlohmann::json&) {
        return "Generated sentence variant " + std::to_string(++counter) + " appears.";
    });

    GenerationJob job;
    job.endpoint = server.endpoint();
    job.model_name = "mock-model";
    job.temperature = 1.0;
    job.examples_per_prompt = 10;
    job.target_total = 7;
    job.seed = 42;
    job.max_inflight = 2;
    job.api_key = "sekret";

    const Corpus source = example_corpus(25);
    const GenerateResult result = generate_batch(job, source);
    REQUIRE(result.corpus.size() == 7);
    CHECK(result.corpus.sentences[0].id == "llm-000001");
    for (const auto& s : result.corpus.sentences) {
        CHECK(s.source == Source::llm);
        CHECK(result.corpus.provenance.count("request." + s.id) == 1);
    }

    const auto bodies = server.bodies();
    REQUIRE(!bodies.empty());
    std::set<std::string> instructions_seen;
    for (const auto& body : bodies) {
        CHECK(body.at("model").get<std::string>() == "mock-model");
        CHECK(body.at("temperature").get<double>() == doctest::Approx(1.0));
        const auto content =
            body.at("messages").at(0).at("content").get<std::string>();
        // exactly 10 numbered examples
        CHECK(content.find("10. ") != std::string::npos);
        CHECK(content.find("11. ") == std::string::npos);
        for (std::size_t p = 0; p < kGenerationTemplateCount; ++p) {
            if (content.rfind(generation_instruction(p), 0) == 0) {
                instructions_seen.insert(generation_instruction(p));
            }
        }
    }
    if (bodies.size() >= 4) CHECK(instructions_seen.size() == 4);  // paraphrases cycle

    for (const auto& auth : server.auth_headers()) {
        CHECK(auth == "Bearer sekret");
    }

    // determinism of the example sampling: same job, same prompts; run
    // sequentially so the recorded arrival order is well defined
    MockLlmServer replay;
    replay.set_responder([](const nlohmann::json&) { return "Echo sentence appears."; });
    GenerationJob job2 = job;
    job2.endpoint = replay.endpoint();
    job2.max_inflight = 1;
    generate_batch(job2, source);
    GenerationJob job3 = job;
    job3.endpoint = replay.endpoint();
    job3.max_inflight = 1;
    generate_batch(job3, source);
    const auto replay_bodies = replay.bodies();
    REQUIRE(replay_bodies.size() >= 2);
    const std::size_t half = replay_bodies.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        CHECK(replay_bodies[i].at("messages") == replay_bodies[i + half].at("messages"));
    }
}

TEST_CASE("generate_batch: zero target, duplicates collapse later") {
    MockLlmServer server;
    GenerationJob job;
    job.endpoint = server.endpoint();
    job.target_total = 0;
    const GenerateResult none = generate_batch(job, example_corpus(12));
    CHECK(none.corpus.empty());
    CHECK(server.request_count() == 0);

    server.set_responder([](const nlohmann::json&) { return "Always the same sentence."; });
    job.target_total = 6;
    const GenerateResult echoed = generate_batch(job, example_corpus(12));
    REQUIRE(echoed.corpus.size() == 6);
    const DedupResult deduped = dedup_near_duplicates(echoed.corpus, 0.9);
    CHECK(deduped.corpus.size() == 1);
    CHECK(deduped.dropped == 5);
}

TEST_CASE("generate_batch respects the in-flight bound under latency") {
    MockLlmServer server;
    server.set_delay(std::chrono::milliseconds(25));
    server.set_responder([](const nlohmann::json&) { return "Latency probe sentence."; });

    GenerationJob job;
    job.endpoint = server.endpoint();
    job.target_total = 9;
    job.max_inflight = 3;
    generate_batch(job, example_corpus(15));

    CHECK(server.max_inflight_seen() <= 3);
    CHECK(server.max_inflight_seen() >= 2);  // latency makes overlap observable
}

TEST_CASE("chat_complete retries transient failures and reports exhaustion") {
    MockLlmServer server;
    server.set_responder([](const nlohmann::json&) { return "Recovered fine."; });
    server.fail_next(1);
    RetryPolicy quick{3, std::chrono::milliseconds(5)};
    const std::string reply =
        chat_complete(server.endpoint(), "m", "hello", 1.0, "", quick);
    CHECK(reply == "Recovered fine.");

    server.fail_next(10);
    CHECK_THROWS_AS(chat_complete(server.endpoint(), "m", "hello", 1.0, "", quick), HttpError);
}

TEST_CASE("generate_batch surfaces transport failure with partial results") {
    MockLlmServer server;
    std::atomic<int> served{0};
    server.set_responder([&served](const nlohmann::json&) {
        return "Good generated sentence number " + std::to_string(++served) + " here.";
    });
    server.fail_after(2);  // requests 3+ fail, exhausting the retry budget

    GenerationJob job;
    job.endpoint = server.endpoint();
    job.target_total = 4;
    job.max_inflight = 1;
    job.retry = RetryPolicy{2, std::chrono::milliseconds(5)};

    bool threw = false;
    try {
        generate_batch(job, example_corpus(12));
    } catch (const TransportError& e) {
        threw = true;
        CHECK(e.partial.size() == 2);
        CHECK(e.partial.sentences[0].id == "llm-000001");
    }
    CHECK(threw);
}

TEST_CASE("annotate_batch attaches parsed spans to the corpus") {
    MockLlmServer server;
    server.set_responder([](const nlohmann::json& body) {
        const auto content = body.at("messages").at(0).at("content").get<std::string>();
        // reply with the last numbered sentence wrapped in markup
        const auto pos = content.rfind("1. ");
        std::string sentence = content.substr(pos + 3);
        while (!sentence.empty() && (sentence.back() == '\n' || sentence.back() == ' ')) {
            sentence.pop_back();
        }
        const auto kassa = sentence.find("kassa");
        if (kassa == std::string::npos) return sentence;
        return sentence.substr(0, kassa) +
               "<err tag=\"Transliteration\" corr=\"cashier\">kassa</err>" +
               sentence.substr(kassa + 5);
    });

    Corpus corpus;
    corpus.sentences = {plain("llm-1", "Money comes to the kassa."),
                        plain("llm-2", "Nothing special in this one.")};

    GenerationJob job;
    job.endpoint = server.endpoint();
    const AnnotateResult result =
        annotate_batch(job, corpus, default_annotation_instructions());
    REQUIRE(result.corpus.size() == 2);
    REQUIRE(result.corpus.sentences[0].spans.size() == 1);
    CHECK(result.corpus.sentences[0].spans[0].tag == ErrorTag::Transliteration);
    CHECK(result.corpus.sentences[0].span_surface(result.corpus.sentences[0].spans[0]) ==
          "kassa");
    CHECK(result.corpus.sentences[1].spans.empty());
}
