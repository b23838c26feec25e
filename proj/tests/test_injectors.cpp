#include <doctest.h>

#include <sstream>

#include "l1forge/corpus_io.hpp"
#include "l1forge/errors.hpp"
#include "l1forge/injectors.hpp"
#include "l1forge/utf8.hpp"

using namespace l1forge;

namespace {

AnnotatedSentence clean(std::string id, std::string text) {
    AnnotatedSentence s;
    s.id = std::move(id);
    s.text = std::move(text);
    s.source = Source::ppo;
    return s;
}

ErrorDictionary synonyms_dict() {
    ErrorDictionary d(ErrorTag::Synonyms);
    d.insert("covered", "overcame");
    return d;
}

/// Substituting the stored correction back over the added span must
/// reproduce the input text exactly.
void check_reversible(const AnnotatedSentence& input, const AnnotatedSentence& output) {
    REQUIRE(output.spans.size() == input.spans.size() + 1);
    // the added span is the one whose (start,end,tag,correction) is new
    const Span* added = nullptr;
    for (const Span& sp : output.spans) {
        if (std::find(input.spans.begin(), input.spans.end(), sp) == input.spans.end()) {
            added = &sp;
        }
    }
    REQUIRE(added != nullptr);
    REQUIRE(added->correction.has_value());
    const std::string reverted = utf8::substr(output.text, 0, added->start) +
                                 *added->correction +
                                 utf8::substr(output.text, added->end,
                                              utf8::length(output.text));
    CHECK(reverted == input.text);
}

}  // namespace

TEST_CASE("transliterate applies the bundled table") {
    CHECK(transliterate("касса") == "kassa");
    CHECK(transliterate("") == "");
    CHECK(transliterate("Касса") == "Kassa");
    CHECK(transliterate("журнал") == "zhurnal");
    CHECK(transliterate("хорошо") == "khorosho");
    CHECK(transliterate("щи") == "shchi");
    CHECK(transliterate("объём") == "obem");
    CHECK(transliterate("уже latin 42") == "uzhe latin 42");
}

TEST_CASE("transliterate is idempotent and eliminates Cyrillic") {
    Rng rng(5);
    const char32_t cyr_lo = 0x0410, cyr_hi = 0x044F;
    for (int trial = 0; trial < 100; ++trial) {
        std::string text;
        const std::size_t len = rng.index(20);
        for (std::size_t i = 0; i < len; ++i) {
            if (rng.index(3) == 0) {
                text += static_cast<char>('a' + rng.index(26));
            } else {
                utf8::append(text, cyr_lo + static_cast<char32_t>(
                                                rng.index(cyr_hi - cyr_lo + 1)));
            }
        }
        const std::string once = transliterate(text);
        CHECK_FALSE(utf8::contains_cyrillic(once));
        CHECK(transliterate(once) == once);
    }
}

TEST_CASE("transliteration table TSV overrides single letters") {
    const auto table = TransliterationTable::from_tsv("й\tj\n");
    CHECK(transliterate("йод", table) == "jod");
    CHECK(transliterate("касса", table) == "kassa");  // rest unchanged
    CHECK_THROWS_AS(TransliterationTable::from_tsv("xy\tz\n"), Error);
}

TEST_CASE("to_present_simple conjugates with agreement") {
    CHECK(to_present_simple("decreased", SubjectNumber::singular) == "decreases");
    CHECK(to_present_simple("fell", SubjectNumber::plural) == "fall");
    CHECK(to_present_simple("carried", SubjectNumber::singular) == "carries");
    CHECK(to_present_simple("stopped", SubjectNumber::singular) == "stops");
    CHECK(to_present_simple("rose", SubjectNumber::singular) == "rises");
    CHECK(to_present_simple("went", SubjectNumber::singular) == "goes");
    CHECK(to_present_simple("watched", SubjectNumber::singular) == "watches");
    CHECK(to_present_simple("agreed", SubjectNumber::plural) == "agree");
    CHECK(to_present_simple("used", SubjectNumber::singular) == "uses");
    CHECK(to_present_simple("increased", SubjectNumber::plural) == "increase");
    CHECK(to_present_simple("hoped", SubjectNumber::singular) == "hopes");
    CHECK(to_present_simple("Decreased", SubjectNumber::singular) == "Decreases");
    CHECK_THROWS_AS(to_present_simple("banana", SubjectNumber::singular), Error);
    CHECK_THROWS_AS(to_present_simple("was", SubjectNumber::singular), Error);
}

TEST_CASE("inject_dictionary replaces a matching word and reverses") {
    const auto input = clean("i-1", "They covered the distance.");
    const auto dict = synonyms_dict();
    Rng rng(1);
    const auto output = inject_dictionary(input, dict, rng);
    REQUIRE(output.has_value());
    CHECK(output->text == "They overcame the distance.");
    CHECK(output->source == Source::rule);
    REQUIRE(output->spans.size() == 1);
    const Span& sp = output->spans[0];
    CHECK(output->span_surface(sp) == "overcame");
    CHECK(sp.tag == ErrorTag::Synonyms);
    CHECK(sp.correction == "covered");
    check_reversible(input, *output);
}

TEST_CASE("inject_dictionary misses and determinism") {
    const auto dict = synonyms_dict();
    Rng rng(1);
    CHECK_FALSE(inject_dictionary(clean("m-1", "Nothing matches here."), dict, rng).has_value());

    // two candidate sites: same seed, same choice
    const auto input = clean("m-2", "They covered what covered them.");
    Rng a(99), b(99);
    const auto out_a = inject_dictionary(input, dict, a);
    const auto out_b = inject_dictionary(input, dict, b);
    REQUIRE(out_a.has_value());
    REQUIRE(out_b.has_value());
    CHECK(out_a->text == out_b->text);
    CHECK(out_a->spans == out_b->spans);
}

TEST_CASE("inject_dictionary matches phrases longest-first") {
    ErrorDictionary d(ErrorTag::CopyingExpression);
    d.insert("everyone", "every of us");
    ErrorDictionary rev(ErrorTag::CopyingExpression);
    rev.insert("every of us", "everyone");  // multi-word key
    Rng rng(3);
    const auto input = clean("p-1", "It was made for every of us here.");
    const auto output = inject_dictionary(input, rev, rng);
    REQUIRE(output.has_value());
    CHECK(output->text == "It was made for everyone here.");
    CHECK(output->spans[0].correction == "every of us");
    check_reversible(input, *output);
}

TEST_CASE("inject_dictionary samples variants by observation count") {
    ErrorDictionary d(ErrorTag::Synonyms);
    d.insert("covered", "overcame", 9);
    d.insert("covered", "overrun", 1);
    std::size_t overcame = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        Rng rng(seed);
        const auto out = inject_dictionary(clean("v", "They covered it all today."), d, rng);
        REQUIRE(out.has_value());
        if (out->span_surface(out->spans[0]) == "overcame") ++overcame;
    }
    // binomial(400, 0.9): ~8 sigma window
    CHECK(overcame > 320);
    CHECK(overcame < 400);
}

TEST_CASE("inject_tense rewrites the paper example") {
    const auto input = clean("t-1", "In 1999 the share decreased.");
    Rng rng(1);
    const auto output = inject_tense(input, rng);
    REQUIRE(output.has_value());
    CHECK(output->text == "In 1999 the share decreases.");
    REQUIRE(output->spans.size() == 1);
    CHECK(output->span_surface(output->spans[0]) == "decreases");
    CHECK(output->spans[0].tag == ErrorTag::TenseSemantics);
    CHECK(output->spans[0].correction == "decreased");
    check_reversible(input, *output);
}

TEST_CASE("inject_tense requires a year and respects clause boundaries") {
    Rng rng(1);
    CHECK_FALSE(inject_tense(clean("t-2", "The share decreased."), rng).has_value());
    CHECK_FALSE(inject_tense(clean("t-3", "In 1999 the share grows."), rng).has_value());
    // the year's clause has no past verb; the other clause does
    CHECK_FALSE(
        inject_tense(clean("t-4", "It happened fast, but in 2001 things are fine."), rng)
            .has_value());
}

TEST_CASE("inject_tense uses plural agreement from the subject") {
    const auto input = clean("t-5", "In 2000 the rates fell and prices rose.");
    Rng rng(4);
    const auto output = inject_tense(input, rng);
    REQUIRE(output.has_value());
    // the clause containing 2000 holds "fell"; plural subject keeps the bare form
    CHECK(output->text == "In 2000 the rates fall and prices rose.");
    check_reversible(input, *output);
}

TEST_CASE("inject_transliteration swaps a lexicon noun") {
    NounLexicon lexicon;
    lexicon.add("cashier", "касса");
    const auto input = clean("x-1", "Money comes to the cashier.");
    Rng rng(1);
    const auto output =
        inject_transliteration(input, lexicon, TransliterationTable::bundled(), rng);
    REQUIRE(output.has_value());
    CHECK(output->text == "Money comes to the kassa.");
    REQUIRE(output->spans.size() == 1);
    CHECK(output->spans[0].tag == ErrorTag::Transliteration);
    CHECK(output->spans[0].correction == "cashier");
    check_reversible(input, *output);

    Rng rng2(1);
    CHECK_FALSE(inject_transliteration(clean("x-2", "No lexicon nouns present."), lexicon,
                                       TransliterationTable::bundled(), rng2)
                    .has_value());

    // fixed seed reproduces the chosen noun
    NounLexicon two;
    two.add("cashier", "касса");
    two.add("passport", "паспорт");
    const auto multi = clean("x-3", "The cashier checked the passport.");
    Rng a(17), b(17);
    const auto out_a = inject_transliteration(multi, two, TransliterationTable::bundled(), a);
    const auto out_b = inject_transliteration(multi, two, TransliterationTable::bundled(), b);
    REQUIRE(out_a.has_value());
    CHECK(out_a->text == out_b->text);
}

TEST_CASE("batch injection: OpenMP path equals the serial reference") {
    Corpus corpus;
    for (int i = 0; i < 300; ++i) {
        const std::string year = std::to_string(1980 + i % 40);
        corpus.sentences.push_back(
            clean("b-" + std::to_string(i),
                  "In " + year + " the share decreased and the rates fell."));
    }
    const SentenceInjector injector = [](const AnnotatedSentence& s, Rng& rng) {
        return inject_tense(s, rng);
    };
    const Corpus parallel = inject_batch(corpus, injector, 42);
    const Corpus serial = inject_batch_serial(corpus, injector, 42);
    REQUIRE(parallel.size() == serial.size());
    CHECK(parallel.size() == corpus.size());

    std::ostringstream par_out, ser_out;
    write_corpus_stream(parallel, par_out);
    write_corpus_stream(serial, ser_out);
    CHECK(par_out.str() == ser_out.str());
}

TEST_CASE("first-word table counts and samples by frequency") {
    Corpus one;
    one.sentences = {clean("w-1", "The end.")};
    const auto table = build_first_word_table(one);
    REQUIRE(table.entries().size() == 1);
    CHECK(table.entries()[0].first == "The");
    Rng rng(2);
    CHECK(sample_first_word(table, rng) == "The");

    FirstWordTable weighted;
    weighted.add("A", 3);
    weighted.add("B", 1);
    Rng sampler(123);
    std::size_t a_count = 0;
    for (int i = 0; i < 10000; ++i) {
        if (sample_first_word(weighted, sampler) == "A") ++a_count;
    }
    CHECK(a_count >= 7300);
    CHECK(a_count <= 7700);

    CHECK_THROWS_AS(build_first_word_table(Corpus{}), Error);
    FirstWordTable empty;
    Rng r2(1);
    CHECK_THROWS_AS(sample_first_word(empty, r2), Error);
}
