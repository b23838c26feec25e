#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l1forge/corpus.hpp"
#include "l1forge/dictionary.hpp"
#include "l1forge/rng.hpp"
#include "l1forge/tokenize.hpp"
#include "l1forge/translit.hpp"
#include "l1forge/verbs.hpp"

namespace l1forge {

/// Every injector rewrites exactly one region of the sentence, adds exactly
/// one span bounding the rewritten region with the original surface as its
/// correction, and returns nullopt when no eligible site exists. Outputs are
/// deterministic for a given (input, configuration, rng state) and carry
/// source = rule.

/// Replaces one token/phrase matching a dictionary key (case-insensitive,
/// longest-first greedy site scan) with an erroneous variant sampled
/// proportionally to observation counts. Sites overlapping existing spans
/// are not eligible.
std::optional<AnnotatedSentence> inject_dictionary(const AnnotatedSentence& sentence,
                                                   const ErrorDictionary& dictionary, Rng& rng);

/// Same, drawing sites from several per-tag dictionaries at once; the added
/// span carries the tag of the dictionary that sourced the variant.
std::optional<AnnotatedSentence> inject_from_dictionaries(
    const AnnotatedSentence& sentence, std::span<const ErrorDictionary> dictionaries, Rng& rng,
    const std::vector<Token>* pretagged = nullptr);

/// If the sentence has a year token and a past-tense verb in the same clause
/// (clauses bounded by , ; : and the coordinating words and/but/or/while/
/// whereas), rewrites the verb nearest to the year to present simple with
/// subject agreement and tags it TenseSemantics.
std::optional<AnnotatedSentence> inject_tense(const AnnotatedSentence& sentence, Rng& rng,
                                              const VerbTable& verbs = VerbTable::bundled(),
                                              const std::vector<Token>* pretagged = nullptr);

/// Replaces one noun found in the lexicon with the transliteration of its
/// Russian equivalent, tagged Transliteration.
std::optional<AnnotatedSentence> inject_transliteration(
    const AnnotatedSentence& sentence, const NounLexicon& lexicon,
    const TransliterationTable& table, Rng& rng, const std::vector<Token>* pretagged = nullptr);

/// Per-sentence injector callable; must be pure and thread-safe.
using SentenceInjector =
    std::function<std::optional<AnnotatedSentence>(const AnnotatedSentence&, Rng&)>;

/// Applies the injector to every sentence with a per-sentence generator
/// derived as seed xor sentence index; keeps the fired outputs in input
/// order. The OpenMP variant and the serial reference produce byte-identical
/// corpora.
Corpus inject_batch(const Corpus& corpus, const SentenceInjector& injector, std::uint64_t seed);
Corpus inject_batch_serial(const Corpus& corpus, const SentenceInjector& injector,
                           std::uint64_t seed);

/// Frequencies of sentence-initial tokens (case-preserved, first-seen order).
class FirstWordTable {
public:
    void add(std::string word, std::size_t count = 1);
    bool empty() const { return entries_.empty(); }
    std::size_t total() const { return total_; }
    const std::vector<std::pair<std::string, std::size_t>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::size_t>> entries_;
    std::size_t total_ = 0;
};

/// Counts sentence-initial tokens over the corpus. Errors on an empty corpus
/// or when no sentence yields a token.
FirstWordTable build_first_word_table(const Corpus& corpus);

/// Samples a word with probability frequency/total. Errors on an empty table.
std::string sample_first_word(const FirstWordTable& table, Rng& rng);

}  // namespace l1forge
