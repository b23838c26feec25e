#pragma once

#include <string>

#include "l1forge/corpus.hpp"

namespace l1forge {

/// Corpus-internal Self-BLEU in [0, 100]: every sentence is scored as a
/// hypothesis with all other sentences as references (modified n-gram
/// precisions n = 1..max_n, add-one smoothing on zero precisions, brevity
/// penalty against the closest reference length), then averaged. Lower
/// means more internal diversity; n identical sentences score 100.
/// Requires at least 2 sentences.
///
/// self_bleu parallelizes over hypotheses (OpenMP) and clips counts against
/// a precomputed top-two table; self_bleu_reference is the straightforward
/// quadratic loop kept for testing. Both return identical values.
double self_bleu(const Corpus& corpus, std::size_t max_n = 4);
double self_bleu_reference(const Corpus& corpus, std::size_t max_n = 4);

/// Fraction of the generated corpus's distinct token n-grams (lowercased,
/// punctuation-stripped) absent from the source corpus's n-gram set.
/// ngram_novelty(X, X) == 0; fully disjoint vocabularies give 1.
/// Errors when the generated corpus yields no n-grams.
double ngram_novelty(const Corpus& generated, const Corpus& source, std::size_t n = 3);

struct DiversityReport {
    double self_bleu_score = 0.0;
    double novelty = 0.0;
    std::size_t max_n = 4;
    std::size_t novelty_n = 3;
    std::size_t generated_sentences = 0;
    std::size_t source_sentences = 0;

    std::string to_json() const;
    std::string to_table() const;
};

}  // namespace l1forge
