#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "l1forge/corpus.hpp"

namespace l1forge {

/// Keeps exactly the sentences whose token count is >= min_tokens,
/// preserving order. Idempotent.
Corpus filter_min_tokens(const Corpus& corpus, std::size_t min_tokens = 5);

/// Seeded shuffle, then the first floor(n * train_ratio) sentences become
/// the train corpus and the rest the test corpus. Sets the split field on
/// every output sentence. Requires 0 < train_ratio < 1.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_ratio,
                                       std::uint64_t seed);

/// Span and sentence counts keyed by (tag, source, split). split key is
/// "train", "test" or "none".
struct CorpusStats {
    // (tag, source, split) -> span count
    std::map<std::tuple<ErrorTag, Source, std::string>, std::size_t> span_counts;
    // (source, split) -> sentence count
    std::map<std::pair<Source, std::string>, std::size_t> sentence_counts;
    std::size_t total_spans = 0;
    std::size_t total_sentences = 0;

    std::string to_json() const;
    std::string to_table() const;
};

CorpusStats corpus_stats(const Corpus& corpus);

/// Seeded downsample without replacement to at most k sentences,
/// input order preserved.
Corpus downsample(const Corpus& corpus, std::size_t k, std::uint64_t seed);

}  // namespace l1forge
