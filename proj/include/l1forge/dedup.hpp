#pragma once

#include <string_view>
#include <unordered_set>

#include "l1forge/corpus.hpp"

namespace l1forge {

/// Distinct codepoint trigrams of the text.
std::unordered_set<std::string> char_trigrams(std::string_view text);

/// Jaccard similarity of the trigram sets. When both texts are too short to
/// yield trigrams, identical texts score 1 and different texts 0.
double trigram_jaccard(std::string_view a, std::string_view b);

struct DedupResult {
    Corpus corpus;
    std::size_t dropped = 0;
};

/// Greedy near-duplicate filter in corpus order: a sentence is dropped when
/// its character-trigram Jaccard similarity with any kept sentence reaches
/// the threshold. Deterministic and idempotent; the check against the kept
/// set runs in parallel. Requires 0 < threshold <= 1.
DedupResult dedup_near_duplicates(const Corpus& corpus, double threshold = 0.9);

}  // namespace l1forge
