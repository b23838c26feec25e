#pragma once

#include <map>
#include <string>

#include "l1forge/corpus.hpp"

namespace l1forge {

enum class MatchMode { strict, overlap };

struct TagCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    double precision() const;  // percent; 0 when tp+fp == 0
    double recall() const;     // percent; 0 when tp+fn == 0
    double f1() const;         // 2PR/(P+R), 0 when P+R == 0
};

struct EvalReport {
    MatchMode mode = MatchMode::strict;
    std::map<ErrorTag, TagCounts> per_tag;  // only tags with tp+fp+fn > 0
    double macro_f1 = 0.0;                  // over the populated tags
    TagCounts micro;                        // pooled counts

    std::string to_json() const;
    std::string to_table() const;
};

/// Span-level scoring of predictions against gold, aligned by sentence id.
/// strict: a prediction matches an unmatched gold span with identical
/// (start, end, tag). overlap: character overlap > 0 and equal tag.
/// Matching is one-to-one and greedy by ascending gold (start, end); the
/// first unmatched prediction in (start, end) order wins. Unmatched
/// predictions count as FP, unmatched gold spans as FN. A prediction id
/// absent from gold raises Error; gold sentences without predictions
/// contribute FNs.
EvalReport span_f1(const Corpus& gold, const Corpus& pred, MatchMode mode = MatchMode::strict);

}  // namespace l1forge
