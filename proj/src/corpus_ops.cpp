#include "l1forge/corpus_ops.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "l1forge/errors.hpp"
#include "l1forge/rng.hpp"
#include "l1forge/tokenize.hpp"

namespace l1forge {

Corpus filter_min_tokens(const Corpus& corpus, std::size_t min_tokens) {
    Corpus out;
    out.provenance = corpus.provenance;
    for (const AnnotatedSentence& s : corpus.sentences) {
        if (count_tokens(s.text) >= min_tokens) out.sentences.push_back(s);
    }
    return out;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_ratio,
                                       std::uint64_t seed) {
    if (!(train_ratio > 0.0 && train_ratio < 1.0)) {
        throw Error("train ratio must lie strictly between 0 and 1");
    }
    std::vector<std::size_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    const auto train_size =
        static_cast<std::size_t>(std::floor(static_cast<double>(corpus.size()) * train_ratio));

    Corpus train, test;
    train.provenance = corpus.provenance;
    test.provenance = corpus.provenance;
    for (std::size_t i = 0; i < order.size(); ++i) {
        AnnotatedSentence s = corpus.sentences[order[i]];
        s.split = i < train_size ? Split::train : Split::test;
        (i < train_size ? train : test).sentences.push_back(std::move(s));
    }
    return {std::move(train), std::move(test)};
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    for (const AnnotatedSentence& s : corpus.sentences) {
        const std::string split = s.split ? std::string(to_string(*s.split)) : "none";
        ++stats.sentence_counts[{s.source, split}];
        ++stats.total_sentences;
        for (const Span& sp : s.spans) {
            ++stats.span_counts[{sp.tag, s.source, split}];
            ++stats.total_spans;
        }
    }
    return stats;
}

std::string CorpusStats::to_json() const {
    nlohmann::ordered_json j;
    j["total_sentences"] = total_sentences;
    j["total_spans"] = total_spans;
    auto spans = nlohmann::ordered_json::array();
    for (const auto& [key, count] : span_counts) {
        const auto& [tag, source, split] = key;
        spans.push_back({{"tag", std::string(to_string(tag))},
                         {"source", std::string(to_string(source))},
                         {"split", split},
                         {"spans", count}});
    }
    j["span_counts"] = std::move(spans);
    auto sentences = nlohmann::ordered_json::array();
    for (const auto& [key, count] : sentence_counts) {
        sentences.push_back({{"source", std::string(to_string(key.first))},
                             {"split", key.second},
                             {"sentences", count}});
    }
    j["sentence_counts"] = std::move(sentences);
    return j.dump(2);
}

std::string CorpusStats::to_table() const {
    std::ostringstream out;
    out << std::left << std::setw(22) << "tag" << std::setw(8) << "source" << std::setw(7)
        << "split" << std::right << std::setw(7) << "spans" << '\n';
    for (const auto& [key, count] : span_counts) {
        const auto& [tag, source, split] = key;
        out << std::left << std::setw(22) << to_string(tag) << std::setw(8) << to_string(source)
            << std::setw(7) << split << std::right << std::setw(7) << count << '\n';
    }
    out << '\n';
    out << std::left << std::setw(30) << "sentences by (source, split)" << '\n';
    for (const auto& [key, count] : sentence_counts) {
        out << std::left << std::setw(22) << to_string(key.first) << std::setw(8) << key.second
            << std::right << std::setw(7) << count << '\n';
    }
    out << '\n'
        << "total sentences: " << total_sentences << '\n'
        << "total spans:     " << total_spans << '\n';
    return out.str();
}

Corpus downsample(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
    if (corpus.size() <= k) return corpus;
    std::vector<std::size_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    order.resize(k);
    std::sort(order.begin(), order.end());
    Corpus out;
    out.provenance = corpus.provenance;
    for (std::size_t idx : order) out.sentences.push_back(corpus.sentences[idx]);
    return out;
}

}  // namespace l1forge
