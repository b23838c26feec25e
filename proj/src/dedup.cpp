#include "l1forge/dedup.hpp"

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

std::unordered_set<std::string> char_trigrams(std::string_view text) {
    std::unordered_set<std::string> grams;
    const auto cps = utf8::decode_all(text);
    if (cps.size() < 3) return grams;
    for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
        const std::size_t b0 = cps[i].byte_pos;
        const std::size_t b1 = i + 3 < cps.size() ? cps[i + 3].byte_pos : text.size();
        grams.emplace(text.substr(b0, b1 - b0));
    }
    return grams;
}

namespace {

double jaccard(const std::unordered_set<std::string>& a,
               const std::unordered_set<std::string>& b, std::string_view text_a,
               std::string_view text_b) {
    if (a.empty() && b.empty()) return text_a == text_b ? 1.0 : 0.0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::size_t intersection = 0;
    for (const std::string& gram : small) {
        if (large.count(gram)) ++intersection;
    }
    const std::size_t unions = a.size() + b.size() - intersection;
    return unions == 0 ? 0.0 : static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace

double trigram_jaccard(std::string_view a, std::string_view b) {
    return jaccard(char_trigrams(a), char_trigrams(b), a, b);
}

DedupResult dedup_near_duplicates(const Corpus& corpus, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw Error("dedup threshold must lie in (0, 1]");
    }

    DedupResult result;
    result.corpus.provenance = corpus.provenance;
    std::vector<std::unordered_set<std::string>> kept_grams;
    std::vector<std::size_t> kept_index;  // into result.corpus.sentences

    for (const AnnotatedSentence& s : corpus.sentences) {
        const auto grams = char_trigrams(s.text);
        bool duplicate = false;
        const std::ptrdiff_t kept = static_cast<std::ptrdiff_t>(kept_grams.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32) reduction(|| : duplicate)
#endif
        for (std::ptrdiff_t j = 0; j < kept; ++j) {
            const std::string& kept_text = result.corpus.sentences[kept_index[j]].text;
            duplicate =
                duplicate || jaccard(grams, kept_grams[j], s.text, kept_text) >= threshold;
        }
        if (duplicate) {
            ++result.dropped;
            continue;
        }
        kept_index.push_back(result.corpus.sentences.size());
        result.corpus.sentences.push_back(s);
        kept_grams.push_back(std::move(grams));
    }
    return result;
}

}  // namespace l1forge
