#include "l1forge/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "l1forge/errors.hpp"
#include "l1forge/tokenize.hpp"

namespace l1forge {

namespace {

constexpr char kSep = '\x1f';

using NgramCounts = std::unordered_map<std::string, std::size_t>;

std::vector<std::string> sentence_tokens(const AnnotatedSentence& s) {
    std::vector<std::string> out;
    for (Token& t : tokenize(s.text)) out.push_back(std::move(t.surface));
    return out;
}

NgramCounts count_ngrams(const std::vector<std::string>& tokens, std::size_t n) {
    NgramCounts counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (std::size_t k = 1; k < n; ++k) {
            key += kSep;
            key += tokens[i + k];
        }
        ++counts[key];
    }
    return counts;
}

/// Closest reference length for a hypothesis, excluding the hypothesis's own
/// entry from the pool; ties resolve to the shorter length.
std::size_t closest_ref_length(const std::vector<std::size_t>& sorted_lengths,
                               std::size_t own_length) {
    const auto lo = std::lower_bound(sorted_lengths.begin(), sorted_lengths.end(), own_length);
    const auto hi = std::upper_bound(lo, sorted_lengths.end(), own_length);
    if (hi - lo >= 2) return own_length;  // another sentence shares the length

    std::optional<std::size_t> below, above;
    if (hi - lo == 1) {
        if (lo != sorted_lengths.begin()) below = *(lo - 1);
        if (hi != sorted_lengths.end()) above = *hi;
    } else {
        // own length absent (caller passed a foreign pool); use neighbors of lo
        if (lo != sorted_lengths.begin()) below = *(lo - 1);
        if (lo != sorted_lengths.end()) above = *lo;
    }
    if (below && above) {
        const std::size_t d_below = own_length - *below;
        const std::size_t d_above = *above - own_length;
        return d_below <= d_above ? *below : *above;
    }
    if (below) return *below;
    if (above) return *above;
    return own_length;
}

/// Shared scoring step so the reference and the fast path run identical
/// arithmetic once the clipped counts agree.
double bleu_from_stats(const std::vector<std::size_t>& clipped,
                       const std::vector<std::size_t>& totals, std::size_t hyp_len,
                       std::size_t ref_len) {
    double log_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t n = 0; n < clipped.size(); ++n) {
        if (totals[n] == 0) continue;
        double p;
        if (clipped[n] == 0) {
            p = 1.0 / static_cast<double>(totals[n] + 1);
        } else {
            p = static_cast<double>(clipped[n]) / static_cast<double>(totals[n]);
        }
        log_sum += std::log(p);
        ++used;
    }
    if (used == 0) return 0.0;
    const double precision_mean = std::exp(log_sum / static_cast<double>(used));
    double bp = 1.0;
    if (ref_len > hyp_len) {
        bp = std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
    }
    return bp * precision_mean;
}

struct TopTwo {
    std::size_t best = 0;
    std::size_t second = 0;
    std::size_t owner = SIZE_MAX;

    void offer(std::size_t count, std::size_t sentence) {
        if (count > best) {
            second = best;
            best = count;
            owner = sentence;
        } else if (count > second) {
            second = count;
        }
    }
    std::size_t max_excluding(std::size_t sentence) const {
        return sentence == owner ? second : best;
    }
};

}  // namespace

double self_bleu(const Corpus& corpus, std::size_t max_n) {
    if (corpus.size() < 2) throw Error("Self-BLEU needs at least 2 sentences");

    const std::size_t n_sent = corpus.size();
    std::vector<std::vector<std::string>> tokens(n_sent);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_sent); ++i) {
        tokens[i] = sentence_tokens(corpus.sentences[i]);
    }

    std::vector<std::vector<NgramCounts>> counts(n_sent);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_sent); ++i) {
        counts[i].reserve(max_n);
        for (std::size_t n = 1; n <= max_n; ++n) {
            counts[i].push_back(count_ngrams(tokens[i], n));
        }
    }

    // top-two counts per n-gram across sentences; max over "all others" is
    // then a constant-time lookup per hypothesis
    std::vector<std::unordered_map<std::string, TopTwo>> pool(max_n);
    for (std::size_t i = 0; i < n_sent; ++i) {
        for (std::size_t n = 0; n < max_n; ++n) {
            for (const auto& [gram, count] : counts[i][n]) {
                pool[n][gram].offer(count, i);
            }
        }
    }

    std::vector<std::size_t> lengths(n_sent);
    for (std::size_t i = 0; i < n_sent; ++i) lengths[i] = tokens[i].size();
    std::vector<std::size_t> sorted_lengths = lengths;
    std::sort(sorted_lengths.begin(), sorted_lengths.end());

    std::vector<double> scores(n_sent, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_sent); ++i) {
        const std::size_t len = lengths[i];
        if (len == 0) continue;
        std::vector<std::size_t> clipped(max_n, 0), totals(max_n, 0);
        for (std::size_t n = 0; n < max_n; ++n) {
            if (len < n + 1) break;
            totals[n] = len - n;
            for (const auto& [gram, count] : counts[i][n]) {
                const auto it = pool[n].find(gram);
                const std::size_t ref_max = it->second.max_excluding(i);
                clipped[n] += std::min(count, ref_max);
            }
        }
        scores[i] = bleu_from_stats(clipped, totals, len, closest_ref_length(sorted_lengths, len));
    }

    double sum = 0.0;
    for (double s : scores) sum += s;
    return 100.0 * sum / static_cast<double>(n_sent);
}

double self_bleu_reference(const Corpus& corpus, std::size_t max_n) {
    if (corpus.size() < 2) throw Error("Self-BLEU needs at least 2 sentences");

    const std::size_t n_sent = corpus.size();
    std::vector<std::vector<std::string>> tokens(n_sent);
    for (std::size_t i = 0; i < n_sent; ++i) tokens[i] = sentence_tokens(corpus.sentences[i]);

    std::vector<std::vector<NgramCounts>> counts(n_sent);
    for (std::size_t i = 0; i < n_sent; ++i) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            counts[i].push_back(count_ngrams(tokens[i], n));
        }
    }

    std::vector<std::size_t> sorted_lengths(n_sent);
    for (std::size_t i = 0; i < n_sent; ++i) sorted_lengths[i] = tokens[i].size();
    std::sort(sorted_lengths.begin(), sorted_lengths.end());

    double sum = 0.0;
    for (std::size_t i = 0; i < n_sent; ++i) {
        const std::size_t len = tokens[i].size();
        if (len == 0) continue;
        std::vector<std::size_t> clipped(max_n, 0), totals(max_n, 0);
        for (std::size_t n = 0; n < max_n; ++n) {
            if (len < n + 1) break;
            totals[n] = len - n;
            for (const auto& [gram, count] : counts[i][n]) {
                std::size_t ref_max = 0;
                for (std::size_t j = 0; j < n_sent; ++j) {
                    if (j == i) continue;
                    const auto it = counts[j][n].find(gram);
                    if (it != counts[j][n].end()) ref_max = std::max(ref_max, it->second);
                }
                clipped[n] += std::min(count, ref_max);
            }
        }
        sum += bleu_from_stats(clipped, totals, len,
                               closest_ref_length(sorted_lengths, len));
    }
    return 100.0 * sum / static_cast<double>(n_sent);
}

namespace {

std::unordered_set<std::string> corpus_ngrams(const Corpus& corpus, std::size_t n) {
    std::unordered_set<std::string> grams;
    for (const AnnotatedSentence& s : corpus.sentences) {
        std::vector<std::string> words;
        for (const Token& t : tokenize(s.text)) {
            if (t.pos == CoarsePos::punct) continue;
            words.push_back(ascii_lower(t.surface));
        }
        if (words.size() < n) continue;
        for (std::size_t i = 0; i + n <= words.size(); ++i) {
            std::string key = words[i];
            for (std::size_t k = 1; k < n; ++k) {
                key += kSep;
                key += words[i + k];
            }
            grams.insert(std::move(key));
        }
    }
    return grams;
}

}  // namespace

double ngram_novelty(const Corpus& generated, const Corpus& source, std::size_t n) {
    if (n == 0) throw Error("n-gram order must be positive");
    const auto gen = corpus_ngrams(generated, n);
    if (gen.empty()) {
        throw Error("generated corpus yields no " + std::to_string(n) + "-grams");
    }
    const auto src = corpus_ngrams(source, n);
    std::size_t novel = 0;
    for (const std::string& gram : gen) {
        if (!src.count(gram)) ++novel;
    }
    return static_cast<double>(novel) / static_cast<double>(gen.size());
}

std::string DiversityReport::to_json() const {
    nlohmann::ordered_json j;
    j["self_bleu"] = self_bleu_score;
    j["ngram_novelty"] = novelty;
    j["self_bleu_max_n"] = max_n;
    j["novelty_n"] = novelty_n;
    j["generated_sentences"] = generated_sentences;
    j["source_sentences"] = source_sentences;
    return j.dump(2);
}

std::string DiversityReport::to_table() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "Self-BLEU (n<=" << max_n << "):     " << self_bleu_score << '\n';
    out << std::setprecision(4);
    out << novelty_n << "-gram novelty:      " << novelty << '\n';
    out << "generated sentences: " << generated_sentences << '\n';
    out << "source sentences:    " << source_sentences << '\n';
    return out.str();
}

}  // namespace l1forge
