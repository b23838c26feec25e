#include "l1forge/injectors.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

namespace {

bool overlaps_existing_span(const AnnotatedSentence& s, std::size_t start, std::size_t end) {
    for (const Span& sp : s.spans) {
        if (sp.start < end && start < sp.end) return true;
    }
    return false;
}

/// Rewrites [start, end) to `replacement`, appends the new span, shifts
/// spans after the site, sets source = rule.
AnnotatedSentence apply_replacement(const AnnotatedSentence& in, std::size_t start,
                                    std::size_t end, const std::string& replacement,
                                    ErrorTag tag) {
    const std::string original = utf8::substr(in.text, start, end);
    const std::size_t new_len = utf8::length(replacement);
    const std::ptrdiff_t delta =
        static_cast<std::ptrdiff_t>(new_len) - static_cast<std::ptrdiff_t>(end - start);

    AnnotatedSentence out;
    out.id = in.id;
    out.split = in.split;
    out.source = Source::rule;
    out.text = utf8::substr(in.text, 0, start) + replacement +
               utf8::substr(in.text, end, utf8::length(in.text));
    for (Span sp : in.spans) {
        if (sp.start >= end) {
            sp.start = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(sp.start) + delta);
            sp.end = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(sp.end) + delta);
        }
        out.spans.push_back(sp);
    }
    Span added;
    added.start = start;
    added.end = start + new_len;
    added.tag = tag;
    added.correction = original;
    out.spans.push_back(added);
    out.normalize();
    return out;
}

std::vector<Token> tokens_for(const AnnotatedSentence& s, const std::vector<Token>* pretagged) {
    if (pretagged != nullptr) return *pretagged;
    return tokenize(s.text);
}

struct DictionarySite {
    std::size_t start = 0;  // codepoint range in the sentence
    std::size_t end = 0;
    std::string surface;
};

struct VariantChoice {
    std::string form;
    std::size_t count = 0;
    ErrorTag tag = ErrorTag::CopyingExpression;
};

}  // namespace

std::optional<AnnotatedSentence> inject_from_dictionaries(
    const AnnotatedSentence& sentence, std::span<const ErrorDictionary> dictionaries, Rng& rng,
    const std::vector<Token>* pretagged) {
    std::size_t max_words = 0;
    for (const ErrorDictionary& d : dictionaries) {
        max_words = std::max(max_words, d.max_key_words());
    }
    if (max_words == 0) return std::nullopt;

    const std::vector<Token> tokens = tokens_for(sentence, pretagged);

    // word tokens only; phrases are contiguous word tokens, matched against
    // the raw text so original spacing is preserved
    std::vector<std::size_t> words;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].pos != CoarsePos::punct) words.push_back(i);
    }

    std::vector<DictionarySite> sites;
    std::size_t w = 0;
    while (w < words.size()) {
        bool matched = false;
        const std::size_t limit = std::min(max_words, words.size() - w);
        for (std::size_t k = limit; k >= 1 && !matched; --k) {
            // phrase tokens must be adjacent (no punctuation between them)
            if (words[w + k - 1] - words[w] != k - 1) continue;
            const std::size_t start = tokens[words[w]].start;
            const std::size_t end = tokens[words[w + k - 1]].end;
            std::string candidate = utf8::substr(sentence.text, start, end);
            bool known = false;
            for (const ErrorDictionary& d : dictionaries) {
                if (d.contains(candidate)) {
                    known = true;
                    break;
                }
            }
            if (!known) continue;
            if (!overlaps_existing_span(sentence, start, end)) {
                sites.push_back({start, end, std::move(candidate)});
            }
            w += k;
            matched = true;
        }
        if (!matched) ++w;
    }
    if (sites.empty()) return std::nullopt;

    const DictionarySite& site = sites[rng.index(sites.size())];

    std::vector<VariantChoice> variants;
    std::size_t total = 0;
    for (const ErrorDictionary& d : dictionaries) {
        for (const auto& [form, count] : d.lookup(site.surface)) {
            variants.push_back({form, count, d.tag()});
            total += count;
        }
    }
    std::uint64_t pick = rng.below(total);
    const VariantChoice* chosen = &variants.back();
    for (const VariantChoice& v : variants) {
        if (pick < v.count) {
            chosen = &v;
            break;
        }
        pick -= v.count;
    }
    return apply_replacement(sentence, site.start, site.end, chosen->form, chosen->tag);
}

std::optional<AnnotatedSentence> inject_dictionary(const AnnotatedSentence& sentence,
                                                   const ErrorDictionary& dictionary, Rng& rng) {
    return inject_from_dictionaries(sentence, {&dictionary, 1}, rng);
}

std::optional<AnnotatedSentence> inject_tense(const AnnotatedSentence& sentence, Rng& rng,
                                              const VerbTable& verbs,
                                              const std::vector<Token>* pretagged) {
    const std::vector<Token> tokens = tokens_for(sentence, pretagged);
    const std::size_t n = tokens.size();

    std::vector<bool> boundary(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const Token& t = tokens[i];
        if (t.pos == CoarsePos::punct) {
            boundary[i] = t.surface == "," || t.surface == ";" || t.surface == ":";
        } else {
            boundary[i] = is_clause_boundary_word(ascii_lower(t.surface));
        }
    }

    struct Candidate {
        std::size_t verb_index;
        std::string rewritten;
    };
    std::vector<Candidate> candidates;

    for (std::size_t y = 0; y < n; ++y) {
        if (tokens[y].pos != CoarsePos::year) continue;
        std::size_t lo = y;
        while (lo > 0 && !boundary[lo - 1]) --lo;
        std::size_t hi = y;
        while (hi + 1 < n && !boundary[hi + 1]) ++hi;

        std::size_t best = n;
        std::size_t best_distance = n + 1;
        for (std::size_t i = lo; i <= hi; ++i) {
            if (tokens[i].pos != CoarsePos::verb_past) continue;
            if (overlaps_existing_span(sentence, tokens[i].start, tokens[i].end)) continue;
            const std::size_t distance = i > y ? i - y : y - i;
            if (distance < best_distance) {
                best_distance = distance;
                best = i;
            }
        }
        if (best == n) continue;
        if (std::any_of(candidates.begin(), candidates.end(),
                        [&](const Candidate& c) { return c.verb_index == best; })) {
            continue;
        }

        // subject number: nearest preceding noun or pronoun
        SubjectNumber number = SubjectNumber::singular;
        for (std::size_t i = best; i > 0; --i) {
            const Token& t = tokens[i - 1];
            if (t.pos == CoarsePos::pronoun) {
                const std::string lower = ascii_lower(t.surface);
                number = (lower == "we" || lower == "they" || lower == "you")
                             ? SubjectNumber::plural
                             : SubjectNumber::singular;
                break;
            }
            if (t.pos == CoarsePos::noun) {
                number = plural_noun_heuristic(t.surface) ? SubjectNumber::plural
                                                          : SubjectNumber::singular;
                break;
            }
        }

        try {
            candidates.push_back({best, to_present_simple(tokens[best].surface, number, verbs)});
        } catch (const Error&) {
            // pre-tagged token the conjugator cannot invert; not a usable site
        }
    }
    if (candidates.empty()) return std::nullopt;

    const Candidate& chosen = candidates[rng.index(candidates.size())];
    const Token& verb = tokens[chosen.verb_index];
    return apply_replacement(sentence, verb.start, verb.end, chosen.rewritten,
                             ErrorTag::TenseSemantics);
}

std::optional<AnnotatedSentence> inject_transliteration(const AnnotatedSentence& sentence,
                                                        const NounLexicon& lexicon,
                                                        const TransliterationTable& table,
                                                        Rng& rng,
                                                        const std::vector<Token>* pretagged) {
    const std::vector<Token> tokens = tokens_for(sentence, pretagged);
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].pos != CoarsePos::noun) continue;
        if (!lexicon.find(ascii_lower(tokens[i].surface))) continue;
        if (overlaps_existing_span(sentence, tokens[i].start, tokens[i].end)) continue;
        sites.push_back(i);
    }
    if (sites.empty()) return std::nullopt;

    const Token& noun = tokens[sites[rng.index(sites.size())]];
    const std::string russian{*lexicon.find(ascii_lower(noun.surface))};
    return apply_replacement(sentence, noun.start, noun.end, transliterate(russian, table),
                             ErrorTag::Transliteration);
}

Corpus inject_batch_serial(const Corpus& corpus, const SentenceInjector& injector,
                           std::uint64_t seed) {
    Corpus out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Rng rng = Rng::derive(seed, i);
        if (auto injected = injector(corpus.sentences[i], rng)) {
            out.sentences.push_back(std::move(*injected));
        }
    }
    return out;
}

Corpus inject_batch(const Corpus& corpus, const SentenceInjector& injector, std::uint64_t seed) {
    const std::size_t n = corpus.size();
    std::vector<std::optional<AnnotatedSentence>> results(n);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(i));
        results[i] = injector(corpus.sentences[i], rng);
    }

    Corpus out;
    for (auto& r : results) {
        if (r) out.sentences.push_back(std::move(*r));
    }
    return out;
}

void FirstWordTable::add(std::string word, std::size_t count) {
    for (auto& [w, c] : entries_) {
        if (w == word) {
            c += count;
            total_ += count;
            return;
        }
    }
    entries_.emplace_back(std::move(word), count);
    total_ += count;
}

FirstWordTable build_first_word_table(const Corpus& corpus) {
    if (corpus.empty()) throw Error("cannot build a first-word table from an empty corpus");
    FirstWordTable table;
    for (const AnnotatedSentence& s : corpus.sentences) {
        const auto tokens = tokenize(s.text);
        if (!tokens.empty()) table.add(tokens.front().surface);
    }
    if (table.empty()) throw Error("corpus yields no sentence-initial tokens");
    return table;
}

std::string sample_first_word(const FirstWordTable& table, Rng& rng) {
    if (table.empty()) throw Error("cannot sample from an empty first-word table");
    std::uint64_t pick = rng.below(table.total());
    for (const auto& [word, count] : table.entries()) {
        if (pick < count) return word;
        pick -= count;
    }
    return table.entries().back().first;
}

}  // namespace l1forge
