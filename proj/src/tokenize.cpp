#include "l1forge/tokenize.hpp"

#include <unordered_set>

#include "l1forge/utf8.hpp"
#include "l1forge/verbs.hpp"

namespace l1forge {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet kPronouns = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
    "them", "mine", "yours", "hers", "ours", "theirs", "myself", "yourself",
    "himself", "herself", "itself", "ourselves", "themselves", "who", "whom",
    "someone", "anyone", "everyone", "nobody", "everybody", "somebody",
};

const WordSet kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "my", "your", "his",
    "its", "our", "their", "some", "any", "no", "each", "every", "either",
    "neither", "both", "all", "most", "many", "much", "few", "several",
    "such", "what", "which", "whose", "another", "other",
};

const WordSet kPrepositions = {
    "in", "on", "at", "of", "to", "for", "with", "from", "by", "about", "as",
    "into", "onto", "during", "between", "among", "over", "under", "after",
    "before", "through", "throughout", "per", "since", "until", "within",
    "without", "across", "against", "around", "behind", "below", "beneath",
    "beside", "beyond", "near", "off", "out", "up", "down", "above", "than",
    "upon", "towards", "toward", "via", "despite", "except",
};

const WordSet kConjunctions = {
    "and", "but", "or", "nor", "so", "yet", "while", "whereas", "because",
    "although", "though", "if", "unless", "when", "whenever", "where",
    "wherever", "whether", "once", "however", "therefore", "moreover",
    "also", "then", "thus", "not", "only", "very", "more", "less", "too",
    "there", "here", "now", "just", "even", "still", "quite", "rather",
};

const WordSet kAuxiliaries = {
    "am", "is", "are", "was", "were", "be", "been", "being", "do", "does",
    "did", "done", "have", "has", "had", "having", "will", "would", "shall",
    "should", "can", "could", "may", "might", "must", "ought",
};

// -ed words that are not past-tense verbs.
const WordSet kEdStoplist = {
    "need", "indeed", "deed", "seed", "speed", "reed", "creed", "greed",
    "proceed", "succeed", "exceed", "hundred", "kindred", "sacred", "hatred",
    "naked", "wicked", "rugged", "crooked", "beloved", "wretched", "aged",
    "allied", "unprecedented",
};

// Nouns ending in -s that take singular agreement.
const WordSet kSingularInS = {
    "news", "analysis", "crisis", "basis", "thesis", "hypothesis", "series",
    "species", "means", "physics", "economics", "mathematics", "politics",
    "statistics", "ethics", "athletics", "gas", "bus", "status", "focus",
    "campus", "virus", "bonus", "surplus", "census", "diabetes", "measles",
};

const WordSet kClauseBoundaryWords = {"and", "but", "or", "while", "whereas"};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

bool numeric_like(std::string_view s) {
    bool digit_seen = false;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            digit_seen = true;
        } else if (c != '.' && c != ',') {
            return false;
        }
    }
    return digit_seen;
}

bool contains_digit(std::string_view s) {
    for (char c : s) {
        if (c >= '0' && c <= '9') return true;
    }
    return false;
}

CoarsePos classify(std::string_view surface) {
    if (all_digits(surface) && surface.size() == 4) {
        const int value = (surface[0] - '0') * 1000 + (surface[1] - '0') * 100 +
                          (surface[2] - '0') * 10 + (surface[3] - '0');
        if (value >= 1000 && value <= 2099) return CoarsePos::year;
    }
    if (numeric_like(surface)) return CoarsePos::number;

    const std::string lower = ascii_lower(surface);
    if (kPronouns.count(lower)) return CoarsePos::pronoun;
    if (kDeterminers.count(lower) || kPrepositions.count(lower) ||
        kConjunctions.count(lower) || kAuxiliaries.count(lower)) {
        return CoarsePos::other;
    }

    const VerbTable& verbs = VerbTable::bundled();
    if (verbs.is_base(lower)) return CoarsePos::verb_base;
    if (verbs.is_past(lower)) return CoarsePos::verb_past;
    if (verbs.is_third_sg(lower)) return CoarsePos::verb_3sg;

    if (lower.size() >= 4 && lower.ends_with("ed") && !kEdStoplist.count(lower)) {
        return CoarsePos::verb_past;
    }

    if (contains_digit(lower)) return CoarsePos::other;
    return CoarsePos::noun;
}

}  // namespace

std::string_view to_string(CoarsePos pos) {
    switch (pos) {
        case CoarsePos::noun: return "noun";
        case CoarsePos::verb_past: return "verb-past";
        case CoarsePos::verb_base: return "verb-base";
        case CoarsePos::verb_3sg: return "verb-3sg";
        case CoarsePos::pronoun: return "pronoun";
        case CoarsePos::number: return "number";
        case CoarsePos::year: return "year";
        case CoarsePos::punct: return "punct";
        case CoarsePos::other: return "other";
    }
    return "";
}

std::optional<CoarsePos> parse_coarse_pos(std::string_view label) {
    for (CoarsePos p : {CoarsePos::noun, CoarsePos::verb_past, CoarsePos::verb_base,
                        CoarsePos::verb_3sg, CoarsePos::pronoun, CoarsePos::number,
                        CoarsePos::year, CoarsePos::punct, CoarsePos::other}) {
        if (label == to_string(p)) return p;
    }
    return std::nullopt;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

bool plural_noun_heuristic(std::string_view surface) {
    const std::string lower = ascii_lower(surface);
    if (lower.size() < 2 || lower.back() != 's') return false;
    if (lower.ends_with("ss")) return false;
    return kSingularInS.count(lower) == 0;
}

bool is_clause_boundary_word(std::string_view lowercase_word) {
    return kClauseBoundaryWords.count(lowercase_word) > 0;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    const auto cps = utf8::decode_all(text);
    const std::size_t n = cps.size();

    std::size_t i = 0;
    while (i < n) {
        if (utf8::is_space(cps[i].cp)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && !utf8::is_space(cps[j].cp)) ++j;
        // run of non-whitespace codepoints [i, j)

        std::size_t lead = i;
        while (lead < j && utf8::is_punct(cps[lead].cp)) ++lead;
        std::size_t trail = j;
        while (trail > lead && utf8::is_punct(cps[trail - 1].cp)) --trail;

        for (std::size_t k = i; k < lead; ++k) {
            tokens.push_back({utf8::encode(cps[k].cp), k, k + 1, CoarsePos::punct});
        }
        if (lead < trail) {
            const std::size_t b0 = cps[lead].byte_pos;
            const std::size_t b1 = trail < n ? cps[trail].byte_pos : text.size();
            std::string surface(text.substr(b0, b1 - b0));
            const CoarsePos pos = classify(surface);
            tokens.push_back({std::move(surface), lead, trail, pos});
        }
        for (std::size_t k = trail; k < j; ++k) {
            tokens.push_back({utf8::encode(cps[k].cp), k, k + 1, CoarsePos::punct});
        }
        i = j;
    }
    return tokens;
}

std::size_t count_tokens(std::string_view text) { return tokenize(text).size(); }

}  // namespace l1forge
