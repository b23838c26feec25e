#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l1forge {

/// Heuristic word classes. The tagger is lexicon- and suffix-driven; when
/// precision matters, a pre-tagged TSV (see corpus_io.hpp) overrides it.
enum class CoarsePos {
    noun,
    verb_past,
    verb_base,
    verb_3sg,
    pronoun,
    number,
    year,
    punct,
    other,
};

std::string_view to_string(CoarsePos pos);
std::optional<CoarsePos> parse_coarse_pos(std::string_view label);

struct Token {
    std::string surface;
    std::size_t start = 0;  // codepoint offsets into the sentence
    std::size_t end = 0;
    CoarsePos pos = CoarsePos::other;
};

/// Splits on whitespace, peels leading/trailing punctuation codepoints into
/// their own tokens, and assigns coarse classes. Deterministic; offsets
/// reconstruct the original non-whitespace content.
std::vector<Token> tokenize(std::string_view text);

std::size_t count_tokens(std::string_view text);

/// ASCII-only lowercase copy.
std::string ascii_lower(std::string_view s);

/// Plural-subject heuristic for a noun surface: ends in -s, is not an
/// -ss form, and is not in the singular-in-s stop-list (news, analysis, ...).
bool plural_noun_heuristic(std::string_view surface);

/// Coordinating words that delimit clauses for the tense injector.
bool is_clause_boundary_word(std::string_view lowercase_word);

}  // namespace l1forge
