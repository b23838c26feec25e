#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace l1forge {

/// The closed five-category scheme for Russian-L1 interference errors.
/// Enum order is the lexicographic order of the labels; keep it that way,
/// agreement labeling relies on it.
enum class ErrorTag {
    CopyingExpression,
    Synonyms,
    TenseSemantics,
    Transliteration,
    WordFormTransmission,
};

inline constexpr std::size_t kErrorTagCount = 5;

constexpr std::array<ErrorTag, kErrorTagCount> all_error_tags() {
    return {ErrorTag::CopyingExpression, ErrorTag::Synonyms, ErrorTag::TenseSemantics,
            ErrorTag::Transliteration, ErrorTag::WordFormTransmission};
}

constexpr std::string_view to_string(ErrorTag tag) {
    switch (tag) {
        case ErrorTag::CopyingExpression: return "CopyingExpression";
        case ErrorTag::Synonyms: return "Synonyms";
        case ErrorTag::TenseSemantics: return "TenseSemantics";
        case ErrorTag::Transliteration: return "Transliteration";
        case ErrorTag::WordFormTransmission: return "WordFormTransmission";
    }
    return "";
}

inline std::optional<ErrorTag> parse_error_tag(std::string_view label) {
    for (ErrorTag tag : all_error_tags()) {
        if (label == to_string(tag)) return tag;
    }
    return std::nullopt;
}

enum class Source { realec, ppo, rule, llm };

constexpr std::string_view to_string(Source s) {
    switch (s) {
        case Source::realec: return "realec";
        case Source::ppo: return "ppo";
        case Source::rule: return "rule";
        case Source::llm: return "llm";
    }
    return "";
}

inline std::optional<Source> parse_source(std::string_view label) {
    for (Source s : {Source::realec, Source::ppo, Source::rule, Source::llm}) {
        if (label == to_string(s)) return s;
    }
    return std::nullopt;
}

enum class Split { train, test };

constexpr std::string_view to_string(Split s) {
    return s == Split::train ? "train" : "test";
}

inline std::optional<Split> parse_split(std::string_view label) {
    if (label == "train") return Split::train;
    if (label == "test") return Split::test;
    return std::nullopt;
}

}  // namespace l1forge
