#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l1forge/tag.hpp"

namespace l1forge {

/// One annotated error region. Offsets are codepoint offsets into the owning
/// sentence text, start inclusive, end exclusive.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;
    ErrorTag tag = ErrorTag::CopyingExpression;
    std::optional<std::string> correction;

    friend bool operator==(const Span&, const Span&) = default;
};

struct AnnotatedSentence {
    std::string id;
    std::string text;
    std::vector<Span> spans;  // kept sorted by (start, end, tag)
    Source source = Source::realec;
    std::optional<Split> split;

    /// Sorts spans into canonical order.
    void normalize();

    /// Codepoint length of the text.
    std::size_t text_length() const;

    /// Surface text of a span, by codepoint offsets.
    std::string span_surface(const Span& s) const;

    /// Throws Error when a span violates 0 <= start < end <= |text| or when
    /// two spans share the same (start, end, tag) triple.
    void validate() const;

    friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

struct Corpus {
    std::vector<AnnotatedSentence> sentences;
    // Free-form run metadata (creation command, seed, source files).
    std::map<std::string, std::string> provenance;

    std::size_t size() const { return sentences.size(); }
    bool empty() const { return sentences.empty(); }

    /// Validates every sentence and id uniqueness.
    void validate() const;
};

}  // namespace l1forge
