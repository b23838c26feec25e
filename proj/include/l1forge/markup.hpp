#pragma once

#include <string>
#include <string_view>

#include "l1forge/corpus.hpp"

namespace l1forge {

struct MarkupParseResult {
    AnnotatedSentence sentence;  // text with markup stripped, source = llm
    std::size_t dropped_unknown_tags = 0;
};

/// Extracts <err tag="..." corr="...">surface</err> regions from model
/// output into spans. Attribute order is free; corr is optional. Span
/// offsets are codepoint offsets into the stripped text. Regions with an
/// unknown or missing tag are stripped and counted, not kept. Unbalanced or
/// nested markup raises Error with the codepoint position in the input.
MarkupParseResult parse_annotated_output(std::string_view model_text);

/// Inverse of the parser for non-overlapping spans: re-inserts the markup in
/// canonical attribute order (tag, then corr when present).
std::string render_markup(const AnnotatedSentence& sentence);

}  // namespace l1forge
