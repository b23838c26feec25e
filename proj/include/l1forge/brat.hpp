#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "l1forge/corpus.hpp"

namespace l1forge {

struct BratImportResult {
    std::vector<AnnotatedSentence> sentences;
    std::size_t dropped_unknown_tags = 0;   // annotations outside the five-tag set
    std::size_t ignored_standoff_lines = 0; // A/R/E/M/N standoff kinds we do not consume
};

/// Imports a BRAT standoff pair. Annotation lines:
///   T<k>\t<Tag> <start> <end>\t<surface>
///   #<k>\tAnnotatorNotes T<j>\t<correction>
/// Offsets are document codepoint offsets; they are remapped to sentence
/// coordinates after segmentation. A surface snapshot that disagrees with
/// the document substring, a malformed line, or a span crossing a sentence
/// boundary raises Error.
BratImportResult import_brat(std::string_view document_text, std::string_view annotation_text,
                             std::string_view id_prefix = "doc", Source source = Source::realec);

/// Sentence segmentation: terminators . ! ? followed by whitespace and an
/// ASCII uppercase letter or digit, with an abbreviation stop-list.
/// Returns codepoint [start, end) ranges covering the trimmed sentences.
struct SentenceRange {
    std::size_t start;
    std::size_t end;
};
std::vector<SentenceRange> segment_sentences(std::string_view text);

}  // namespace l1forge
