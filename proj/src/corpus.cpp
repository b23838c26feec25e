#include "l1forge/corpus.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

namespace {
auto span_key(const Span& s) { return std::make_tuple(s.start, s.end, s.tag); }
}  // namespace

void AnnotatedSentence::normalize() {
    std::stable_sort(spans.begin(), spans.end(),
                     [](const Span& a, const Span& b) { return span_key(a) < span_key(b); });
}

std::size_t AnnotatedSentence::text_length() const { return utf8::length(text); }

std::string AnnotatedSentence::span_surface(const Span& s) const {
    return utf8::substr(text, s.start, s.end);
}

void AnnotatedSentence::validate() const {
    const std::size_t n = text_length();
    const Span* prev = nullptr;
    for (const Span& s : spans) {
        if (s.start >= s.end) {
            throw Error("sentence '" + id + "': span [" + std::to_string(s.start) + "," +
                        std::to_string(s.end) + ") is empty or inverted");
        }
        if (s.end > n) {
            throw Error("sentence '" + id + "': span end " + std::to_string(s.end) +
                        " exceeds text length " + std::to_string(n));
        }
        if (prev != nullptr) {
            if (span_key(*prev) > span_key(s)) {
                throw Error("sentence '" + id + "': spans not sorted by (start, end)");
            }
            if (span_key(*prev) == span_key(s)) {
                throw Error("sentence '" + id + "': duplicate span (" +
                            std::to_string(s.start) + "," + std::to_string(s.end) + "," +
                            std::string(to_string(s.tag)) + ")");
            }
        }
        prev = &s;
    }
}

void Corpus::validate() const {
    std::unordered_set<std::string> seen;
    seen.reserve(sentences.size());
    for (const AnnotatedSentence& s : sentences) {
        if (!seen.insert(s.id).second) {
            throw Error("duplicate sentence id '" + s.id + "'");
        }
        s.validate();
    }
}

}  // namespace l1forge
