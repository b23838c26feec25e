#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "l1forge/corpus.hpp"

namespace l1forge {

/// Per-tag mapping from a normalized correct form (lowercased token or
/// phrase) to the erroneous variants observed replacing it, with counts.
/// Keys are case-normalized; variant surfaces keep their case. No entry
/// maps a form to itself.
class ErrorDictionary {
public:
    // variant surface -> observation count, deterministic iteration order
    using Variants = std::map<std::string, std::size_t>;

    explicit ErrorDictionary(ErrorTag tag) : tag_(tag) {}

    ErrorTag tag() const { return tag_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Inserts correct -> erroneous with the given count; the key is
    /// lowercased and trimmed. Self-mappings (case-insensitive) and empty
    /// forms are rejected with a false return.
    bool insert(std::string_view correct, std::string_view erroneous, std::size_t count = 1);

    /// Case-insensitive key match; empty list on miss.
    std::vector<std::pair<std::string, std::size_t>> lookup(std::string_view surface) const;
    bool contains(std::string_view surface) const;

    const std::map<std::string, Variants>& entries() const { return entries_; }

    /// Longest key, in whitespace-separated words; phrase matching during
    /// injection probes this many words greedily.
    std::size_t max_key_words() const { return max_key_words_; }

    friend bool operator==(const ErrorDictionary&, const ErrorDictionary&) = default;

private:
    ErrorTag tag_;
    std::map<std::string, Variants> entries_;
    std::size_t max_key_words_ = 0;
};

struct DictionaryBuildResult {
    ErrorDictionary dictionary;
    std::size_t skipped_no_correction = 0;
    std::size_t skipped_self_mapping = 0;
};

/// For every span of the given tag carrying a correction, records
/// correction -> span surface. Deterministic and order-independent.
DictionaryBuildResult build_dictionary(const Corpus& corpus, ErrorTag tag);

struct MergeResult {
    std::size_t added = 0;
    std::size_t dropped_self_mappings = 0;
};

/// Unions TSV suggestions (`tag<TAB>correct<TAB>erroneous[<TAB>count]`) into
/// the dictionary. Rows for other tags are ignored. Malformed lines raise
/// Error with the line number.
MergeResult merge_suggestions(ErrorDictionary& dictionary, const std::string& suggestions_path);
MergeResult merge_suggestions_content(ErrorDictionary& dictionary, std::string_view content);

/// TSV round-trip for built dictionaries; one file can hold all tags.
void write_dictionaries(const std::vector<ErrorDictionary>& dictionaries,
                        const std::string& path);
std::vector<ErrorDictionary> read_dictionaries(const std::string& path);

}  // namespace l1forge
