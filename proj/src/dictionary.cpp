#include "l1forge/dictionary.hpp"

#include <fstream>
#include <sstream>

#include "l1forge/errors.hpp"
#include "l1forge/tokenize.hpp"

namespace l1forge {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return std::string(s.substr(b, e - b));
}

std::size_t word_count(std::string_view s) {
    std::size_t n = 0;
    bool in_word = false;
    for (char c : s) {
        const bool space = c == ' ' || c == '\t';
        if (!space && !in_word) ++n;
        in_word = !space;
    }
    return n;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
        const auto tab = line.find('\t', pos);
        cols.push_back(line.substr(pos, tab - pos));
        if (tab == std::string::npos) break;
        pos = tab + 1;
    }
    return cols;
}

}  // namespace

bool ErrorDictionary::insert(std::string_view correct, std::string_view erroneous,
                             std::size_t count) {
    const std::string key = ascii_lower(trim(correct));
    const std::string value = trim(erroneous);
    if (key.empty() || value.empty() || count == 0) return false;
    if (key == ascii_lower(value)) return false;
    entries_[key][value] += count;
    max_key_words_ = std::max(max_key_words_, word_count(key));
    return true;
}

std::vector<std::pair<std::string, std::size_t>> ErrorDictionary::lookup(
    std::string_view surface) const {
    const auto it = entries_.find(ascii_lower(trim(surface)));
    if (it == entries_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

bool ErrorDictionary::contains(std::string_view surface) const {
    return entries_.count(ascii_lower(trim(surface))) > 0;
}

DictionaryBuildResult build_dictionary(const Corpus& corpus, ErrorTag tag) {
    DictionaryBuildResult result{ErrorDictionary(tag)};
    for (const AnnotatedSentence& s : corpus.sentences) {
        for (const Span& span : s.spans) {
            if (span.tag != tag) continue;
            if (!span.correction) {
                ++result.skipped_no_correction;
                continue;
            }
            if (!result.dictionary.insert(*span.correction, s.span_surface(span))) {
                ++result.skipped_self_mapping;
            }
        }
    }
    return result;
}

MergeResult merge_suggestions_content(ErrorDictionary& dictionary, std::string_view content) {
    MergeResult result;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split_tabs(line);
        if (cols.size() != 3 && cols.size() != 4) {
            throw line_error(line_no, "expected 3 or 4 tab-separated columns "
                                      "(tag, correct_form, erroneous_form, [count])");
        }
        const auto tag = parse_error_tag(cols[0]);
        if (!tag) throw line_error(line_no, "unknown tag '" + cols[0] + "'");
        if (*tag != dictionary.tag()) continue;
        std::size_t count = 1;
        if (cols.size() == 4) {
            try {
                count = std::stoull(cols[3]);
            } catch (const std::exception&) {
                throw line_error(line_no, "count must be a positive integer");
            }
            if (count == 0) throw line_error(line_no, "count must be a positive integer");
        }
        if (dictionary.insert(cols[1], cols[2], count)) {
            ++result.added;
        } else {
            ++result.dropped_self_mappings;
        }
    }
    return result;
}

MergeResult merge_suggestions(ErrorDictionary& dictionary, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open suggestions file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return merge_suggestions_content(dictionary, ss.str());
}

void write_dictionaries(const std::vector<ErrorDictionary>& dictionaries,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write dictionary file '" + path + "'");
    for (const ErrorDictionary& d : dictionaries) {
        for (const auto& [correct, variants] : d.entries()) {
            for (const auto& [erroneous, count] : variants) {
                out << to_string(d.tag()) << '\t' << correct << '\t' << erroneous << '\t'
                    << count << '\n';
            }
        }
    }
}

std::vector<ErrorDictionary> read_dictionaries(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dictionary file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();

    std::vector<ErrorDictionary> result;
    for (ErrorTag tag : all_error_tags()) {
        ErrorDictionary d(tag);
        merge_suggestions_content(d, ss.str());
        if (!d.empty()) result.push_back(std::move(d));
    }
    return result;
}

}  // namespace l1forge
