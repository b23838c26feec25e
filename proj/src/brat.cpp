#include "l1forge/brat.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_set>

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

namespace {

const std::unordered_set<std::string_view> kAbbreviations = {
    "etc.", "e.g.", "i.e.", "mr.", "mrs.", "ms.", "dr.", "prof.", "vs.",
    "cf.", "fig.", "no.", "st.", "approx.", "vol.", "p.", "pp.",
};

bool is_ascii_upper(char32_t cp) { return cp >= U'A' && cp <= U'Z'; }

struct RawSpan {
    std::string id;
    ErrorTag tag;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string surface;
    std::optional<std::string> correction;
};

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

bool parse_size(std::string_view s, std::size_t& out) {
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto result = std::from_chars(first, last, out);
    return result.ec == std::errc{} && result.ptr == last;
}

}  // namespace

std::vector<SentenceRange> segment_sentences(std::string_view text) {
    const auto cps = utf8::decode_all(text);
    const std::size_t n = cps.size();
    std::vector<SentenceRange> raw;

    std::size_t begin = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = cps[i].cp;
        if (cp != U'.' && cp != U'!' && cp != U'?') continue;

        // require whitespace then uppercase/digit to treat this as a boundary
        std::size_t k = i + 1;
        if (k >= n || !utf8::is_space(cps[k].cp)) continue;
        while (k < n && utf8::is_space(cps[k].cp)) ++k;
        if (k < n && !is_ascii_upper(cps[k].cp) && !utf8::is_ascii_digit(cps[k].cp)) continue;

        if (cp == U'.') {
            // word holding the period, lowercased, checked against the stop-list
            std::size_t w = i;
            while (w > begin && !utf8::is_space(cps[w - 1].cp)) --w;
            std::string word;
            for (std::size_t t = w; t <= i; ++t) {
                char32_t c = cps[t].cp;
                if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
                utf8::append(word, c);
            }
            if (kAbbreviations.count(word)) continue;
        }

        raw.push_back({begin, i + 1});
        begin = k;
    }
    if (begin < n) raw.push_back({begin, n});

    // trim whitespace off both ends of each range; drop empties
    std::vector<SentenceRange> out;
    for (const SentenceRange& r : raw) {
        std::size_t s = r.start, e = r.end;
        while (s < e && utf8::is_space(cps[s].cp)) ++s;
        while (e > s && utf8::is_space(cps[e - 1].cp)) --e;
        if (s < e) out.push_back({s, e});
    }
    return out;
}

BratImportResult import_brat(std::string_view document_text, std::string_view annotation_text,
                             std::string_view id_prefix, Source source) {
    BratImportResult result;

    std::map<std::string, RawSpan> spans;           // T-id -> span
    std::vector<std::pair<std::string, std::string>> notes;  // T-id, correction

    std::istringstream in{std::string(annotation_text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (line[0] == 'T') {
            const auto cols = split_tabs(line);
            if (cols.size() < 3) {
                throw line_error(line_no, "T-line needs 3 tab-separated fields");
            }
            std::istringstream mid(cols[1]);
            std::string label, start_str, end_str, extra;
            mid >> label >> start_str >> end_str;
            const auto tag = parse_error_tag(label);
            if (!tag) {
                ++result.dropped_unknown_tags;
                continue;
            }
            if (mid >> extra) {
                throw line_error(line_no, "unexpected trailing content in '" + cols[1] + "'");
            }
            RawSpan span;
            span.id = cols[0];
            span.tag = *tag;
            if (!parse_size(start_str, span.start) || !parse_size(end_str, span.end) ||
                span.start >= span.end) {
                throw line_error(line_no, "invalid offsets '" + start_str + " " + end_str + "'");
            }
            span.surface = cols[2];
            if (!spans.emplace(span.id, std::move(span)).second) {
                throw line_error(line_no, "duplicate annotation id '" + cols[0] + "'");
            }
        } else if (line[0] == '#') {
            const auto cols = split_tabs(line);
            if (cols.size() < 3 || cols[1].rfind("AnnotatorNotes ", 0) != 0) {
                throw line_error(line_no, "malformed note line");
            }
            notes.emplace_back(cols[1].substr(std::string("AnnotatorNotes ").size()), cols[2]);
        } else if (line[0] == 'A' || line[0] == 'R' || line[0] == 'E' || line[0] == 'M' ||
                   line[0] == 'N') {
            // standoff kinds outside this importer's contract
            ++result.ignored_standoff_lines;
        } else {
            throw line_error(line_no, "unrecognized annotation line");
        }
    }

    for (const auto& [target, correction] : notes) {
        const auto it = spans.find(target);
        if (it != spans.end()) it->second.correction = correction;
        // notes for dropped/unknown annotations are silently irrelevant
    }

    // verify surfaces against the document before any remapping
    for (const auto& [id, span] : spans) {
        const std::string actual = utf8::substr(document_text, span.start, span.end);
        if (actual != span.surface) {
            throw Error("annotation " + id + ": recorded surface '" + span.surface +
                        "' does not match document substring '" + actual + "'");
        }
    }

    const auto ranges = segment_sentences(document_text);
    std::vector<const RawSpan*> ordered;
    ordered.reserve(spans.size());
    for (const auto& [id, span] : spans) ordered.push_back(&span);

    std::size_t index = 0;
    for (const SentenceRange& r : ranges) {
        ++index;
        AnnotatedSentence sentence;
        sentence.id = std::string(id_prefix) + "-" + std::to_string(index);
        sentence.text = utf8::substr(document_text, r.start, r.end);
        sentence.source = source;
        for (const RawSpan* span : ordered) {
            if (span->end <= r.start || span->start >= r.end) continue;
            if (span->start < r.start || span->end > r.end) {
                throw Error("annotation " + span->id + " crosses a sentence boundary");
            }
            Span s;
            s.start = span->start - r.start;
            s.end = span->end - r.start;
            s.tag = span->tag;
            s.correction = span->correction;
            sentence.spans.push_back(std::move(s));
        }
        sentence.normalize();
        sentence.validate();
        result.sentences.push_back(std::move(sentence));
    }

    // a span may also fall entirely into inter-sentence whitespace that was
    // trimmed away; treat that as a boundary-crossing error too
    std::size_t placed = 0;
    for (const AnnotatedSentence& s : result.sentences) placed += s.spans.size();
    if (placed != spans.size()) {
        for (const RawSpan* span : ordered) {
            bool found = false;
            for (const SentenceRange& r : ranges) {
                if (span->start >= r.start && span->end <= r.end) {
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("annotation " + span->id + " crosses a sentence boundary");
        }
    }

    return result;
}

}  // namespace l1forge
