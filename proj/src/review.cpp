#include "l1forge/review.hpp"

#include <fstream>
#include <set>
#include <unordered_map>

#include "l1forge/errors.hpp"

namespace l1forge {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "accept";
        case Verdict::reject: return "reject";
        case Verdict::unreviewed: return "unreviewed";
    }
    return "";
}

namespace {

std::string flatten(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

std::string tag_label_of(const AnnotatedSentence& s) {
    std::set<std::string> labels;
    for (const Span& span : s.spans) labels.insert(std::string(to_string(span.tag)));
    if (labels.empty()) return "-";
    std::string out;
    for (const std::string& label : labels) {
        if (!out.empty()) out += ',';
        out += label;
    }
    return out;
}

}  // namespace

ReviewSheet make_review_sheet(const Corpus& corpus) {
    ReviewSheet sheet;
    sheet.rows.reserve(corpus.size());
    for (const AnnotatedSentence& s : corpus.sentences) {
        sheet.rows.push_back({s.id, flatten(s.text), tag_label_of(s), Verdict::unreviewed});
    }
    return sheet;
}

void write_review_sheet(const ReviewSheet& sheet, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write review sheet '" + path + "'");
    for (const ReviewRow& row : sheet.rows) {
        out << row.id << '\t' << row.text << '\t' << row.tag_label << '\t'
            << to_string(row.verdict) << '\n';
    }
}

ReviewSheet read_review_sheet(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open review sheet '" + path + "'");
    ReviewSheet sheet;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t pos = 0;
        while (true) {
            const auto tab = line.find('\t', pos);
            cols.push_back(line.substr(pos, tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (cols.size() != 4) {
            throw line_error(line_no, "expected 4 tab-separated columns (id, text, tag, verdict)");
        }
        ReviewRow row;
        row.id = cols[0];
        row.text = cols[1];
        row.tag_label = cols[2];
        if (cols[3] == "accept") {
            row.verdict = Verdict::accept;
        } else if (cols[3] == "reject") {
            row.verdict = Verdict::reject;
        } else if (cols[3] == "unreviewed" || cols[3].empty()) {
            row.verdict = Verdict::unreviewed;
        } else {
            throw line_error(line_no, "unknown verdict '" + cols[3] + "'");
        }
        sheet.rows.push_back(std::move(row));
    }
    return sheet;
}

Corpus apply_review(const Corpus& corpus, const ReviewSheet& sheet, bool keep_unreviewed) {
    std::set<std::string> corpus_ids;
    for (const AnnotatedSentence& s : corpus.sentences) corpus_ids.insert(s.id);

    std::unordered_map<std::string, Verdict> verdicts;
    for (const ReviewRow& row : sheet.rows) {
        if (!corpus_ids.count(row.id)) {
            throw Error("review sheet row id '" + row.id + "' is not in the corpus");
        }
        verdicts[row.id] = row.verdict;
    }

    Corpus out;
    out.provenance = corpus.provenance;
    for (const AnnotatedSentence& s : corpus.sentences) {
        const auto it = verdicts.find(s.id);
        if (it == verdicts.end()) {
            out.sentences.push_back(s);
            continue;
        }
        switch (it->second) {
            case Verdict::accept:
                out.sentences.push_back(s);
                break;
            case Verdict::reject:
                break;
            case Verdict::unreviewed:
                if (!keep_unreviewed) {
                    throw Error("sentence '" + s.id +
                                "' is unreviewed; review it or pass the keep-unreviewed flag");
                }
                out.sentences.push_back(s);
                break;
        }
    }
    return out;
}

}  // namespace l1forge
