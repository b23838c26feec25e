#include "l1forge/corpus_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

using json = nlohmann::ordered_json;

namespace {

std::string provenance_path(const std::string& path) { return path + ".prov.json"; }

ErrorTag require_tag(const json& value, std::size_t record, const char* field) {
    if (!value.is_string()) throw record_error(record, field, "expected a string");
    const auto label = value.get<std::string>();
    const auto tag = parse_error_tag(label);
    if (!tag) throw record_error(record, field, "unknown tag label '" + label + "'");
    return *tag;
}

}  // namespace

std::string sentence_to_json_line(const AnnotatedSentence& s) {
    json j;
    j["id"] = s.id;
    j["text"] = s.text;
    j["source"] = std::string(to_string(s.source));
    if (s.split) {
        j["split"] = std::string(to_string(*s.split));
    } else {
        j["split"] = nullptr;
    }
    json spans = json::array();
    for (const Span& sp : s.spans) {
        json js;
        js["start"] = sp.start;
        js["end"] = sp.end;
        js["tag"] = std::string(to_string(sp.tag));
        if (sp.correction) {
            js["correction"] = *sp.correction;
        } else {
            js["correction"] = nullptr;
        }
        spans.push_back(std::move(js));
    }
    j["spans"] = std::move(spans);
    return j.dump();
}

AnnotatedSentence sentence_from_json_line(const std::string& line, std::size_t record) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw record_error(record, "-", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw record_error(record, "-", "expected a JSON object");

    AnnotatedSentence s;
    if (!j.contains("id") || !j["id"].is_string()) {
        throw record_error(record, "id", "missing or not a string");
    }
    s.id = j["id"].get<std::string>();
    if (!j.contains("text") || !j["text"].is_string()) {
        throw record_error(record, "text", "missing or not a string");
    }
    s.text = j["text"].get<std::string>();

    if (!j.contains("source") || !j["source"].is_string()) {
        throw record_error(record, "source", "missing or not a string");
    }
    const auto source_label = j["source"].get<std::string>();
    const auto source = parse_source(source_label);
    if (!source) throw record_error(record, "source", "unknown source '" + source_label + "'");
    s.source = *source;

    if (j.contains("split") && !j["split"].is_null()) {
        if (!j["split"].is_string()) throw record_error(record, "split", "expected string or null");
        const auto split_label = j["split"].get<std::string>();
        const auto split = parse_split(split_label);
        if (!split) throw record_error(record, "split", "unknown split '" + split_label + "'");
        s.split = *split;
    }

    if (j.contains("spans")) {
        if (!j["spans"].is_array()) throw record_error(record, "spans", "expected an array");
        for (const json& js : j["spans"]) {
            if (!js.is_object()) throw record_error(record, "spans", "span must be an object");
            Span sp;
            if (!js.contains("start") || !js["start"].is_number_unsigned()) {
                throw record_error(record, "spans.start", "missing or not a non-negative integer");
            }
            if (!js.contains("end") || !js["end"].is_number_unsigned()) {
                throw record_error(record, "spans.end", "missing or not a non-negative integer");
            }
            sp.start = js["start"].get<std::size_t>();
            sp.end = js["end"].get<std::size_t>();
            if (!js.contains("tag")) throw record_error(record, "spans.tag", "missing");
            sp.tag = require_tag(js["tag"], record, "spans.tag");
            if (js.contains("correction") && !js["correction"].is_null()) {
                if (!js["correction"].is_string()) {
                    throw record_error(record, "spans.correction", "expected string or null");
                }
                sp.correction = js["correction"].get<std::string>();
            }
            s.spans.push_back(std::move(sp));
        }
    }
    s.normalize();
    try {
        s.validate();
    } catch (const Error& e) {
        throw record_error(record, "spans", e.what());
    }
    return s;
}

Corpus read_corpus_stream(std::istream& in) {
    Corpus corpus;
    std::string line;
    std::size_t record = 0;
    while (std::getline(in, line)) {
        ++record;
        if (line.empty()) continue;
        corpus.sentences.push_back(sentence_from_json_line(line, record));
    }
    corpus.validate();
    return corpus;
}

Corpus read_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open corpus '" + path + "'");
    Corpus corpus = read_corpus_stream(in);
    const std::string prov = provenance_path(path);
    if (std::filesystem::exists(prov)) {
        std::ifstream pin(prov);
        json j;
        try {
            pin >> j;
        } catch (const json::exception& e) {
            throw Error("invalid provenance sidecar '" + prov + "': " + e.what());
        }
        for (const auto& [key, value] : j.items()) {
            corpus.provenance[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }
    return corpus;
}

void write_corpus_stream(const Corpus& corpus, std::ostream& out) {
    for (const AnnotatedSentence& s : corpus.sentences) {
        out << sentence_to_json_line(s) << '\n';
    }
}

void write_corpus(const Corpus& corpus, const std::string& path) {
    corpus.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write corpus '" + path + "'");
    write_corpus_stream(corpus, out);
    out.flush();
    if (!out) throw Error("write failed for '" + path + "'");
    if (!corpus.provenance.empty()) {
        json j = json::object();
        for (const auto& [key, value] : corpus.provenance) j[key] = value;
        std::ofstream pout(provenance_path(path), std::ios::binary);
        pout << j.dump(2) << '\n';
    }
}

std::map<std::string, std::vector<Token>> read_pretagged(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open pre-tagged file '" + path + "'");
    std::map<std::string, std::vector<Token>> result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t pos = 0;
        while (true) {
            const auto tab = line.find('\t', pos);
            cols.push_back(line.substr(pos, tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (cols.size() != 5) {
            throw line_error(line_no, "expected 5 columns (sent_id, token, start, end, coarse_pos)");
        }
        Token t;
        t.surface = cols[1];
        try {
            t.start = std::stoull(cols[2]);
            t.end = std::stoull(cols[3]);
        } catch (const std::exception&) {
            throw line_error(line_no, "offsets must be non-negative integers");
        }
        const auto pos_label = parse_coarse_pos(cols[4]);
        if (!pos_label) throw line_error(line_no, "unknown coarse_pos '" + cols[4] + "'");
        t.pos = *pos_label;
        if (t.start >= t.end) throw line_error(line_no, "token end must exceed start");
        result[cols[0]].push_back(std::move(t));
    }
    return result;
}

}  // namespace l1forge
