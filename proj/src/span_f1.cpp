#include "l1forge/span_f1.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "l1forge/errors.hpp"

namespace l1forge {

double TagCounts::precision() const {
    return tp + fp == 0 ? 0.0 : 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double TagCounts::recall() const {
    return tp + fn == 0 ? 0.0 : 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double TagCounts::f1() const {
    const double p = precision();
    const double r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

namespace {

void match_sentence(const AnnotatedSentence& gold, const AnnotatedSentence* pred, MatchMode mode,
                    std::map<ErrorTag, TagCounts>& per_tag) {
    // both span lists are already sorted by (start, end, tag)
    std::vector<bool> pred_used;
    std::size_t pred_count = 0;
    if (pred != nullptr) {
        pred_count = pred->spans.size();
        pred_used.assign(pred_count, false);
    }

    for (const Span& g : gold.spans) {
        bool matched = false;
        for (std::size_t j = 0; j < pred_count && !matched; ++j) {
            if (pred_used[j]) continue;
            const Span& p = pred->spans[j];
            if (p.tag != g.tag) continue;
            const bool hit = mode == MatchMode::strict
                                 ? (p.start == g.start && p.end == g.end)
                                 : (p.start < g.end && g.start < p.end);
            if (hit) {
                pred_used[j] = true;
                matched = true;
                ++per_tag[g.tag].tp;
            }
        }
        if (!matched) ++per_tag[g.tag].fn;
    }
    for (std::size_t j = 0; j < pred_count; ++j) {
        if (!pred_used[j]) ++per_tag[pred->spans[j].tag].fp;
    }
}

}  // namespace

EvalReport span_f1(const Corpus& gold, const Corpus& pred, MatchMode mode) {
    std::unordered_map<std::string, const AnnotatedSentence*> gold_by_id;
    gold_by_id.reserve(gold.size());
    for (const AnnotatedSentence& s : gold.sentences) gold_by_id[s.id] = &s;

    std::unordered_map<std::string, const AnnotatedSentence*> pred_by_id;
    pred_by_id.reserve(pred.size());
    for (const AnnotatedSentence& s : pred.sentences) {
        if (!gold_by_id.count(s.id)) {
            throw Error("prediction id '" + s.id + "' does not exist in the gold corpus");
        }
        pred_by_id[s.id] = &s;
    }

    EvalReport report;
    report.mode = mode;
    for (const AnnotatedSentence& g : gold.sentences) {
        const auto it = pred_by_id.find(g.id);
        match_sentence(g, it == pred_by_id.end() ? nullptr : it->second, mode, report.per_tag);
    }

    double f1_sum = 0.0;
    std::size_t populated = 0;
    for (auto it = report.per_tag.begin(); it != report.per_tag.end();) {
        const TagCounts& c = it->second;
        if (c.tp + c.fp + c.fn == 0) {
            it = report.per_tag.erase(it);
            continue;
        }
        f1_sum += c.f1();
        ++populated;
        report.micro.tp += c.tp;
        report.micro.fp += c.fp;
        report.micro.fn += c.fn;
        ++it;
    }
    report.macro_f1 = populated == 0 ? 0.0 : f1_sum / static_cast<double>(populated);
    return report;
}

std::string EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = mode == MatchMode::strict ? "strict" : "overlap";
    nlohmann::ordered_json tags = nlohmann::ordered_json::object();
    for (const auto& [tag, counts] : per_tag) {
        tags[std::string(to_string(tag))] = {
            {"tp", counts.tp},           {"fp", counts.fp},
            {"fn", counts.fn},           {"precision", counts.precision()},
            {"recall", counts.recall()}, {"f1", counts.f1()},
        };
    }
    j["per_tag"] = std::move(tags);
    j["macro_f1"] = macro_f1;
    j["micro"] = {
        {"tp", micro.tp},           {"fp", micro.fp},
        {"fn", micro.fn},           {"precision", micro.precision()},
        {"recall", micro.recall()}, {"f1", micro.f1()},
    };
    return j.dump(2);
}

std::string EvalReport::to_table() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << std::left << std::setw(22) << "tag" << std::right << std::setw(6) << "TP"
        << std::setw(6) << "FP" << std::setw(6) << "FN" << std::setw(9) << "P" << std::setw(9)
        << "R" << std::setw(9) << "F1" << '\n';
    for (const auto& [tag, c] : per_tag) {
        out << std::left << std::setw(22) << to_string(tag) << std::right << std::setw(6) << c.tp
            << std::setw(6) << c.fp << std::setw(6) << c.fn << std::setw(9) << c.precision()
            << std::setw(9) << c.recall() << std::setw(9) << c.f1() << '\n';
    }
    out << std::left << std::setw(22) << "micro" << std::right << std::setw(6) << micro.tp
        << std::setw(6) << micro.fp << std::setw(6) << micro.fn << std::setw(9)
        << micro.precision() << std::setw(9) << micro.recall() << std::setw(9) << micro.f1()
        << '\n';
    out << "macro F1: " << macro_f1 << " (" << (mode == MatchMode::strict ? "strict" : "overlap")
        << " matching)" << '\n';
    return out.str();
}

}  // namespace l1forge
