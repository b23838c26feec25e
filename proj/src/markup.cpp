#include "l1forge/markup.hpp"

#include <optional>

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

namespace {

constexpr std::string_view kOpen = "<err";
constexpr std::string_view kClose = "</err>";

std::optional<std::string> attribute_value(std::string_view attrs, std::string_view name) {
    std::size_t pos = 0;
    while (pos < attrs.size()) {
        const auto at = attrs.find(name, pos);
        if (at == std::string_view::npos) return std::nullopt;
        const auto after = at + name.size();
        // require word boundary then ="
        const bool boundary = at == 0 || attrs[at - 1] == ' ' || attrs[at - 1] == '\t';
        if (!boundary || after + 1 >= attrs.size() || attrs[after] != '=' ||
            attrs[after + 1] != '"') {
            pos = after;
            continue;
        }
        const auto value_start = after + 2;
        const auto quote = attrs.find('"', value_start);
        if (quote == std::string_view::npos) return std::nullopt;
        return std::string(attrs.substr(value_start, quote - value_start));
    }
    return std::nullopt;
}

}  // namespace

MarkupParseResult parse_annotated_output(std::string_view model_text) {
    MarkupParseResult result;
    result.sentence.source = Source::llm;

    std::string stripped;
    std::size_t stripped_cp = 0;

    std::size_t pos = 0;       // byte position in model_text
    std::size_t orig_cp = 0;   // codepoint position, for error messages

    bool open = false;
    std::size_t open_stripped_cp = 0;
    bool open_tag_known = false;
    ErrorTag open_tag = ErrorTag::CopyingExpression;
    std::optional<std::string> open_corr;

    while (pos < model_text.size()) {
        if (model_text.compare(pos, kOpen.size(), kOpen) == 0 &&
            pos + kOpen.size() < model_text.size() &&
            (model_text[pos + kOpen.size()] == ' ' || model_text[pos + kOpen.size()] == '>' ||
             model_text[pos + kOpen.size()] == '\t')) {
            if (open) {
                throw Error("nested <err> at character " + std::to_string(orig_cp));
            }
            const auto gt = model_text.find('>', pos);
            if (gt == std::string_view::npos) {
                throw Error("unterminated <err> opening at character " + std::to_string(orig_cp));
            }
            const std::string_view attrs =
                model_text.substr(pos + kOpen.size(), gt - pos - kOpen.size());
            open = true;
            open_stripped_cp = stripped_cp;
            open_tag_known = false;
            if (const auto label = attribute_value(attrs, "tag")) {
                if (const auto tag = parse_error_tag(*label)) {
                    open_tag = *tag;
                    open_tag_known = true;
                }
            }
            open_corr = attribute_value(attrs, "corr");
            orig_cp += utf8::length(model_text.substr(pos, gt + 1 - pos));
            pos = gt + 1;
            continue;
        }
        if (model_text.compare(pos, kClose.size(), kClose) == 0) {
            if (!open) {
                throw Error("</err> without opening tag at character " + std::to_string(orig_cp));
            }
            if (stripped_cp == open_stripped_cp) {
                throw Error("empty <err> region at character " + std::to_string(orig_cp));
            }
            if (open_tag_known) {
                Span span;
                span.start = open_stripped_cp;
                span.end = stripped_cp;
                span.tag = open_tag;
                span.correction = open_corr;
                result.sentence.spans.push_back(std::move(span));
            } else {
                ++result.dropped_unknown_tags;
            }
            open = false;
            orig_cp += utf8::length(kClose);
            pos += kClose.size();
            continue;
        }
        const std::size_t at = pos;
        utf8::decode(model_text, pos);
        stripped.append(model_text.substr(at, pos - at));
        ++stripped_cp;
        ++orig_cp;
    }
    if (open) {
        throw Error("<err> not closed by end of text (opened before character " +
                    std::to_string(orig_cp) + ")");
    }

    result.sentence.text = std::move(stripped);
    result.sentence.normalize();
    result.sentence.validate();
    return result;
}

std::string render_markup(const AnnotatedSentence& sentence) {
    std::string out;
    std::size_t cursor = 0;  // codepoint position in sentence.text
    std::size_t prev_end = 0;
    for (const Span& span : sentence.spans) {
        if (span.start < prev_end) {
            throw Error("sentence '" + sentence.id + "': overlapping spans cannot be rendered");
        }
        out += utf8::substr(sentence.text, cursor, span.start);
        out += "<err tag=\"";
        out += to_string(span.tag);
        out += '"';
        if (span.correction) {
            out += " corr=\"";
            out += *span.correction;
            out += '"';
        }
        out += '>';
        out += utf8::substr(sentence.text, span.start, span.end);
        out += kClose;
        cursor = span.end;
        prev_end = span.end;
    }
    out += utf8::substr(sentence.text, cursor, utf8::length(sentence.text));
    return out;
}

}  // namespace l1forge
