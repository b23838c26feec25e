#include "l1forge/llm_client.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "l1forge/brat.hpp"
#include "l1forge/markup.hpp"
#include "l1forge/prompts.hpp"
#include "l1forge/rng.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

using json = nlohmann::json;

namespace {

struct EndpointParts {
    std::string host_port;  // scheme://host:port
    std::string base_path;  // may be empty
};

EndpointParts split_endpoint(const std::string& endpoint) {
    const auto scheme = endpoint.find("://");
    if (scheme == std::string::npos) {
        throw Error("endpoint '" + endpoint + "' must start with http:// or https://");
    }
    const auto path = endpoint.find('/', scheme + 3);
    if (path == std::string::npos) return {endpoint, ""};
    std::string base = endpoint.substr(path);
    while (!base.empty() && base.back() == '/') base.pop_back();
    return {endpoint.substr(0, path), base};
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << value;
    return out.str();
}

std::string strip_list_prefix(std::string line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t d = i;
    while (d < line.size() && line[d] >= '0' && line[d] <= '9') ++d;
    if (d > i && d < line.size() && (line[d] == '.' || line[d] == ')')) {
        ++d;
    } else if (i < line.size() && (line[i] == '-' || line[i] == '*')) {
        d = i + 1;
    } else {
        d = i;
    }
    while (d < line.size() && (line[d] == ' ' || line[d] == '\t')) ++d;
    std::string out = line.substr(d);
    while (!out.empty() && (out.back() == ' ' || out.back() == '\t' || out.back() == '\r')) {
        out.pop_back();
    }
    return out;
}

}  // namespace

void GenerationJob::validate() const {
    if (!(temperature > 0.0)) throw Error("temperature must be positive");
    if (examples_per_prompt < 1) throw Error("examples_per_prompt must be at least 1");
    if (paraphrase_count < 1 || paraphrase_count > kGenerationTemplateCount) {
        throw Error("paraphrase_count must be between 1 and " +
                    std::to_string(kGenerationTemplateCount));
    }
    if (max_inflight < 1) throw Error("max_inflight must be at least 1");
    if (retry.max_attempts < 1) throw Error("retry.max_attempts must be at least 1");
}

std::string chat_complete(const std::string& endpoint, const std::string& model,
                          const std::string& prompt, double temperature,
                          const std::string& api_key, const RetryPolicy& retry) {
    const EndpointParts parts = split_endpoint(endpoint);
    const std::string path = parts.base_path + "/chat/completions";

    json body;
    body["model"] = model;
    body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = temperature;
    const std::string payload = body.dump();

    std::string last_error;
    for (std::size_t attempt = 0; attempt < retry.max_attempts; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(retry.base_delay * (1u << (attempt - 1)));
        }
        httplib::Client client(parts.host_port);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(120, 0);
        httplib::Headers headers;
        if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

        auto res = client.Post(path, headers, payload, "application/json");
        if (!res) {
            last_error = "connection to " + parts.host_port + " failed (" +
                         httplib::to_string(res.error()) + ")";
            continue;
        }
        if (res->status == 429 || res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status) + " from " + path;
            continue;
        }
        if (res->status != 200) {
            throw HttpError("HTTP " + std::to_string(res->status) + " from " + path + ": " +
                            res->body);
        }
        json reply;
        try {
            reply = json::parse(res->body);
        } catch (const json::exception& e) {
            throw HttpError(std::string("endpoint returned invalid JSON: ") + e.what());
        }
        if (!reply.contains("choices") || !reply["choices"].is_array() ||
            reply["choices"].empty()) {
            throw HttpError("endpoint reply has no choices");
        }
        const json& message = reply["choices"][0];
        if (!message.contains("message") || !message["message"].contains("content") ||
            !message["message"]["content"].is_string()) {
            throw HttpError("endpoint reply has no message content");
        }
        return message["message"]["content"].get<std::string>();
    }
    throw HttpError("request failed after " + std::to_string(retry.max_attempts) +
                    " attempts: " + last_error);
}

std::vector<std::string> extract_candidates(const std::string& reply) {
    std::vector<std::string> lines;
    std::istringstream in(reply);
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = strip_list_prefix(line);
        if (!stripped.empty()) lines.push_back(std::move(stripped));
    }
    if (lines.size() == 1) {
        const auto ranges = segment_sentences(lines[0]);
        if (ranges.size() > 1) {
            std::vector<std::string> sentences;
            for (const SentenceRange& r : ranges) {
                sentences.push_back(utf8::substr(lines[0], r.start, r.end));
            }
            return sentences;
        }
    }
    return lines;
}

namespace {

struct RequestSpec {
    std::string prompt;
    std::size_t paraphrase_index = 0;
    std::vector<std::string> example_ids;
};

/// Runs one window of up to max_inflight requests on worker threads; the
/// results land in request order. Exceptions propagate through captured
/// pointers so the first failing request wins deterministically.
std::vector<std::string> run_window(const GenerationJob& job,
                                    const std::vector<RequestSpec>& specs,
                                    std::string* error_out) {
    std::vector<std::string> replies(specs.size());
    std::vector<std::string> errors(specs.size());
    std::vector<std::thread> workers;
    workers.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        workers.emplace_back([&, i] {
            try {
                replies[i] = chat_complete(job.endpoint, job.model_name, specs[i].prompt,
                                           job.temperature, job.api_key, job.retry);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
    }
    for (std::thread& t : workers) t.join();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!errors[i].empty()) {
            *error_out = errors[i];
            // replies before the failing one are still usable
            replies.resize(i);
            break;
        }
    }
    return replies;
}

}  // namespace

GenerateResult generate_batch(const GenerationJob& job, const Corpus& source) {
    job.validate();
    GenerateResult result;
    if (job.target_total == 0) return result;
    if (source.empty()) throw Error("generation needs a non-empty source corpus");

    result.corpus.provenance["endpoint"] = job.endpoint;
    result.corpus.provenance["model"] = job.model_name;
    result.corpus.provenance["temperature"] = std::to_string(job.temperature);
    result.corpus.provenance["seed"] = std::to_string(job.seed);

    Rng rng(job.seed);
    std::size_t request_index = 0;
    std::size_t sentence_seq = 0;

    while (result.corpus.size() < job.target_total) {
        const std::size_t remaining_requests =
            job.target_total - result.corpus.size();  // at least one candidate per request
        const std::size_t window =
            std::min(job.max_inflight, std::max<std::size_t>(1, remaining_requests));

        std::vector<RequestSpec> specs;
        specs.reserve(window);
        for (std::size_t w = 0; w < window; ++w) {
            // fresh example set per request, distinct sentences when possible
            std::vector<std::size_t> order(source.size());
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            const std::size_t take = std::min(job.examples_per_prompt, source.size());
            RequestSpec spec;
            std::vector<std::string> examples;
            for (std::size_t k = 0; k < take; ++k) {
                examples.push_back(source.sentences[order[k]].text);
                spec.example_ids.push_back(source.sentences[order[k]].id);
            }
            spec.paraphrase_index = request_index % job.paraphrase_count;
            spec.prompt =
                build_generation_prompt(examples, spec.paraphrase_index, job.paraphrase_count);
            specs.push_back(std::move(spec));
            ++request_index;
        }

        std::string error;
        const std::vector<std::string> replies = run_window(job, specs, &error);
        result.requests += replies.size();

        for (std::size_t i = 0; i < replies.size() && result.corpus.size() < job.target_total;
             ++i) {
            const auto candidates = extract_candidates(replies[i]);
            if (candidates.empty()) {
                ++result.skipped_empty_outputs;
                continue;
            }
            json prov;
            prov["prompt_hash"] = hex64(fnv1a(specs[i].prompt));
            prov["paraphrase_index"] = specs[i].paraphrase_index;
            prov["example_ids"] = specs[i].example_ids;
            const std::string prov_str = prov.dump();
            for (const std::string& text : candidates) {
                if (result.corpus.size() >= job.target_total) break;
                AnnotatedSentence s;
                ++sentence_seq;
                std::ostringstream id;
                id << "llm-" << std::setw(6) << std::setfill('0') << sentence_seq;
                s.id = id.str();
                s.text = text;
                s.source = Source::llm;
                result.corpus.provenance["request." + s.id] = prov_str;
                result.corpus.sentences.push_back(std::move(s));
            }
        }
        if (!error.empty()) {
            throw TransportError("generation aborted: " + error, std::move(result.corpus));
        }
    }
    return result;
}

AnnotateResult annotate_batch(const GenerationJob& job, const Corpus& corpus,
                              const std::string& instructions) {
    job.validate();
    AnnotateResult result;
    result.corpus.provenance = corpus.provenance;
    result.corpus.provenance["annotation_model"] = job.model_name;

    std::size_t next = 0;
    std::vector<AnnotatedSentence> annotated(corpus.size());

    while (next < corpus.size()) {
        const std::size_t window = std::min(job.max_inflight, corpus.size() - next);
        std::vector<RequestSpec> specs;
        specs.reserve(window);
        for (std::size_t w = 0; w < window; ++w) {
            RequestSpec spec;
            spec.prompt =
                build_annotation_prompt(instructions, {corpus.sentences[next + w].text});
            specs.push_back(std::move(spec));
        }
        std::string error;
        const std::vector<std::string> replies = run_window(job, specs, &error);

        for (std::size_t i = 0; i < replies.size(); ++i) {
            const AnnotatedSentence& original = corpus.sentences[next + i];
            AnnotatedSentence out = original;
            const auto candidates = extract_candidates(replies[i]);
            try {
                if (candidates.empty()) throw Error("empty reply");
                MarkupParseResult parsed = parse_annotated_output(candidates.front());
                result.dropped_unknown_tags += parsed.dropped_unknown_tags;
                out.text = std::move(parsed.sentence.text);
                out.spans = std::move(parsed.sentence.spans);
            } catch (const Error&) {
                ++result.parse_failures;  // keep the sentence unannotated
            }
            annotated[next + i] = std::move(out);
        }
        if (!error.empty()) {
            annotated.resize(next + replies.size());
            Corpus partial;
            partial.provenance = result.corpus.provenance;
            partial.sentences = std::move(annotated);
            throw TransportError("annotation aborted: " + error, std::move(partial));
        }
        next += window;
    }
    result.corpus.sentences = std::move(annotated);
    return result;
}

}  // namespace l1forge
