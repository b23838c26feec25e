#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "l1forge/corpus.hpp"
#include "l1forge/errors.hpp"

namespace l1forge {

struct RetryPolicy {
    std::size_t max_attempts = 3;
    std::chrono::milliseconds base_delay{100};  // doubled per attempt
};

/// Configuration for prompt-based generation and annotation against any
/// OpenAI-compatible chat-completions endpoint.
struct GenerationJob {
    std::string endpoint;  // e.g. http://127.0.0.1:8080/v1
    std::string model_name = "claude-2";
    double temperature = 1.0;
    std::size_t examples_per_prompt = 10;
    std::size_t paraphrase_count = 4;
    std::size_t target_total = 0;
    std::uint64_t seed = 42;
    std::size_t max_inflight = 4;
    RetryPolicy retry;
    std::string api_key;  // empty: no Authorization header

    void validate() const;  // temperature > 0, examples_per_prompt >= 1, ...
};

/// Thrown when transport fails after retries; carries what was collected
/// before the failure.
class TransportError : public HttpError {
public:
    TransportError(const std::string& what, Corpus partial_results)
        : HttpError(what), partial(std::move(partial_results)) {}
    Corpus partial;
};

/// One chat-completions request; retries with exponential backoff on
/// connection errors, 429 and 5xx. Returns the first choice's content.
std::string chat_complete(const std::string& endpoint, const std::string& model,
                          const std::string& prompt, double temperature,
                          const std::string& api_key, const RetryPolicy& retry);

struct GenerateResult {
    Corpus corpus;  // source = llm, ids llm-000001...; provenance per request
    std::size_t requests = 0;
    std::size_t skipped_empty_outputs = 0;
};

/// Repeatedly samples fresh example sets from the source corpus (seeded),
/// cycles the paraphrase templates, posts chat-completions requests with up
/// to max_inflight in flight, and splits replies into candidate sentences
/// until target_total is collected. Request order is preserved in the
/// output. Transport failure after retries raises TransportError carrying
/// the partial corpus.
GenerateResult generate_batch(const GenerationJob& job, const Corpus& source);

struct AnnotateResult {
    Corpus corpus;
    std::size_t parse_failures = 0;
    std::size_t dropped_unknown_tags = 0;
};

/// Posts one annotation prompt per sentence and parses the inline-markup
/// reply into spans. Sentences whose reply cannot be parsed are kept
/// unannotated and counted.
AnnotateResult annotate_batch(const GenerationJob& job, const Corpus& corpus,
                              const std::string& instructions);

/// Splits a model reply into candidate sentences: one per non-empty line
/// with list numbering stripped; a single-line reply falls back to the
/// sentence segmenter.
std::vector<std::string> extract_candidates(const std::string& reply);

}  // namespace l1forge
