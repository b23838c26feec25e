#include "l1forge/prompts.hpp"

#include "l1forge/errors.hpp"
#include "l1forge/tag.hpp"

namespace l1forge {

namespace {

const std::string kGenerationTemplates[kGenerationTemplateCount] = {
    "Here are some sentences with L1-motivated mistakes. Find the mistakes in these "
    "sentences and generate new contexts with different meanings, while retaining the "
    "mistakes from the original sentences.",

    "Below are sentences containing mistakes caused by the writer's native language. "
    "Identify each mistake and write new sentences about different topics that keep "
    "the same kind of mistake.",

    "The following sentences include errors driven by native-language interference. "
    "Locate the errors and produce fresh sentences with new meanings that preserve "
    "those errors.",

    "These example sentences contain mistakes motivated by the writer's first "
    "language. Spot the mistakes and compose new sentences on different themes that "
    "retain them.",
};

const std::string kAnnotationInstruction =
    "Here are sentences that contain mistakes. Some mistakes are caused by "
    "interference with the Russian language. Find and highlight such mistakes. "
    "Classify the mistakes according to the Instructions. The following sentences "
    "are provided as examples.";

std::string numbered(const std::vector<std::string>& sentences) {
    std::string out;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        out += std::to_string(i + 1);
        out += ". ";
        out += sentences[i];
        out += '\n';
    }
    return out;
}

}  // namespace

const std::string& generation_instruction(std::size_t paraphrase_index) {
    if (paraphrase_index >= kGenerationTemplateCount) {
        throw Error("paraphrase index " + std::to_string(paraphrase_index) +
                    " out of range (have " + std::to_string(kGenerationTemplateCount) +
                    " templates)");
    }
    return kGenerationTemplates[paraphrase_index];
}

std::string build_generation_prompt(const std::vector<std::string>& example_sentences,
                                    std::size_t paraphrase_index,
                                    std::size_t paraphrase_count) {
    if (paraphrase_count == 0 || paraphrase_count > kGenerationTemplateCount) {
        throw Error("paraphrase count must be between 1 and " +
                    std::to_string(kGenerationTemplateCount));
    }
    if (paraphrase_index >= paraphrase_count) {
        throw Error("paraphrase index " + std::to_string(paraphrase_index) +
                    " out of range for paraphrase count " + std::to_string(paraphrase_count));
    }
    std::string prompt = kGenerationTemplates[paraphrase_index];
    prompt += "\n\n";
    prompt += numbered(example_sentences);
    return prompt;
}

const std::string& default_annotation_instructions() {
    static const std::string instructions =
        "Tag definitions:\n"
        "- CopyingExpression: a Russian expression or collocation translated word for "
        "word into English.\n"
        "- Synonyms: the wrong English word chosen among alternatives that share a "
        "single Russian translation.\n"
        "- TenseSemantics: an English tense that follows the Russian grammatical usage "
        "but is wrong in context.\n"
        "- Transliteration: a Russian word written in Latin letters inside the English "
        "text.\n"
        "- WordFormTransmission: a Russian grammatical category (for example plural "
        "marking) carried into the English form.";
    return instructions;
}

std::string build_annotation_prompt(const std::string& instructions,
                                    const std::vector<std::string>& sentences) {
    if (instructions.empty()) throw Error("annotation instructions must not be empty");
    std::string prompt = kAnnotationInstruction;
    prompt += "\n\nInstructions:\n";
    prompt += instructions;
    prompt += "\n\nMark every mistake inline as <err tag=\"TAG\" corr=\"CORRECTION\">mistake"
              "</err>, where TAG is one of ";
    bool first = true;
    for (ErrorTag tag : all_error_tags()) {
        if (!first) prompt += ", ";
        prompt += to_string(tag);
        first = false;
    }
    prompt += " and CORRECTION is the corrected text. Return each annotated sentence on "
              "its own line and change nothing else.\n\nSentences:\n";
    prompt += numbered(sentences);
    return prompt;
}

}  // namespace l1forge
