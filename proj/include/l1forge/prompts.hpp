#pragma once

#include <string>
#include <vector>

namespace l1forge {

inline constexpr std::size_t kGenerationTemplateCount = 4;

/// Generation prompt: the instruction text selected by paraphrase_index
/// (0 is the canonical wording, 1..3 are bundled fixed paraphrases) followed
/// by the numbered example sentences. Deterministic. Errors when
/// paraphrase_index >= paraphrase_count or paraphrase_count exceeds the
/// bundled templates.
std::string build_generation_prompt(const std::vector<std::string>& example_sentences,
                                    std::size_t paraphrase_index,
                                    std::size_t paraphrase_count = kGenerationTemplateCount);

/// Annotation prompt: the fixed annotation instruction, the tag-scheme
/// instructions, the inline-markup output contract
/// (<err tag="TAG" corr="CORRECTION">surface</err>), then the numbered
/// sentences. Errors on empty instructions.
std::string build_annotation_prompt(const std::string& instructions,
                                    const std::vector<std::string>& sentences);

/// Bundled tag-scheme instructions used when the caller supplies none.
const std::string& default_annotation_instructions();

/// The canonical generation instruction (paraphrase 0); exposed so tests and
/// provenance can identify it.
const std::string& generation_instruction(std::size_t paraphrase_index = 0);

}  // namespace l1forge
