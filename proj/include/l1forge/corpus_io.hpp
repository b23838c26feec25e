#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "l1forge/corpus.hpp"
#include "l1forge/tokenize.hpp"

namespace l1forge {

/// Reads a UTF-8 JSONL corpus, one sentence object per line:
///   {"id": ..., "text": ..., "source": ..., "split": ..., "spans": [...]}
/// Every record is validated; schema violations raise Error naming the
/// record index and field. A sidecar `<path>.prov.json`, when present, is
/// loaded into Corpus::provenance.
Corpus read_corpus(const std::string& path);
Corpus read_corpus_stream(std::istream& in);

/// Writes canonical JSONL: keys in the fixed order id, text, source, split,
/// spans (span keys start, end, tag, correction), no extra whitespace.
/// write_corpus ∘ read_corpus is byte-identical. Non-empty provenance goes
/// to the `<path>.prov.json` sidecar.
void write_corpus(const Corpus& corpus, const std::string& path);
void write_corpus_stream(const Corpus& corpus, std::ostream& out);

std::string sentence_to_json_line(const AnnotatedSentence& s);
AnnotatedSentence sentence_from_json_line(const std::string& line, std::size_t record_index);

/// Optional pre-tagged token input, TSV columns:
///   sent_id  token  start  end  coarse_pos
/// Offsets are codepoint offsets. Returns tokens grouped per sentence id.
std::map<std::string, std::vector<Token>> read_pretagged(const std::string& path);

}  // namespace l1forge
