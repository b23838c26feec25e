#pragma once

#include <string>
#include <vector>

#include "l1forge/corpus.hpp"

namespace l1forge {

enum class Verdict { accept, reject, unreviewed };

std::string_view to_string(Verdict v);

struct ReviewRow {
    std::string id;
    std::string text;
    std::string tag_label;  // comma-joined distinct span tags, "-" when none
    Verdict verdict = Verdict::unreviewed;
};

struct ReviewSheet {
    std::vector<ReviewRow> rows;
};

/// One row per sentence, verdict unreviewed. TSV columns: id, text, tag,
/// verdict. Tabs and newlines inside the text are flattened to spaces.
ReviewSheet make_review_sheet(const Corpus& corpus);
void write_review_sheet(const ReviewSheet& sheet, const std::string& path);
ReviewSheet read_review_sheet(const std::string& path);

/// Drops rejected sentences, keeps accepted ones. Rows for ids absent from
/// the corpus raise Error; corpus sentences absent from the sheet are kept.
/// Unreviewed rows raise Error unless keep_unreviewed is set.
Corpus apply_review(const Corpus& corpus, const ReviewSheet& sheet,
                    bool keep_unreviewed = false);

}  // namespace l1forge
