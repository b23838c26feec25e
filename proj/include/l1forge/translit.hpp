#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace l1forge {

/// Deterministic Cyrillic-to-Latin letter mapping, passport style
/// (zh, kh, ch, sh, shch, yu, ya; soft/hard signs dropped). Total over the
/// 33-letter alphabet in both cases; anything unmapped passes through, so
/// Latin text and digits are fixed points and the mapping is idempotent.
class TransliterationTable {
public:
    static const TransliterationTable& bundled();

    /// Override/extend from TSV `cyrillic<TAB>latin` (latin may be empty).
    static TransliterationTable from_tsv_file(const std::string& path);
    static TransliterationTable from_tsv(std::string_view content);

    void set(char32_t cyrillic, std::string latin);
    std::optional<std::string_view> map(char32_t cp) const;

private:
    std::map<char32_t, std::string> mapping_;
};

/// Letterwise application of the table.
std::string transliterate(std::string_view text,
                          const TransliterationTable& table = TransliterationTable::bundled());

/// English noun -> Russian noun (Cyrillic). TSV `english_noun<TAB>russian_noun`.
class NounLexicon {
public:
    static NounLexicon from_tsv_file(const std::string& path);
    static NounLexicon from_tsv(std::string_view content);
    static const NounLexicon& bundled();

    void add(std::string english, std::string russian);
    std::optional<std::string_view> find(std::string_view english_lowercase) const;
    bool empty() const { return mapping_.empty(); }
    std::size_t size() const { return mapping_.size(); }

private:
    std::map<std::string, std::string, std::less<>> mapping_;
};

}  // namespace l1forge
