#include "l1forge/translit.hpp"

#include <fstream>
#include <sstream>

#include "l1forge/errors.hpp"
#include "l1forge/utf8.hpp"

namespace l1forge {

namespace {

// lowercase Cyrillic letter -> Latin sequence; uppercase derived by
// capitalizing the first output letter.
constexpr std::pair<char32_t, const char*> kLowercaseRows[] = {
    {U'а', "a"},  {U'б', "b"},  {U'в', "v"},   {U'г', "g"},  {U'д', "d"},
    {U'е', "e"},  {U'ё', "e"},  {U'ж', "zh"},  {U'з', "z"},  {U'и', "i"},
    {U'й', "i"},  {U'к', "k"},  {U'л', "l"},   {U'м', "m"},  {U'н', "n"},
    {U'о', "o"},  {U'п', "p"},  {U'р', "r"},   {U'с', "s"},  {U'т', "t"},
    {U'у', "u"},  {U'ф', "f"},  {U'х', "kh"},  {U'ц', "ts"}, {U'ч', "ch"},
    {U'ш', "sh"}, {U'щ', "shch"}, {U'ъ', ""},  {U'ы', "y"},  {U'ь', ""},
    {U'э', "e"},  {U'ю', "yu"}, {U'я', "ya"},
};

char32_t to_upper_cyrillic(char32_t lower) {
    if (lower == U'ё') return U'Ё';
    return lower - (U'а' - U'А');
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

}  // namespace

const TransliterationTable& TransliterationTable::bundled() {
    static const TransliterationTable table = [] {
        TransliterationTable t;
        for (const auto& [cp, latin] : kLowercaseRows) {
            t.set(cp, latin);
            t.set(to_upper_cyrillic(cp), capitalize(latin));
        }
        return t;
    }();
    return table;
}

TransliterationTable TransliterationTable::from_tsv(std::string_view content) {
    TransliterationTable t = bundled();
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw line_error(line_no, "expected 2 tab-separated columns (cyrillic, latin)");
        }
        const std::string cyr = line.substr(0, tab);
        if (utf8::length(cyr) != 1) {
            throw line_error(line_no, "first column must be a single codepoint");
        }
        std::size_t pos = 0;
        t.set(utf8::decode(cyr, pos), line.substr(tab + 1));
    }
    return t;
}

TransliterationTable TransliterationTable::from_tsv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open transliteration table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_tsv(ss.str());
}

void TransliterationTable::set(char32_t cyrillic, std::string latin) {
    mapping_[cyrillic] = std::move(latin);
}

std::optional<std::string_view> TransliterationTable::map(char32_t cp) const {
    const auto it = mapping_.find(cp);
    if (it == mapping_.end()) return std::nullopt;
    return std::string_view(it->second);
}

std::string transliterate(std::string_view text, const TransliterationTable& table) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = utf8::decode(text, pos);
        if (const auto latin = table.map(cp)) {
            out += *latin;
        } else {
            utf8::append(out, cp);
        }
    }
    return out;
}

namespace {

// Common IELTS-graph vocabulary with Russian equivalents; used when the CLI
// is run without an explicit lexicon file.
constexpr std::pair<const char*, const char*> kBundledNouns[] = {
    {"cashier", "касса"},      {"money", "деньги"},       {"firm", "фирма"},
    {"company", "компания"},   {"economy", "экономика"},  {"investment", "инвестиция"},
    {"percent", "процент"},    {"diagram", "диаграмма"},  {"graph", "график"},
    {"table", "таблица"},      {"level", "уровень"},      {"period", "период"},
    {"population", "население"}, {"city", "город"},       {"country", "страна"},
    {"student", "студент"},    {"university", "университет"}, {"school", "школа"},
    {"work", "работа"},        {"salary", "зарплата"},    {"price", "цена"},
    {"product", "продукт"},    {"factory", "фабрика"},    {"machine", "машина"},
    {"transport", "транспорт"}, {"passport", "паспорт"},  {"document", "документ"},
    {"bank", "банк"},          {"credit", "кредит"},      {"market", "рынок"},
    {"region", "регион"},      {"resource", "ресурс"},    {"energy", "энергия"},
    {"culture", "культура"},   {"theater", "театр"},      {"institute", "институт"},
};

}  // namespace

const NounLexicon& NounLexicon::bundled() {
    static const NounLexicon lex = [] {
        NounLexicon l;
        for (const auto& [en, ru] : kBundledNouns) l.add(en, ru);
        return l;
    }();
    return lex;
}

NounLexicon NounLexicon::from_tsv(std::string_view content) {
    NounLexicon l;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw line_error(line_no, "expected 2 tab-separated columns (english, russian)");
        }
        std::string english = line.substr(0, tab);
        std::string russian = line.substr(tab + 1);
        if (!utf8::contains_cyrillic(russian)) {
            throw line_error(line_no, "second column must contain Cyrillic");
        }
        l.add(std::move(english), std::move(russian));
    }
    return l;
}

NounLexicon NounLexicon::from_tsv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open noun lexicon '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_tsv(ss.str());
}

void NounLexicon::add(std::string english, std::string russian) {
    for (char& c : english) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    mapping_.insert_or_assign(std::move(english), std::move(russian));
}

std::optional<std::string_view> NounLexicon::find(std::string_view english_lowercase) const {
    const auto it = mapping_.find(english_lowercase);
    if (it == mapping_.end()) return std::nullopt;
    return std::string_view(it->second);
}

}  // namespace l1forge
