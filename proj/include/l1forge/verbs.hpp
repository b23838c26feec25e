#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace l1forge {

/// Conjugation rows: base, simple past, third person singular. The bundled
/// table covers the common irregular verbs plus the handful of silent-e
/// regulars whose past form the suffix rules cannot invert (decided, added).
/// User tables loaded from TSV (`base<TAB>past<TAB>third_person_singular`)
/// extend or override it.
class VerbTable {
public:
    static const VerbTable& bundled();
    static VerbTable from_tsv_file(const std::string& path);
    static VerbTable from_tsv(std::string_view content);

    void add(std::string base, std::string past, std::string third_sg);

    std::optional<std::string> base_of_past(std::string_view lowercase) const;
    std::optional<std::string> third_of_base(std::string_view lowercase) const;
    bool is_base(std::string_view lowercase) const;
    bool is_past(std::string_view lowercase) const;
    bool is_third_sg(std::string_view lowercase) const;

private:
    std::map<std::string, std::string, std::less<>> past_to_base_;
    std::map<std::string, std::string, std::less<>> base_to_third_;
    std::map<std::string, char, std::less<>> third_sg_;
};

enum class SubjectNumber { singular, plural };

/// Rewrites a simple-past verb to present simple with subject agreement.
/// Table lookup first; otherwise the regular rules: -ied -> -y, -eed -> -ee,
/// strip -ed with consonant un-doubling (stopped -> stop) and silent-e
/// restoration (decreased -> decrease, hoped -> hope). Singular subjects get
/// -s/-es per orthography (decreases, goes, watches, carries).
/// Throws Error when the surface is not recognizable as a past form.
std::string to_present_simple(std::string_view verb_surface, SubjectNumber number,
                              const VerbTable& table = VerbTable::bundled());

}  // namespace l1forge
