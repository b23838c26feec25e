#include "l1forge/verbs.hpp"

#include <fstream>
#include <sstream>

#include "l1forge/errors.hpp"
#include "l1forge/tokenize.hpp"

namespace l1forge {

namespace {

// base past third_person_singular
constexpr const char* kBundledRows[][3] = {
    {"add", "added", "adds"},
    {"arise", "arose", "arises"},
    {"awake", "awoke", "awakes"},
    {"become", "became", "becomes"},
    {"begin", "began", "begins"},
    {"bend", "bent", "bends"},
    {"bite", "bit", "bites"},
    {"blow", "blew", "blows"},
    {"break", "broke", "breaks"},
    {"bring", "brought", "brings"},
    {"build", "built", "builds"},
    {"buy", "bought", "buys"},
    {"calculate", "calculated", "calculates"},
    {"catch", "caught", "catches"},
    {"choose", "chose", "chooses"},
    {"come", "came", "comes"},
    {"compare", "compared", "compares"},
    {"concentrate", "concentrated", "concentrates"},
    {"cost", "cost", "costs"},
    {"create", "created", "creates"},
    {"cut", "cut", "cuts"},
    {"deal", "dealt", "deals"},
    {"decide", "decided", "decides"},
    {"decline", "declined", "declines"},
    {"demonstrate", "demonstrated", "demonstrates"},
    {"describe", "described", "describes"},
    {"die", "died", "dies"},
    {"dig", "dug", "digs"},
    {"divide", "divided", "divides"},
    {"draw", "drew", "draws"},
    {"drink", "drank", "drinks"},
    {"drive", "drove", "drives"},
    {"eat", "ate", "eats"},
    {"estimate", "estimated", "estimates"},
    {"fall", "fell", "falls"},
    {"feed", "fed", "feeds"},
    {"feel", "felt", "feels"},
    {"fight", "fought", "fights"},
    {"find", "found", "finds"},
    {"fluctuate", "fluctuated", "fluctuates"},
    {"fly", "flew", "flies"},
    {"forget", "forgot", "forgets"},
    {"forgive", "forgave", "forgives"},
    {"freeze", "froze", "freezes"},
    {"generate", "generated", "generates"},
    {"get", "got", "gets"},
    {"give", "gave", "gives"},
    {"go", "went", "goes"},
    {"grow", "grew", "grows"},
    {"hang", "hung", "hangs"},
    {"have", "had", "has"},
    {"hear", "heard", "hears"},
    {"hide", "hid", "hides"},
    {"hit", "hit", "hits"},
    {"hold", "held", "holds"},
    {"hurt", "hurt", "hurts"},
    {"illustrate", "illustrated", "illustrates"},
    {"include", "included", "includes"},
    {"indicate", "indicated", "indicates"},
    {"keep", "kept", "keeps"},
    {"know", "knew", "knows"},
    {"lay", "laid", "lays"},
    {"lead", "led", "leads"},
    {"leave", "left", "leaves"},
    {"lend", "lent", "lends"},
    {"let", "let", "lets"},
    {"lie", "lay", "lies"},
    {"lose", "lost", "loses"},
    {"make", "made", "makes"},
    {"mean", "meant", "means"},
    {"meet", "met", "meets"},
    {"pay", "paid", "pays"},
    {"provide", "provided", "provides"},
    {"put", "put", "puts"},
    {"read", "read", "reads"},
    {"relate", "related", "relates"},
    {"ride", "rode", "rides"},
    {"ring", "rang", "rings"},
    {"rise", "rose", "rises"},
    {"run", "ran", "runs"},
    {"say", "said", "says"},
    {"see", "saw", "sees"},
    {"seek", "sought", "seeks"},
    {"sell", "sold", "sells"},
    {"send", "sent", "sends"},
    {"separate", "separated", "separates"},
    {"set", "set", "sets"},
    {"shake", "shook", "shakes"},
    {"shine", "shone", "shines"},
    {"shoot", "shot", "shoots"},
    {"show", "showed", "shows"},
    {"shrink", "shrank", "shrinks"},
    {"shut", "shut", "shuts"},
    {"sing", "sang", "sings"},
    {"sink", "sank", "sinks"},
    {"sit", "sat", "sits"},
    {"sleep", "slept", "sleeps"},
    {"speak", "spoke", "speaks"},
    {"spend", "spent", "spends"},
    {"spread", "spread", "spreads"},
    {"stand", "stood", "stands"},
    {"state", "stated", "states"},
    {"steal", "stole", "steals"},
    {"stick", "stuck", "sticks"},
    {"strike", "struck", "strikes"},
    {"swim", "swam", "swims"},
    {"take", "took", "takes"},
    {"teach", "taught", "teaches"},
    {"tear", "tore", "tears"},
    {"tell", "told", "tells"},
    {"think", "thought", "thinks"},
    {"throw", "threw", "throws"},
    {"understand", "understood", "understands"},
    {"unite", "united", "unites"},
    {"wake", "woke", "wakes"},
    {"wear", "wore", "wears"},
    {"win", "won", "wins"},
    {"write", "wrote", "writes"},
};

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Number of vowel-to-consonant transitions; distinguishes short stems that
// need their silent e back (hop+e) from longer ones that do not (open).
int stem_measure(std::string_view stem) {
    int m = 0;
    for (std::size_t i = 0; i + 1 < stem.size(); ++i) {
        if (is_vowel(stem[i]) && !is_vowel(stem[i + 1])) ++m;
    }
    return m;
}

bool ends_cvc(std::string_view stem) {
    if (stem.size() < 3) return false;
    const char c2 = stem[stem.size() - 1];
    const char v = stem[stem.size() - 2];
    const char c1 = stem[stem.size() - 3];
    if (is_vowel(c2) || c2 == 'w' || c2 == 'x' || c2 == 'y') return false;
    return is_vowel(v) && !is_vowel(c1);
}

std::string strip_past_suffix(std::string_view lower) {
    const std::size_t n = lower.size();
    if (n > 4 && lower.ends_with("ied")) {
        return std::string(lower.substr(0, n - 3)) + "y";
    }
    if (n > 4 && lower.ends_with("eed")) {
        return std::string(lower.substr(0, n - 1));
    }
    if (n >= 4 && lower.ends_with("ed")) {
        std::string stem(lower.substr(0, n - 2));
        const std::size_t m = stem.size();
        static const std::string_view undoubled = "bdgkmnprtvz";
        if (m >= 3 && stem[m - 1] == stem[m - 2] &&
            undoubled.find(stem[m - 1]) != std::string_view::npos) {
            stem.pop_back();
            return stem;
        }
        const char last = stem[m - 1];
        if (last == 'c' || last == 'u' || last == 'v' || last == 'z' || last == 'g') {
            return stem + "e";
        }
        if (last == 's' && m >= 2 && is_vowel(stem[m - 2])) {
            return stem + "e";
        }
        if (last == 'l' && m >= 2 && !is_vowel(stem[m - 2]) && stem[m - 2] != 'l') {
            return stem + "e";
        }
        if (ends_cvc(stem) && stem_measure(stem) == 1) {
            return stem + "e";
        }
        return stem;
    }
    return {};
}

std::string third_singular_of(std::string_view base) {
    const std::size_t n = base.size();
    const char last = n > 0 ? base[n - 1] : '\0';
    if (last == 's' || last == 'x' || last == 'z' || last == 'o' ||
        base.ends_with("ch") || base.ends_with("sh")) {
        return std::string(base) + "es";
    }
    if (last == 'y' && n >= 2 && !is_vowel(base[n - 2])) {
        return std::string(base.substr(0, n - 1)) + "ies";
    }
    return std::string(base) + "s";
}

}  // namespace

const VerbTable& VerbTable::bundled() {
    static const VerbTable table = [] {
        VerbTable t;
        for (const auto& row : kBundledRows) t.add(row[0], row[1], row[2]);
        return t;
    }();
    return table;
}

VerbTable VerbTable::from_tsv(std::string_view content) {
    VerbTable t;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos) {
            throw line_error(line_no, "expected 3 tab-separated columns (base, past, third_person_singular)");
        }
        t.add(ascii_lower(line.substr(0, tab1)),
              ascii_lower(line.substr(tab1 + 1, tab2 - tab1 - 1)),
              ascii_lower(line.substr(tab2 + 1)));
    }
    return t;
}

VerbTable VerbTable::from_tsv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open verb table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_tsv(ss.str());
}

void VerbTable::add(std::string base, std::string past, std::string third_sg) {
    past_to_base_.insert_or_assign(std::move(past), base);
    third_sg_.insert_or_assign(third_sg, 1);
    base_to_third_.insert_or_assign(std::move(base), std::move(third_sg));
}

std::optional<std::string> VerbTable::base_of_past(std::string_view lowercase) const {
    auto it = past_to_base_.find(lowercase);
    if (it == past_to_base_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> VerbTable::third_of_base(std::string_view lowercase) const {
    auto it = base_to_third_.find(lowercase);
    if (it == base_to_third_.end()) return std::nullopt;
    return it->second;
}

bool VerbTable::is_base(std::string_view lowercase) const {
    return base_to_third_.count(lowercase) > 0;
}

bool VerbTable::is_past(std::string_view lowercase) const {
    return past_to_base_.count(lowercase) > 0;
}

bool VerbTable::is_third_sg(std::string_view lowercase) const {
    return third_sg_.count(lowercase) > 0;
}

std::string to_present_simple(std::string_view verb_surface, SubjectNumber number,
                              const VerbTable& table) {
    const std::string lower = ascii_lower(verb_surface);
    std::string base;
    if (auto from_table = table.base_of_past(lower)) {
        base = *from_table;
    } else {
        base = strip_past_suffix(lower);
        if (base.empty()) {
            throw Error("'" + std::string(verb_surface) + "' is not a recognizable past form");
        }
    }

    std::string result;
    if (number == SubjectNumber::plural) {
        result = base;
    } else if (auto third = table.third_of_base(base)) {
        result = *third;
    } else {
        result = third_singular_of(base);
    }

    if (!verb_surface.empty() && verb_surface[0] >= 'A' && verb_surface[0] <= 'Z' &&
        !result.empty()) {
        result[0] = static_cast<char>(result[0] - 'a' + 'A');
    }
    return result;
}

}  // namespace l1forge
