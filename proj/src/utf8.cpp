#include "l1forge/utf8.hpp"

namespace l1forge::utf8 {

char32_t decode(std::string_view s, std::size_t& pos) {
    const auto first = static_cast<unsigned char>(s[pos]);
    std::size_t len = 1;
    char32_t cp = first;
    if (first < 0x80) {
        len = 1;
    } else if ((first & 0xE0) == 0xC0) {
        len = 2;
        cp = first & 0x1F;
    } else if ((first & 0xF0) == 0xE0) {
        len = 3;
        cp = first & 0x0F;
    } else if ((first & 0xF8) == 0xF0) {
        len = 4;
        cp = first & 0x07;
    } else {
        // malformed lead byte: consume it as-is
        ++pos;
        return first;
    }
    if (pos + len > s.size()) {
        ++pos;
        return first;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const auto cont = static_cast<unsigned char>(s[pos + i]);
        if ((cont & 0xC0) != 0x80) {
            ++pos;
            return first;
        }
        cp = (cp << 6) | (cont & 0x3F);
    }
    pos += len;
    return cp;
}

std::size_t length(std::string_view s) {
    std::size_t pos = 0, n = 0;
    while (pos < s.size()) {
        decode(s, pos);
        ++n;
    }
    return n;
}

std::size_t byte_offset(std::string_view s, std::size_t cp_index) {
    std::size_t pos = 0, n = 0;
    while (pos < s.size() && n < cp_index) {
        decode(s, pos);
        ++n;
    }
    return pos;
}

std::string substr(std::string_view s, std::size_t start, std::size_t end) {
    const std::size_t b0 = byte_offset(s, start);
    const std::size_t b1 = byte_offset(s, end);
    return std::string(s.substr(b0, b1 - b0));
}

std::vector<Decoded> decode_all(std::string_view s) {
    std::vector<Decoded> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t at = pos;
        const char32_t cp = decode(s, pos);
        out.push_back({cp, at});
    }
    return out;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(char32_t cp) {
    std::string s;
    append(s, cp);
    return s;
}

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
           cp == U'\v' || cp == U'\f' || cp == 0x00A0;
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_punct(char32_t cp) {
    if (cp < 0x80) {
        const char c = static_cast<char>(cp);
        static const std::string_view ascii_punct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
        return ascii_punct.find(c) != std::string_view::npos;
    }
    switch (cp) {
        case 0x2018:  // left single quote
        case 0x2019:  // right single quote
        case 0x201C:  // left double quote
        case 0x201D:  // right double quote
        case 0x2013:  // en dash
        case 0x2014:  // em dash
        case 0x2026:  // ellipsis
        case 0x00AB:  // «
        case 0x00BB:  // »
            return true;
        default:
            return false;
    }
}

bool is_cyrillic(char32_t cp) {
    return (cp >= 0x0400 && cp <= 0x04FF) || (cp >= 0x0500 && cp <= 0x052F);
}

bool contains_cyrillic(std::string_view s) {
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (is_cyrillic(decode(s, pos))) return true;
    }
    return false;
}

}  // namespace l1forge::utf8
