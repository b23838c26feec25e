#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace l1forge::utf8 {

// All span offsets in the data model are Unicode scalar-value offsets, not
// bytes. These helpers do the byte<->codepoint bookkeeping. Decoding is
// lenient: a malformed lead byte is consumed as a single one-byte codepoint
// so offsets stay well defined on dirty input.

/// Decodes the codepoint starting at byte position `pos`; advances `pos`
/// past it.
char32_t decode(std::string_view s, std::size_t& pos);

/// Number of codepoints in the string.
std::size_t length(std::string_view s);

/// Byte offset of codepoint index `cp_index` (== s.size() when the index
/// equals the codepoint length).
std::size_t byte_offset(std::string_view s, std::size_t cp_index);

/// Substring by codepoint range [start, end).
std::string substr(std::string_view s, std::size_t start, std::size_t end);

/// All codepoints with their starting byte offsets, in order.
struct Decoded {
    char32_t cp;
    std::size_t byte_pos;
};
std::vector<Decoded> decode_all(std::string_view s);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);

bool is_space(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_punct(char32_t cp);
bool is_cyrillic(char32_t cp);

/// True if the string contains at least one Cyrillic codepoint.
bool contains_cyrillic(std::string_view s);

}  // namespace l1forge::utf8
