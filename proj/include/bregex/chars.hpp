#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace bregex {

// Subject strings are sequences of Unicode scalar values. All positions in
// the engine are indices into a Text, between characters (0..size inclusive).
using Char = char32_t;
using Text = std::u32string;
using TextPtr = std::shared_ptr<const Text>;

std::string to_utf8(const Text& text);
std::string to_utf8(Char c);
// Throws std::runtime_error on malformed input.
Text from_utf8(const std::string& bytes);

TextPtr make_text(const std::string& utf8);
TextPtr make_text(Text text);

inline bool is_ascii_digit(Char c) { return c >= U'0' && c <= U'9'; }

// The flagless semantics fixes the word set to ASCII letters, digits, underscore.
inline bool is_word_char(Char c) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || is_ascii_digit(c) ||
           c == U'_';
}

inline bool is_space_char(Char c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\v' || c == U'\f' || c == U'\r';
}

inline bool is_line_terminator(Char c) {
    return c == U'\n' || c == U'\r' || c == U' ' || c == U' ';
}

}  // namespace bregex
