#ifndef LEXNET_UNICODE_HPP
#define LEXNET_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Thin wrappers over the pieces of Unicode handling the text pipeline needs:
// UTF-8 decoding, NFC normalization, letter classification and lowercasing.

namespace lexnet::unicode {

// Decodes UTF-8 into codepoints. Invalid byte sequences yield U+FFFD, one
// replacement per offending byte, so the result is always well defined.
std::vector<char32_t> decode_utf8(std::string_view text);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Canonical composition (NFC). "c" + combining caron becomes "č".
std::string to_nfc(std::string_view text);

// True for general category L* (letters, including all diacritic forms).
bool is_letter(char32_t cp);

// Simple (single codepoint) lowercase mapping.
char32_t to_lower(char32_t cp);

// Lowercases a whole UTF-8 string codepoint by codepoint.
std::string lower_utf8(std::string_view text);

}  // namespace lexnet::unicode

#endif  // LEXNET_UNICODE_HPP
