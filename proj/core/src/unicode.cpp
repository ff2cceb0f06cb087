#include "lexnet/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <mutex>

#include "lexnet/errors.hpp"

namespace lexnet::unicode {

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    out.push_back(cp < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(cp));
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool err = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
  if (err) {
    buf[0] = 0xEF;  // U+FFFD
    buf[1] = 0xBF;
    buf[2] = 0xBD;
    len = 3;
  }
  out.assign(reinterpret_cast<const char*>(buf), static_cast<size_t>(len));
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

namespace {

const icu::Normalizer2& nfc_instance() {
  static std::once_flag once;
  static const icu::Normalizer2* instance = nullptr;
  std::call_once(once, [] {
    UErrorCode status = U_ZERO_ERROR;
    instance = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || instance == nullptr) {
      throw InvariantViolation("ICU NFC normalizer unavailable");
    }
  });
  return *instance;
}

}  // namespace

std::string to_nfc(std::string_view text) {
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc_instance().normalize(input, status);
  if (U_FAILURE(status)) {
    throw InvalidInput("NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool is_letter(char32_t cp) {
  return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_L_MASK) != 0;
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::string lower_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : decode_utf8(text)) out += encode_utf8(to_lower(cp));
  return out;
}

}  // namespace lexnet::unicode
