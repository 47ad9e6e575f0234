#include "dousha/utf8.hpp"

namespace dousha::utf8 {

namespace {

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::optional<char32_t> decode_at(std::string_view text, std::size_t& byte_pos) {
  if (byte_pos >= text.size()) return std::nullopt;
  const unsigned char lead = static_cast<unsigned char>(text[byte_pos]);
  char32_t cp = 0;
  std::size_t extra = 0;
  if (lead < 0x80) {
    cp = lead;
  } else if ((lead & 0xE0) == 0xC0) {
    cp = lead & 0x1F;
    extra = 1;
  } else if ((lead & 0xF0) == 0xE0) {
    cp = lead & 0x0F;
    extra = 2;
  } else if ((lead & 0xF8) == 0xF0) {
    cp = lead & 0x07;
    extra = 3;
  } else {
    return std::nullopt;
  }
  if (byte_pos + 1 + extra > text.size()) return std::nullopt;
  for (std::size_t i = 1; i <= extra; ++i) {
    const unsigned char b = static_cast<unsigned char>(text[byte_pos + i]);
    if (!is_continuation(b)) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and values outside the Unicode range.
  static constexpr char32_t kMin[4] = {0x0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra]) return std::nullopt;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  byte_pos += 1 + extra;
  return cp;
}

std::optional<std::size_t> length(std::string_view text) {
  std::size_t pos = 0;
  std::size_t count = 0;
  while (pos < text.size()) {
    if (!decode_at(text, pos)) return std::nullopt;
    ++count;
  }
  return count;
}

bool is_valid(std::string_view text) { return length(text).has_value(); }

std::size_t byte_offset(std::string_view text, std::size_t cp_index) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < cp_index; ++i) {
    decode_at(text, pos);
  }
  return pos;
}

}  // namespace dousha::utf8
