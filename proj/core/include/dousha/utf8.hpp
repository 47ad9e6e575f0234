#ifndef DOUSHA_UTF8_HPP
#define DOUSHA_UTF8_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace dousha::utf8 {

// Number of code points in a UTF-8 string. Returns nullopt on malformed input.
std::optional<std::size_t> length(std::string_view text);

bool is_valid(std::string_view text);

// Decodes the code point starting at byte_pos and advances byte_pos past it.
// Returns nullopt (without advancing) on malformed input.
std::optional<char32_t> decode_at(std::string_view text, std::size_t& byte_pos);

// Byte offset of the code point with index cp_index; text.size() when
// cp_index equals the code point count. Requires valid UTF-8 and
// cp_index <= length(text).
std::size_t byte_offset(std::string_view text, std::size_t cp_index);

}  // namespace dousha::utf8

#endif  // DOUSHA_UTF8_HPP
