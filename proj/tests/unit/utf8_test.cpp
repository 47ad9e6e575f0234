#include "doctest.h"
#include "dousha/utf8.hpp"

using namespace dousha;

TEST_CASE("code point counting") {
  CHECK(utf8::length("") == 0);
  CHECK(utf8::length("abc") == 3);
  CHECK(utf8::length("同社") == 2);
  CHECK(utf8::length("aあb") == 3);
  CHECK(utf8::length("ＡＢＣ社。") == 5);
}

TEST_CASE("malformed input is rejected") {
  CHECK(!utf8::length("\xff").has_value());
  CHECK(!utf8::length("\xe3\x81").has_value());  // truncated 3-byte sequence
  CHECK(!utf8::length("a\x80").has_value());     // stray continuation byte
  CHECK(utf8::is_valid("同社は"));
  CHECK(!utf8::is_valid("\xc0\xaf"));  // overlong encoding
}

TEST_CASE("decode_at walks code points") {
  std::string_view text = "aは。";
  std::size_t pos = 0;
  CHECK(utf8::decode_at(text, pos) == U'a');
  CHECK(pos == 1);
  CHECK(utf8::decode_at(text, pos) == U'は');
  CHECK(pos == 4);
  CHECK(utf8::decode_at(text, pos) == U'。');
  CHECK(pos == text.size());
}

TEST_CASE("decode_at does not advance on bad input") {
  std::string_view text = "\xe3\x81";
  std::size_t pos = 0;
  CHECK(!utf8::decode_at(text, pos).has_value());
  CHECK(pos == 0);
}

TEST_CASE("byte_offset maps code point indices") {
  std::string_view text = "aあb";
  CHECK(utf8::byte_offset(text, 0) == 0);
  CHECK(utf8::byte_offset(text, 1) == 1);
  CHECK(utf8::byte_offset(text, 2) == 4);
  CHECK(utf8::byte_offset(text, 3) == 5);  // one past the last code point
  CHECK(utf8::byte_offset("", 0) == 0);
}
