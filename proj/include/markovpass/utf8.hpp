#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace markovpass::utf8 {

/// Strict decode: rejects overlong forms, surrogates and values past U+10FFFF.
std::optional<std::u32string> decode(std::string_view bytes);

std::string encode(std::u32string_view text);
std::string encode(char32_t c);

/// Decode that throws Error(InvalidEncoding) instead of returning nullopt.
std::u32string decode_or_throw(std::string_view bytes);

}  // namespace markovpass::utf8
