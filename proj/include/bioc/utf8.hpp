#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace bioc::utf8 {

// Number of code points in a UTF-8 string. Invalid bytes count as one code
// point each so the function is total.
std::size_t length(std::string_view text);

// Decodes one code point starting at byte offset `pos` and advances `pos`.
// Invalid sequences yield U+FFFD and advance one byte.
char32_t decode_next(std::string_view text, std::size_t& pos);

// Appends `cp` to `out` as UTF-8.
void append(std::string& out, char32_t cp);

// True when every byte is < 0x80.
bool is_ascii(std::string_view text);

} // namespace bioc::utf8
