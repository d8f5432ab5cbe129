#pragma once

#include <string>
#include <string_view>

namespace clir::utf8 {

// Appends the UTF-8 encoding of one scalar value.
void append(std::string& out, char32_t cp);

std::string encode(std::u32string_view scalars);

// Lenient decode: malformed byte sequences become U+FFFD, one replacement
// per offending byte.
std::u32string decode(std::string_view bytes);

}  // namespace clir::utf8
