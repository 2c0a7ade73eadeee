#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctcseg::utf8 {

struct InvalidUtf8 : std::runtime_error {
    std::size_t byte_offset;
    explicit InvalidUtf8(std::size_t offset)
        : std::runtime_error("invalid UTF-8 sequence at byte " + std::to_string(offset)),
          byte_offset(offset) {}
};

// Decodes the code point starting at s[pos]. Advances pos past it.
// Rejects overlong encodings, surrogates, and values above U+10FFFF.
char32_t decode_next(std::string_view s, std::size_t& pos);

std::vector<char32_t> decode(std::string_view s);

void append(std::string& out, char32_t cp);

std::string encode(const std::vector<char32_t>& cps);

bool is_valid(std::string_view s);

}  // namespace ctcseg::utf8
