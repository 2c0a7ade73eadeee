#include "ctcseg/utf8.hpp"

namespace ctcseg::utf8 {

char32_t decode_next(std::string_view s, std::size_t& pos) {
    const std::size_t start = pos;
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };

    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }

    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        throw InvalidUtf8(start);
    }

    if (pos + static_cast<std::size_t>(len) > s.size()) throw InvalidUtf8(start);
    for (int i = 1; i < len; ++i) {
        unsigned char b = byte(pos + static_cast<std::size_t>(i));
        if ((b & 0xC0) != 0x80) throw InvalidUtf8(start);
        cp = (cp << 6) | (b & 0x3F);
    }

    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len]) throw InvalidUtf8(start);                  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) throw InvalidUtf8(start);    // surrogate
    if (cp > 0x10FFFF) throw InvalidUtf8(start);

    pos += static_cast<std::size_t>(len);
    return cp;
}

std::vector<char32_t> decode(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) out.push_back(decode_next(s, pos));
    return out;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) append(out, cp);
    return out;
}

bool is_valid(std::string_view s) {
    std::size_t pos = 0;
    try {
        while (pos < s.size()) decode_next(s, pos);
    } catch (const InvalidUtf8&) {
        return false;
    }
    return true;
}

}  // namespace ctcseg::utf8
