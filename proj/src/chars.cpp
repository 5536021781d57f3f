#include "bregex/chars.hpp"

#include <stdexcept>

namespace bregex {

std::string to_utf8(Char c) {
    std::string out;
    uint32_t cp = static_cast<uint32_t>(c);
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string to_utf8(const Text& text) {
    std::string out;
    out.reserve(text.size());
    for (Char c : text) out += to_utf8(c);
    return out;
}

Text from_utf8(const std::string& bytes) {
    Text out;
    out.reserve(bytes.size());
    size_t i = 0;
    auto fail = [&] { throw std::runtime_error("malformed UTF-8 at byte " + std::to_string(i)); };
    while (i < bytes.size()) {
        uint8_t b0 = static_cast<uint8_t>(bytes[i]);
        uint32_t cp = 0;
        int extra = 0;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            extra = 1;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            extra = 2;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            extra = 3;
        } else {
            fail();
        }
        if (i + extra >= bytes.size() && extra > 0) fail();
        for (int k = 1; k <= extra; ++k) {
            uint8_t bk = static_cast<uint8_t>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) fail();
            cp = (cp << 6) | (bk & 0x3F);
        }
        out += static_cast<Char>(cp);
        i += 1 + extra;
    }
    return out;
}

TextPtr make_text(const std::string& utf8) {
    return std::make_shared<const Text>(from_utf8(utf8));
}

TextPtr make_text(Text text) { return std::make_shared<const Text>(std::move(text)); }

}  // namespace bregex
