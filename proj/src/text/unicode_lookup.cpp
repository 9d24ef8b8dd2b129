#include "caudit/text/unicode_tables.hpp"

#include <algorithm>

namespace caudit::uni {

namespace {

bool in_ranges(const CpRange* ranges, std::size_t n, char32_t cp) {
    auto it = std::upper_bound(ranges, ranges + n, cp,
                               [](char32_t v, const CpRange& r) { return v < r.lo; });
    return it != ranges && cp <= (it - 1)->hi;
}

}  // namespace

bool is_punct_or_symbol(char32_t cp) {
    return in_ranges(kPunctSymbolRanges, kPunctSymbolRangesSize, cp);
}

bool is_space(char32_t cp) {
    return in_ranges(kSpaceRanges, kSpaceRangesSize, cp);
}

bool is_letter(char32_t cp) {
    return in_ranges(kLetterRanges, kLetterRangesSize, cp);
}

bool is_digit(char32_t cp) {
    return in_ranges(kDigitRanges, kDigitRangesSize, cp);
}

std::string_view fold(char32_t cp) {
    auto it = std::lower_bound(kFoldTable, kFoldTable + kFoldTableSize, cp,
                               [](const FoldEntry& e, char32_t v) { return e.cp < v; });
    if (it != kFoldTable + kFoldTableSize && it->cp == cp)
        return it->utf8;
    return {};
}

char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t n = text.size();
    unsigned char b0 = s[pos];
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
        ++pos;
        return 0xFFFD;
    }
    if (pos + len > n) {
        ++pos;
        return 0xFFFD;
    }
    for (int i = 1; i < len; ++i) {
        unsigned char b = s[pos + i];
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++pos;
        return 0xFFFD;
    }
    pos += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
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

}  // namespace caudit::uni
