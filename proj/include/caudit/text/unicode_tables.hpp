#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace caudit::uni {

struct FoldEntry {
    char32_t cp;
    const char* utf8;  // replacement, itself stable under folding
};

struct CpRange {
    char32_t lo;
    char32_t hi;  // inclusive
};

extern const FoldEntry kFoldTable[];
extern const std::size_t kFoldTableSize;
extern const CpRange kPunctSymbolRanges[];
extern const std::size_t kPunctSymbolRangesSize;
extern const CpRange kSpaceRanges[];
extern const std::size_t kSpaceRangesSize;
extern const CpRange kLetterRanges[];
extern const std::size_t kLetterRangesSize;
extern const CpRange kDigitRanges[];
extern const std::size_t kDigitRangesSize;

bool is_punct_or_symbol(char32_t cp);
bool is_space(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

// Compatibility fold (NFKC per code point) plus lowercasing. Returns an
// empty view when the code point maps to itself.
std::string_view fold(char32_t cp);

// Decodes one UTF-8 code point starting at text[pos]. Advances pos past the
// sequence. Malformed bytes decode as U+FFFD, one byte at a time.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

}  // namespace caudit::uni
