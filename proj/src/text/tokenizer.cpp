#include "caudit/text/textproc.hpp"
#include "caudit/text/unicode_tables.hpp"

#include <array>

namespace caudit::text {

namespace {

struct Decoded {
    char32_t cp;
    std::size_t begin;
    std::size_t end;
};

std::vector<Decoded> decode_all(std::string_view chunk) {
    std::vector<Decoded> cps;
    std::size_t pos = 0;
    while (pos < chunk.size()) {
        std::size_t start = pos;
        char32_t cp = uni::decode_utf8(chunk, pos);
        cps.push_back({cp, start, pos});
    }
    return cps;
}

TokenKind classify(const std::vector<Decoded>& cps, std::size_t lo, std::size_t hi) {
    bool letter = false, digit = false, other = false;
    for (std::size_t i = lo; i < hi; ++i) {
        if (uni::is_letter(cps[i].cp))
            letter = true;
        else if (uni::is_digit(cps[i].cp))
            digit = true;
        else if (!uni::is_punct_or_symbol(cps[i].cp))
            other = true;
    }
    if (letter)
        return TokenKind::Word;
    if (digit)
        return TokenKind::Number;
    return other ? TokenKind::Word : TokenKind::Punct;
}

bool is_apostrophe(char32_t cp) {
    return cp == U'\'' || cp == U'’';
}

constexpr std::array<std::string_view, 7> kContractions = {"n't", "'s", "'re", "'ve",
                                                           "'ll", "'d", "'m"};

char32_t ascii_lower(char32_t cp) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
}

// Length in code points of the contraction suffix ending the range, 0 if none.
std::size_t contraction_suffix(const std::vector<Decoded>& cps, std::size_t lo, std::size_t hi) {
    for (std::string_view suffix : kContractions) {
        std::size_t k = suffix.size();  // contractions are ASCII, bytes == code points
        if (hi - lo <= k)
            continue;  // remainder must be non-empty
        bool match = true;
        for (std::size_t i = 0; i < k; ++i) {
            char32_t have = cps[hi - k + i].cp;
            char32_t want = suffix[i];
            if (want == U'\'' ? !is_apostrophe(have) : ascii_lower(have) != want) {
                match = false;
                break;
            }
        }
        if (match)
            return k;
    }
    return 0;
}

void emit_chunk(std::size_t chunk_begin, std::string_view chunk, std::vector<TokenSpan>& out) {
    std::vector<Decoded> cps = decode_all(chunk);
    std::size_t lo = 0, hi = cps.size();

    std::vector<TokenSpan> leading, trailing;
    while (lo < hi && uni::is_punct_or_symbol(cps[lo].cp) && !is_apostrophe(cps[lo].cp)) {
        leading.push_back({chunk_begin + cps[lo].begin, chunk_begin + cps[lo].end, TokenKind::Punct});
        ++lo;
    }
    while (hi > lo && uni::is_punct_or_symbol(cps[hi - 1].cp) && !is_apostrophe(cps[hi - 1].cp)) {
        --hi;
        trailing.push_back({chunk_begin + cps[hi].begin, chunk_begin + cps[hi].end, TokenKind::Punct});
    }
    // Bare apostrophes on the rim are punctuation after all.
    while (lo < hi && is_apostrophe(cps[lo].cp)) {
        leading.push_back({chunk_begin + cps[lo].begin, chunk_begin + cps[lo].end, TokenKind::Punct});
        ++lo;
    }
    while (hi > lo && is_apostrophe(cps[hi - 1].cp) && contraction_suffix(cps, lo, hi) == 0) {
        --hi;
        trailing.push_back({chunk_begin + cps[hi].begin, chunk_begin + cps[hi].end, TokenKind::Punct});
    }

    out.insert(out.end(), leading.begin(), leading.end());

    if (lo < hi) {
        // Split contraction suffixes from the right, e.g. couldn't -> could n't.
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        std::size_t end = hi;
        while (true) {
            std::size_t k = contraction_suffix(cps, lo, end);
            if (k == 0)
                break;
            parts.emplace_back(end - k, end);
            end -= k;
        }
        parts.emplace_back(lo, end);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            out.push_back({chunk_begin + cps[it->first].begin, chunk_begin + cps[it->second - 1].end,
                           classify(cps, it->first, it->second)});
        }
    }

    out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

std::vector<TokenSpan> tokenize(std::string_view text) {
    std::vector<TokenSpan> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t start = pos;
        char32_t cp = uni::decode_utf8(text, pos);
        if (uni::is_space(cp))
            continue;
        // extend chunk to next whitespace
        std::size_t chunk_end = pos;
        while (pos < text.size()) {
            std::size_t probe = pos;
            char32_t next = uni::decode_utf8(text, probe);
            if (uni::is_space(next))
                break;
            pos = probe;
            chunk_end = pos;
        }
        emit_chunk(start, text.substr(start, chunk_end - start), out);
    }
    return out;
}

std::size_t count_tokens(std::string_view text) {
    return tokenize(text).size();
}

std::size_t count_word_tokens(std::string_view text) {
    std::size_t n = 0;
    for (const TokenSpan& t : tokenize(text))
        if (t.kind == TokenKind::Word)
            ++n;
    return n;
}

}  // namespace caudit::text
