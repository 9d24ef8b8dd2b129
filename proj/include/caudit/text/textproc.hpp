#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace caudit::text {

enum class TokenKind { Word, Punct, Number };

struct TokenSpan {
    std::size_t begin = 0;  // byte offsets into the source text
    std::size_t end = 0;
    TokenKind kind = TokenKind::Word;

    std::string_view view(std::string_view text) const {
        return text.substr(begin, end - begin);
    }
};

struct SentenceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::string_view view(std::string_view text) const {
        return text.substr(begin, end - begin);
    }
};

// Whitespace split, leading/trailing punctuation peeled into single-character
// Punct tokens, English contraction suffixes (n't 's 're 've 'll 'd 'm) split
// off, internal hyphens kept. Spans are non-overlapping and ordered.
std::vector<TokenSpan> tokenize(std::string_view text);

std::size_t count_tokens(std::string_view text);
std::size_t count_word_tokens(std::string_view text);

// Sentence boundary: one of . ! ? U+2026 followed by whitespace or end of
// text, unless the preceding word is a known abbreviation. Trailing text
// without a terminal forms a sentence of its own.
std::vector<SentenceSpan> split_sentences(std::string_view text);
std::vector<SentenceSpan> split_sentences(std::string_view text,
                                          const std::vector<std::string>& abbreviations);

// The bundled abbreviation list, one entry per line in data/abbreviations.txt.
const std::vector<std::string>& default_abbreviations();

// Paragraphs are separated by one or more blank lines.
std::vector<std::string> split_paragraphs(std::string_view text);

// Compatibility fold + lowercase, punctuation and symbols removed, whitespace
// runs collapsed to a single space, trimmed. Idempotent.
std::string normalize_for_matching(std::string_view text);

}  // namespace caudit::text
