#include "caudit/text/textproc.hpp"
#include "caudit/text/unicode_tables.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace caudit::text {

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Word immediately preceding and including the terminal dot, e.g. "e.g." for
// the candidate boundary after "e.g". Letters, digits and dots count as part
// of the word.
std::string word_before(std::string_view text, std::size_t dot_pos) {
    std::size_t begin = dot_pos;
    while (begin > 0) {
        char c = text[begin - 1];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.')
            --begin;
        else
            break;
    }
    return lower_ascii(text.substr(begin, dot_pos - begin + 1));
}

}  // namespace

const std::vector<std::string>& default_abbreviations() {
    static const std::vector<std::string> kList = {
        "Mr.",  "Mrs.", "Ms.",  "Dr.",   "Prof.", "St.",  "Jr.",  "Sr.",
        "vs.",  "etc.", "e.g.", "i.e.",  "U.S.",  "U.K.", "No.",  "Fig.",
        "Inc.", "Ltd.", "Co.",  "Corp.", "Jan.",  "Feb.", "Mar.", "Apr.",
        "Jun.", "Jul.", "Aug.", "Sep.",  "Sept.", "Oct.", "Nov.", "Dec.",
    };
    return kList;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
    return split_sentences(text, default_abbreviations());
}

std::vector<SentenceSpan> split_sentences(std::string_view text,
                                          const std::vector<std::string>& abbreviations) {
    std::unordered_set<std::string> abbrev;
    for (const std::string& a : abbreviations)
        abbrev.insert(lower_ascii(a));

    std::vector<SentenceSpan> out;
    std::size_t sentence_begin = std::string_view::npos;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t start = pos;
        char32_t cp = uni::decode_utf8(text, pos);
        if (sentence_begin == std::string_view::npos) {
            if (uni::is_space(cp))
                continue;
            sentence_begin = start;
        }
        bool terminal = cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…';
        if (!terminal)
            continue;

        // boundary only when followed by whitespace or end of text
        std::size_t probe = pos;
        if (probe < text.size()) {
            char32_t next = uni::decode_utf8(text, probe);
            if (!uni::is_space(next))
                continue;
        }
        if (cp == U'.' && abbrev.count(word_before(text, start)))
            continue;

        out.push_back({sentence_begin, pos});
        sentence_begin = std::string_view::npos;
    }
    if (sentence_begin != std::string_view::npos) {
        std::size_t end = text.size();
        while (end > sentence_begin) {
            unsigned char c = text[end - 1];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
                --end;
            else
                break;
        }
        out.push_back({sentence_begin, end});
    }
    return out;
}

std::vector<std::string> split_paragraphs(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    std::size_t pos = 0;
    auto flush = [&] {
        std::size_t b = current.find_first_not_of(" \t\r\n");
        if (b != std::string::npos) {
            std::size_t e = current.find_last_not_of(" \t\r\n");
            out.push_back(current.substr(b, e - b + 1));
        }
        current.clear();
    };
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        std::string_view stripped = line;
        while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' ' ||
                                     stripped.back() == '\t'))
            stripped.remove_suffix(1);
        if (stripped.empty()) {
            flush();
        } else {
            if (!current.empty())
                current.push_back('\n');
            current.append(line);
        }
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    flush();
    return out;
}

std::string normalize_for_matching(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    std::size_t pos = 0;
    std::u32string expanded;
    while (pos < text.size()) {
        char32_t cp = uni::decode_utf8(text, pos);
        expanded.clear();
        std::string_view f = uni::fold(cp);
        if (f.empty()) {
            expanded.push_back(cp);
        } else {
            std::size_t fpos = 0;
            while (fpos < f.size())
                expanded.push_back(uni::decode_utf8(f, fpos));
        }
        for (char32_t c : expanded) {
            if (uni::is_space(c)) {
                pending_space = true;
            } else if (uni::is_punct_or_symbol(c)) {
                // dropped
            } else {
                if (pending_space && !out.empty())
                    out.push_back(' ');
                pending_space = false;
                uni::append_utf8(out, c);
            }
        }
    }
    return out;
}

}  // namespace caudit::text
