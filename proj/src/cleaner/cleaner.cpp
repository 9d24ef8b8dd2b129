#include "caudit/cleaner/cleaner.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "caudit/text/textproc.hpp"
#include "caudit/text/unicode_tables.hpp"
#include "caudit/util/hash.hpp"
#include "caudit/util/io.hpp"

namespace caudit::cleaner {

namespace {

std::string lower_token(std::string_view tok) {
    std::string out;
    out.reserve(tok.size());
    std::size_t pos = 0;
    while (pos < tok.size()) {
        char32_t cp = uni::decode_utf8(tok, pos);
        std::string_view f = uni::fold(cp);
        if (f.empty())
            uni::append_utf8(out, cp);
        else
            out.append(f);
    }
    return out;
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty())
        return true;
    std::string h = lower_ascii(haystack);
    std::string n = lower_ascii(needle);
    return h.find(n) != std::string::npos;
}

}  // namespace

void CleanerConfig::validate() const {
    if (min_words_per_line < 1)
        throw std::invalid_argument("min_words_per_line must be >= 1");
    if (min_sentences < 1)
        throw std::invalid_argument("min_sentences must be >= 1");
    if (!(english_prob_threshold > 0.0 && english_prob_threshold <= 1.0))
        throw std::invalid_argument("english_prob_threshold must be in (0, 1]");
    if (terminal_punct.empty())
        throw std::invalid_argument("terminal_punct must not be empty");
}

std::string_view reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::None:
            return "none";
        case RejectReason::TooFewSentences:
            return "too_few_sentences";
        case RejectReason::PlaceholderText:
            return "placeholder_text";
        case RejectReason::Blocklist:
            return "blocklist";
        case RejectReason::NotEnglish:
            return "not_english";
        case RejectReason::Duplicate:
            return "duplicate";
    }
    return "?";
}

std::optional<RejectReason> reject_reason_from_name(std::string_view name) {
    for (RejectReason r : {RejectReason::None, RejectReason::TooFewSentences,
                           RejectReason::PlaceholderText, RejectReason::Blocklist,
                           RejectReason::NotEnglish, RejectReason::Duplicate})
        if (reject_reason_name(r) == name)
            return r;
    return std::nullopt;
}

bool line_passes(std::string_view line, const CleanerConfig& cfg) {
    std::string_view trimmed = line;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed.empty())
        return false;
    if (cfg.terminal_punct.find(trimmed.back()) == std::string::npos)
        return false;
    int words = 0;
    for (const text::TokenSpan& t : text::tokenize(trimmed))
        if (t.kind == text::TokenKind::Word)
            ++words;
    return words >= cfg.min_words_per_line;
}

Blocklist Blocklist::from_file(const std::string& path) {
    std::vector<std::string> terms;
    std::istringstream in(util::read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#')
            continue;
        std::size_t e = line.find_last_not_of(" \t");
        terms.push_back(line.substr(b, e - b + 1));
    }
    return from_terms(terms);
}

Blocklist Blocklist::from_terms(const std::vector<std::string>& terms) {
    Blocklist bl;
    for (const std::string& raw : terms) {
        Term term;
        term.original = raw;
        term.order = bl.terms_.size();
        for (const text::TokenSpan& t : text::tokenize(raw))
            term.tokens.push_back(lower_token(t.view(raw)));
        if (term.tokens.empty())
            continue;
        bl.by_first_token_[term.tokens.front()].push_back(bl.terms_.size());
        bl.terms_.push_back(std::move(term));
    }
    return bl;
}

std::vector<std::string> Blocklist::matches(std::string_view text) const {
    std::vector<std::string> out;
    if (terms_.empty())
        return out;

    std::vector<std::string> tokens;
    for (const text::TokenSpan& t : text::tokenize(text))
        tokens.push_back(lower_token(t.view(text)));

    std::vector<bool> hit(terms_.size(), false);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto it = by_first_token_.find(tokens[i]);
        if (it == by_first_token_.end())
            continue;
        for (std::size_t term_idx : it->second) {
            if (hit[term_idx])
                continue;
            const Term& term = terms_[term_idx];
            if (i + term.tokens.size() > tokens.size())
                continue;
            bool all = true;
            for (std::size_t k = 1; k < term.tokens.size(); ++k)
                if (tokens[i + k] != term.tokens[k]) {
                    all = false;
                    break;
                }
            if (all)
                hit[term_idx] = true;
        }
    }
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (hit[i])
            out.push_back(terms_[i].original);
    return out;
}

std::vector<std::string> contains_blocklist_term(std::string_view text, const Blocklist& blocklist) {
    return blocklist.matches(text);
}

std::string filtered_text(const corpus::Document& doc, const FilterDecision& decision) {
    std::vector<std::string> lines = split_lines(doc.text);
    std::string out;
    for (std::size_t idx : decision.kept_line_indices) {
        if (!out.empty())
            out.push_back('\n');
        out += lines[idx];
    }
    return out;
}

FilterDecision clean_document(const corpus::Document& doc, const CleanerConfig& cfg,
                              const LanguageDetector& detector, const Blocklist& blocklist) {
    FilterDecision d;

    std::vector<std::string> lines = split_lines(doc.text);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (line_passes(lines[i], cfg))
            d.kept_line_indices.push_back(i);

    auto reject = [&](RejectReason r) {
        d.rejected = true;
        d.reason = r;
        return d;
    };

    for (const std::string& phrase : cfg.placeholder_phrases)
        if (contains_ci(doc.text, phrase))
            return reject(RejectReason::PlaceholderText);

    std::string kept = filtered_text(doc, d);
    if (text::split_sentences(kept).size() < static_cast<std::size_t>(cfg.min_sentences))
        return reject(RejectReason::TooFewSentences);

    d.language = detector.detect(cfg.language_on_filtered ? std::string_view(kept)
                                                          : std::string_view(doc.text));
    if (d.language.language != "en" || d.language.probability < cfg.english_prob_threshold)
        return reject(RejectReason::NotEnglish);

    if (cfg.enable_blocklist) {
        d.matched_blocklist_terms = blocklist.matches(doc.text);
        if (!d.matched_blocklist_terms.empty())
            return reject(RejectReason::Blocklist);
    }
    return d;
}

std::optional<corpus::Document> SpanDeduper::apply(const corpus::Document& doc) {
    auto spans = text::split_sentences(doc.text);
    if (spans.size() < 3)
        return doc;  // no 3-sentence span to dedup on

    std::vector<std::string> norm(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i)
        norm[i] = text::normalize_for_matching(spans[i].view(doc.text));

    std::vector<bool> drop(spans.size(), false);
    for (std::size_t i = 0; i + 3 <= spans.size(); ++i) {
        std::string joined = norm[i];
        joined.push_back('\x1f');
        joined += norm[i + 1];
        joined.push_back('\x1f');
        joined += norm[i + 2];
        std::uint64_t h = util::fnv1a64(joined);
        if (!seen_.insert(h).second)
            drop[i] = drop[i + 1] = drop[i + 2] = true;
    }

    std::string rebuilt;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (drop[i])
            continue;
        if (!rebuilt.empty())
            rebuilt.push_back(' ');
        rebuilt += std::string(spans[i].view(doc.text));
    }
    if (rebuilt.empty())
        return std::nullopt;
    corpus::Document out = doc;
    out.text = std::move(rebuilt);
    return out;
}

VariantDecision decide_variants(const corpus::Document& doc, const CleanerConfig& cfg,
                                const LanguageDetector& detector, const Blocklist& blocklist) {
    VariantDecision v;
    CleanerConfig with_blocklist = cfg;
    with_blocklist.enable_blocklist = true;
    v.decision = clean_document(doc, with_blocklist, detector, blocklist);

    // A document enters noClean iff it passes the shared language gate; the
    // other checks decide the cleaned variants on top of that.
    bool english;
    if (v.decision.reason == RejectReason::None || v.decision.reason == RejectReason::Blocklist) {
        english = true;
    } else {
        LanguageScore score =
            cfg.language_on_filtered
                ? detector.detect(filtered_text(doc, v.decision))
                : detector.detect(doc.text);
        english = score.language == "en" && score.probability >= cfg.english_prob_threshold;
        if (v.decision.reason == RejectReason::NotEnglish)
            english = false;
    }
    v.in_no_clean = english;
    v.in_no_blocklist =
        english && (v.decision.reason == RejectReason::None || v.decision.reason == RejectReason::Blocklist);
    v.in_clean = v.decision.reason == RejectReason::None;
    return v;
}

}  // namespace caudit::cleaner
