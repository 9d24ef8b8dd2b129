#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "caudit/corpus/document.hpp"

namespace caudit::cleaner {

struct LanguageScore {
    std::string language;  // ISO-639-1 code, "und" when nothing scores
    double probability = 0.0;
};

class LanguageDetector {
public:
    virtual ~LanguageDetector() = default;
    virtual LanguageScore detect(std::string_view text) const = 0;
    virtual std::string name() const = 0;
};

// Character-trigram naive Bayes over {en, de, fr, es, ru}, trained at
// construction from bundled seed text. Deterministic.
class TrigramLanguageDetector : public LanguageDetector {
public:
    TrigramLanguageDetector();
    // profiles: language code -> training text
    explicit TrigramLanguageDetector(
        const std::vector<std::pair<std::string, std::string>>& profiles);

    LanguageScore detect(std::string_view text) const override;
    std::string name() const override { return "trigram-nb"; }

private:
    struct Profile {
        std::string language;
        std::unordered_map<std::uint32_t, double> log_prob;
        double log_unseen = 0.0;
    };
    std::vector<Profile> profiles_;
};

// Term list matched case-insensitively on token boundaries; multi-word
// phrases match as contiguous token sequences.
class Blocklist {
public:
    Blocklist() = default;
    static Blocklist from_file(const std::string& path);  // one term per line, # comments
    static Blocklist from_terms(const std::vector<std::string>& terms);

    std::vector<std::string> matches(std::string_view text) const;
    bool empty() const { return terms_.size() == 0; }
    std::size_t size() const { return terms_.size(); }

private:
    struct Term {
        std::string original;
        std::vector<std::string> tokens;  // lowercased
        std::size_t order;
    };
    std::vector<Term> terms_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
};

struct CleanerConfig {
    int min_words_per_line = 3;
    int min_sentences = 5;
    double english_prob_threshold = 0.99;
    std::string blocklist_path;
    std::vector<std::string> placeholder_phrases = {"lorem ipsum"};
    bool enable_blocklist = true;
    bool enable_dedup = false;
    // terminal characters a kept line must end with
    std::string terminal_punct = ".!?\"";
    // run language ID on the line-filtered text rather than the raw document
    bool language_on_filtered = true;

    void validate() const;  // throws std::invalid_argument
};

enum class RejectReason { None, TooFewSentences, PlaceholderText, Blocklist, NotEnglish, Duplicate };

std::string_view reject_reason_name(RejectReason r);
std::optional<RejectReason> reject_reason_from_name(std::string_view name);

struct FilterDecision {
    std::vector<std::size_t> kept_line_indices;
    bool rejected = false;
    RejectReason reason = RejectReason::None;
    std::vector<std::string> matched_blocklist_terms;
    LanguageScore language;
};

// Line survives iff it ends in a terminal punctuation character (after
// trailing-whitespace trim) and has at least min_words_per_line word tokens.
bool line_passes(std::string_view line, const CleanerConfig& cfg);

std::vector<std::string> contains_blocklist_term(std::string_view text, const Blocklist& blocklist);

// Full per-document pipeline: line filter, placeholder check on the raw
// text, sentence count and language on the filtered text, then blocklist on
// the raw text. The first failing check sets the reason.
FilterDecision clean_document(const corpus::Document& doc, const CleanerConfig& cfg,
                              const LanguageDetector& detector, const Blocklist& blocklist);

std::string filtered_text(const corpus::Document& doc, const FilterDecision& decision);

// Removes any 3-consecutive-sentence span already seen earlier in the
// stream (first occurrence wins). Documents left empty are dropped.
class SpanDeduper {
public:
    // Returns the deduplicated document, or nullopt when nothing survives.
    std::optional<corpus::Document> apply(const corpus::Document& doc);

private:
    std::unordered_set<std::uint64_t> seen_;
};

struct VariantDecision {
    bool in_no_clean = false;
    bool in_no_blocklist = false;
    bool in_clean = false;
    FilterDecision decision;
};

// Membership in the three hosted variants. A single language decision gates
// all of them, which makes clean <= noBlocklist <= noClean structural.
VariantDecision decide_variants(const corpus::Document& doc, const CleanerConfig& cfg,
                                const LanguageDetector& detector, const Blocklist& blocklist);

}  // namespace caudit::cleaner
