#include "caudit/cleaner/cleaner.hpp"
#include "caudit/cleaner/langid_seeds.hpp"
#include "caudit/text/unicode_tables.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace caudit::cleaner {

namespace {

// Lowercased letters with everything else collapsed to single spaces; the
// trigram alphabet is small and accent-preserving.
std::u32string letters_projection(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    bool pending_space = true;  // swallow leading separators
    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp = uni::decode_utf8(text, pos);
        std::string_view f = uni::fold(cp);
        if (f.empty()) {
            if (uni::is_letter(cp)) {
                if (pending_space && !out.empty())
                    out.push_back(U' ');
                pending_space = false;
                out.push_back(cp);
            } else {
                pending_space = true;
            }
        } else {
            std::size_t fpos = 0;
            while (fpos < f.size()) {
                char32_t c = uni::decode_utf8(f, fpos);
                if (uni::is_letter(c)) {
                    if (pending_space && !out.empty())
                        out.push_back(U' ');
                    pending_space = false;
                    out.push_back(c);
                } else {
                    pending_space = true;
                }
            }
        }
    }
    return out;
}

// trigram of code points hashed into 32 bits
std::uint32_t trigram_key(char32_t a, char32_t b, char32_t c) {
    std::uint64_t h = 1469598103934665603ull;
    for (char32_t cp : {a, b, c}) {
        h ^= cp;
        h *= 1099511628211ull;
    }
    return static_cast<std::uint32_t>(h ^ (h >> 32));
}

template <typename Fn>
void for_each_trigram(const std::u32string& s, Fn&& fn) {
    if (s.size() < 3)
        return;
    for (std::size_t i = 0; i + 3 <= s.size(); ++i)
        fn(trigram_key(s[i], s[i + 1], s[i + 2]));
}

}  // namespace

TrigramLanguageDetector::TrigramLanguageDetector()
    : TrigramLanguageDetector(bundled_langid_seeds()) {}

TrigramLanguageDetector::TrigramLanguageDetector(
    const std::vector<std::pair<std::string, std::string>>& seeds) {
    std::unordered_set<std::uint32_t> vocabulary;
    std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> counts(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::u32string proj = letters_projection(seeds[i].second);
        for_each_trigram(proj, [&](std::uint32_t key) {
            ++counts[i][key];
            vocabulary.insert(key);
        });
    }
    const double vocab_size = static_cast<double>(vocabulary.size()) + 1.0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        Profile p;
        p.language = seeds[i].first;
        std::uint64_t total = 0;
        for (const auto& [key, n] : counts[i])
            total += n;
        const double denom = static_cast<double>(total) + vocab_size;  // add-one smoothing
        for (const auto& [key, n] : counts[i])
            p.log_prob.emplace(key, std::log((static_cast<double>(n) + 1.0) / denom));
        p.log_unseen = std::log(1.0 / denom);
        profiles_.push_back(std::move(p));
    }
}

LanguageScore TrigramLanguageDetector::detect(std::string_view text) const {
    std::u32string proj = letters_projection(text);
    if (proj.size() < 3 || profiles_.empty())
        return {"und", 0.0};

    std::vector<double> ll(profiles_.size(), 0.0);
    for_each_trigram(proj, [&](std::uint32_t key) {
        for (std::size_t i = 0; i < profiles_.size(); ++i) {
            auto it = profiles_[i].log_prob.find(key);
            ll[i] += it != profiles_[i].log_prob.end() ? it->second : profiles_[i].log_unseen;
        }
    });

    std::size_t best = 0;
    double max_ll = ll[0];
    for (std::size_t i = 1; i < ll.size(); ++i)
        if (ll[i] > max_ll) {
            max_ll = ll[i];
            best = i;
        }
    double denom = 0.0;
    for (double v : ll)
        denom += std::exp(v - max_ll);
    return {profiles_[best].language, 1.0 / denom};
}

}  // namespace caudit::cleaner
