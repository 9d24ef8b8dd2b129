#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace caudit::corpus {

// One URL's scraped text; the unit of all processing.
struct Document {
    std::string url;
    std::string text;
    std::optional<std::int64_t> timestamp;  // crawl time, epoch seconds UTC

    bool operator==(const Document&) const = default;
};

enum class CorpusVariant { NoClean, NoBlocklist, Clean };

std::string_view variant_name(CorpusVariant v);

struct CorpusStats {
    std::uint64_t doc_count = 0;
    std::uint64_t token_count = 0;
    std::uint64_t byte_size = 0;  // uncompressed UTF-8 text bytes

    CorpusStats& operator+=(const CorpusStats& o) {
        doc_count += o.doc_count;
        token_count += o.token_count;
        byte_size += o.byte_size;
        return *this;
    }
    friend CorpusStats operator+(CorpusStats a, const CorpusStats& b) { return a += b; }
    bool operator==(const CorpusStats&) const = default;
};

CorpusStats stats_of(const Document& doc);

}  // namespace caudit::corpus
