#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "caudit/corpus/document.hpp"
#include "caudit/util/io.hpp"

namespace caudit::corpus {

enum class ShardFormat { Auto, Jsonl, Wet };

// Streams documents out of a shard file (plain or gzip). Malformed records
// are skipped and counted, never fatal.
class ShardReader {
public:
    explicit ShardReader(const std::string& path, ShardFormat format = ShardFormat::Auto);
    ~ShardReader();
    ShardReader(ShardReader&&) noexcept;

    bool next(Document& doc);
    // Uncompressed byte offset of the record most recently returned by next().
    std::int64_t last_record_offset() const { return record_offset_; }
    std::uint64_t skipped() const { return skipped_; }
    const std::string& path() const { return path_; }

private:
    bool next_jsonl(Document& doc);
    bool next_wet(Document& doc);

    util::LineReader reader_;
    std::string path_;
    ShardFormat format_;
    std::uint64_t skipped_ = 0;
    std::int64_t record_offset_ = 0;
};

std::vector<Document> read_shard(const std::string& path, ShardFormat format = ShardFormat::Auto,
                                 std::uint64_t* skipped = nullptr);

// One JSON object per line with fields url, text and optional timestamp.
class ShardWriter {
public:
    explicit ShardWriter(const std::string& path);
    void write(const Document& doc);
    std::uint64_t count() const { return count_; }
    void close() { out_.close(); }

private:
    util::FileWriter out_;
    std::uint64_t count_ = 0;
};

std::uint64_t write_shard(const std::vector<Document>& docs, const std::string& path);

std::string to_jsonl_record(const Document& doc);

ShardFormat detect_format(const std::string& path);

}  // namespace caudit::corpus
