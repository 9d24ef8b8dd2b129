#include "caudit/corpus/shard_io.hpp"

#include <nlohmann/json.hpp>

#include "caudit/util/dates.hpp"

namespace caudit::corpus {

using nlohmann::json;

namespace {

// WET shards are WARC files holding one "conversion" record per page.
bool looks_like_wet(const std::string& path) {
    if (path.find(".wet") != std::string::npos || path.find(".warc") != std::string::npos)
        return true;
    return false;
}

std::string_view trim_cr(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

ShardFormat detect_format(const std::string& path) {
    return looks_like_wet(path) ? ShardFormat::Wet : ShardFormat::Jsonl;
}

ShardReader::ShardReader(const std::string& path, ShardFormat format)
    : reader_(path), path_(path), format_(format == ShardFormat::Auto ? detect_format(path) : format) {}

ShardReader::~ShardReader() = default;
ShardReader::ShardReader(ShardReader&&) noexcept = default;

bool ShardReader::next(Document& doc) {
    return format_ == ShardFormat::Wet ? next_wet(doc) : next_jsonl(doc);
}

bool ShardReader::next_jsonl(Document& doc) {
    std::string line;
    while (true) {
        record_offset_ = reader_.offset();
        if (!reader_.next(line))
            return false;
        if (line.empty())
            continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("url") ||
            !rec.contains("text") || !rec["url"].is_string() || !rec["text"].is_string()) {
            ++skipped_;
            continue;
        }
        doc.url = rec["url"].get<std::string>();
        doc.text = rec["text"].get<std::string>();
        doc.timestamp.reset();
        if (rec.contains("timestamp") && rec["timestamp"].is_string())
            doc.timestamp = util::parse_iso8601_utc(rec["timestamp"].get<std::string>());
        if (doc.url.empty()) {
            ++skipped_;
            continue;
        }
        return true;
    }
}

bool ShardReader::next_wet(Document& doc) {
    std::string line;
    while (true) {
        // scan to the next record header
        record_offset_ = reader_.offset();
        if (!reader_.next(line))
            return false;
        if (trim_cr(line).substr(0, 5) != "WARC/")
            continue;

        std::string type, uri, date;
        long content_length = -1;
        while (reader_.next(line)) {
            std::string_view l = trim_cr(line);
            if (l.empty())
                break;
            auto colon = l.find(':');
            if (colon == std::string_view::npos)
                continue;
            std::string_view key = l.substr(0, colon);
            std::string_view val = l.substr(colon + 1);
            while (!val.empty() && val.front() == ' ')
                val.remove_prefix(1);
            if (key == "WARC-Type")
                type = std::string(val);
            else if (key == "WARC-Target-URI")
                uri = std::string(val);
            else if (key == "WARC-Date")
                date = std::string(val);
            else if (key == "Content-Length")
                content_length = std::atol(std::string(val).c_str());
        }
        if (content_length < 0) {
            ++skipped_;
            continue;
        }
        std::string body;
        if (!reader_.read_exact(body, static_cast<std::size_t>(content_length))) {
            ++skipped_;
            return false;
        }
        if (type != "conversion" || uri.empty()) {
            if (type != "warcinfo")
                ++skipped_;
            continue;
        }
        doc.url = uri;
        doc.text = std::move(body);
        doc.timestamp = date.empty() ? std::nullopt : util::parse_iso8601_utc(date);
        return true;
    }
}

std::vector<Document> read_shard(const std::string& path, ShardFormat format,
                                 std::uint64_t* skipped) {
    ShardReader reader(path, format);
    std::vector<Document> docs;
    Document doc;
    while (reader.next(doc))
        docs.push_back(doc);
    if (skipped)
        *skipped = reader.skipped();
    return docs;
}

std::string to_jsonl_record(const Document& doc) {
    json rec;
    rec["url"] = doc.url;
    rec["text"] = doc.text;
    if (doc.timestamp)
        rec["timestamp"] = util::format_iso8601_utc(*doc.timestamp);
    return rec.dump();
}

ShardWriter::ShardWriter(const std::string& path) : out_(path) {}

void ShardWriter::write(const Document& doc) {
    std::string line = to_jsonl_record(doc);
    line.push_back('\n');
    out_.write(line);
    ++count_;
}

std::uint64_t write_shard(const std::vector<Document>& docs, const std::string& path) {
    ShardWriter writer(path);
    for (const Document& d : docs)
        writer.write(d);
    writer.close();
    return writer.count();
}

}  // namespace caudit::corpus
