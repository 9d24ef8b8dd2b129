#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace caudit::util {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Line-oriented reader over a plain or gzip file (zlib reads both
// transparently). Offsets are uncompressed byte positions.
class LineReader {
public:
    explicit LineReader(const std::string& path);
    ~LineReader();
    LineReader(LineReader&&) noexcept;
    LineReader& operator=(LineReader&&) noexcept;
    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    // False at end of file. The trailing newline is stripped.
    bool next(std::string& line);
    // Reads exactly n bytes; false when the file ends first.
    bool read_exact(std::string& out, std::size_t n);
    // Uncompressed offset of the line that the next next() call returns.
    std::int64_t offset() const { return offset_; }
    const std::string& path() const { return path_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::string path_;
    std::int64_t offset_ = 0;
};

// Writes gzip when the path ends in ".gz", plain bytes otherwise.
class FileWriter {
public:
    explicit FileWriter(const std::string& path);
    ~FileWriter();
    FileWriter(const FileWriter&) = delete;
    FileWriter& operator=(const FileWriter&) = delete;

    void write(std::string_view data);
    void close();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

}  // namespace caudit::util
