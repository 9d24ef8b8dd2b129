#include "caudit/util/io.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace caudit::util {

struct LineReader::Impl {
    gzFile file = nullptr;
    std::vector<char> buf;
    std::size_t buf_pos = 0;
    std::size_t buf_len = 0;
    bool eof = false;

    explicit Impl(const std::string& path) : buf(1 << 16) {
        file = gzopen(path.c_str(), "rb");
        if (!file)
            throw IoError("cannot open " + path);
    }
    ~Impl() {
        if (file)
            gzclose(file);
    }

    bool fill() {
        if (eof)
            return false;
        int n = gzread(file, buf.data(), static_cast<unsigned>(buf.size()));
        if (n < 0)
            throw IoError("gzread failed");
        if (n == 0) {
            eof = true;
            return false;
        }
        buf_pos = 0;
        buf_len = static_cast<std::size_t>(n);
        return true;
    }
};

LineReader::LineReader(const std::string& path) : impl_(std::make_unique<Impl>(path)), path_(path) {}
LineReader::~LineReader() = default;
LineReader::LineReader(LineReader&&) noexcept = default;
LineReader& LineReader::operator=(LineReader&&) noexcept = default;

bool LineReader::next(std::string& line) {
    line.clear();
    bool any = false;
    for (;;) {
        if (impl_->buf_pos >= impl_->buf_len && !impl_->fill())
            break;
        const char* start = impl_->buf.data() + impl_->buf_pos;
        std::size_t avail = impl_->buf_len - impl_->buf_pos;
        const char* nl = static_cast<const char*>(memchr(start, '\n', avail));
        if (nl) {
            line.append(start, nl - start);
            impl_->buf_pos += (nl - start) + 1;
            any = true;
            offset_ += static_cast<std::int64_t>(line.size()) + 1;
            return true;
        }
        line.append(start, avail);
        impl_->buf_pos = impl_->buf_len;
        any = any || avail > 0;
    }
    if (any)
        offset_ += static_cast<std::int64_t>(line.size());
    return any;
}

bool LineReader::read_exact(std::string& out, std::size_t n) {
    out.clear();
    out.reserve(n);
    while (out.size() < n) {
        if (impl_->buf_pos >= impl_->buf_len && !impl_->fill())
            return false;
        std::size_t take = std::min(n - out.size(), impl_->buf_len - impl_->buf_pos);
        out.append(impl_->buf.data() + impl_->buf_pos, take);
        impl_->buf_pos += take;
    }
    offset_ += static_cast<std::int64_t>(n);
    return true;
}

struct FileWriter::Impl {
    gzFile gz = nullptr;
    std::FILE* plain = nullptr;

    explicit Impl(const std::string& path) {
        if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
            gz = gzopen(path.c_str(), "wb");
            if (!gz)
                throw IoError("cannot open " + path + " for writing");
        } else {
            plain = std::fopen(path.c_str(), "wb");
            if (!plain)
                throw IoError("cannot open " + path + " for writing");
        }
    }
    void close() {
        if (gz) {
            gzclose(gz);
            gz = nullptr;
        }
        if (plain) {
            std::fclose(plain);
            plain = nullptr;
        }
    }
    ~Impl() { close(); }
};

FileWriter::FileWriter(const std::string& path) : impl_(std::make_unique<Impl>(path)) {}
FileWriter::~FileWriter() = default;

void FileWriter::write(std::string_view data) {
    if (impl_->gz) {
        if (gzwrite(impl_->gz, data.data(), static_cast<unsigned>(data.size())) !=
            static_cast<int>(data.size()))
            throw IoError("gzwrite failed");
    } else if (impl_->plain) {
        if (std::fwrite(data.data(), 1, data.size(), impl_->plain) != data.size())
            throw IoError("fwrite failed");
    } else {
        throw IoError("writer already closed");
    }
}

void FileWriter::close() {
    impl_->close();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw IoError("write failed: " + path);
}

bool file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::exists(path, ec);
}

}  // namespace caudit::util
