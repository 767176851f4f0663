#include "tar.hpp"

#include <array>
#include <cstring>

#include <zlib.h>

#include "bioc/error.hpp"

namespace bioc::tar {

namespace {

constexpr std::size_t kBlockSize = 512;

[[noreturn]] void unreadable(const std::filesystem::path& archive, const std::string& why) {
    throw Error(Error::Kind::ArchiveUnreadable, archive.string() + ": " + why);
}

struct GzFile {
    gzFile handle = nullptr;

    explicit GzFile(const std::filesystem::path& path) {
        handle = gzopen(path.string().c_str(), "rb");
    }
    ~GzFile() {
        if (handle != nullptr)
            gzclose(handle);
    }
    GzFile(const GzFile&) = delete;
    GzFile& operator=(const GzFile&) = delete;
};

// Reads exactly `len` bytes; returns false on clean EOF at a block boundary.
bool read_exact(gzFile f, char* out, std::size_t len, const std::filesystem::path& archive) {
    std::size_t got = 0;
    while (got < len) {
        const int n = gzread(f, out + got, static_cast<unsigned>(len - got));
        if (n < 0)
            unreadable(archive, "gzip read error");
        if (n == 0) {
            if (got == 0)
                return false;
            unreadable(archive, "truncated archive");
        }
        got += static_cast<std::size_t>(n);
    }
    return true;
}

bool is_zero_block(const std::array<char, kBlockSize>& block) {
    for (char c : block)
        if (c != 0)
            return false;
    return true;
}

unsigned long long parse_octal(const char* field, std::size_t len,
                               const std::filesystem::path& archive) {
    unsigned long long value = 0;
    bool seen = false;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = field[i];
        if (c == '\0')
            break;
        if (c == ' ')
            continue;
        if (c < '0' || c > '7')
            unreadable(archive, "bad octal field in tar header");
        value = value * 8 + static_cast<unsigned long long>(c - '0');
        seen = true;
    }
    if (!seen && len > 0 && field[0] != '\0' && field[0] != ' ')
        unreadable(archive, "bad octal field in tar header");
    return value;
}

std::string header_string(const char* field, std::size_t len) {
    std::size_t n = 0;
    while (n < len && field[n] != '\0')
        ++n;
    return std::string(field, n);
}

bool checksum_ok(const std::array<char, kBlockSize>& block,
                 const std::filesystem::path& archive) {
    const unsigned long long stored = parse_octal(block.data() + 148, 8, archive);
    unsigned long long sum = 0;
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const unsigned char byte = (i >= 148 && i < 156)
                                       ? static_cast<unsigned char>(' ')
                                       : static_cast<unsigned char>(block[i]);
        sum += byte;
    }
    return sum == stored;
}

} // namespace

void for_each_member(const std::filesystem::path& archive,
                     const std::function<void(Member&&)>& fn) {
    GzFile file(archive);
    if (file.handle == nullptr)
        unreadable(archive, "cannot open");

    std::array<char, kBlockSize> block{};
    std::string pending_long_name;

    while (true) {
        if (!read_exact(file.handle, block.data(), kBlockSize, archive))
            break; // archives without the trailing zero blocks still end cleanly
        if (is_zero_block(block))
            break;
        if (!checksum_ok(block, archive))
            unreadable(archive, "tar header checksum mismatch");

        const char typeflag = block[156];
        const auto size = parse_octal(block.data() + 124, 12, archive);
        const std::size_t padded = (static_cast<std::size_t>(size) + kBlockSize - 1) /
                                   kBlockSize * kBlockSize;

        std::string name = header_string(block.data(), 100);
        const std::string prefix = header_string(block.data() + 345, 155);
        if (!prefix.empty())
            name = prefix + "/" + name;
        if (!pending_long_name.empty()) {
            name = pending_long_name;
            pending_long_name.clear();
        }

        if (typeflag == 'L') { // GNU long name: data block holds the real name
            std::string data(padded, '\0');
            if (padded > 0 && !read_exact(file.handle, data.data(), padded, archive))
                unreadable(archive, "truncated long-name entry");
            pending_long_name = data.substr(0, size);
            if (!pending_long_name.empty() && pending_long_name.back() == '\0')
                pending_long_name.pop_back();
            continue;
        }

        if (typeflag == '0' || typeflag == '\0') {
            std::string data(padded, '\0');
            if (padded > 0 && !read_exact(file.handle, data.data(), padded, archive))
                unreadable(archive, "truncated member " + name);
            data.resize(size);
            fn(Member{std::move(name), std::move(data)});
            continue;
        }

        // directories, links, pax headers: skip the data blocks
        std::string data(padded, '\0');
        if (padded > 0 && !read_exact(file.handle, data.data(), padded, archive))
            unreadable(archive, "truncated member " + name);
    }
}

} // namespace bioc::tar
