// Shared test fixtures: generated BMP/WAV files, random data, a reference
// implementation of the gap-counter embedding loop (kept independent of the
// library code paths it checks), and a helper to spawn the CLI.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "stego/bytes.hpp"

namespace fixtures {

namespace fs = std::filesystem;

inline stego::Bytes random_bytes(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    stego::Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(dist(rng));
    return out;
}

// 24-bit bottom-up BMP with a 54-byte header and random pixel bytes.
inline stego::Bytes make_bmp_bytes(std::int32_t width, std::int32_t height, std::uint32_t seed) {
    const std::uint32_t stride = (static_cast<std::uint32_t>(width) * 3 + 3) & ~3u;
    const std::uint32_t carrier = stride * static_cast<std::uint32_t>(height);
    const std::uint32_t file_size = 54 + carrier;

    stego::Bytes b;
    b.reserve(file_size);
    b.push_back('B');
    b.push_back('M');
    stego::push_u32le(b, file_size);
    stego::push_u32le(b, 0);                                  // reserved
    stego::push_u32le(b, 54);                                 // data offset
    stego::push_u32le(b, 40);                                 // info size
    stego::push_u32le(b, static_cast<std::uint32_t>(width));
    stego::push_u32le(b, static_cast<std::uint32_t>(height));
    stego::push_u16le(b, 1);                                  // planes
    stego::push_u16le(b, 24);                                 // bits per pixel
    stego::push_u32le(b, 0);                                  // compression
    stego::push_u32le(b, carrier);                            // image size
    stego::push_u32le(b, 2835);                               // x pixels per metre
    stego::push_u32le(b, 2835);                               // y pixels per metre
    stego::push_u32le(b, 0);                                  // colors used
    stego::push_u32le(b, 0);                                  // colors important

    const auto pixels = random_bytes(carrier, seed);
    b.insert(b.end(), pixels.begin(), pixels.end());
    return b;
}

// Transliteration of the reference encoder: poke the payload size into the
// reserved field, the marker '1' plus 3 zero-padded extension bytes at
// offset info_size, then walk consecutive 3-byte groups with a gap counter
// and overwrite the low 2-3-3 bits whenever the counter hits the spacing.
inline stego::Bytes reference_embed(const stego::Bytes& cover, const stego::Bytes& payload,
                                    const std::string& ext) {
    auto rd32 = [](const stego::Bytes& v, std::size_t o) -> std::uint32_t {
        return static_cast<std::uint32_t>(v[o]) | (static_cast<std::uint32_t>(v[o + 1]) << 8) |
               (static_cast<std::uint32_t>(v[o + 2]) << 16) |
               (static_cast<std::uint32_t>(v[o + 3]) << 24);
    };

    const std::uint32_t f_size = rd32(cover, 2);
    const std::uint32_t offset = rd32(cover, 10);
    const std::uint32_t head_size = rd32(cover, 14);
    const std::uint64_t file_size = payload.size();
    const std::uint64_t spacing = (f_size - offset) / (3 * file_size);

    stego::Bytes out = cover;
    out[6] = static_cast<std::uint8_t>(file_size & 0xFF);
    out[7] = static_cast<std::uint8_t>((file_size >> 8) & 0xFF);
    out[8] = static_cast<std::uint8_t>((file_size >> 16) & 0xFF);
    out[9] = static_cast<std::uint8_t>((file_size >> 24) & 0xFF);
    out[head_size] = '1';
    for (std::size_t i = 0; i < 3; ++i)
        out[head_size + 1 + i] = i < ext.size() ? static_cast<std::uint8_t>(ext[i]) : 0;

    std::uint64_t gap = 0;
    std::size_t next = 0;
    for (std::uint64_t pos = offset; pos + 3 <= f_size; pos += 3) {
        if (gap == spacing) {
            if (next < payload.size()) {
                const std::uint8_t ch = payload[next++];
                out[pos] = static_cast<std::uint8_t>((out[pos] & 252) | ((ch & 192) >> 6));
                out[pos + 1] = static_cast<std::uint8_t>((out[pos + 1] & 248) | ((ch & 56) >> 3));
                out[pos + 2] = static_cast<std::uint8_t>((out[pos + 2] & 248) | (ch & 7));
            }
            gap = 0;
        }
        ++gap;
    }
    return out;
}

// Counterpart reference decoder: marker test, 3 extension bytes, size from
// the reserved field, then group reads at the recomputed spacing.
struct ReferenceExtract {
    bool genuine = false;
    stego::Bytes data;
    std::string ext;
};

inline ReferenceExtract reference_extract(const stego::Bytes& file) {
    auto rd32 = [](const stego::Bytes& v, std::size_t o) -> std::uint32_t {
        return static_cast<std::uint32_t>(v[o]) | (static_cast<std::uint32_t>(v[o + 1]) << 8) |
               (static_cast<std::uint32_t>(v[o + 2]) << 16) |
               (static_cast<std::uint32_t>(v[o + 3]) << 24);
    };
    ReferenceExtract r;
    const std::uint32_t head_size = rd32(file, 14);
    if (file[head_size] != '1') return r;
    r.genuine = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const char c = static_cast<char>(file[head_size + 1 + i]);
        if (c != '\0') r.ext.push_back(c);
    }
    const std::uint32_t f_size = rd32(file, 2);
    const std::uint32_t offset = rd32(file, 10);
    const std::uint64_t file_size = rd32(file, 6);
    const std::uint64_t spacing = (f_size - offset) / (3 * file_size);
    for (std::uint64_t count = 1; count <= file_size; ++count) {
        const std::uint64_t pos = offset + count * spacing * 3;
        r.data.push_back(static_cast<std::uint8_t>(((file[pos] & 3) << 6) |
                                                   ((file[pos + 1] & 7) << 3) |
                                                   (file[pos + 2] & 7)));
    }
    return r;
}

// Payload sizes that divide the group count cannot be embedded (the last
// position k*spacing would land one past the final group); generators skip them.
inline bool embeddable_size(std::uint64_t carrier_len, std::uint64_t size) {
    const std::uint64_t groups = carrier_len / 3;
    if (size == 0 || groups == 0) return false;
    const std::uint64_t spacing = carrier_len / (3 * size);
    return spacing >= 1 && size * spacing <= groups - 1;
}

inline std::string random_extension(std::mt19937& rng) {
    static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz0123456789_";
    std::uniform_int_distribution<std::size_t> len(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string ext;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) ext.push_back(alphabet[pick(rng)]);
    return ext;
}

struct TempDir {
    fs::path path;

    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("stegkit_test_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline void write_file(const fs::path& p, stego::ByteView data) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

inline stego::Bytes read_back(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return stego::Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& exe, const std::vector<std::string>& args,
                         const fs::path& workdir) {
    const fs::path out_file = workdir / "_stdout.txt";
    const fs::path err_file = workdir / "_stderr.txt";
    std::string cmd = "cd '" + workdir.string() + "' && '" + exe + "'";
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " > '" + out_file.string() + "' 2> '" + err_file.string() + "'";

    const int rc = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return result;
}

}  // namespace fixtures
