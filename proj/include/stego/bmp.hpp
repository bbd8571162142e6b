#pragma once

#include <cstdint>

#include "stego/bytes.hpp"

namespace stego {

// Decoded view of a 24-bit uncompressed BMP. Field layout on disk
// (little-endian): magic "BM" at 0, file_size at 2, reserved at 6,
// data_offset at 10, info_size at 14, width at 18, height at 22,
// planes at 26, bits_per_pixel at 28, compression at 30.
struct BmpHeader {
    std::uint32_t file_size = 0;
    std::uint32_t reserved = 0;     // carries the payload size in stego files
    std::uint32_t data_offset = 0;  // pixel data begins here
    std::uint32_t info_size = 0;
    std::int32_t width = 0;
    std::int32_t height = 0;
    std::uint16_t planes = 0;
    std::uint16_t bits_per_pixel = 0;
    Bytes raw_header;  // verbatim bytes [0, data_offset); serialization source

    bool operator==(const BmpHeader&) const = default;
};

struct BmpImage {
    BmpHeader header;
    Bytes carrier;  // flat byte region [data_offset, file_size), row padding included

    bool operator==(const BmpImage&) const = default;
};

// Offset of the reserved field; the stego layout stores the payload size here.
inline constexpr std::size_t kBmpReservedOffset = 6;

BmpImage parse_bmp(ByteView bytes);
Bytes write_bmp(const BmpImage& image);

}  // namespace stego
