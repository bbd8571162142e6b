#include "stego/bmp.hpp"

#include "stego/errors.hpp"

namespace stego {

namespace {

constexpr std::size_t kOffFileSize = 2;
constexpr std::size_t kOffDataOffset = 10;
constexpr std::size_t kOffInfoSize = 14;
constexpr std::size_t kOffWidth = 18;
constexpr std::size_t kOffHeight = 22;
constexpr std::size_t kOffPlanes = 26;
constexpr std::size_t kOffBpp = 28;
constexpr std::size_t kOffCompression = 30;
constexpr std::size_t kMinHeaderBytes = 54;

}  // namespace

BmpImage parse_bmp(ByteView bytes) {
    if (bytes.size() < 2) throw Error(Errc::truncated, "file shorter than the BMP magic");
    if (bytes[0] != 'B' || bytes[1] != 'M') throw Error(Errc::not_bmp, "missing BM magic");
    if (bytes.size() < kMinHeaderBytes) throw Error(Errc::truncated, "file shorter than the 54-byte BMP header");

    BmpHeader h;
    h.file_size = read_u32le(bytes, kOffFileSize);
    h.reserved = read_u32le(bytes, kBmpReservedOffset);
    h.data_offset = read_u32le(bytes, kOffDataOffset);
    h.info_size = read_u32le(bytes, kOffInfoSize);
    h.width = read_i32le(bytes, kOffWidth);
    h.height = read_i32le(bytes, kOffHeight);
    h.planes = read_u16le(bytes, kOffPlanes);
    h.bits_per_pixel = read_u16le(bytes, kOffBpp);

    if (h.bits_per_pixel != 24)
        throw Error(Errc::unsupported_bmp, "only 24-bit pixels are supported");
    if (h.planes != 1)
        throw Error(Errc::unsupported_bmp, "plane count must be 1");
    if (read_u32le(bytes, kOffCompression) != 0)
        throw Error(Errc::unsupported_bmp, "compressed BMPs are not supported");
    if (h.width <= 0 || h.height <= 0)
        throw Error(Errc::unsupported_bmp, "only bottom-up BMPs with positive dimensions are supported");
    if (h.data_offset > bytes.size())
        throw Error(Errc::truncated, "pixel data offset beyond end of file");
    if (h.data_offset < kMinHeaderBytes)
        throw Error(Errc::unsupported_bmp, "pixel data would overlap the fixed header fields");
    if (h.file_size > bytes.size())
        throw Error(Errc::truncated, "declared file size exceeds actual length");
    if (h.file_size < bytes.size())
        throw Error(Errc::unsupported_bmp, "trailing bytes beyond declared file size");

    h.raw_header.assign(bytes.begin(), bytes.begin() + h.data_offset);

    BmpImage image;
    image.carrier.assign(bytes.begin() + h.data_offset, bytes.begin() + h.file_size);
    image.header = std::move(h);
    return image;
}

Bytes write_bmp(const BmpImage& image) {
    Bytes out;
    out.reserve(image.header.raw_header.size() + image.carrier.size());
    out.insert(out.end(), image.header.raw_header.begin(), image.header.raw_header.end());
    out.insert(out.end(), image.carrier.begin(), image.carrier.end());
    return out;
}

}  // namespace stego
