#include "stego/lsb.hpp"

#include <string_view>

#include "stego/errors.hpp"

namespace stego {

namespace {

constexpr std::uint64_t kMarkerSpan = 4;  // marker byte + 3 extension bytes

// The marker region must sit past every header field parse_bmp decodes
// (the last one, compression, ends at byte 33) and before the pixel data,
// or the stego file could not be parsed back.
constexpr std::uint64_t kMinMarkerOffset = 34;

bool extension_char_ok(std::uint8_t c) {
    return c >= 0x20 && c < 0x7F && c != '.';
}

void check_extension(std::string_view ext) {
    if (ext.size() > 3)
        throw Error(Errc::extension_too_long, "extension longer than 3 characters");
    for (char c : ext)
        if (!extension_char_ok(static_cast<std::uint8_t>(c)))
            throw Error(Errc::invalid_extension, "extension must be printable ASCII without dots");
}

std::uint8_t byte_at(const BmpImage& image, std::uint64_t offset) {
    const auto& hdr = image.header.raw_header;
    return offset < hdr.size() ? hdr[offset] : image.carrier[offset - hdr.size()];
}

PackedChannels group_at(const BmpImage& image, std::uint64_t group_index) {
    const std::uint8_t* p = image.carrier.data() + group_index * 3;
    return {p[0], p[1], p[2]};
}

// Zero-padded 3 bytes -> extension string, or nullopt when malformed
// (byte after the first NUL, non-printable char, or a dot).
std::optional<std::string> decode_extension(const std::array<std::uint8_t, 3>& raw) {
    std::string ext;
    bool terminated = false;
    for (std::uint8_t c : raw) {
        if (c == 0) {
            terminated = true;
            continue;
        }
        if (terminated || !extension_char_ok(c)) return std::nullopt;
        ext.push_back(static_cast<char>(c));
    }
    return ext;
}

}  // namespace

PackedChannels pack_byte(PackedChannels carrier, std::uint8_t ch) {
    return {
        static_cast<std::uint8_t>((carrier.r & 0xFC) | ((ch & 0xC0) >> 6)),
        static_cast<std::uint8_t>((carrier.g & 0xF8) | ((ch & 0x38) >> 3)),
        static_cast<std::uint8_t>((carrier.b & 0xF8) | (ch & 0x07)),
    };
}

std::uint8_t unpack_byte(PackedChannels carrier) {
    return static_cast<std::uint8_t>(((carrier.r & 0x03) << 6) |
                                     ((carrier.g & 0x07) << 3) |
                                     (carrier.b & 0x07));
}

std::uint64_t pixel_spacing(std::uint64_t carrier_len_bytes, std::uint64_t payload_size) {
    if (payload_size == 0)
        throw Error(Errc::empty_payload, "payload size must be at least 1");
    const std::uint64_t spacing = carrier_len_bytes / (3 * payload_size);
    if (spacing == 0)
        throw Error(Errc::capacity_exceeded, "carrier too small: pixel spacing would be 0");
    return spacing;
}

std::uint64_t capacity(const BmpImage& image) {
    const std::uint64_t groups = image.carrier.size() / 3;
    // First M (from the top) whose last embedded group M*spacing is in range.
    // Resolves within two iterations for groups >= 3: groups-1 never divides groups.
    for (std::uint64_t m = groups; m >= 1; --m) {
        const std::uint64_t spacing = groups / m;
        if (spacing >= 1 && m * spacing <= groups - 1) return m;
    }
    return 0;
}

BmpImage embed(const BmpImage& cover, const Payload& payload) {
    check_extension(payload.extension);
    if (payload.data.empty())
        throw Error(Errc::empty_payload, "payload is empty");

    const BmpHeader& h = cover.header;
    if (h.info_size < kMinMarkerOffset || h.info_size + kMarkerSpan > h.data_offset)
        throw Error(Errc::metadata_collision,
                    "no room for the marker between the header fields and pixel data");

    const std::uint64_t carrier_len = cover.carrier.size();
    const std::uint64_t groups = carrier_len / 3;
    const std::uint64_t size = payload.data.size();
    const std::uint64_t spacing = pixel_spacing(carrier_len, size);
    if (size * spacing > groups - 1)
        throw Error(Errc::capacity_exceeded,
                    "payload does not fit: the last embedded byte would fall past the final carrier group");

    BmpImage stego = cover;
    auto& hdr = stego.header.raw_header;
    store_u32le(hdr.data() + kBmpReservedOffset, static_cast<std::uint32_t>(size));
    stego.header.reserved = static_cast<std::uint32_t>(size);
    hdr[h.info_size] = kStegoMarker;
    for (std::size_t i = 0; i < 3; ++i)
        hdr[h.info_size + 1 + i] =
            i < payload.extension.size() ? static_cast<std::uint8_t>(payload.extension[i]) : 0;

    for (std::uint64_t k = 1; k <= size; ++k) {
        std::uint8_t* p = stego.carrier.data() + k * spacing * 3;
        const PackedChannels packed = pack_byte({p[0], p[1], p[2]}, payload.data[k - 1]);
        p[0] = packed.r;
        p[1] = packed.g;
        p[2] = packed.b;
    }
    return stego;
}

Payload extract(const BmpImage& stego) {
    const BmpHeader& h = stego.header;
    const std::uint64_t total = h.raw_header.size() + stego.carrier.size();
    if (h.info_size + kMarkerSpan > total || byte_at(stego, h.info_size) != kStegoMarker)
        throw Error(Errc::not_genuine_stego, "marker absent: not a genuine stego file");

    const std::uint32_t size = h.reserved;
    if (size == 0)
        throw Error(Errc::corrupt_metadata, "claimed payload size is 0");

    const std::uint64_t carrier_len = stego.carrier.size();
    const std::uint64_t groups = carrier_len / 3;
    const std::uint64_t spacing = carrier_len / (3ull * size);
    if (spacing == 0)
        throw Error(Errc::corrupt_metadata, "claimed payload size admits no pixel spacing");
    if (size * spacing > groups - 1)
        throw Error(Errc::corrupt_metadata,
                    "claimed payload size reaches past the final carrier group");

    std::array<std::uint8_t, 3> raw_ext{};
    for (std::size_t i = 0; i < 3; ++i) raw_ext[i] = byte_at(stego, h.info_size + 1 + i);
    const auto ext = decode_extension(raw_ext);
    if (!ext)
        throw Error(Errc::corrupt_metadata, "stored extension is malformed");

    Payload payload;
    payload.extension = *ext;
    payload.data.reserve(size);
    for (std::uint64_t k = 1; k <= size; ++k)
        payload.data.push_back(unpack_byte(group_at(stego, k * spacing)));
    return payload;
}

InspectReport inspect(const BmpImage& image) {
    InspectReport report;
    const BmpHeader& h = image.header;
    const std::uint64_t total = h.raw_header.size() + image.carrier.size();
    if (h.info_size + kMarkerSpan > total) {
        report.note = "no room for a marker at the expected offset";
        return report;
    }
    if (byte_at(image, h.info_size) != kStegoMarker) {
        report.note = "no marker";
        return report;
    }

    report.marker_present = true;
    StegoMetadata md;
    md.payload_size = h.reserved;
    for (std::size_t i = 0; i < 3; ++i) md.extension[i] = byte_at(image, h.info_size + 1 + i);

    const std::uint64_t groups = image.carrier.size() / 3;
    md.pixel_spacing =
        md.payload_size == 0 ? 0 : image.carrier.size() / (3ull * md.payload_size);
    report.metadata = md;

    if (md.payload_size == 0) {
        report.note = "marker present, claimed payload size is 0";
    } else if (md.pixel_spacing == 0 ||
               std::uint64_t(md.payload_size) * md.pixel_spacing > (groups == 0 ? 0 : groups - 1)) {
        report.note = "marker present, implausible size";
    } else if (!decode_extension(md.extension)) {
        report.note = "marker present, malformed extension";
    } else {
        report.plausible = true;
        report.note = "plausible stego metadata";
    }
    return report;
}

}  // namespace stego
