#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "stego/bmp.hpp"
#include "stego/bytes.hpp"

namespace stego {

// One 3-byte carrier group, read in file order.
struct PackedChannels {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const PackedChannels&) const = default;
};

struct Payload {
    Bytes data;
    std::string extension;  // 0-3 printable ASCII chars, no dot

    bool operator==(const Payload&) const = default;
};

// Metadata the stego layout stores inside the BMP header region.
struct StegoMetadata {
    std::uint32_t payload_size = 0;
    std::array<std::uint8_t, 3> extension{};  // zero-padded on-disk form
    std::uint64_t pixel_spacing = 0;          // derived; 0 when the size admits none
};

struct InspectReport {
    bool marker_present = false;
    bool plausible = false;
    std::optional<StegoMetadata> metadata;  // present iff marker_present
    std::string note;
};

// Marker byte written at offset info_size of a stego file.
inline constexpr std::uint8_t kStegoMarker = 0x31;  // '1'

// Splits ch 2-3-3 across the group's low bits: 2 into r, 3 into g, 3 into b.
PackedChannels pack_byte(PackedChannels carrier, std::uint8_t ch);
std::uint8_t unpack_byte(PackedChannels carrier);

// floor(carrier_len / (3 * payload_size)): the stride, in groups, between
// embedded payload bytes. Throws CapacityExceeded when the floor is 0.
std::uint64_t pixel_spacing(std::uint64_t carrier_len_bytes, std::uint64_t payload_size);

// Largest payload size M such that spacing >= 1 and the last embedded group
// index M*spacing still exists. Note the position rule k*spacing (k = 1..M)
// makes sizes that divide the group count unembeddable even below this bound.
std::uint64_t capacity(const BmpImage& image);

BmpImage embed(const BmpImage& cover, const Payload& payload);
Payload extract(const BmpImage& stego);
InspectReport inspect(const BmpImage& image);

}  // namespace stego
