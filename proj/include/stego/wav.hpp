#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stego/bytes.hpp"

namespace stego {

struct WavChunk {
    std::array<std::uint8_t, 4> id{};
    Bytes payload;

    bool operator==(const WavChunk&) const = default;
};

// PCM 16-bit clip. Chunks other than data are kept verbatim so that
// write_wav(parse_wav(b)) == b; the fmt chunk lives inside pre_data_chunks
// and sample_rate/channels mirror its decoded fields.
struct WavClip {
    std::uint32_t sample_rate = 0;
    std::uint16_t channels = 0;
    static constexpr std::uint16_t bits_per_sample = 16;
    std::vector<std::int16_t> samples;  // interleaved when multichannel
    std::vector<WavChunk> pre_data_chunks;
    std::vector<WavChunk> post_data_chunks;

    bool operator==(const WavClip&) const = default;

    std::size_t frames() const { return channels ? samples.size() / channels : 0; }

    // Fresh clip with a canonical 16-byte PCM fmt chunk.
    static WavClip make(std::uint32_t sample_rate, std::uint16_t channels,
                        std::vector<std::int16_t> samples);
};

WavClip parse_wav(ByteView bytes);
Bytes write_wav(const WavClip& clip);

}  // namespace stego
