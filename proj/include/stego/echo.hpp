#pragma once

#include <cstdint>
#include <vector>

#include "stego/wav.hpp"

namespace stego {

// Per-segment echo insertion: s[n] = f[n] + decay * f[n - d], where the
// delay d carries the bit. Multichannel clips are embedded on channel 0;
// other channels pass through untouched.
struct EchoParams {
    std::size_t delay_zero = 50;   // delay, in samples, encoding bit 0
    std::size_t delay_one = 100;   // delay, in samples, encoding bit 1
    double decay = 0.5;            // echo amplitude ratio, in (0, 1)
    std::size_t segment_len = 1024;

    bool operator==(const EchoParams&) const = default;
};

using BitSequence = std::vector<std::uint8_t>;  // values 0/1

struct DelayEstimate {
    std::size_t delay = 0;
    double peak = 0.0;  // cepstral value at the returned delay
};

WavClip echo_embed(const WavClip& cover, const BitSequence& bits, const EchoParams& params);
BitSequence echo_extract(const WavClip& stego, std::size_t nbits, const EchoParams& params);

// Diagnostic: argmax of the segment's cepstrum over delays [1, max_delay].
// Without an echo the peak is noise; callers should threshold on .peak.
DelayEstimate estimate_echo_delay(const WavClip& stego, std::size_t segment_index,
                                  std::size_t max_delay, const EchoParams& params);

}  // namespace stego
