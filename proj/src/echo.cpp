#include "stego/echo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stego/cepstrum.hpp"
#include "stego/errors.hpp"

namespace stego {

namespace {

void check_params(const EchoParams& p) {
    if (p.delay_zero == 0 || p.delay_one == 0)
        throw Error(Errc::bad_params, "echo delays must be positive");
    if (p.delay_zero == p.delay_one)
        throw Error(Errc::bad_params, "the two echo delays must differ");
    if (!(p.decay > 0.0 && p.decay < 1.0))
        throw Error(Errc::bad_params, "decay must lie in (0, 1)");
    if (2 * std::max(p.delay_zero, p.delay_one) >= p.segment_len)
        throw Error(Errc::bad_params, "delays must be below half the segment length");
}

// Channel-0 frame values of one segment, as doubles.
std::vector<double> segment_frame(const WavClip& clip, std::size_t index,
                                  std::size_t segment_len) {
    std::vector<double> frame(segment_len);
    const std::size_t stride = clip.channels;
    for (std::size_t n = 0; n < segment_len; ++n)
        frame[n] = static_cast<double>(clip.samples[(index * segment_len + n) * stride]);
    return frame;
}

}  // namespace

WavClip echo_embed(const WavClip& cover, const BitSequence& bits, const EchoParams& params) {
    check_params(params);
    if (bits.size() > cover.frames() / params.segment_len)
        throw Error(Errc::too_many_bits, "bit sequence does not fit the cover at this segment length");

    WavClip stego = cover;
    const std::size_t stride = cover.channels;
    const auto& f = cover.samples;  // echoes always source the original signal
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::size_t delay = bits[i] ? params.delay_one : params.delay_zero;
        const std::size_t begin = i * params.segment_len;
        for (std::size_t n = begin; n < begin + params.segment_len; ++n) {
            if (n < delay) continue;  // f[n - d] = 0 before the signal starts
            const long echo = std::lround(params.decay * f[(n - delay) * stride]);
            const long v = static_cast<long>(f[n * stride]) + echo;
            stego.samples[n * stride] = static_cast<std::int16_t>(
                std::clamp<long>(v, std::numeric_limits<std::int16_t>::min(),
                                 std::numeric_limits<std::int16_t>::max()));
        }
    }
    return stego;
}

BitSequence echo_extract(const WavClip& stego, std::size_t nbits, const EchoParams& params) {
    check_params(params);
    if (nbits > stego.frames() / params.segment_len)
        throw Error(Errc::too_many_bits, "requested bits exceed the segments available");

    const std::size_t fft_size = dsp::next_pow2(params.segment_len);
    BitSequence bits;
    bits.reserve(nbits);
    for (std::size_t i = 0; i < nbits; ++i) {
        const auto frame = segment_frame(stego, i, params.segment_len);
        const auto cepstrum = dsp::real_cepstrum(frame, fft_size);
        bits.push_back(cepstrum[params.delay_one] > cepstrum[params.delay_zero] ? 1 : 0);
    }
    return bits;
}

DelayEstimate estimate_echo_delay(const WavClip& stego, std::size_t segment_index,
                                  std::size_t max_delay, const EchoParams& params) {
    check_params(params);
    if (max_delay == 0 || 2 * max_delay >= params.segment_len)
        throw Error(Errc::bad_params, "max delay must be positive and below half the segment length");
    if ((segment_index + 1) * params.segment_len > stego.frames())
        throw Error(Errc::bad_params, "segment index past the end of the clip");

    const auto frame = segment_frame(stego, segment_index, params.segment_len);
    const auto cepstrum = dsp::real_cepstrum(frame, dsp::next_pow2(params.segment_len));

    DelayEstimate best{1, cepstrum[1]};
    for (std::size_t d = 2; d <= max_delay; ++d) {
        if (cepstrum[d] > best.peak) best = {d, cepstrum[d]};
    }
    return best;
}

}  // namespace stego
