#pragma once

#include <cstdint>
#include <span>

#include "stego/bytes.hpp"
#include "stego/echo.hpp"

namespace stego {

struct DistortionReport {
    double mse = 0.0;
    double psnr_db = 0.0;  // +infinity when the inputs are identical
    std::uint32_t max_abs_diff = 0;
    std::size_t changed_count = 0;  // differing bytes or samples
};

// PSNR peak is chosen by element type: 255 for bytes, 32767 for 16-bit
// samples, so image and audio paths can't silently mix units.
DistortionReport distortion(ByteView a, ByteView b);
DistortionReport distortion(std::span<const std::int16_t> a, std::span<const std::int16_t> b);

double bit_error_rate(const BitSequence& a, const BitSequence& b);

}  // namespace stego
