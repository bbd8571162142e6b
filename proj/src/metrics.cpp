#include "stego/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "stego/errors.hpp"

namespace stego {

namespace {

template <typename T>
DistortionReport distortion_impl(std::span<const T> a, std::span<const T> b, double peak) {
    if (a.size() != b.size())
        throw Error(Errc::length_mismatch, "inputs differ in length");
    if (a.empty())
        throw Error(Errc::empty_input, "inputs are empty");

    DistortionReport report;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long diff = static_cast<long>(a[i]) - static_cast<long>(b[i]);
        if (diff != 0) {
            ++report.changed_count;
            const std::uint32_t mag = static_cast<std::uint32_t>(std::labs(diff));
            if (mag > report.max_abs_diff) report.max_abs_diff = mag;
            sum_sq += static_cast<double>(diff) * static_cast<double>(diff);
        }
    }
    report.mse = sum_sq / static_cast<double>(a.size());
    report.psnr_db = report.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                       : 10.0 * std::log10(peak * peak / report.mse);
    return report;
}

}  // namespace

DistortionReport distortion(ByteView a, ByteView b) {
    return distortion_impl<std::uint8_t>(a, b, 255.0);
}

DistortionReport distortion(std::span<const std::int16_t> a, std::span<const std::int16_t> b) {
    return distortion_impl<std::int16_t>(a, b, 32767.0);
}

double bit_error_rate(const BitSequence& a, const BitSequence& b) {
    if (a.size() != b.size())
        throw Error(Errc::length_mismatch, "bit sequences differ in length");
    if (a.empty())
        throw Error(Errc::empty_input, "bit sequences are empty");

    std::size_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] != 0) != (b[i] != 0)) ++errors;
    return static_cast<double>(errors) / static_cast<double>(a.size());
}

}  // namespace stego
