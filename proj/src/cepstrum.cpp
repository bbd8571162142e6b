#include "stego/cepstrum.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace stego::dsp {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    assert(n > 0 && (n & (n - 1)) == 0);

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wstep(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = data[i + j];
                const std::complex<double> v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wstep;
            }
        }
    }

    if (inverse)
        for (auto& x : data) x /= static_cast<double>(n);
}

std::vector<double> real_cepstrum(std::span<const double> frame, std::size_t fft_size) {
    assert(fft_size >= frame.size() && (fft_size & (fft_size - 1)) == 0);

    std::vector<std::complex<double>> buf(fft_size);
    for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = frame[i];
    fft(buf, false);
    for (auto& x : buf) x = std::log(std::norm(x) + kLogGuard);
    fft(buf, true);

    std::vector<double> cepstrum(fft_size);
    for (std::size_t i = 0; i < fft_size; ++i) cepstrum[i] = buf[i].real();
    return cepstrum;
}

}  // namespace stego::dsp
