#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace stego::dsp {

// Guard added to the squared magnitude spectrum before the log, so silent
// frames stay finite.
inline constexpr double kLogGuard = 1e-10;

std::size_t next_pow2(std::size_t n);

// In-place radix-2 FFT; data.size() must be a power of two.
// The inverse transform includes the 1/N scaling.
void fft(std::vector<std::complex<double>>& data, bool inverse);

// Real cepstrum: inverse DFT of log(|DFT(frame)|^2 + guard), frame
// zero-padded to fft_size (a power of two >= frame.size()).
// An echo at delay d shows up as a peak at index d.
std::vector<double> real_cepstrum(std::span<const double> frame, std::size_t fft_size);

}  // namespace stego::dsp
