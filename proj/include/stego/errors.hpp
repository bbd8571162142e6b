#pragma once

#include <stdexcept>
#include <string>

namespace stego {

// Every failure the codecs can signal. The CLI maps these onto its
// documented exit codes, so additions here need a mapping there too.
enum class Errc {
    not_bmp,
    unsupported_bmp,
    truncated,
    not_wav,
    unsupported_wav,
    capacity_exceeded,
    extension_too_long,
    invalid_extension,
    metadata_collision,
    empty_payload,
    not_genuine_stego,
    corrupt_metadata,
    too_many_bits,
    bad_params,
    length_mismatch,
    empty_input,
};

/// Stable machine-readable name ("NotBmp", "CapacityExceeded", ...).
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace stego
