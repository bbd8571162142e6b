#include "stego/errors.hpp"

namespace stego {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::not_bmp: return "NotBmp";
        case Errc::unsupported_bmp: return "UnsupportedBmp";
        case Errc::truncated: return "Truncated";
        case Errc::not_wav: return "NotWav";
        case Errc::unsupported_wav: return "UnsupportedWav";
        case Errc::capacity_exceeded: return "CapacityExceeded";
        case Errc::extension_too_long: return "ExtensionTooLong";
        case Errc::invalid_extension: return "InvalidExtension";
        case Errc::metadata_collision: return "MetadataCollision";
        case Errc::empty_payload: return "EmptyPayload";
        case Errc::not_genuine_stego: return "NotGenuineStego";
        case Errc::corrupt_metadata: return "CorruptMetadata";
        case Errc::too_many_bits: return "TooManyBits";
        case Errc::bad_params: return "BadParams";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::empty_input: return "EmptyInput";
    }
    return "Unknown";
}

}  // namespace stego
