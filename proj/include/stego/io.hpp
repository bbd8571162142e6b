#pragma once

#include <filesystem>

#include "stego/bytes.hpp"

namespace stego {

Bytes read_file(const std::filesystem::path& path);

// Writes to a temp file next to `path` and renames it into place, so a
// failure never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path, ByteView data);

}  // namespace stego
