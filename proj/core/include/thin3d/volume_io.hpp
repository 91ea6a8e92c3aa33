#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thin3d/voxel_grid.hpp"

namespace thin3d {

enum class VolumeFormat { Text, Binary };

/// Text format: header line "dims X Y Z", then Z slices in increasing z
/// separated by one blank line. Each slice holds Y lines of X characters
/// from {'0','1'}; lines run north to south (y = Y-1 first). Newline-only
/// line endings. Parsing rejects any deviation.
std::string write_volume_text(const BinaryVolume& vol);
BinaryVolume read_volume_text(std::string_view text);

/// Binary format: magic "BV3D", version byte 0x01, three 32-bit
/// little-endian unsigned dims (X, Y, Z), then X*Y*Z payload bytes
/// (0x00 background, 0x01 object), x fastest, then y, then z.
std::vector<std::uint8_t> write_volume_binary(const BinaryVolume& vol);
BinaryVolume read_volume_binary(std::span<const std::uint8_t> bytes);

/// Reads a volume file, sniffing the format by the magic bytes.
/// Throws std::runtime_error on I/O or parse failure.
BinaryVolume load_volume(const std::filesystem::path& path,
                         VolumeFormat* detected = nullptr);

void save_volume(const std::filesystem::path& path, const BinaryVolume& vol,
                 VolumeFormat format);

}  // namespace thin3d
