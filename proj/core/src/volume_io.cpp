#include "thin3d/volume_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace thin3d {

namespace {

constexpr std::string_view kMagic = "BV3D";
constexpr std::uint8_t kVersion = 0x01;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

// Consumes one newline-terminated line; the final line may omit the
// trailing newline.
std::string_view next_line(std::string_view& rest, bool* had_newline) {
  const std::size_t nl = rest.find('\n');
  std::string_view line;
  if (nl == std::string_view::npos) {
    line = rest;
    rest = {};
    *had_newline = false;
  } else {
    line = rest.substr(0, nl);
    rest = rest.substr(nl + 1);
    *had_newline = true;
  }
  if (line.find('\r') != std::string_view::npos)
    fail("text volume: carriage returns are not allowed");
  return line;
}

int parse_dim(std::string_view token) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v <= 0)
    fail("text volume: bad dimension value");
  return v;
}

std::uint32_t read_u32_le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

}  // namespace

std::string write_volume_text(const BinaryVolume& vol) {
  std::string out = "dims " + std::to_string(vol.dim_x()) + " " +
                    std::to_string(vol.dim_y()) + " " +
                    std::to_string(vol.dim_z()) + "\n";
  for (int z = 0; z < vol.dim_z(); ++z) {
    if (z > 0) out += "\n";
    for (int y = vol.dim_y() - 1; y >= 0; --y) {
      for (int x = 0; x < vol.dim_x(); ++x)
        out += vol.is_object({x, y, z}) ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

BinaryVolume read_volume_text(std::string_view text) {
  std::string_view rest = text;
  bool had_nl = false;

  std::string_view header = next_line(rest, &had_nl);
  if (!header.starts_with("dims ")) fail("text volume: missing dims header");
  std::string_view dims = header.substr(5);

  std::array<int, 3> d{};
  for (int i = 0; i < 3; ++i) {
    const std::size_t sp = dims.find(' ');
    std::string_view token =
        (i < 2) ? dims.substr(0, sp) : dims;
    if (i < 2) {
      if (sp == std::string_view::npos) fail("text volume: bad dims header");
      dims = dims.substr(sp + 1);
    }
    d[static_cast<std::size_t>(i)] = parse_dim(token);
  }

  BinaryVolume vol(d[0], d[1], d[2]);
  for (int z = 0; z < d[2]; ++z) {
    if (z > 0) {
      std::string_view blank = next_line(rest, &had_nl);
      if (!blank.empty()) fail("text volume: expected blank slice separator");
    }
    for (int y = d[1] - 1; y >= 0; --y) {
      std::string_view line = next_line(rest, &had_nl);
      if (static_cast<int>(line.size()) != d[0])
        fail("text volume: slice line has wrong length");
      for (int x = 0; x < d[0]; ++x) {
        const char c = line[static_cast<std::size_t>(x)];
        if (c == '1')
          vol.set_object({x, y, z}, true);
        else if (c != '0')
          fail("text volume: invalid character in slice");
      }
    }
  }
  if (!rest.empty()) fail("text volume: trailing content after last slice");
  return vol;
}

std::vector<std::uint8_t> write_volume_binary(const BinaryVolume& vol) {
  std::vector<std::uint8_t> out;
  out.reserve(17 + vol.size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  write_u32_le(out, static_cast<std::uint32_t>(vol.dim_x()));
  write_u32_le(out, static_cast<std::uint32_t>(vol.dim_y()));
  write_u32_le(out, static_cast<std::uint32_t>(vol.dim_z()));
  const auto raw = vol.raw();
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

BinaryVolume read_volume_binary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 17) fail("binary volume: truncated header");
  if (std::string_view(reinterpret_cast<const char*>(bytes.data()), 4) !=
      kMagic)
    fail("binary volume: bad magic");
  if (bytes[4] != kVersion) fail("binary volume: unsupported version");

  const std::uint32_t dx = read_u32_le(bytes.data() + 5);
  const std::uint32_t dy = read_u32_le(bytes.data() + 9);
  const std::uint32_t dz = read_u32_le(bytes.data() + 13);
  if (dx == 0 || dy == 0 || dz == 0) fail("binary volume: zero dimension");
  const std::uint64_t voxels = static_cast<std::uint64_t>(dx) * dy * dz;
  if (bytes.size() != 17 + voxels) fail("binary volume: wrong payload length");

  BinaryVolume vol(static_cast<int>(dx), static_cast<int>(dy),
                   static_cast<int>(dz));
  std::size_t i = 17;
  for (std::uint32_t z = 0; z < dz; ++z)
    for (std::uint32_t y = 0; y < dy; ++y)
      for (std::uint32_t x = 0; x < dx; ++x, ++i) {
        const std::uint8_t b = bytes[i];
        if (b == 0x01)
          vol.set_object({static_cast<int>(x), static_cast<int>(y),
                          static_cast<int>(z)},
                         true);
        else if (b != 0x00)
          fail("binary volume: invalid payload byte");
      }
  return vol;
}

BinaryVolume load_volume(const std::filesystem::path& path,
                         VolumeFormat* detected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  const bool binary =
      bytes.size() >= 4 &&
      std::string_view(reinterpret_cast<const char*>(bytes.data()), 4) ==
          kMagic;
  if (detected) *detected = binary ? VolumeFormat::Binary : VolumeFormat::Text;
  if (binary) return read_volume_binary(bytes);
  return read_volume_text(
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       bytes.size()));
}

void save_volume(const std::filesystem::path& path, const BinaryVolume& vol,
                 VolumeFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path.string());
  if (format == VolumeFormat::Text) {
    const std::string text = write_volume_text(vol);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  } else {
    const auto bytes = write_volume_binary(vol);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) fail("write failed for " + path.string());
}

}  // namespace thin3d
