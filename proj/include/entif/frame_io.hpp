#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "entif/matrix.hpp"

namespace entif {

inline constexpr const char* kFrameFormat = "entif-frame-v1";

struct FrameMetadata {
  std::string recipe;
  std::map<std::string, std::string> parameters;
  mpz_class scale = 1;
  friend bool operator==(const FrameMetadata&, const FrameMetadata&) = default;
};

/// A frame as stored on disk: entries are decimal strings so arbitrarily
/// large integers round-trip exactly.
struct FrameFile {
  FrameMatrix matrix;
  std::optional<FrameMetadata> metadata;
};

/// Canonical JSON with sorted keys and a trailing newline.
std::string to_json(const FrameFile& file);
FrameFile from_json(std::string_view text);

/// One matrix row per line, comma-separated integers.
std::string to_csv(const FrameMatrix& a);
FrameMatrix from_csv(std::string_view text);

/// JSON unless the first non-blank character is not '{', in which case the
/// text is read as CSV. Throws ParseError.
FrameFile parse_frame(std::string_view text);
FrameFile read_frame_file(const std::filesystem::path& path);
/// CSV when the extension is ".csv", JSON otherwise.
void write_frame_file(const std::filesystem::path& path, const FrameFile& file);

}  // namespace entif
