#pragma once

#include <filesystem>
#include <string>

#include "framescope/group.hpp"

namespace framescope {

// On-disk formats.  A frame file is
//   { "label": text, "dim": d, "vectors": [ [ [re, im], ... ], ... ] },
// a symbol file { "values": [ [re, im], ... ] }, and a window file
//   { "N": order, "samples": [ [re, im], ... ] }.
// Loaders name the exact field or array index behind every rejection.

FrameSystem load_frame(const std::filesystem::path& path);
void save_frame(const FrameSystem& system, const std::filesystem::path& path);

Symbol load_symbol(const std::filesystem::path& path);
void save_symbol(const Symbol& symbol, const std::filesystem::path& path);

CyclicWindow load_window(const std::filesystem::path& path);
void save_window(const CyclicWindow& window, const std::filesystem::path& path);

// FNV-1a 64 over the raw file bytes, as 16 hex digits.
std::string file_hash(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}
