#pragma once

#include "gwc/partitions.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace gwc {

using Warn = std::function<void(const std::string&)>;

std::string table_file_name(int degree);
// writes dir/chartab-v1-d<d>.json, creating the directory when missing
void store_table(const std::filesystem::path& dir, const CharacterTable& t);
// nullopt (with a warning when the file exists) if the file is missing, corrupt or inconsistent
std::optional<CharacterTable> load_table(const std::filesystem::path& dir, int degree, const Warn& warn = {});
// hooks for set_table_persistence backed by dir
TablePersistence directory_persistence(const std::filesystem::path& dir, Warn warn = {});
// flag value if given, else GWC_CACHE_DIR, else none
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace gwc
