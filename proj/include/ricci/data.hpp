#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

namespace ricci {

/// $RICCI_DATA_DIR when set, otherwise the directory configured at build time.
std::filesystem::path data_directory();

/// Parses `name` inside data_directory(). Throws DataFile.
nlohmann::json load_data_json(std::string_view name);

}  // namespace ricci
