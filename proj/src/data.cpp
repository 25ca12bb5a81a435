#include "ricci/data.hpp"

#include <cstdlib>
#include <fstream>

#include "ricci/error.hpp"

#ifndef RICCI_DEFAULT_DATA_DIR
#define RICCI_DEFAULT_DATA_DIR "data"
#endif

namespace ricci {

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("RICCI_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return RICCI_DEFAULT_DATA_DIR;
}

nlohmann::json load_data_json(std::string_view name) {
  const auto path = data_directory() / std::string(name);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::DataFile, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::DataFile, path.string() + ": " + e.what());
  }
}

}  // namespace ricci
