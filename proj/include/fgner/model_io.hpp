#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace fgner {

inline constexpr int kModelFormatVersion = 1;

// Writes a model file with "format_version" and "kind" stamped in.
void save_model_json(const nlohmann::json& body, const std::string& kind,
                     const std::filesystem::path& file);

// Loads and checks version/kind; fails loudly on any mismatch.
nlohmann::json load_model_json(const std::filesystem::path& file, const std::string& expected_kind);

}  // namespace fgner
