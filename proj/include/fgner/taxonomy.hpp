#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fgner {

// Fine-to-coarse label taxonomy. The bundled table is the 36-category /
// 6-group MultiCoNER2 inventory; arbitrary taxonomies can be loaded from
// the same tab-separated asset format.
class Taxonomy {
 public:
  static Taxonomy parse(const std::string& text);
  static Taxonomy load(const std::filesystem::path& file);

  // Bundled MultiCoNER2 taxonomy (36 fine labels, 6 coarse labels).
  static const Taxonomy& multiconer2();

  const std::vector<std::string>& fine_labels() const { return fine_; }
  const std::vector<std::string>& coarse_labels() const { return coarse_; }

  bool has_fine(const std::string& label) const { return coarse_of_.count(label) > 0; }

  // Total map: throws on unknown fine label.
  const std::string& coarse_of(const std::string& fine) const;

  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }

 private:
  std::vector<std::string> fine_;
  std::vector<std::string> coarse_;
  std::map<std::string, std::string> coarse_of_;
  std::string name_;
  std::string version_;
};

}  // namespace fgner
