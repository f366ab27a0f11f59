#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace fgner {

// Insertion-ordered string interner. Ids are dense and stable, so weight
// vectors can be indexed by them and serialized reproducibly.
class Vocab {
 public:
  int intern(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  const std::vector<std::string>& names() const { return names_; }
  size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> names_;
};

}  // namespace fgner
