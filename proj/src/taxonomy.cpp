#include "fgner/taxonomy.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgner {

namespace {

// Mirror of data/taxonomy.tsv; test_corpus checks both stay in sync.
constexpr const char* kMulticoner2Table =
    "# taxonomy multiconer2 v1\n"
    "Facility\tLocation\n"
    "OtherLOC\tLocation\n"
    "HumanSettlement\tLocation\n"
    "Station\tLocation\n"
    "VisualWork\tCreativeWorks\n"
    "MusicalWork\tCreativeWorks\n"
    "WrittenWork\tCreativeWorks\n"
    "ArtWork\tCreativeWorks\n"
    "Software\tCreativeWorks\n"
    "OtherCW\tCreativeWorks\n"
    "MusicalGRP\tGroup\n"
    "PublicCorp\tGroup\n"
    "PrivateCorp\tGroup\n"
    "OtherCorp\tGroup\n"
    "AerospaceManufacturer\tGroup\n"
    "SportsGRP\tGroup\n"
    "CarManufacturer\tGroup\n"
    "TechCorp\tGroup\n"
    "ORG\tGroup\n"
    "Scientist\tPerson\n"
    "Artist\tPerson\n"
    "Athlete\tPerson\n"
    "Politician\tPerson\n"
    "Cleric\tPerson\n"
    "SportsManager\tPerson\n"
    "OtherPER\tPerson\n"
    "Clothing\tProduct\n"
    "Vehicle\tProduct\n"
    "Food\tProduct\n"
    "Drink\tProduct\n"
    "OtherPROD\tProduct\n"
    "Medication/Vaccine\tMedical\n"
    "MedicalProcedure\tMedical\n"
    "AnatomicalStructure\tMedical\n"
    "Symptom\tMedical\n"
    "Disease\tMedical\n";

}  // namespace

Taxonomy Taxonomy::parse(const std::string& text) {
  Taxonomy t;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::set<std::string> seen_coarse;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hdr(line.substr(1));
      std::string kw;
      hdr >> kw;
      if (kw == "taxonomy") hdr >> t.name_ >> t.version_;
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw std::runtime_error("taxonomy: line " + std::to_string(line_no) +
                               ": expected <fine>\\t<coarse>");
    }
    std::string fine = line.substr(0, tab);
    std::string coarse = line.substr(tab + 1);
    if (t.coarse_of_.count(fine)) {
      throw std::runtime_error("taxonomy: line " + std::to_string(line_no) +
                               ": duplicate fine label '" + fine + "'");
    }
    t.fine_.push_back(fine);
    t.coarse_of_[fine] = coarse;
    if (seen_coarse.insert(coarse).second) t.coarse_.push_back(coarse);
  }
  if (t.fine_.empty()) throw std::runtime_error("taxonomy: no labels");
  return t;
}

Taxonomy Taxonomy::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("taxonomy: cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Taxonomy& Taxonomy::multiconer2() {
  static const Taxonomy t = [] {
    Taxonomy x = parse(kMulticoner2Table);
    if (x.fine_labels().size() != 36 || x.coarse_labels().size() != 6) {
      throw std::logic_error("bundled multiconer2 taxonomy must have 36 fine / 6 coarse labels");
    }
    return x;
  }();
  return t;
}

const std::string& Taxonomy::coarse_of(const std::string& fine) const {
  auto it = coarse_of_.find(fine);
  if (it == coarse_of_.end()) {
    throw std::out_of_range("taxonomy: unknown fine label '" + fine + "'");
  }
  return it->second;
}

}  // namespace fgner
