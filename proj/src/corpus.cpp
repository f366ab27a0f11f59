#include "fgner/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgner {

bool is_begin_tag(const std::string& tag) {
  return tag.size() > 2 && tag[0] == 'B' && tag[1] == '-';
}

bool is_inside_tag(const std::string& tag) {
  return tag.size() > 2 && tag[0] == 'I' && tag[1] == '-';
}

std::string tag_type(const std::string& tag) {
  if (is_begin_tag(tag) || is_inside_tag(tag)) return tag.substr(2);
  return {};
}

bool is_valid_bio(const TagSequence& tags) {
  std::string prev = "O";
  for (const auto& tag : tags) {
    if (is_inside_tag(tag)) {
      if (is_outside_tag(prev) || tag_type(prev) != tag_type(tag)) return false;
    } else if (!is_outside_tag(tag) && !is_begin_tag(tag)) {
      return false;
    }
    prev = tag;
  }
  return true;
}

TagSequence repair_bio(TagSequence tags) {
  std::string prev = "O";
  for (auto& tag : tags) {
    if (is_inside_tag(tag) && (is_outside_tag(prev) || tag_type(prev) != tag_type(tag))) {
      tag[0] = 'B';
    }
    prev = tag;
  }
  return tags;
}

namespace {

bool has_whitespace(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw std::runtime_error("corpus: line " + std::to_string(line_no) + ": " + msg);
}

void check_tag(const std::string& tag, int line_no, const ParseOptions& opts) {
  if (is_outside_tag(tag)) return;
  if (!is_begin_tag(tag) && !is_inside_tag(tag)) {
    fail(line_no, "tag '" + tag + "' is not O, B-X or I-X");
  }
  if (opts.taxonomy) {
    std::string type = tag_type(tag);
    if (opts.allow_entity_type && type == "ENTITY") return;
    if (!opts.taxonomy->has_fine(type)) {
      fail(line_no, "unknown label '" + type + "' not in taxonomy");
    }
  }
}

}  // namespace

Dataset parse_corpus(const std::string& text, const ParseOptions& opts) {
  Dataset data;
  std::set<std::string> seen_ids;

  Sentence cur;
  TagSequence cur_tags;
  std::vector<int> cur_lines;  // source line of each token, for diagnostics
  int header_line = 0;
  bool has_id = false;

  auto flush = [&] {
    if (cur.tokens.empty()) {
      if (has_id) fail(header_line, "sentence header without tokens");
      return;
    }
    if (!has_id) cur.id = "s" + std::to_string(data.size() + 1);
    if (!seen_ids.insert(cur.id).second) {
      fail(cur_lines.front(), "duplicate sentence id '" + cur.id + "'");
    }
    if (!is_valid_bio(cur_tags)) {
      if (opts.repair) {
        cur_tags = repair_bio(std::move(cur_tags));
      } else {
        std::string prev = "O";
        for (size_t i = 0; i < cur_tags.size(); ++i) {
          const std::string& tag = cur_tags[i];
          if (is_inside_tag(tag) && (is_outside_tag(prev) || tag_type(prev) != tag_type(tag))) {
            std::string after = i == 0 ? "sentence start" : "'" + prev + "'";
            fail(cur_lines[i], tag + " at line " + std::to_string(cur_lines[i]) +
                                   " follows " + after);
          }
          prev = tag;
        }
      }
    }
    data.push_back({std::move(cur), std::move(cur_tags)});
    cur = Sentence{};
    cur_tags.clear();
    cur_lines.clear();
    has_id = false;
    header_line = 0;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      std::istringstream hdr(line.substr(1));
      std::string kw;
      hdr >> kw;
      if (kw == "id") {
        if (!cur.tokens.empty()) fail(line_no, "'# id' must precede the sentence tokens");
        if (has_id) fail(line_no, "repeated '# id' header");
        std::string id;
        hdr >> id;
        if (id.empty()) fail(line_no, "'# id' without a value");
        cur.id = id;
        has_id = true;
        header_line = line_no;
      } else if (kw == "noisy") {
        cur.noisy = true;
      } else if (kw == "lang") {
        std::string lang;
        hdr >> lang;
        if (lang.empty()) fail(line_no, "'# lang' without a value");
        cur.language = lang;
      }
      // Unknown comments are ignored.
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos) fail(line_no, "expected <token>\\t<tag>");
    std::string token = line.substr(0, tab);
    std::string tag = line.substr(tab + 1);
    if (token.empty()) fail(line_no, "empty token");
    if (has_whitespace(token)) fail(line_no, "token contains whitespace");
    if (tag.empty()) fail(line_no, "empty tag");
    check_tag(tag, line_no, opts);
    cur.tokens.push_back({std::move(token), static_cast<int>(cur.tokens.size())});
    cur_tags.push_back(std::move(tag));
    cur_lines.push_back(line_no);
  }
  flush();
  return data;
}

Dataset load_corpus(const std::filesystem::path& file, const ParseOptions& opts) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("corpus: cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), opts);
}

std::string serialize_corpus(const Dataset& data) {
  std::string out;
  for (size_t i = 0; i < data.size(); ++i) {
    const auto& [sentence, tags] = data[i];
    out += "# id " + sentence.id + "\n";
    if (sentence.language != "en") out += "# lang " + sentence.language + "\n";
    if (sentence.noisy) out += "# noisy\n";
    for (size_t t = 0; t < sentence.tokens.size(); ++t) {
      out += sentence.tokens[t].text;
      out += '\t';
      out += tags[t];
      out += '\n';
    }
    if (i + 1 < data.size()) out += '\n';
  }
  return out;
}

void save_corpus(const Dataset& data, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("corpus: cannot write " + file.string());
  out << serialize_corpus(data);
}

std::vector<EntitySpan> spans_from_bio(const TagSequence& tags) {
  if (!is_valid_bio(tags)) throw std::invalid_argument("spans_from_bio: invalid BIO sequence");
  std::vector<EntitySpan> spans;
  for (int i = 0; i < static_cast<int>(tags.size()); ++i) {
    if (!is_begin_tag(tags[i])) continue;
    int end = i + 1;
    while (end < static_cast<int>(tags.size()) && is_inside_tag(tags[end])) ++end;
    spans.push_back({i, end, tag_type(tags[i])});
    i = end - 1;
  }
  return spans;
}

TagSequence bio_from_spans(std::span<const EntitySpan> spans, int n) {
  TagSequence tags(static_cast<size_t>(n), "O");
  std::vector<EntitySpan> ordered(spans.begin(), spans.end());
  std::sort(ordered.begin(), ordered.end());
  int prev_end = -1;
  for (const auto& span : ordered) {
    if (span.start < 0 || span.start >= span.end || span.end > n) {
      throw std::invalid_argument("bio_from_spans: span out of range");
    }
    if (span.start < prev_end) throw std::invalid_argument("bio_from_spans: overlapping spans");
    prev_end = span.end;
    tags[span.start] = "B-" + span.label;
    for (int i = span.start + 1; i < span.end; ++i) tags[i] = "I-" + span.label;
  }
  return tags;
}

TagSequence collapse_to_boundary(const TagSequence& tags) {
  TagSequence out;
  out.reserve(tags.size());
  for (const auto& tag : tags) {
    if (is_begin_tag(tag)) {
      out.push_back("B-ENTITY");
    } else if (is_inside_tag(tag)) {
      out.push_back("I-ENTITY");
    } else {
      out.push_back("O");
    }
  }
  return out;
}

}  // namespace fgner
