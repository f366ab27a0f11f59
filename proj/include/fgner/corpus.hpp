#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fgner/taxonomy.hpp"

namespace fgner {

struct Token {
  std::string text;  // non-empty, no whitespace
  int index = 0;     // 0-based position in the sentence
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;
  std::string language = "en";
  bool noisy = false;

  int size() const { return static_cast<int>(tokens.size()); }
};

// One tag per token, scheme {O, B-X, I-X}.
using TagSequence = std::vector<std::string>;

struct EntitySpan {
  int start = 0;  // inclusive token index
  int end = 0;    // exclusive token index
  std::string label;

  auto operator<=>(const EntitySpan&) const = default;
};

struct AnnotatedSentence {
  Sentence sentence;
  TagSequence tags;
};

using Dataset = std::vector<AnnotatedSentence>;

struct ParseOptions {
  // Promote orphan I-X to B-X instead of rejecting the record.
  bool repair = false;
  // When set, every tag type must be a fine label of this taxonomy
  // (the literal type "ENTITY" is additionally accepted if
  // allow_entity_type is true). When null, tag types are unchecked.
  const Taxonomy* taxonomy = nullptr;
  bool allow_entity_type = false;
};

// Tag helpers ---------------------------------------------------------------

inline bool is_outside_tag(const std::string& tag) { return tag == "O"; }
bool is_begin_tag(const std::string& tag);
bool is_inside_tag(const std::string& tag);
// Type X of a B-X / I-X tag; empty for O.
std::string tag_type(const std::string& tag);

bool is_valid_bio(const TagSequence& tags);
// Orphan or type-switching I-X becomes B-X. Always yields a valid sequence.
TagSequence repair_bio(TagSequence tags);

// Corpus I/O ----------------------------------------------------------------

// Tab-separated token/tag lines, blank line between sentences, comment
// headers "# id <string>", "# lang <code>" and "# noisy". Sentences without
// an id header get a positional one ("s1", "s2", ...). Malformed input is
// rejected with the offending line number.
Dataset parse_corpus(const std::string& text, const ParseOptions& opts = {});
Dataset load_corpus(const std::filesystem::path& file, const ParseOptions& opts = {});

std::string serialize_corpus(const Dataset& data);
void save_corpus(const Dataset& data, const std::filesystem::path& file);

// BIO <-> span conversion ----------------------------------------------------

// Spans ordered by start, one per maximal B,I...,I run. Requires valid tags.
std::vector<EntitySpan> spans_from_bio(const TagSequence& tags);

// Inverse of spans_from_bio. Spans must be non-overlapping and inside [0, n).
TagSequence bio_from_spans(std::span<const EntitySpan> spans, int n);

// Map every fine type onto the single type ENTITY, keeping span structure.
TagSequence collapse_to_boundary(const TagSequence& tags);

}  // namespace fgner
