#pragma once

// Token/tag/sentence data model shared by the pattern matcher, the
// morphological rewriter and the corpus pipeline. All types are
// immutable value types.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regender {

// Closed tag inventory used by the sequence templates. Any other tagger
// output is carried through as Other and compared by its literal label.
enum class TagId : uint8_t {
  PPC,    // clitic pronoun (separate token)
  DM,     // demonstrative pronoun
  Vadj,   // past participle used adjectivally
  ADJ,    // adjective
  VCL,    // clitic pronoun attached to a verb
  Vfin,   // finite verb
  VHfin,  // finite auxiliary "haber"
  VMfin,  // finite modal verb
  Vinf,   // verb infinitive
  ADV,    // adverb
  NEG,    // negation
  NC,     // common noun
  ART,    // article
  CC,     // coordinating conjunction
  CQUE,   // conjunction "que"
  SE,     // pronoun "se"
  INT,    // matched as an opaque symbol
  PPX,    // matched as an opaque symbol
  CM,     // comma
  FS,     // sentence-final punctuation
  Other,
};

namespace detail {
inline constexpr std::array<std::string_view, 20> kTagNames = {
    "PPC", "DM",  "Vadj", "ADJ", "VCL",  "Vfin", "VHfin", "VMfin", "Vinf",
    "ADV", "NEG", "NC",   "ART", "CC",   "CQUE", "SE",    "INT",   "PPX",
    "CM",  "FS"};
}  // namespace detail

class PosTag {
 public:
  PosTag() = default;
  explicit PosTag(TagId id) : id_(id) {
    if (id == TagId::Other)
      throw std::invalid_argument("PosTag: Other needs a label");
  }

  static PosTag other(std::string label) {
    PosTag t;
    t.id_ = TagId::Other;
    t.label_ = std::move(label);
    return t;
  }

  TagId id() const { return id_; }
  bool is(TagId id) const { return id_ == id; }

  std::string_view name() const {
    if (id_ == TagId::Other) return label_;
    return detail::kTagNames[static_cast<size_t>(id_)];
  }

  friend bool operator==(const PosTag& a, const PosTag& b) {
    if (a.id_ != b.id_) return false;
    return a.id_ != TagId::Other || a.label_ == b.label_;
  }
  friend bool operator!=(const PosTag& a, const PosTag& b) {
    return !(a == b);
  }

 private:
  TagId id_ = TagId::Other;
  std::string label_;  // only set for Other
};

// Total: known tag strings map to their symbolic value, anything else
// becomes Other carrying the raw label. Comparison is case-sensitive.
inline PosTag parse_tag(std::string_view raw) {
  for (size_t i = 0; i < detail::kTagNames.size(); ++i) {
    if (raw == detail::kTagNames[i]) return PosTag(static_cast<TagId>(i));
  }
  return PosTag::other(std::string(raw));
}

struct Token {
  std::string surface;
  PosTag tag;

  friend bool operator==(const Token& a, const Token& b) {
    return a.surface == b.surface && a.tag == b.tag;
  }
  friend bool operator!=(const Token& a, const Token& b) { return !(a == b); }
};

struct TaggedSentence {
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }

  // Surfaces joined by single spaces.
  std::string text() const {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (i) out.push_back(' ');
      out += tokens[i].surface;
    }
    return out;
  }

  friend bool operator==(const TaggedSentence& a, const TaggedSentence& b) {
    return a.tokens == b.tokens;
  }
  friend bool operator!=(const TaggedSentence& a, const TaggedSentence& b) {
    return !(a == b);
  }
};

inline std::vector<PosTag> tag_sequence(const TaggedSentence& s) {
  std::vector<PosTag> tags;
  tags.reserve(s.tokens.size());
  for (const auto& t : s.tokens) tags.push_back(t.tag);
  return tags;
}

// Sentence-level label: G = re-genderable, N = neutral.
enum class GenderLabel : char { G = 'G', N = 'N' };

inline char to_char(GenderLabel label) { return static_cast<char>(label); }

inline std::optional<GenderLabel> parse_label(std::string_view s) {
  if (s == "G") return GenderLabel::G;
  if (s == "N") return GenderLabel::N;
  return std::nullopt;
}

// Word categories with their own sequence templates and rewrite rules.
enum class Category : uint8_t {
  CliticPronoun,
  Demonstrative,
  PastParticiple,
  Adjective,
  CliticOnVerb,
};

inline std::string_view category_name(Category c) {
  switch (c) {
    case Category::CliticPronoun: return "CLITIC";
    case Category::Demonstrative: return "DEM";
    case Category::PastParticiple: return "PARTICIPLE";
    case Category::Adjective: return "ADJECTIVE";
    case Category::CliticOnVerb: return "VCLITIC";
  }
  return "?";
}

// Tag whose presence marks the rewrite targets of a category.
inline TagId category_target_tag(Category c) {
  switch (c) {
    case Category::CliticPronoun: return TagId::PPC;
    case Category::Demonstrative: return TagId::DM;
    case Category::PastParticiple: return TagId::Vadj;
    case Category::Adjective: return TagId::ADJ;
    case Category::CliticOnVerb: return TagId::VCL;
  }
  return TagId::Other;
}

}  // namespace regender
