#pragma once

// Sequence templates deciding whether a sentence is re-genderable (and
// where), neutral, or unmatched. Matching is exact over the whole tag
// sequence; a sentence containing a template as a proper subsequence
// does not match it.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "regender/tagset.hpp"
#include "regender/utf8.hpp"

namespace regender {

struct Pattern {
  std::vector<PosTag> tags;  // non-empty
  GenderLabel polarity = GenderLabel::G;
  // For G templates, the category to rewrite. N templates carry the
  // category whose false positives they guard against.
  Category category = Category::Adjective;
};

struct PatternLoadReport {
  // Raw line counts per (polarity, category) before deduplication,
  // indexed as [polarity G=0,N=1][category].
  size_t raw_counts[2][5] = {};
  std::vector<std::string> warnings;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

namespace detail {

inline std::string sequence_key(const std::vector<PosTag>& tags) {
  std::string key;
  for (const auto& t : tags) {
    key += t.name();
    key.push_back('\x1f');
  }
  return key;
}

inline std::string sequence_name(const std::vector<PosTag>& tags) {
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) out.push_back('-');
    out += tags[i].name();
  }
  return out;
}

inline std::optional<Category> parse_category(std::string_view name) {
  if (name == "CLITIC") return Category::CliticPronoun;
  if (name == "DEM") return Category::Demonstrative;
  if (name == "PARTICIPLE") return Category::PastParticiple;
  if (name == "ADJECTIVE") return Category::Adjective;
  return std::nullopt;
}

}  // namespace detail

class PatternSet {
 public:
  // Parses the line-oriented pattern format:
  //   <G|N> <CLITIC|DEM|PARTICIPLE|ADJECTIVE> <TAG1-TAG2-...-TAGn>
  // '#' starts a comment, blank lines are skipped. Duplicate sequences
  // are dropped with a warning; on a G/N conflict the G template wins.
  static PatternSet parse(std::string_view text,
                          PatternLoadReport* report = nullptr) {
    PatternSet ps;
    PatternLoadReport local;
    PatternLoadReport& rep = report ? *report : local;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      if (const size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                               line.back() == '\r'))
        line.remove_suffix(1);
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
      if (line.empty()) continue;

      std::vector<std::string_view> fields;
      size_t start = 0;
      for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ' ' || line[i] == '\t') {
          if (i > start) fields.push_back(line.substr(start, i - start));
          start = i + 1;
        }
      }
      if (fields.size() != 3)
        throw ParseError(line_no, "expected '<G|N> <CATEGORY> <TAG-...>', got '" +
                                      std::string(line) + "'");

      const auto polarity = parse_label(fields[0]);
      if (!polarity)
        throw ParseError(line_no,
                         "polarity must be G or N, got '" +
                             std::string(fields[0]) + "'");
      const auto category = detail::parse_category(fields[1]);
      if (!category)
        throw ParseError(line_no, "unknown category '" +
                                      std::string(fields[1]) + "'");

      Pattern p;
      p.polarity = *polarity;
      p.category = *category;
      std::string_view seq = fields[2];
      size_t tstart = 0;
      for (size_t i = 0; i <= seq.size(); ++i) {
        if (i == seq.size() || seq[i] == '-') {
          if (i == tstart)
            throw ParseError(line_no, "empty tag in sequence '" +
                                          std::string(seq) + "'");
          p.tags.push_back(parse_tag(seq.substr(tstart, i - tstart)));
          tstart = i + 1;
        }
      }

      rep.raw_counts[p.polarity == GenderLabel::G ? 0 : 1]
                    [static_cast<size_t>(p.category)]++;

      if (p.polarity == GenderLabel::G) {
        bool has_target = false;
        for (const auto& t : p.tags)
          if (t.is(category_target_tag(p.category))) has_target = true;
        if (!has_target)
          rep.warnings.push_back(
              "line " + std::to_string(line_no) + ": G template " +
              detail::sequence_name(p.tags) + " contains no " +
              std::string(detail::kTagNames[static_cast<size_t>(
                  category_target_tag(p.category))]) +
              " tag and can never yield rewrite positions");
      }

      ps.add(std::move(p), line_no, rep.warnings);
    }
    return ps;
  }

  // The full template inventory shipped with the library.
  static PatternSet builtin_defaults(PatternLoadReport* report = nullptr);

  const std::vector<Pattern>& g_patterns() const { return g_; }
  const std::vector<Pattern>& n_patterns() const { return n_; }

  const Pattern* find_g(const std::string& key) const {
    const auto it = g_index_.find(key);
    return it == g_index_.end() ? nullptr : &g_[it->second];
  }
  bool has_n(const std::string& key) const { return n_index_.count(key) > 0; }

 private:
  void add(Pattern p, size_t line_no, std::vector<std::string>& warnings) {
    const std::string key = detail::sequence_key(p.tags);
    const std::string name = detail::sequence_name(p.tags);
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (p.polarity == GenderLabel::G) {
      if (const auto it = g_index_.find(key); it != g_index_.end()) {
        warnings.push_back(where + "duplicate G template " + name +
                           " dropped (first declaration wins)");
        return;
      }
      if (const auto it = n_index_.find(key); it != n_index_.end()) {
        warnings.push_back(where + "sequence " + name +
                           " declared both G and N; keeping G");
        n_.erase(n_.begin() + static_cast<ptrdiff_t>(it->second));
        n_index_.clear();
        for (size_t i = 0; i < n_.size(); ++i)
          n_index_.emplace(detail::sequence_key(n_[i].tags), i);
      }
      g_index_.emplace(key, g_.size());
      g_.push_back(std::move(p));
    } else {
      if (g_index_.count(key)) {
        warnings.push_back(where + "sequence " + name +
                           " declared both G and N; keeping G");
        return;
      }
      if (n_index_.count(key)) {
        warnings.push_back(where + "duplicate N template " + name +
                           " dropped (first declaration wins)");
        return;
      }
      n_index_.emplace(key, n_.size());
      n_.push_back(std::move(p));
    }
  }

  std::vector<Pattern> g_, n_;
  std::unordered_map<std::string, size_t> g_index_, n_index_;
};

struct MatchResult {
  enum class Outcome { Regenderable, Neutral, Unmatched };

  Outcome outcome = Outcome::Unmatched;
  Category category = Category::Adjective;  // valid iff Regenderable
  std::vector<size_t> positions;            // valid iff Regenderable

  bool regenderable() const { return outcome == Outcome::Regenderable; }
  bool neutral() const { return outcome == Outcome::Neutral; }
  bool unmatched() const { return outcome == Outcome::Unmatched; }

  static MatchResult make_regenderable(Category c, std::vector<size_t> pos) {
    return {Outcome::Regenderable, c, std::move(pos)};
  }
  static MatchResult make_neutral() {
    return {Outcome::Neutral, Category::Adjective, {}};
  }
  static MatchResult make_unmatched() {
    return {Outcome::Unmatched, Category::Adjective, {}};
  }
};

namespace detail {

inline bool has_clitic_suffix(std::string_view surface) {
  const std::string lw = utf8::lower(surface);
  const std::string_view v = lw;
  return v.ends_with("los") || v.ends_with("las") || v.ends_with("lo") ||
         v.ends_with("la");
}

}  // namespace detail

// Deterministic, pure. Precedence: G templates, then the attached-clitic
// check (a VCL tag anywhere, or an infinitive whose surface ends in
// lo/la/los/las), then N templates.
inline MatchResult classify_sentence(const TaggedSentence& s,
                                     const PatternSet& ps) {
  const auto tags = tag_sequence(s);
  const std::string key = detail::sequence_key(tags);

  if (const Pattern* g = ps.find_g(key)) {
    const TagId target = category_target_tag(g->category);
    std::vector<size_t> positions;
    for (size_t i = 0; i < tags.size(); ++i)
      if (tags[i].is(target)) positions.push_back(i);
    if (!positions.empty())
      return MatchResult::make_regenderable(g->category, std::move(positions));
    // A template without its own target tag cannot fire; fall through.
  }

  std::vector<size_t> clitic_positions;
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& tok = s.tokens[i];
    if (tok.tag.is(TagId::VCL) ||
        (tok.tag.is(TagId::Vinf) && detail::has_clitic_suffix(tok.surface)))
      clitic_positions.push_back(i);
  }
  if (!clitic_positions.empty())
    return MatchResult::make_regenderable(Category::CliticOnVerb,
                                          std::move(clitic_positions));

  if (ps.has_n(key)) return MatchResult::make_neutral();
  return MatchResult::make_unmatched();
}

// Default template inventory, one line per table row. The same text is
// shipped as data/patterns.txt.
inline constexpr std::string_view kDefaultPatternsText = R"(# Sequence templates for re-genderable (G) and neutral (N) sentences.
# Format: <G|N> <CLITIC|DEM|PARTICIPLE|ADJECTIVE> <TAG1-TAG2-...-TAGn>

# Clitic pronouns
G CLITIC PPC-Vfin-FS
G CLITIC FS-PPC-Vfin-FS
G CLITIC PPC-Vfin-ADV-FS
G CLITIC Vfin-CQUE-PPC-Vfin-FS
G CLITIC NEG-PPC-Vfin-FS
G CLITIC ADV-PPC-Vfin-FS
G CLITIC ADV-CM-PPC-Vfin-FS
G CLITIC PPC-Vfin-CM-NC-FS
G CLITIC ADV-NEG-PPC-Vfin-FS
G CLITIC NEG-PPC-Vfin-ADV-FS
G CLITIC Vfin-CQUE-NEG-PPC-Vfin-FS
G CLITIC NEG-Vfin-CQUE-PPC-Vfin-FS

# Demonstrative pronouns
G DEM Vfin-DM-FS
G DEM FS-Vfin-DM-FS
G DEM FS-INT-Vfin-DM-FS
G DEM NEG-Vfin-DM-FS
G DEM FS-NEG-Vfin-DM-FS
G DEM DM-FS
G DEM DM-SE-Vfin-FS
G DEM ADV-Vfin-DM-FS
G DEM DM-NEG-FS
G DEM DM-PPX-Vfin-FS
G DEM FS-CC-DM-FS
G DEM DM-NEG-Vfin-FS

# Past participles
G PARTICIPLE Vadj-FS
G PARTICIPLE Vfin-Vadj-FS
G PARTICIPLE Vadj-CC-Vadj-FS
G PARTICIPLE Vfin-ADV-Vadj-FS
G PARTICIPLE FS-Vfin-Vadj-FS
G PARTICIPLE FS-Vadj-FS
G PARTICIPLE ADV-Vadj-FS
G PARTICIPLE ADV-Vfin-DM-FS
G PARTICIPLE Vadj-ADV-FS
G PARTICIPLE FS-Vfin-ADV-Vadj-FS
G PARTICIPLE ADV-CM-Vadj-FS
G PARTICIPLE ADV-Vfin-Vadj-FS
G PARTICIPLE NEG-Vadj-FS

# Adjectives
G ADJECTIVE ADJ-FS
G ADJECTIVE Vfin-ADJ-FS
G ADJECTIVE FS-Vfin-ADJ-FS
G ADJECTIVE ADV-ADJ-FS
G ADJECTIVE Vfin-ADV-ADJ-FS
G ADJECTIVE FS-ADJ-FS
G ADJECTIVE FS-Vfin-ADV-ADJ-FS
G ADJECTIVE ADV-Vfin-ADJ-FS
G ADJECTIVE NEG-Vfin-ADJ-FS
G ADJECTIVE FS-INT-ADJ-FS
G ADJECTIVE VMfin-Vinf-ADJ-FS
G ADJECTIVE SE-Vfin-ADJ-FS
G ADJECTIVE ADJ-CC-ADJ-FS

# Past participles that must not be re-gendered
N PARTICIPLE NC-Vadj-FS
N PARTICIPLE FS-NC-Vadj-FS
N PARTICIPLE Vadj-CC-Vadj-FS
N PARTICIPLE VHfin-Vadj-ART-NC-FS
N PARTICIPLE FS-NC-Vadj-FS
N PARTICIPLE ART-NC-SE-VHfin-Vadj-FS
N PARTICIPLE ART-NC-Vfin-Vadj-FS
N PARTICIPLE ADV-Vadj-NC-FS
N PARTICIPLE FS-ADV-Vadj-NC-FS
N PARTICIPLE Vfin-ADV-Vadj-NC-FS
N PARTICIPLE FS-Vfin-ADV-Vadj-NC-FS

# Adjectives that must not be re-gendered
N ADJECTIVE FS-ADJ-NC-FS
N ADJECTIVE Vfin-ART-NC-ADJ-FS
N ADJECTIVE FS-Vfin-ART-ADJ-NC-FS
N ADJECTIVE FS-INT-ADJ-NC-FS
N ADJECTIVE NC-ADJ-FS
N ADJECTIVE ART-NC-Vfin-ADJ-FS
N ADJECTIVE ADV-ADJ-NC-FS
N ADJECTIVE FS-ADV-ADJ-NC-FS
N ADJECTIVE Vfin-ADV-ADJ-NC-FS
N ADJECTIVE FS-Vfin-ADV-ADJ-NC-FS
)";

inline PatternSet PatternSet::builtin_defaults(PatternLoadReport* report) {
  return parse(kDefaultPatternsText, report);
}

}  // namespace regender
