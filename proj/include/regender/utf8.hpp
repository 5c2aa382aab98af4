#pragma once

// Minimal UTF-8 helpers for Spanish text. Operations that talk about
// "characters" (suffix lengths, casing) work on Unicode scalar values,
// not bytes. Case mapping covers ASCII plus the Latin-1 range, which is
// all Spanish needs (á é í ó ú ü ñ and their capitals).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace regender::utf8 {

// Decodes the codepoint starting at byte offset `i` and advances `i`.
// Invalid bytes are consumed one at a time and returned as-is.
inline char32_t decode_next(std::string_view s, size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + len > s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  for (size_t i = 0; i < s.size();) cps.push_back(decode_next(s, i));
  return cps;
}

inline size_t length(std::string_view s) {
  size_t n = 0;
  for (size_t i = 0; i < s.size(); ++n) decode_next(s, i);
  return n;
}

inline bool is_upper(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') ||
         (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

inline bool is_lower(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') ||
         (cp >= 0xE0 && cp <= 0xFF && cp != 0xF7);
}

inline bool is_alpha(char32_t cp) { return is_upper(cp) || is_lower(cp); }

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

inline char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  return cp;
}

inline std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) append(out, to_lower(decode_next(s, i)));
  return out;
}

inline std::string upper(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) append(out, to_upper(decode_next(s, i)));
  return out;
}

inline bool contains_alpha(std::string_view s) {
  for (size_t i = 0; i < s.size();) {
    if (is_alpha(decode_next(s, i))) return true;
  }
  return false;
}

// Byte offset where the last `k` codepoints begin; 0 if `s` has fewer.
inline size_t suffix_offset(std::string_view s, size_t k) {
  std::vector<size_t> starts;
  starts.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    starts.push_back(i);
    decode_next(s, i);
  }
  if (k >= starts.size()) return 0;
  return starts[starts.size() - k];
}

// True if every cased codepoint is uppercase and at least one exists.
inline bool all_caps(std::string_view s) {
  bool any = false;
  for (size_t i = 0; i < s.size();) {
    const char32_t cp = decode_next(s, i);
    if (is_lower(cp)) return false;
    if (is_upper(cp)) any = true;
  }
  return any;
}

inline bool initial_cap(std::string_view s) {
  size_t i = 0;
  if (s.empty()) return false;
  const char32_t first = decode_next(s, i);
  if (!is_upper(first)) return false;
  while (i < s.size()) {
    if (is_upper(decode_next(s, i))) return false;
  }
  return true;
}

inline std::string capitalize_first(std::string_view s) {
  if (s.empty()) return {};
  size_t i = 0;
  const char32_t first = decode_next(s, i);
  std::string out;
  append(out, to_upper(first));
  out.append(s.substr(i));
  return out;
}

}  // namespace regender::utf8
