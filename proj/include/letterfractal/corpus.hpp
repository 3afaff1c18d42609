#pragma once

// Manuscript ingestion: raw documents, letter normalization, boilerplate
// stripping and letter tallies.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "letterfractal/error.hpp"

namespace letterfractal {

inline constexpr std::size_t kAlphabetSize = 26;

enum class DocumentSource { LocalFile, RemoteArchive, Inline };

struct RawDocument {
  std::string id;
  std::string title;
  std::string body;  // UTF-8
  DocumentSource source = DocumentSource::Inline;
};

enum class CaseFolding { ToUpper };

struct NormalizationPolicy {
  CaseFolding case_folding = CaseFolding::ToUpper;
  // Fold Latin-1 / Latin Extended-A letters (é, Å, Œ, ...) to their base
  // letters instead of discarding them.
  bool fold_diacritics = false;
};

// Ordered stream of letters, each in 'A'..'Z'.
using LetterStream = std::string;

namespace detail {

struct FoldRange {
  char32_t first;
  char32_t last;
  std::string_view folded;
};

// Base-letter spellings for U+00C0..U+017F. Upper and lower case map to the
// same upper-case spelling; entries with an empty spelling are not letters.
inline constexpr std::array<FoldRange, 50> kFoldTable{{
    {0x00C0, 0x00C5, "A"},  {0x00C6, 0x00C6, "AE"}, {0x00C7, 0x00C7, "C"},
    {0x00C8, 0x00CB, "E"},  {0x00CC, 0x00CF, "I"},  {0x00D0, 0x00D0, "D"},
    {0x00D1, 0x00D1, "N"},  {0x00D2, 0x00D6, "O"},  {0x00D7, 0x00D7, ""},
    {0x00D8, 0x00D8, "O"},  {0x00D9, 0x00DC, "U"},  {0x00DD, 0x00DD, "Y"},
    {0x00DE, 0x00DE, "TH"}, {0x00DF, 0x00DF, "SS"}, {0x00E0, 0x00E5, "A"},
    {0x00E6, 0x00E6, "AE"}, {0x00E7, 0x00E7, "C"},  {0x00E8, 0x00EB, "E"},
    {0x00EC, 0x00EF, "I"},  {0x00F0, 0x00F0, "D"},  {0x00F1, 0x00F1, "N"},
    {0x00F2, 0x00F6, "O"},  {0x00F7, 0x00F7, ""},   {0x00F8, 0x00F8, "O"},
    {0x00F9, 0x00FC, "U"},  {0x00FD, 0x00FD, "Y"},  {0x00FE, 0x00FE, "TH"},
    {0x00FF, 0x00FF, "Y"},  {0x0100, 0x0105, "A"},  {0x0106, 0x010D, "C"},
    {0x010E, 0x0111, "D"},  {0x0112, 0x011B, "E"},  {0x011C, 0x0123, "G"},
    {0x0124, 0x0127, "H"},  {0x0128, 0x0131, "I"},  {0x0132, 0x0133, "IJ"},
    {0x0134, 0x0135, "J"},  {0x0136, 0x0138, "K"},  {0x0139, 0x0142, "L"},
    {0x0143, 0x014B, "N"},  {0x014C, 0x0151, "O"},  {0x0152, 0x0153, "OE"},
    {0x0154, 0x0159, "R"},  {0x015A, 0x0161, "S"},  {0x0162, 0x0167, "T"},
    {0x0168, 0x0173, "U"},  {0x0174, 0x0175, "W"},  {0x0176, 0x0178, "Y"},
    {0x0179, 0x017E, "Z"},  {0x017F, 0x017F, "S"},
}};

inline std::string_view fold_diacritic(char32_t cp) {
  for (const auto& r : kFoldTable) {
    if (cp >= r.first && cp <= r.last) return r.folded;
  }
  return {};
}

// Decodes one UTF-8 sequence starting at text[pos]; advances pos. Malformed
// bytes decode to U+FFFD and consume a single byte.
inline char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + len > text.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto cont = static_cast<unsigned char>(text[pos + k]);
    if ((cont & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  pos += len;
  return cp;
}

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline LetterStream normalize(std::string_view text, const NormalizationPolicy& policy = {}) {
  LetterStream out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = detail::next_code_point(text, pos);
    if (cp >= 'a' && cp <= 'z') {
      out.push_back(static_cast<char>(cp - 'a' + 'A'));
    } else if (cp >= 'A' && cp <= 'Z') {
      out.push_back(static_cast<char>(cp));
    } else if (policy.fold_diacritics && cp >= 0x00C0) {
      out.append(detail::fold_diacritic(cp));
    }
  }
  return out;
}

inline LetterStream normalize(const RawDocument& doc, const NormalizationPolicy& policy = {}) {
  return normalize(doc.body, policy);
}

// Occurrence counts of the 26 letters. Immutable once built; total is always
// the sum of counts.
class LetterTally {
 public:
  using Counts = std::array<std::uint64_t, kAlphabetSize>;

  static LetterTally from_counts(const Counts& counts) {
    LetterTally t;
    t.counts_ = counts;
    t.total_ = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    return t;
  }

  std::uint64_t count(char letter) const { return counts_.at(index_of(letter)); }
  std::uint64_t count_at(std::size_t index) const { return counts_.at(index); }
  const Counts& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

  static std::size_t index_of(char letter) {
    if (letter < 'A' || letter > 'Z') {
      throw Error(ErrorCode::InvalidInput, std::string("not a letter: '") + letter + "'");
    }
    return static_cast<std::size_t>(letter - 'A');
  }

  friend bool operator==(const LetterTally&, const LetterTally&) = default;

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
};

inline LetterTally tally(std::string_view letters) {
  if (letters.empty()) {
    throw Error(ErrorCode::EmptyText, "no countable letters");
  }
  LetterTally::Counts counts{};
  for (char c : letters) ++counts[LetterTally::index_of(c)];
  return LetterTally::from_counts(counts);
}

// Keeps only the text between the archive's "*** START OF" and "*** END OF"
// marker lines. Documents without markers pass through unchanged.
inline RawDocument strip_boilerplate(const RawDocument& raw) {
  std::optional<std::size_t> body_begin;
  std::optional<std::size_t> body_end;
  std::size_t line_start = 0;
  const std::string_view text = raw.body;
  while (line_start < text.size()) {
    auto nl = text.find('\n', line_start);
    const std::size_t line_end = nl == std::string_view::npos ? text.size() : nl + 1;
    const auto line = detail::trim(text.substr(line_start, line_end - line_start));
    if (line.starts_with("*** START OF")) {
      if (body_begin) {
        throw Error(ErrorCode::MalformedMarkers, raw.id + ": repeated start marker");
      }
      body_begin = line_end;
    } else if (line.starts_with("*** END OF")) {
      if (!body_begin) {
        throw Error(ErrorCode::MalformedMarkers, raw.id + ": end marker before start marker");
      }
      body_end = line_start;
      break;
    }
    line_start = line_end;
  }
  if (!body_begin) return raw;
  if (!body_end) {
    throw Error(ErrorCode::MalformedMarkers, raw.id + ": start marker without end marker");
  }
  RawDocument out = raw;
  out.body = std::string(text.substr(*body_begin, *body_end - *body_begin));
  return out;
}

inline RawDocument read_local_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::NotFound, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return RawDocument{path.string(), path.stem().string(), ss.str(), DocumentSource::LocalFile};
}

}  // namespace letterfractal
