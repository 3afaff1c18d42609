#pragma once

// Published reference data for ten Shakespeare tragedies: the Hamlet letter
// incidences, the per-play dimension rows and the per-play Zipf orders.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "letterfractal/corpus.hpp"
#include "letterfractal/dimensions.hpp"

namespace letterfractal::fixtures {

// A..Z incidences of the Hamlet manuscript, 135,003 letters in total.
inline constexpr LetterTally::Counts kHamletCounts{
    10251, 1816, 2840, 5375, 15845, 2712, 2493, 8639, 8905, 110, 1257, 6489, 4239,
    8578,  11450, 2006, 218, 8100, 8668, 12450, 4738, 1219, 3110, 177, 3198, 120,
};

// Published incidence percentages, A..Z, as printed.
inline constexpr std::array<double, kAlphabetSize> kHamletPercent{
    7.5931645963423,    1.34515529284534,  2.10365695577135,   3.98139300608135,
    11.7367762197877,   2.0088442479056,   1.84662563054154,   6.399117056658,
    6.59614971519152,   0.0814796708221299, 0.931090420212884, 4.80655985422546,
    3.1399302237728,    6.35393287556573,  8.48129300830352,   1.48589290608357,
    0.161477893083857,  5.99986666962956,  6.42059806078384,   9.2220172885047,
    3.50955163959319,   0.902942897565239, 2.30365251142567,   0.131108197595609,
    2.36883624808338,   0.0888869136241417,
};

inline LetterTally hamlet_tally() { return LetterTally::from_counts(kHamletCounts); }

// Published direct-fit R² for Hamlet: P-log(i), log(P)-i, log(P)-log(i).
inline constexpr std::array<double, 3> kHamletDirectR2{0.675249, 0.846831, 0.954612};

struct PublishedRow {
  std::string_view key;
  std::string_view title;
  std::uint64_t total_letters;
  double fractal_dimension;
  double fractal_r2;
  double zipf_slope;
  double zipf_slope_r2;
  double zipf_dimension;
  double zipf_dimension_r2;
  std::string_view zipf_order;  // rarest first
};

inline constexpr std::array<PublishedRow, 10> kTragedies{{
    {"antony-and-cleopatra", "Anthony and Cleopatra", 116209, 0.5516, 0.07923, 0.40587, 0.921137,
     1.9320, 0.972011, "ZJQXKVBGFPWYCMUDLHNIRSOTAE"},
    {"coriolanus", "Coriolanus", 124626, 0.4707, 0.06009, 0.40876, 0.927299, 1.8764, 0.955026,
     "QJXZKVPGBFYWCMDLUHRNSAIOTE"},
    {"hamlet", "Hamlet", 135003, 0.4500, 0.06712, 0.40585, 0.928312, 1.6973, 0.954612,
     "JZXQVKBPGFCWYMUDLRNHSIAOTE"},
    {"julius-caesar", "Julius Caesar", 86659, 0.5269, 0.07023, 0.40596, 0.948025, 1.9448,
     0.956628, "QJXZKVPGBFWYCMDLUHNRISOATE"},
    {"king-lear", "King Lear", 115986, 0.5598, 0.07934, 0.40276, 0.913496, 1.9424, 0.955115,
     "ZQJXVKBPFCGWYMUDLIHSRNAOTE"},
    {"macbeth", "Macbeth", 77524, 0.5985, 0.09261, 0.40247, 0.928162, 1.9414, 0.974379,
     "ZJXQVKPGBYFWCMULDRISNHAOTE"},
    {"othello", "Othello", 115245, 0.5699, 0.08031, 0.41361, 0.925255, 1.9720, 0.961605,
     "ZQJXKVPBGFCWYMUDLRNHSIATOE"},
    {"romeo-and-juliet", "Romeo and Juliet", 105834, 0.5496, 0.08686, 0.40588, 0.920359, 1.8441,
     0.977931, "ZQXJKVPBGFCWYMUDLNRSHIAOTE"},
    {"timon-of-athens", "Timon of Athenes", 83500, 0.5358, 0.07680, 0.41199, 0.927070, 1.8935,
     0.959367, "ZQJXKVBGPCFYWMUDLRHNISAOTE"},
    {"titus-andronicus", "Titus Andronicus", 92467, 0.5180, 0.06743, 0.40869, 0.936204, 1.9558,
     0.961202, "ZXJQKVPGBFCYWMLDUHIRNSAOTE"},
}};

inline std::optional<PublishedRow> find_published(std::string_view key) {
  auto it = std::find_if(kTragedies.begin(), kTragedies.end(),
                         [&](const PublishedRow& r) { return r.key == key; });
  if (it == kTragedies.end()) return std::nullopt;
  return *it;
}

inline DimensionReport published_report(const PublishedRow& row) {
  DimensionReport r;
  r.manuscript_id = std::string(row.key);
  r.total_letters = row.total_letters;
  r.fractal_dimension = row.fractal_dimension;
  r.fractality = row.fractal_r2;
  r.zipf_slope = row.zipf_slope;
  r.zipf_slope_r2 = row.zipf_slope_r2;
  r.zipf_dimension = row.zipf_dimension;
  r.zipf_dimension_r2 = row.zipf_dimension_r2;
  if (row.key == "hamlet") r.direct_fit_r2 = kHamletDirectR2;
  r.rank_convention = RankConvention::Ascending;
  return r;
}

// Counts realizing a given rarest-first order exactly: the letter at
// ascending position p gets p occurrences.
inline LetterTally tally_for_order(std::string_view ascending) {
  if (ascending.size() != kAlphabetSize) {
    throw Error(ErrorCode::InvalidInput, "order must list 26 letters");
  }
  LetterTally::Counts counts{};
  for (std::size_t p = 0; p < ascending.size(); ++p) {
    counts[LetterTally::index_of(static_cast<char>(std::toupper(ascending[p])))] = p + 1;
  }
  return LetterTally::from_counts(counts);
}

}  // namespace letterfractal::fixtures
