#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csfe/g2p.hpp"
#include "csfe/resources.hpp"

namespace csfe {

// ---------------------------------------------------------------------------
// Columns and system presets

/// Every column a frame matrix can carry, in manifest order.
enum class Column : std::uint8_t {
  PhonemeTonal,  // PE: tonal phoneme symbols
  IpaTonal,      // IE: tonal, unsplit IPA symbols
  Phoneme,       // PTE
  Ipa,           // ITE family: IPA split into grapheme clusters
  Tone,
  ToneDesc1,
  ToneDesc2,
  ToneDesc3,
  Boundary,
  WordLen,
  Pos,
  CharPosInWord,
  CharPosInSentence,
  WordPosInSentence,
};

inline constexpr std::size_t kColumnCount = 14;

std::string_view column_name(Column c) noexcept;
std::optional<Column> parse_column(std::string_view name) noexcept;
bool is_segmental(Column c) noexcept;

/// How a syllable becomes segmental symbols.
enum class SegmentalMode : std::uint8_t {
  TonalPhoneme,  // Mandarin "huan1"; English phones with stress digits
  TonalIpa,      // Mandarin ipa + tone digit; English ipa with stress mark
  Phoneme,       // Mandarin toneless pinyin; English phones with stress digits
  SplitIpa,      // grapheme clusters of the toneless IPA
};

Column segmental_column(SegmentalMode mode) noexcept;

struct SystemConfig {
  std::string name;
  SegmentalMode mode = SegmentalMode::SplitIpa;
  bool tone_layer = false;
  bool tone_desc_layer = false;
  bool boundary = false;
  bool word_context = false;
  bool sentence_context = false;

  bool phoneme_layer() const {
    return mode == SegmentalMode::Phoneme || mode == SegmentalMode::TonalPhoneme;
  }
  bool ipa_layer() const { return !phoneme_layer(); }
  /// PE and IE fold tones into unsplit symbols.
  bool tonal_symbols() const {
    return mode == SegmentalMode::TonalPhoneme || mode == SegmentalMode::TonalIpa;
  }

  std::vector<Column> columns() const;
  bool has(Column c) const;
};

/// The eight presets: PE, IE, PTE, ITE, ITE-B, ITE-BW, ITE-BS, ITE-BWS.
const std::vector<SystemConfig>& presets();

/// Throws UnknownConfig.
const SystemConfig& preset(std::string_view name);

/// All layers for `mode`, tone description included. Reduce it with
/// apply_config to obtain any compatible preset.
SystemConfig superset_config(SegmentalMode mode);

// ---------------------------------------------------------------------------
// Tone layers

/// Tone-layer class: 0 = none (boundary frames), Mandarin tones 1..5,
/// English stress 0/1/2 as 6/7/8.
inline constexpr std::uint16_t kToneClassCount = 9;
std::uint16_t tone_class(const Syllable& s) noexcept;

struct ToneDescription {
  std::array<std::uint8_t, 3> contour{};  // pitch levels 1..5, 0 = not applicable
  friend bool operator==(const ToneDescription&, const ToneDescription&) = default;
};

/// Linear resampling of a pitch-level sequence to `length` points, rounded
/// half away from zero.
std::vector<int> resample_contour(std::span<const int> levels, std::size_t length);

/// Chao tone-letter contour resampled to three levels. Tone 5 (neutral) is
/// all zeros. Throws InvalidTone outside 1..5.
ToneDescription tone_description(int tone);

/// Contour for a syllable: English units are all zeros.
ToneDescription tone_description_of(const Syllable& s);

// ---------------------------------------------------------------------------
// IPA splitting

/// Splits into extended grapheme clusters: combining diacritics stay on
/// their base, spacing modifier letters stand alone. Throws EmptyInput.
std::vector<std::string> split_ipa(std::string_view ipa);

/// Segmental symbols a syllable contributes under `mode`.
std::vector<std::string> segmental_symbols(const Syllable& s, SegmentalMode mode);

// ---------------------------------------------------------------------------
// Symbol tables

inline constexpr std::string_view kPad = "<PAD>";
inline constexpr std::string_view kUnk = "<UNK>";
inline constexpr std::array<std::string_view, 3> kBoundarySymbols = {"#PW", "#PPH", "#IPH"};

// Context clip ranges: values live in [min, limit).
inline constexpr std::uint16_t kWordLenMax = 8;               // word_len in 1..8
inline constexpr std::uint16_t kCharPosInWordLimit = 8;       // 0..7
inline constexpr std::uint16_t kCharPosInSentenceLimit = 128;  // 0..127
inline constexpr std::uint16_t kWordPosInSentenceLimit = 64;   // 0..63

enum class Strictness { Strict, Lenient };

class SymbolTable {
 public:
  /// PAD=0, UNK=1, then `fixed` in the given order, then `symbols` in
  /// codepoint order.
  static SymbolTable open(std::string name, const std::set<std::string>& symbols,
                          std::span<const std::string_view> fixed = {});
  /// Exactly `symbols`, index = position.
  static SymbolTable closed(std::string name, std::vector<std::string> symbols);

  const std::string& name() const { return name_; }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool has_unk() const { return has_unk_; }
  bool contains(std::string_view symbol) const;

  /// Throws UnknownSymbol unless lenient mode maps it to UNK.
  std::uint16_t encode(std::string_view symbol, Strictness strictness = Strictness::Strict) const;
  const std::string& decode(std::uint16_t index) const;

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.name_ == b.name_ && a.symbols_ == b.symbols_;
  }

 private:
  SymbolTable(std::string name, std::vector<std::string> symbols, bool has_unk);

  std::string name_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::uint16_t> index_;
  bool has_unk_ = false;
};

std::uint16_t encode_symbol(const SymbolTable& table, std::string_view symbol,
                            Strictness strictness = Strictness::Strict);

/// One table per active column, keyed by column.
class SymbolTables {
 public:
  void add(Column c, SymbolTable table);
  bool contains(Column c) const { return tables_.contains(c); }
  const SymbolTable& at(Column c) const;
  std::vector<Column> columns() const;

  /// `layer\tindex\tsymbol` for each table, in column order.
  void write_manifest(std::ostream& out) const;

  friend bool operator==(const SymbolTables&, const SymbolTables&) = default;

 private:
  std::map<Column, SymbolTable> tables_;
};

/// Segmental vocabulary contributed by each language under `mode`. For
/// SplitIpa these are the clusters of the two IPA mapping tables; for the
/// other modes, every symbol the lexicons can produce.
std::set<std::string> mandarin_segmental_vocabulary(const LexiconBundle& bundle, SegmentalMode mode);
std::set<std::string> english_segmental_vocabulary(const LexiconBundle& bundle, SegmentalMode mode);

SymbolTables build_symbol_tables(const LexiconBundle& bundle, const SystemConfig& config);

}  // namespace csfe
