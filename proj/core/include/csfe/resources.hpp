#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "csfe/types.hpp"

namespace csfe {

template <class V>
using Table = std::map<std::string, V, std::less<>>;

namespace resource_files {
inline constexpr std::string_view kMandarinChar = "mandarin_char.tsv";
inline constexpr std::string_view kMandarinWord = "mandarin_word.tsv";
inline constexpr std::string_view kEnglish = "english.dict";
inline constexpr std::string_view kPinyinIpa = "pinyin_ipa.tsv";
inline constexpr std::string_view kArpabetIpa = "arpabet_ipa.tsv";
inline constexpr std::string_view kPos = "pos.tsv";
}  // namespace resource_files

/// Immutable pronunciation, POS and IPA-mapping tables. Only the loader
/// constructs one; every table is key-sorted so iteration order never
/// depends on file line order.
class LexiconBundle {
 public:
  /// Character -> tonal pinyin readings; the first reading is the default.
  const Table<std::vector<std::string>>& mandarin_char_pron() const { return mandarin_char_pron_; }
  /// Multi-character word -> one tonal pinyin syllable per character.
  const Table<std::vector<std::string>>& mandarin_word_pron() const { return mandarin_word_pron_; }
  /// Lowercase English word -> ARPAbet phones with stress digits on vowels.
  const Table<std::vector<std::string>>& english_pron() const { return english_pron_; }
  const Table<std::string>& pinyin_to_ipa() const { return pinyin_to_ipa_; }
  const Table<std::string>& arpabet_to_ipa() const { return arpabet_to_ipa_; }
  const Table<PosTag>& pos_table() const { return pos_table_; }

  /// Word surface forms used by segmentation (the keys of mandarin_word_pron).
  bool is_word(std::string_view surface) const { return mandarin_word_pron_.contains(surface); }
  /// Longest word in the segmentation lexicon, in code points.
  std::size_t max_word_length() const { return max_word_length_; }

  const std::vector<std::string>* char_readings(std::string_view ch) const;
  const std::vector<std::string>* word_reading(std::string_view word) const;
  const std::vector<std::string>* english_phones(std::string_view lower_word) const;
  std::optional<PosTag> pos(std::string_view word) const;

 private:
  friend class BundleLoader;
  LexiconBundle() = default;

  Table<std::vector<std::string>> mandarin_char_pron_;
  Table<std::vector<std::string>> mandarin_word_pron_;
  Table<std::vector<std::string>> english_pron_;
  Table<std::string> pinyin_to_ipa_;
  Table<std::string> arpabet_to_ipa_;
  Table<PosTag> pos_table_;
  std::size_t max_word_length_ = 1;
};

enum class LoadMode {
  Validated,  // dangling references are load errors
  Unchecked,  // parse only; call validate_bundle yourself
};

/// Loads the six resource files from `dir`. Throws csfe::Error with
/// MissingResource, MalformedLine, DuplicateKey or DanglingReference.
LexiconBundle load_resources(const std::filesystem::path& dir,
                             LoadMode mode = LoadMode::Validated);

struct Finding {
  enum class Kind { UnmappedPinyin, UnmappedPhone };
  Kind kind;
  std::string table;      // resource file holding the entry
  std::string key;        // entry key (character, word, English word)
  std::string reference;  // the syllable or phone lacking an IPA mapping

  std::string describe() const;
  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Empty iff every pinyin syllable and ARPAbet phone in the lexicons has an
/// IPA mapping. One finding per distinct dangling reference.
std::vector<Finding> validate_bundle(const LexiconBundle& bundle);

/// Writes every table in a canonical sorted text form. Two loads of the
/// same directory produce identical output.
void write_canonical(const LexiconBundle& bundle, std::ostream& out);

std::string strip_stress(std::string_view phone);
bool is_vowel_phone(std::string_view phone);

}  // namespace csfe
