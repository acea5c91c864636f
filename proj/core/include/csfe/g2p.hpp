#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csfe/resources.hpp"
#include "csfe/segmentation.hpp"
#include "csfe/types.hpp"

namespace csfe {

/// One pronounceable unit. The segmental IPA carries no tone or stress
/// marks; tone (Mandarin) and stress (English) live in their own fields.
struct Syllable {
  Language language = Language::Mandarin;
  std::string base;                 // toneless pinyin, or space-joined stress-stripped phones
  std::vector<std::string> phones;  // English only: phones with stress digits
  std::string ipa;
  int tone = 0;    // Mandarin 1..5 (5 = neutral); 0 for English
  int stress = 0;  // English 0..2; 0 for Mandarin
  std::size_t token_index = 0;        // owning Token::word_index
  std::size_t token_ordinal = 0;      // owning Token::ordinal
  std::size_t unit_index_in_word = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct TonalPinyin {
  std::string base;
  int tone;
  friend bool operator==(const TonalPinyin&, const TonalPinyin&) = default;
};

/// "huan1" -> {"huan", 1}; a missing digit means neutral tone 5.
/// Throws MalformedPinyin for digits outside 1..5 or an empty base.
TonalPinyin tone_of(std::string_view tonal_pinyin);

/// Exact table lookup; throws UnknownPinyin.
const std::string& pinyin_to_ipa_lookup(std::string_view base, const LexiconBundle& bundle);

/// Word reading when the whole surface is a lexicon word, otherwise each
/// character's default reading. Throws UnknownCharacter.
std::vector<Syllable> mandarin_g2p(const Token& token, const LexiconBundle& bundle);

/// CMU lookup, then one syllable per vowel nucleus. Throws OutOfVocabulary.
std::vector<Syllable> english_g2p(const Token& token, const LexiconBundle& bundle);

std::vector<Syllable> token_g2p(const Token& token, const LexiconBundle& bundle);

/// Groups phones into syllables: onset consonants attach to the following
/// nucleus, trailing consonants to the last one. Each group holds exactly
/// one vowel (a phone carrying a stress digit).
std::vector<std::vector<std::string>> syllabify(std::span<const std::string> phones);

/// Builds one English Syllable from a phone group.
Syllable english_syllable(std::span<const std::string> group, const LexiconBundle& bundle);

/// Optional rewrite applied to each sentence's syllables after lookup.
/// Unset by default: no tone sandhi is applied.
using ToneSandhiHook = std::function<void(std::vector<Syllable>&)>;

}  // namespace csfe
