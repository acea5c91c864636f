#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "csfe/resources.hpp"
#include "csfe/types.hpp"

namespace csfe {

enum class Script : std::uint8_t { Mandarin, Latin, Punct };

/// A maximal single-script run of the source text. Whitespace between
/// Latin letters stays inside the Latin span; any other whitespace is
/// dropped and shows up only as a gap between span offsets.
struct Span {
  std::string text;
  Script script;
  std::size_t offset;  // bytes into the source

  std::size_t end() const { return offset + text.size(); }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Language language = Language::Mandarin;
  PosTag pos = PosTag::X;
  std::size_t word_index = 0;      // within its sentence, contiguous from 0
  std::size_t char_count = 1;      // Mandarin characters, or 1 for an English word
  std::size_t syllable_count = 1;  // filled after G2P; defaults to char_count
  std::size_t ordinal = 0;         // within the utterance
  std::size_t sentence_index = 0;
  std::size_t offset = 0;          // bytes into the source

  friend bool operator==(const Token&, const Token&) = default;
};

struct SegmentedText {
  std::vector<Token> tokens;
  std::vector<Span> punct;  // kept as boundary evidence
};

/// Sentence-final punctuation (。！？.!?) and intra-sentence phrase
/// punctuation (，、；：,;:).
bool is_sentence_final_punct(char32_t cp) noexcept;
bool is_phrase_punct(char32_t cp) noexcept;
bool is_punct(char32_t cp) noexcept;
bool is_cjk_ideograph(char32_t cp) noexcept;

/// Partitions `text` into script spans. Throws UnsupportedCharacter (with
/// the byte offset) for digits and anything outside the three classes.
std::vector<Span> segment_scripts(std::string_view text);

/// Forward maximum matching over Mandarin spans, whitespace splitting over
/// Latin spans. A Punct span containing sentence-final punctuation starts a
/// new sentence: word_index restarts at 0 and sentence_index advances.
SegmentedText segment_words(const std::vector<Span>& spans, const LexiconBundle& bundle);

/// Fills Token::pos from the bundle (English looked up lowercase); unknown
/// words get PosTag::X.
std::vector<Token> tag_pos(std::vector<Token> tokens, const LexiconBundle& bundle);

std::string to_lower_ascii(std::string_view s);

}  // namespace csfe
