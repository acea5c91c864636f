#include "csfe/segmentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "csfe/error.hpp"
#include "csfe/utf8.hpp"

namespace csfe {

namespace {

enum class CharClass { Mandarin, Latin, Punct, Space, Unsupported };

bool is_space(char32_t cp) { return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n' || cp == 0x3000; }

bool is_latin(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || cp == U'\'';
}

CharClass classify(char32_t cp) {
  if (is_cjk_ideograph(cp)) return CharClass::Mandarin;
  if (is_latin(cp)) return CharClass::Latin;
  if (is_punct(cp)) return CharClass::Punct;
  if (is_space(cp)) return CharClass::Space;
  return CharClass::Unsupported;
}

Script to_script(CharClass c) {
  switch (c) {
    case CharClass::Mandarin: return Script::Mandarin;
    case CharClass::Latin: return Script::Latin;
    default: return Script::Punct;
  }
}

}  // namespace

bool is_sentence_final_punct(char32_t cp) noexcept {
  switch (cp) {
    case U'。': case U'！': case U'？': case U'.': case U'!': case U'?':
      return true;
    default:
      return false;
  }
}

bool is_phrase_punct(char32_t cp) noexcept {
  switch (cp) {
    case U'，': case U'、': case U'；': case U'：': case U',': case U';': case U':':
      return true;
    default:
      return false;
  }
}

bool is_punct(char32_t cp) noexcept {
  if (is_sentence_final_punct(cp) || is_phrase_punct(cp)) return true;
  switch (cp) {
    case U'“': case U'”': case U'‘': case U'’': case U'（': case U'）': case U'《': case U'》':
    case U'〈': case U'〉': case U'「': case U'」': case U'『': case U'』': case U'【': case U'】':
    case U'—': case U'…': case U'·': case U'～':
    case U'"': case U'(': case U')': case U'[': case U']': case U'-':
      return true;
    default:
      return false;
  }
}

bool is_cjk_ideograph(char32_t cp) noexcept {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
         (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x20000 && cp <= 0x2EBEF) ||
         (cp >= 0x2F800 && cp <= 0x2FA1F) || (cp >= 0x30000 && cp <= 0x3134F);
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<Span> segment_scripts(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::vector<CharClass> classes(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    classes[i] = classify(cps[i].value);
    if (classes[i] == CharClass::Unsupported) {
      std::string ch;
      utf8::append(ch, cps[i].value);
      throw Error(ErrorCode::UnsupportedCharacter, ch, utf8::format_codepoint(cps[i].value),
                  cps[i].offset);
    }
  }

  std::vector<Span> spans;
  std::optional<std::size_t> open_begin;  // byte offset of the open span
  CharClass open_class = CharClass::Space;
  std::size_t open_end = 0;

  auto close = [&] {
    if (open_begin) {
      spans.push_back({std::string(text.substr(*open_begin, open_end - *open_begin)),
                       to_script(open_class), *open_begin});
      open_begin.reset();
    }
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto cls = classes[i];
    if (cls == CharClass::Space) {
      if (open_begin && open_class == CharClass::Latin) {
        std::size_t j = i;
        while (j < cps.size() && classes[j] == CharClass::Space) ++j;
        if (j < cps.size() && classes[j] == CharClass::Latin) {
          open_end = cps[j - 1].offset + cps[j - 1].length;
          i = j - 1;
          continue;
        }
      }
      close();
      continue;
    }
    if (open_begin && cls != open_class) close();
    if (!open_begin) {
      open_begin = cps[i].offset;
      open_class = cls;
    }
    open_end = cps[i].offset + cps[i].length;
  }
  close();
  return spans;
}

SegmentedText segment_words(const std::vector<Span>& spans, const LexiconBundle& bundle) {
  SegmentedText out;
  std::size_t sentence = 0;
  std::size_t word_index = 0;

  auto emit = [&](std::string surface, Language lang, std::size_t chars, std::size_t offset) {
    Token t;
    t.surface = std::move(surface);
    t.language = lang;
    t.char_count = chars;
    t.syllable_count = chars;
    t.word_index = word_index++;
    t.ordinal = out.tokens.size();
    t.sentence_index = sentence;
    t.offset = offset;
    out.tokens.push_back(std::move(t));
  };

  for (const auto& span : spans) {
    switch (span.script) {
      case Script::Mandarin: {
        const auto cps = utf8::decode(span.text);
        std::size_t i = 0;
        while (i < cps.size()) {
          const auto longest = std::min(bundle.max_word_length(), cps.size() - i);
          std::size_t len = 1;
          for (std::size_t n = longest; n >= 2; --n) {
            const auto begin = cps[i].offset;
            const auto end = cps[i + n - 1].offset + cps[i + n - 1].length;
            if (bundle.is_word(std::string_view(span.text).substr(begin, end - begin))) {
              len = n;
              break;
            }
          }
          const auto begin = cps[i].offset;
          const auto end = cps[i + len - 1].offset + cps[i + len - 1].length;
          emit(span.text.substr(begin, end - begin), Language::Mandarin, len, span.offset + begin);
          i += len;
        }
        break;
      }
      case Script::Latin: {
        std::size_t i = 0;
        const auto& s = span.text;
        while (i < s.size()) {
          while (i < s.size() && !is_latin(static_cast<unsigned char>(s[i]))) ++i;
          std::size_t j = i;
          while (j < s.size() && is_latin(static_cast<unsigned char>(s[j]))) ++j;
          if (j > i) emit(s.substr(i, j - i), Language::English, 1, span.offset + i);
          i = j;
        }
        break;
      }
      case Script::Punct: {
        out.punct.push_back(span);
        const auto cps = utf8::decode(span.text);
        const bool ends_sentence = std::any_of(cps.begin(), cps.end(), [](const auto& cp) {
          return is_sentence_final_punct(cp.value);
        });
        if (ends_sentence && word_index > 0) {
          ++sentence;
          word_index = 0;
        }
        break;
      }
    }
  }
  return out;
}

std::vector<Token> tag_pos(std::vector<Token> tokens, const LexiconBundle& bundle) {
  for (auto& t : tokens) {
    const auto tag = t.language == Language::English ? bundle.pos(to_lower_ascii(t.surface))
                                                     : bundle.pos(t.surface);
    t.pos = tag.value_or(PosTag::X);
  }
  return tokens;
}

}  // namespace csfe
