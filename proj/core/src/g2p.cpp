#include "csfe/g2p.hpp"

#include "csfe/error.hpp"
#include "csfe/utf8.hpp"

namespace csfe {

TonalPinyin tone_of(std::string_view tonal_pinyin) {
  std::string_view base = tonal_pinyin;
  int tone = 5;
  if (!base.empty() && base.back() >= '0' && base.back() <= '9') {
    tone = base.back() - '0';
    base.remove_suffix(1);
    if (tone < 1 || tone > 5) {
      throw Error(ErrorCode::MalformedPinyin, std::string(tonal_pinyin), "tone digit outside 1..5");
    }
  }
  if (base.empty()) throw Error(ErrorCode::MalformedPinyin, std::string(tonal_pinyin), "empty base");
  return {std::string(base), tone};
}

const std::string& pinyin_to_ipa_lookup(std::string_view base, const LexiconBundle& bundle) {
  const auto it = bundle.pinyin_to_ipa().find(base);
  if (it == bundle.pinyin_to_ipa().end()) throw Error(ErrorCode::UnknownPinyin, std::string(base));
  return it->second;
}

std::vector<Syllable> mandarin_g2p(const Token& token, const LexiconBundle& bundle) {
  const auto cps = utf8::decode(token.surface);
  std::vector<std::string> readings;
  readings.reserve(cps.size());
  if (const auto* word = bundle.word_reading(token.surface)) {
    readings = *word;
  } else {
    for (const auto& cp : cps) {
      const auto ch = std::string_view(token.surface).substr(cp.offset, cp.length);
      const auto* r = bundle.char_readings(ch);
      if (!r) throw Error(ErrorCode::UnknownCharacter, std::string(ch), {}, token.offset + cp.offset);
      readings.push_back(r->front());
    }
  }

  std::vector<Syllable> out;
  out.reserve(readings.size());
  for (std::size_t i = 0; i < readings.size(); ++i) {
    auto [base, tone] = tone_of(readings[i]);
    Syllable s;
    s.language = Language::Mandarin;
    s.ipa = pinyin_to_ipa_lookup(base, bundle);
    s.base = std::move(base);
    s.tone = tone;
    s.token_index = token.word_index;
    s.token_ordinal = token.ordinal;
    s.unit_index_in_word = i;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<std::string>> syllabify(std::span<const std::string> phones) {
  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> pending;
  for (const auto& p : phones) {
    pending.push_back(p);
    if (is_vowel_phone(p)) {
      groups.push_back(std::move(pending));
      pending.clear();
    }
  }
  if (!pending.empty()) {
    if (groups.empty()) {
      groups.push_back(std::move(pending));
    } else {
      groups.back().insert(groups.back().end(), pending.begin(), pending.end());
    }
  }
  return groups;
}

Syllable english_syllable(std::span<const std::string> group, const LexiconBundle& bundle) {
  Syllable s;
  s.language = Language::English;
  s.phones.assign(group.begin(), group.end());
  for (const auto& p : group) {
    const auto bare = strip_stress(p);
    const auto it = bundle.arpabet_to_ipa().find(bare);
    if (it == bundle.arpabet_to_ipa().end()) throw Error(ErrorCode::DanglingReference, bare);
    if (!s.base.empty()) s.base += ' ';
    s.base += bare;
    s.ipa += it->second;
    if (is_vowel_phone(p)) s.stress = p.back() - '0';
  }
  return s;
}

std::vector<Syllable> english_g2p(const Token& token, const LexiconBundle& bundle) {
  const auto lower = to_lower_ascii(token.surface);
  const auto* phones = bundle.english_phones(lower);
  if (!phones) throw Error(ErrorCode::OutOfVocabulary, token.surface, {}, token.offset);
  std::vector<Syllable> out;
  for (const auto& group : syllabify(*phones)) {
    auto s = english_syllable(group, bundle);
    s.token_index = token.word_index;
    s.token_ordinal = token.ordinal;
    s.unit_index_in_word = out.size();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Syllable> token_g2p(const Token& token, const LexiconBundle& bundle) {
  return token.language == Language::Mandarin ? mandarin_g2p(token, bundle)
                                              : english_g2p(token, bundle);
}

}  // namespace csfe
