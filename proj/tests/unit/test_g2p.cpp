#include <algorithm>

#include "csfe/utf8.hpp"

#include "csfe/g2p.hpp"
#include "csfe/segmentation.hpp"
#include "support.hpp"

using namespace csfe;

namespace {

Token mandarin(std::string surface) {
  Token t;
  t.surface = std::move(surface);
  t.language = Language::Mandarin;
  t.char_count = utf8::count(t.surface);
  return t;
}

Token english(std::string surface) {
  Token t;
  t.surface = std::move(surface);
  t.language = Language::English;
  return t;
}

bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

TEST_CASE("tone_of splits the trailing tone digit") {
  CHECK(tone_of("huan1") == TonalPinyin{"huan", 1});
  CHECK(tone_of("ma") == TonalPinyin{"ma", 5});
  CHECK(tone_of("de5") == TonalPinyin{"de", 5});
  CHECK(test::capture_error([] { tone_of("x9"); }).code() == ErrorCode::MalformedPinyin);
  CHECK(test::capture_error([] { tone_of("0"); }).code() == ErrorCode::MalformedPinyin);
  CHECK(test::capture_error([] { tone_of("3"); }).code() == ErrorCode::MalformedPinyin);
  CHECK(test::capture_error([] { tone_of(""); }).code() == ErrorCode::MalformedPinyin);
}

TEST_CASE("tone_of inverts base+digit over the whole shipped lexicon") {
  const auto& b = *test::shipped_bundle();
  std::size_t checked = 0;
  auto check = [&](const std::string& reading) {
    const auto p = tone_of(reading);
    if (p.base + std::to_string(p.tone) != reading) FAIL_CHECK(reading);
    ++checked;
  };
  for (const auto& [_, rs] : b.mandarin_char_pron()) for (const auto& r : rs) check(r);
  for (const auto& [_, rs] : b.mandarin_word_pron()) for (const auto& r : rs) check(r);
  CHECK(checked > 40000);
}

TEST_CASE("pinyin lookup is exact") {
  const auto& b = *test::mini_bundle();
  CHECK(pinyin_to_ipa_lookup("huan", b) == b.pinyin_to_ipa().at("huan"));
  CHECK(test::capture_error([&] { pinyin_to_ipa_lookup("", b); }).code() == ErrorCode::UnknownPinyin);
  CHECK(test::capture_error([&] { pinyin_to_ipa_lookup("huan1", b); }).code() == ErrorCode::UnknownPinyin);
}

TEST_CASE("every shipped pinyin key maps to nonempty digit-free IPA") {
  for (const auto& [base, ipa] : test::shipped_bundle()->pinyin_to_ipa()) {
    CAPTURE(base);
    CHECK_FALSE(ipa.empty());
    CHECK_FALSE(has_digit(ipa));
  }
}

TEST_CASE("shipped IPA spot checks against the standard mapping") {
  // Reference transcriptions for a sample spanning initials and finals.
  const std::vector<std::pair<std::string, std::string>> expected{
      {"huan", "xwan"}, {"ma", "ma"},   {"ba", "pa"},    {"pa", "pʰa"},  {"zhi", "ʈʂɻ̩"}, {"si", "sɹ̩"},
      {"xi", "ɕi"},     {"yu", "y"},    {"lv", "ly"},    {"shi", "ʂɻ̩"},  {"ri", "ʐɻ̩"},   {"qi", "tɕʰi"},
      {"ji", "tɕi"},    {"ge", "kɤ"},   {"ke", "kʰɤ"},   {"wo", "wo"},   {"er", "ɚ"},    {"ai", "ai"},
  };
  const auto& table = test::shipped_bundle()->pinyin_to_ipa();
  for (const auto& [base, ipa] : expected) {
    CAPTURE(base);
    REQUIRE(table.contains(base));
    CHECK(table.at(base) == ipa);
  }
}

TEST_CASE("mandarin syllables come from the word reading first") {
  const auto& b = *test::mini_bundle();
  const auto syls = mandarin_g2p(mandarin("银行"), b);
  REQUIRE(syls.size() == 2);
  CHECK(syls[1].base == "hang");  // 行 defaults to xing2 on its own
  CHECK(syls[1].tone == 2);
  CHECK(mandarin_g2p(mandarin("行"), b)[0].base == "xing");
}

TEST_CASE("single characters map to base, tone and IPA") {
  const auto& b = *test::mini_bundle();
  const auto huan = mandarin_g2p(mandarin("欢"), b);
  REQUIRE(huan.size() == 1);
  CHECK(huan[0].base == "huan");
  CHECK(huan[0].tone == 1);
  CHECK(huan[0].stress == 0);
  CHECK(huan[0].ipa == b.pinyin_to_ipa().at("huan"));
  const auto yu = mandarin_g2p(mandarin("语"), b);
  CHECK(yu[0].base == "yu");
  CHECK(yu[0].tone == 3);
}

TEST_CASE("word reading falls back to per-character defaults") {
  const auto syls = mandarin_g2p(mandarin("欢声"), *test::mini_bundle());
  REQUIRE(syls.size() == 2);
  CHECK(syls[0].unit_index_in_word == 0);
  CHECK(syls[1].unit_index_in_word == 1);
  CHECK(syls[1].base == "sheng");
}

TEST_CASE("character in neither table is UnknownCharacter with its offset") {
  const auto e = test::capture_error([] { mandarin_g2p(mandarin("你嫑"), *test::mini_bundle()); });
  CHECK(e.code() == ErrorCode::UnknownCharacter);
  CHECK(e.subject() == "嫑");
  CHECK(e.offset() == 3);
}

TEST_CASE("english hello groups into two syllables with stresses 0 and 1") {
  const auto& b = *test::mini_bundle();
  const auto syls = english_g2p(english("Hello"), b);
  REQUIRE(syls.size() == 2);
  CHECK(syls[0].stress == 0);
  CHECK(syls[1].stress == 1);
  CHECK(syls[0].tone == 0);
  CHECK(syls[0].phones == std::vector<std::string>{"HH", "AH0"});
  CHECK(syls[1].phones == std::vector<std::string>{"L", "OW1"});
  CHECK(syls[0].base == "HH AH");
  CHECK(syls[0].ipa == b.arpabet_to_ipa().at("HH") + b.arpabet_to_ipa().at("AH"));
}

TEST_CASE("single-phone word is one syllable") {
  const auto syls = english_g2p(english("a"), *test::mini_bundle());
  REQUIRE(syls.size() == 1);
  CHECK(syls[0].stress == 0);
}

TEST_CASE("trailing consonants attach to the last nucleus") {
  const auto syls = english_g2p(english("world"), *test::mini_bundle());
  REQUIRE(syls.size() == 1);
  CHECK(syls[0].phones == std::vector<std::string>{"W", "ER1", "L", "D"});
  const std::vector<std::string> stop{"S", "T", "AA1", "P"};
  CHECK(syllabify(stop) == std::vector<std::vector<std::string>>{stop});
}

TEST_CASE("syllabify attaches onsets to the following nucleus") {
  const std::vector<std::string> phones{"EH1", "K", "S", "T", "R", "AH0"};
  const auto groups = syllabify(phones);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0] == std::vector<std::string>{"EH1"});
  CHECK(groups[1] == std::vector<std::string>{"K", "S", "T", "R", "AH0"});
}

TEST_CASE("OOV English word is an error") {
  const auto e = test::capture_error([] { english_g2p(english("zzzyx"), *test::mini_bundle()); });
  CHECK(e.code() == ErrorCode::OutOfVocabulary);
  CHECK(e.subject() == "zzzyx");
}

TEST_CASE("English syllable count equals vowel-digit count across the shipped dictionary") {
  const auto& b = *test::shipped_bundle();
  std::size_t mismatches = 0;
  for (const auto& [word, phones] : b.english_pron()) {
    const auto vowels = std::count_if(phones.begin(), phones.end(), [](const std::string& p) {
      return !p.empty() && p.back() >= '0' && p.back() <= '2';
    });
    Token t = english(word);
    const auto syls = english_g2p(t, b);
    if (static_cast<std::ptrdiff_t>(syls.size()) != vowels) ++mismatches;
    for (const auto& s : syls) {
      if (s.ipa.empty() || has_digit(s.ipa) || s.tone != 0) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("Mandarin syllable count equals character count across the shipped lexicon") {
  const auto& b = *test::shipped_bundle();
  std::size_t mismatches = 0;
  auto run = [&](const std::string& surface) {
    const auto syls = mandarin_g2p(mandarin(surface), b);
    if (syls.size() != utf8::count(surface)) ++mismatches;
    for (const auto& s : syls) {
      if (s.ipa.empty() || has_digit(s.ipa) || s.stress != 0 || s.tone < 1 || s.tone > 5) ++mismatches;
    }
  };
  for (const auto& [ch, _] : b.mandarin_char_pron()) run(ch);
  for (const auto& [w, _] : b.mandarin_word_pron()) run(w);
  CHECK(mismatches == 0);
}

TEST_CASE("token_g2p dispatches on language and links syllables to the token") {
  Token t = english("love");
  t.word_index = 3;
  t.ordinal = 5;
  const auto syls = token_g2p(t, *test::mini_bundle());
  REQUIRE(syls.size() == 1);
  CHECK(syls[0].language == Language::English);
  CHECK(syls[0].token_index == 3);
  CHECK(syls[0].token_ordinal == 5);
}
