#include <cmath>
#include <set>
#include <sstream>

#include "csfe/embedding_schema.hpp"
#include "csfe/utf8.hpp"
#include "support.hpp"

using namespace csfe;

namespace {

struct ClusterRow {
  std::string value;
  std::vector<std::string> clusters;
};

// Clusters computed by the regex-module oracle, frozen as a fixture.
std::vector<ClusterRow> oracle_clusters() {
  std::vector<ClusterRow> rows;
  for (const auto& line : test::read_lines(test::fixtures_dir() / "ipa_clusters.tsv")) {
    if (line[0] == '#') continue;
    const auto tab = line.find('\t');
    ClusterRow r{line.substr(0, tab), {}};
    std::istringstream in(line.substr(tab + 1));
    for (std::string c; in >> c;) r.clusters.push_back(c);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Independent linear resampling of Chao letters to n points, rounding half up.
std::vector<int> interpolate(const std::string& letters, std::size_t n) {
  std::vector<double> pts;
  for (char c : letters) pts.push_back(c - '0');
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) * static_cast<double>(pts.size() - 1) / static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(x));
    const auto hi = std::min(lo + 1, pts.size() - 1);
    const double y = pts[lo] + (pts[hi] - pts[lo]) * (x - static_cast<double>(lo));
    out.push_back(static_cast<int>(std::floor(y + 0.5)));
  }
  return out;
}

Syllable mandarin_syllable(std::string base, int tone) {
  Syllable s;
  s.language = Language::Mandarin;
  s.ipa = test::mini_bundle()->pinyin_to_ipa().at(base);
  s.base = std::move(base);
  s.tone = tone;
  return s;
}

std::vector<std::string> names(const std::vector<Column>& cols) {
  std::vector<std::string> out;
  for (const Column c : cols) out.emplace_back(column_name(c));
  return out;
}

}  // namespace

TEST_CASE("preset flag patterns") {
  REQUIRE(presets().size() == 8);
  struct Row {
    const char* name;
    bool phoneme, tone, tone_desc, boundary, word, sentence, tonal;
  };
  const Row rows[] = {
      {"PE", true, false, false, false, false, false, true},
      {"IE", false, false, false, false, false, false, true},
      {"PTE", true, true, true, false, false, false, false},
      {"ITE", false, true, false, false, false, false, false},
      {"ITE-B", false, true, false, true, false, false, false},
      {"ITE-BW", false, true, false, true, true, false, false},
      {"ITE-BS", false, true, false, true, false, true, false},
      {"ITE-BWS", false, true, false, true, true, true, false},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const auto& p = preset(r.name);
    CHECK(p.phoneme_layer() == r.phoneme);
    CHECK(p.ipa_layer() == !r.phoneme);
    CHECK(p.tone_layer == r.tone);
    CHECK(p.tone_desc_layer == r.tone_desc);
    CHECK(p.boundary == r.boundary);
    CHECK(p.word_context == r.word);
    CHECK(p.sentence_context == r.sentence);
    CHECK(p.tonal_symbols() == r.tonal);
  }
  CHECK(test::capture_error([] { preset("BOGUS"); }).code() == ErrorCode::UnknownConfig);
}

TEST_CASE("column manifests follow the flags") {
  CHECK(names(preset("PE").columns()) == std::vector<std::string>{"phoneme_tonal"});
  CHECK(names(preset("IE").columns()) == std::vector<std::string>{"ipa_tonal"});
  CHECK(names(preset("PTE").columns()) ==
        std::vector<std::string>{"phoneme", "tone", "tone_desc_1", "tone_desc_2", "tone_desc_3"});
  CHECK(names(preset("ITE").columns()) == std::vector<std::string>{"ipa", "tone"});
  CHECK(names(preset("ITE-BWS").columns()) ==
        std::vector<std::string>{"ipa", "tone", "boundary", "word_len", "pos", "char_pos_in_word",
                                 "char_pos_in_sentence", "word_pos_in_sentence"});
  for (std::size_t i = 0; i < kColumnCount; ++i) {
    const auto c = static_cast<Column>(i);
    CHECK(parse_column(column_name(c)) == c);
  }
  CHECK_FALSE(parse_column("nope"));
}

TEST_CASE("tone 2 is described as 3 4 5") {
  CHECK(tone_description(2).contour == std::array<std::uint8_t, 3>{3, 4, 5});
}

TEST_CASE("tone descriptions match the committed Chao-letter fixture") {
  for (const auto& line : test::read_lines(test::fixtures_dir() / "tone_contours.tsv")) {
    if (line[0] == '#') continue;
    std::istringstream in(line);
    int tone;
    std::string letters;
    int a, b, c;
    in >> tone >> letters >> a >> b >> c;
    CAPTURE(tone);
    const auto got = tone_description(tone).contour;
    CHECK(got == std::array<std::uint8_t, 3>{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                             static_cast<std::uint8_t>(c)});
    if (letters != "-") CHECK(interpolate(letters, 3) == std::vector<int>{a, b, c});
  }
  CHECK(test::capture_error([] { tone_description(0); }).code() == ErrorCode::InvalidTone);
  CHECK(test::capture_error([] { tone_description(6); }).code() == ErrorCode::InvalidTone);
}

TEST_CASE("resample_contour agrees with the independent interpolation") {
  for (std::string letters : {"55", "35", "214", "51", "13", "5"}) {
    std::vector<int> levels;
    for (char c : letters) levels.push_back(c - '0');
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
      CAPTURE(letters);
      CAPTURE(n);
      if (levels.size() == 1 || n == 1) {
        CHECK(resample_contour(levels, n).size() == n);
        continue;
      }
      CHECK(resample_contour(levels, n) == interpolate(letters, n));
    }
  }
}

TEST_CASE("tone classes: Mandarin 1..5, English stress 6..8") {
  CHECK(tone_class(mandarin_syllable("huan", 1)) == 1);
  CHECK(tone_class(mandarin_syllable("de", 5)) == 5);
  Syllable e;
  e.language = Language::English;
  e.ipa = "ə";
  for (int s = 0; s <= 2; ++s) {
    e.stress = s;
    CHECK(tone_class(e) == 6 + s);
    CHECK(tone_description_of(e).contour == std::array<std::uint8_t, 3>{0, 0, 0});
  }
  CHECK(tone_description_of(mandarin_syllable("de", 5)).contour == std::array<std::uint8_t, 3>{0, 0, 0});
  for (int t = 1; t <= 4; ++t) {
    for (auto level : tone_description(t).contour) CHECK(level != 0);
  }
}

TEST_CASE("split_ipa: single code point is identity") {
  for (std::string s : {"a", "ɕ", "ʂ", "ŋ", "ʰ"}) CHECK(split_ipa(s) == std::vector<std::string>{s});
  CHECK(test::capture_error([] { split_ipa(""); }).code() == ErrorCode::EmptyInput);
}

TEST_CASE("split_ipa keeps combining marks and separates modifier letters") {
  CHECK(split_ipa("ãb") == std::vector<std::string>{"ã", "b"});
  CHECK(split_ipa("tʰ") == std::vector<std::string>{"t", "ʰ"});
  CHECK(split_ipa("ʈʂɻ̩") == std::vector<std::string>{"ʈ", "ʂ", "ɻ̩"});
}

TEST_CASE("split_ipa agrees with the regex-module oracle on every shipped IPA value") {
  const auto rows = oracle_clusters();
  REQUIRE(rows.size() > 400);
  std::size_t failures = 0;
  for (const auto& r : rows) {
    const auto got = split_ipa(r.value);
    if (got != r.clusters) {
      ++failures;
      FAIL_CHECK(r.value);
    }
    std::string joined;
    for (const auto& c : got) joined += c;
    if (joined != r.value) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("symbol table layout and round trip") {
  const auto t = SymbolTable::open("ipa", {"b", "a", "ɕ"}, kBoundarySymbols);
  CHECK(t.symbols() == std::vector<std::string>{"<PAD>", "<UNK>", "#PW", "#PPH", "#IPH", "a", "b", "ɕ"});
  CHECK(t.encode("<PAD>") == 0);
  CHECK(encode_symbol(t, "a") == 5);
  for (std::uint16_t i = 0; i < t.size(); ++i) CHECK(t.encode(t.decode(i)) == i);
  const auto e = test::capture_error([&] { t.encode("zz"); });
  CHECK(e.code() == ErrorCode::UnknownSymbol);
  CHECK(e.subject() == "zz");
  CHECK(t.encode("zz", Strictness::Lenient) == 1);

  const auto closed = SymbolTable::closed("boundary", {"None", "PW", "PPH", "IPH"});
  CHECK_FALSE(closed.has_unk());
  CHECK(test::capture_error([&] { closed.encode("zz", Strictness::Lenient); }).code() ==
        ErrorCode::UnknownSymbol);
}

TEST_CASE("ITE segmental vocabulary is the cluster union plus five reserved entries") {
  const auto& b = *test::shipped_bundle();
  std::set<std::string> oracle_union;
  for (const auto& r : oracle_clusters()) oracle_union.insert(r.clusters.begin(), r.clusters.end());
  const auto tables = build_symbol_tables(b, preset("ITE"));
  const auto& ipa = tables.at(Column::Ipa);
  CHECK(ipa.size() == oracle_union.size() + 5);
  for (const auto& c : oracle_union) CHECK(ipa.contains(c));
  // Reserved entries first, then byte (code point) order.
  CHECK(std::is_sorted(ipa.symbols().begin() + 5, ipa.symbols().end()));
}

TEST_CASE("closed tables have the documented sizes") {
  const auto tables = build_symbol_tables(*test::mini_bundle(), superset_config(SegmentalMode::SplitIpa));
  CHECK(tables.at(Column::Tone).size() == 9);
  CHECK(tables.at(Column::ToneDesc1).size() == 6);
  CHECK(tables.at(Column::Boundary).size() == 4);
  CHECK(tables.at(Column::WordLen).size() == 9);
  CHECK(tables.at(Column::Pos).size() == 12);
  CHECK(tables.at(Column::CharPosInWord).size() == 8);
  CHECK(tables.at(Column::CharPosInSentence).size() == 128);
  CHECK(tables.at(Column::WordPosInSentence).size() == 64);
}

TEST_CASE("symbol tables are deterministic") {
  for (const auto& p : presets()) {
    std::ostringstream a, b;
    build_symbol_tables(*test::mini_bundle(), p).write_manifest(a);
    build_symbol_tables(*test::mini_bundle(), p).write_manifest(b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("manifest lines are layer, index, symbol") {
  std::ostringstream out;
  build_symbol_tables(*test::mini_bundle(), preset("ITE")).write_manifest(out);
  std::istringstream in(out.str());
  std::string first;
  std::getline(in, first);
  CHECK(first == "ipa\t0\t<PAD>");
}

TEST_CASE("PE vocabulary is strictly larger than PTE's") {
  const auto& b = *test::shipped_bundle();
  const auto pe = build_symbol_tables(b, preset("PE")).at(Column::PhonemeTonal).size();
  const auto pte = build_symbol_tables(b, preset("PTE")).at(Column::Phoneme).size();
  CHECK(pe > pte);
}

TEST_CASE("cross-lingual clusters share one index under ITE; PE and IE vocabularies are disjoint") {
  const auto& b = *test::shipped_bundle();
  const auto m = mandarin_segmental_vocabulary(b, SegmentalMode::SplitIpa);
  const auto e = english_segmental_vocabulary(b, SegmentalMode::SplitIpa);
  std::vector<std::string> shared;
  std::set_intersection(m.begin(), m.end(), e.begin(), e.end(), std::back_inserter(shared));
  CHECK_FALSE(shared.empty());

  for (auto mode : {SegmentalMode::TonalPhoneme, SegmentalMode::TonalIpa}) {
    const auto mm = mandarin_segmental_vocabulary(b, mode);
    const auto ee = english_segmental_vocabulary(b, mode);
    std::vector<std::string> overlap;
    std::set_intersection(mm.begin(), mm.end(), ee.begin(), ee.end(), std::back_inserter(overlap));
    CHECK(overlap.empty());
  }
}

TEST_CASE("segmental symbols per mode") {
  const auto huan = mandarin_syllable("huan", 1);
  CHECK(segmental_symbols(huan, SegmentalMode::TonalPhoneme) == std::vector<std::string>{"huan1"});
  CHECK(segmental_symbols(huan, SegmentalMode::Phoneme) == std::vector<std::string>{"huan"});
  CHECK(segmental_symbols(huan, SegmentalMode::TonalIpa) == std::vector<std::string>{huan.ipa + "1"});
  CHECK(segmental_symbols(huan, SegmentalMode::SplitIpa) == split_ipa(huan.ipa));
}
