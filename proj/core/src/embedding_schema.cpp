#include "csfe/embedding_schema.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "csfe/error.hpp"

namespace csfe {

namespace {

constexpr std::array<std::string_view, kColumnCount> kColumnNames = {
    "phoneme_tonal", "ipa_tonal", "phoneme", "ipa",
    "tone", "tone_desc_1", "tone_desc_2", "tone_desc_3",
    "boundary", "word_len", "pos", "char_pos_in_word",
    "char_pos_in_sentence", "word_pos_in_sentence",
};

std::vector<std::string> numbered(std::uint16_t from, std::uint16_t to_exclusive) {
  std::vector<std::string> out;
  for (auto i = from; i < to_exclusive; ++i) out.push_back(std::to_string(i));
  return out;
}

SystemConfig make(std::string name, SegmentalMode mode, bool tone, bool desc, bool b, bool w, bool s) {
  SystemConfig c;
  c.name = std::move(name);
  c.mode = mode;
  c.tone_layer = tone;
  c.tone_desc_layer = desc;
  c.boundary = b;
  c.word_context = w;
  c.sentence_context = s;
  return c;
}

}  // namespace

std::string_view column_name(Column c) noexcept { return kColumnNames[static_cast<std::size_t>(c)]; }

std::optional<Column> parse_column(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
    if (kColumnNames[i] == name) return static_cast<Column>(i);
  }
  return std::nullopt;
}

bool is_segmental(Column c) noexcept {
  return c == Column::PhonemeTonal || c == Column::IpaTonal || c == Column::Phoneme || c == Column::Ipa;
}

Column segmental_column(SegmentalMode mode) noexcept {
  switch (mode) {
    case SegmentalMode::TonalPhoneme: return Column::PhonemeTonal;
    case SegmentalMode::TonalIpa: return Column::IpaTonal;
    case SegmentalMode::Phoneme: return Column::Phoneme;
    case SegmentalMode::SplitIpa: return Column::Ipa;
  }
  return Column::Ipa;
}

std::vector<Column> SystemConfig::columns() const {
  std::vector<Column> cols{segmental_column(mode)};
  if (tone_layer) cols.push_back(Column::Tone);
  if (tone_desc_layer) {
    cols.insert(cols.end(), {Column::ToneDesc1, Column::ToneDesc2, Column::ToneDesc3});
  }
  if (boundary) cols.push_back(Column::Boundary);
  if (word_context) cols.insert(cols.end(), {Column::WordLen, Column::Pos, Column::CharPosInWord});
  if (sentence_context) cols.insert(cols.end(), {Column::CharPosInSentence, Column::WordPosInSentence});
  return cols;
}

bool SystemConfig::has(Column c) const {
  const auto cols = columns();
  return std::find(cols.begin(), cols.end(), c) != cols.end();
}

const std::vector<SystemConfig>& presets() {
  using M = SegmentalMode;
  static const std::vector<SystemConfig> kPresets = {
      //   name       mode              tone   desc   bound  word   sent
      make("PE",      M::TonalPhoneme,  false, false, false, false, false),
      make("IE",      M::TonalIpa,      false, false, false, false, false),
      make("PTE",     M::Phoneme,       true,  true,  false, false, false),
      make("ITE",     M::SplitIpa,      true,  false, false, false, false),
      make("ITE-B",   M::SplitIpa,      true,  false, true,  false, false),
      make("ITE-BW",  M::SplitIpa,      true,  false, true,  true,  false),
      make("ITE-BS",  M::SplitIpa,      true,  false, true,  false, true),
      make("ITE-BWS", M::SplitIpa,      true,  false, true,  true,  true),
  };
  return kPresets;
}

const SystemConfig& preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::UnknownConfig, std::string(name),
              "expected one of PE, IE, PTE, ITE, ITE-B, ITE-BW, ITE-BS, ITE-BWS");
}

SystemConfig superset_config(SegmentalMode mode) {
  static constexpr std::string_view kNames[] = {"PE-superset", "IE-superset", "PTE-superset",
                                                "ITE-superset"};
  return make(std::string(kNames[static_cast<std::size_t>(mode)]), mode, true, true, true, true, true);
}

// ---------------------------------------------------------------------------

std::uint16_t tone_class(const Syllable& s) noexcept {
  if (s.language == Language::English) return static_cast<std::uint16_t>(6 + s.stress);
  return static_cast<std::uint16_t>(s.tone);
}

std::vector<int> resample_contour(std::span<const int> levels, std::size_t length) {
  std::vector<int> out;
  if (levels.empty() || length == 0) return out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (levels.size() == 1 || length == 1) {
      out.push_back(levels.front());
      continue;
    }
    const double pos = static_cast<double>(k) * static_cast<double>(levels.size() - 1) /
                       static_cast<double>(length - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, levels.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    const double v = levels[lo] + frac * (levels[hi] - levels[lo]);
    out.push_back(static_cast<int>(std::lround(v)));
  }
  return out;
}

ToneDescription tone_description(int tone) {
  // Chao tone letters for the four full tones.
  static const std::vector<int> kChao[] = {{5, 5}, {3, 5}, {2, 1, 4}, {5, 1}};
  if (tone < 1 || tone > 5) throw Error(ErrorCode::InvalidTone, std::to_string(tone));
  ToneDescription d;
  if (tone == 5) return d;
  const auto levels = resample_contour(kChao[tone - 1], 3);
  for (std::size_t i = 0; i < 3; ++i) d.contour[i] = static_cast<std::uint8_t>(levels[i]);
  return d;
}

ToneDescription tone_description_of(const Syllable& s) {
  if (s.language == Language::English) return {};
  return tone_description(s.tone);
}

std::vector<std::string> segmental_symbols(const Syllable& s, SegmentalMode mode) {
  const bool english = s.language == Language::English;
  switch (mode) {
    case SegmentalMode::SplitIpa:
      return split_ipa(s.ipa);
    case SegmentalMode::TonalIpa: {
      if (!english) return {s.ipa + std::to_string(s.tone)};
      static constexpr std::string_view kStressMark[] = {"", "ˈ", "ˌ"};
      return {std::string(kStressMark[s.stress]) + s.ipa};
    }
    case SegmentalMode::Phoneme:
      if (english) return s.phones;
      return {s.base};
    case SegmentalMode::TonalPhoneme:
      if (english) return s.phones;
      return {s.base + std::to_string(s.tone)};
  }
  return {};
}

// ---------------------------------------------------------------------------

SymbolTable::SymbolTable(std::string name, std::vector<std::string> symbols, bool has_unk)
    : name_(std::move(name)), symbols_(std::move(symbols)), has_unk_(has_unk) {
  if (symbols_.size() > 0xFFFF) {
    throw std::length_error("symbol table '" + name_ + "' exceeds 65535 entries");
  }
  index_.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], static_cast<std::uint16_t>(i)).second) {
      throw Error(ErrorCode::DuplicateKey, name_, "symbol '" + symbols_[i] + "' listed twice");
    }
  }
}

SymbolTable SymbolTable::open(std::string name, const std::set<std::string>& symbols,
                              std::span<const std::string_view> fixed) {
  std::vector<std::string> all{std::string(kPad), std::string(kUnk)};
  for (auto f : fixed) all.emplace_back(f);
  const auto reserved = all.size();
  for (const auto& s : symbols) {
    if (std::find(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(reserved), s) ==
        all.begin() + static_cast<std::ptrdiff_t>(reserved)) {
      all.push_back(s);
    }
  }
  // std::set<std::string> orders by bytes, which for UTF-8 is codepoint order.
  return SymbolTable(std::move(name), std::move(all), true);
}

SymbolTable SymbolTable::closed(std::string name, std::vector<std::string> symbols) {
  return SymbolTable(std::move(name), std::move(symbols), false);
}

bool SymbolTable::contains(std::string_view symbol) const {
  return index_.find(std::string(symbol)) != index_.end();
}

std::uint16_t SymbolTable::encode(std::string_view symbol, Strictness strictness) const {
  const auto it = index_.find(std::string(symbol));
  if (it != index_.end()) return it->second;
  if (strictness == Strictness::Lenient && has_unk_) return 1;
  throw Error(ErrorCode::UnknownSymbol, std::string(symbol), "not in layer '" + name_ + "'");
}

const std::string& SymbolTable::decode(std::uint16_t index) const {
  if (index >= symbols_.size()) {
    throw Error(ErrorCode::UnknownSymbol, std::to_string(index), "index outside layer '" + name_ + "'");
  }
  return symbols_[index];
}

std::uint16_t encode_symbol(const SymbolTable& table, std::string_view symbol, Strictness strictness) {
  return table.encode(symbol, strictness);
}

void SymbolTables::add(Column c, SymbolTable table) { tables_.insert_or_assign(c, std::move(table)); }

const SymbolTable& SymbolTables::at(Column c) const {
  const auto it = tables_.find(c);
  if (it == tables_.end()) {
    throw Error(ErrorCode::IncompatibleConfig, std::string(column_name(c)), "no table for column");
  }
  return it->second;
}

std::vector<Column> SymbolTables::columns() const {
  std::vector<Column> cols;
  for (const auto& [c, _] : tables_) cols.push_back(c);
  return cols;
}

void SymbolTables::write_manifest(std::ostream& out) const {
  for (const auto& [c, table] : tables_) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << table.name() << '\t' << i << '\t' << table.symbols()[i] << '\n';
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
void for_each_mandarin_reading(const LexiconBundle& bundle, F&& f) {
  for (const auto& [_, readings] : bundle.mandarin_char_pron()) {
    for (const auto& r : readings) f(tone_of(r));
  }
  for (const auto& [_, readings] : bundle.mandarin_word_pron()) {
    for (const auto& r : readings) f(tone_of(r));
  }
}

void add_clusters(std::set<std::string>& out, const Table<std::string>& ipa_table) {
  for (const auto& [_, ipa] : ipa_table) {
    for (auto& c : split_ipa(ipa)) out.insert(std::move(c));
  }
}

}  // namespace

std::set<std::string> mandarin_segmental_vocabulary(const LexiconBundle& bundle, SegmentalMode mode) {
  std::set<std::string> out;
  switch (mode) {
    case SegmentalMode::SplitIpa:
      add_clusters(out, bundle.pinyin_to_ipa());
      break;
    case SegmentalMode::TonalIpa:
      for_each_mandarin_reading(bundle, [&](const TonalPinyin& p) {
        out.insert(pinyin_to_ipa_lookup(p.base, bundle) + std::to_string(p.tone));
      });
      break;
    case SegmentalMode::Phoneme:
      for_each_mandarin_reading(bundle, [&](const TonalPinyin& p) { out.insert(p.base); });
      break;
    case SegmentalMode::TonalPhoneme:
      for_each_mandarin_reading(bundle,
                                [&](const TonalPinyin& p) { out.insert(p.base + std::to_string(p.tone)); });
      break;
  }
  return out;
}

std::set<std::string> english_segmental_vocabulary(const LexiconBundle& bundle, SegmentalMode mode) {
  std::set<std::string> out;
  switch (mode) {
    case SegmentalMode::SplitIpa:
      add_clusters(out, bundle.arpabet_to_ipa());
      break;
    case SegmentalMode::TonalIpa:
      for (const auto& [_, phones] : bundle.english_pron()) {
        for (const auto& group : syllabify(phones)) {
          for (auto& s : segmental_symbols(english_syllable(group, bundle), mode)) out.insert(std::move(s));
        }
      }
      break;
    case SegmentalMode::Phoneme:
    case SegmentalMode::TonalPhoneme:
      for (const auto& [_, phones] : bundle.english_pron()) out.insert(phones.begin(), phones.end());
      break;
  }
  return out;
}

SymbolTables build_symbol_tables(const LexiconBundle& bundle, const SystemConfig& config) {
  SymbolTables tables;
  for (const Column c : config.columns()) {
    const std::string name(column_name(c));
    if (is_segmental(c)) {
      auto vocab = mandarin_segmental_vocabulary(bundle, config.mode);
      vocab.merge(english_segmental_vocabulary(bundle, config.mode));
      tables.add(c, SymbolTable::open(name, vocab, kBoundarySymbols));
      continue;
    }
    std::vector<std::string> symbols;
    switch (c) {
      case Column::Tone:
        symbols = {std::string(kPad), "1", "2", "3", "4", "5", "E0", "E1", "E2"};
        break;
      case Column::ToneDesc1:
      case Column::ToneDesc2:
      case Column::ToneDesc3:
        symbols = numbered(0, 6);
        break;
      case Column::Boundary:
        symbols = {"None", "PW", "PPH", "IPH"};
        break;
      case Column::WordLen:
        symbols = numbered(1, kWordLenMax + 1);
        symbols.insert(symbols.begin(), std::string(kPad));
        break;
      case Column::Pos:
        symbols.emplace_back(kPad);
        for (PosTag t : kAllPosTags) symbols.emplace_back(pos_tag_name(t));
        break;
      case Column::CharPosInWord:
        symbols = numbered(0, kCharPosInWordLimit);
        break;
      case Column::CharPosInSentence:
        symbols = numbered(0, kCharPosInSentenceLimit);
        break;
      case Column::WordPosInSentence:
        symbols = numbered(0, kWordPosInSentenceLimit);
        break;
      default:
        break;
    }
    tables.add(c, SymbolTable::closed(name, std::move(symbols)));
  }
  return tables;
}

}  // namespace csfe
