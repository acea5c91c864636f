#include "csfe/resources.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>

#include "csfe/error.hpp"
#include "csfe/utf8.hpp"

namespace csfe {

namespace {

bool all_of(std::string_view s, int (*pred)(int)) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [pred](char c) {
    return pred(static_cast<unsigned char>(c)) != 0;
  });
}

bool is_tonal_pinyin(std::string_view s) {
  if (!s.empty() && s.back() >= '1' && s.back() <= '5') s.remove_suffix(1);
  return all_of(s, [](int c) { return c >= 'a' && c <= 'z' ? 1 : 0; });
}

bool is_phone(std::string_view s) {
  if (!s.empty() && s.back() >= '0' && s.back() <= '2') s.remove_suffix(1);
  return all_of(s, [](int c) { return c >= 'A' && c <= 'Z' ? 1 : 0; });
}

std::string strip_tone(std::string_view tonal) {
  if (!tonal.empty() && tonal.back() >= '0' && tonal.back() <= '9') tonal.remove_suffix(1);
  return std::string(tonal);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(sep, start), s.size());
    if (end > start) parts.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) parts.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return parts;
}

struct Line {
  std::size_t number;
  std::string text;
};

}  // namespace

class BundleLoader {
 public:
  explicit BundleLoader(std::filesystem::path dir) : dir_(std::move(dir)) {}

  LexiconBundle load() {
    LexiconBundle b;
    load_pinyin_ipa(b);
    load_arpabet_ipa(b);
    load_chars(b);
    load_words(b);
    load_english(b);
    load_pos(b);
    return b;
  }

 private:
  std::vector<Line> read(std::string_view name, bool cmu_comments = false) {
    file_ = std::string(name);
    const auto path = dir_ / std::string(name);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MissingResource, file_, path.string());
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (text[first] == '#') continue;
      if (cmu_comments && text.compare(first, 3, ";;;") == 0) continue;
      lines.push_back({number, std::move(text)});
    }
    return lines;
  }

  [[noreturn]] void malformed(const Line& line, std::string why) const {
    throw Error(ErrorCode::MalformedLine, file_ + ":" + std::to_string(line.number),
                std::move(why));
  }

  std::pair<std::string, std::string> two_fields(const Line& line) const {
    const auto tab = line.text.find('\t');
    if (tab == std::string::npos || line.text.find('\t', tab + 1) != std::string::npos) {
      malformed(line, "expected exactly two tab-separated fields");
    }
    auto key = line.text.substr(0, tab);
    auto value = line.text.substr(tab + 1);
    if (key.empty() || value.empty()) malformed(line, "empty field");
    try {
      utf8::decode(key);
      utf8::decode(value);
    } catch (const Error&) {
      malformed(line, "ill-formed UTF-8");
    }
    return {std::move(key), std::move(value)};
  }

  template <class V>
  void insert(Table<V>& table, std::string key, V value) {
    auto [it, inserted] = table.try_emplace(std::move(key), std::move(value));
    if (!inserted) throw Error(ErrorCode::DuplicateKey, file_, it->first);
  }

  void load_ipa_table(std::string_view name, Table<std::string>& table, bool (*key_ok)(std::string_view)) {
    for (const auto& line : read(name)) {
      auto [key, ipa] = two_fields(line);
      if (!key_ok(key)) malformed(line, "bad key '" + key + "'");
      if (std::any_of(ipa.begin(), ipa.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        malformed(line, "IPA value carries a digit");
      }
      insert(table, std::move(key), std::move(ipa));
    }
  }

  void load_pinyin_ipa(LexiconBundle& b) {
    load_ipa_table(resource_files::kPinyinIpa, b.pinyin_to_ipa_, [](std::string_view k) {
      return all_of(k, [](int c) { return c >= 'a' && c <= 'z' ? 1 : 0; });
    });
  }

  void load_arpabet_ipa(LexiconBundle& b) {
    load_ipa_table(resource_files::kArpabetIpa, b.arpabet_to_ipa_, [](std::string_view k) {
      return all_of(k, [](int c) { return c >= 'A' && c <= 'Z' ? 1 : 0; });
    });
  }

  void load_chars(LexiconBundle& b) {
    for (const auto& line : read(resource_files::kMandarinChar)) {
      auto [ch, value] = two_fields(line);
      if (utf8::count(ch) != 1) malformed(line, "key must be a single character");
      auto readings = split(value, ',');
      if (readings.empty()) malformed(line, "no readings");
      for (const auto& r : readings) {
        if (!is_tonal_pinyin(r)) malformed(line, "bad tonal pinyin '" + r + "'");
      }
      insert(b.mandarin_char_pron_, std::move(ch), std::move(readings));
    }
  }

  void load_words(LexiconBundle& b) {
    for (const auto& line : read(resource_files::kMandarinWord)) {
      auto [word, value] = two_fields(line);
      auto syllables = split_ws(value);
      const auto chars = utf8::count(word);
      if (syllables.size() != chars) malformed(line, "syllable count differs from character count");
      for (const auto& s : syllables) {
        if (!is_tonal_pinyin(s)) malformed(line, "bad tonal pinyin '" + s + "'");
      }
      b.max_word_length_ = std::max(b.max_word_length_, chars);
      insert(b.mandarin_word_pron_, std::move(word), std::move(syllables));
    }
  }

  void load_english(LexiconBundle& b) {
    for (const auto& line : read(resource_files::kEnglish, /*cmu_comments=*/true)) {
      auto fields = split_ws(line.text);
      if (fields.size() < 2) malformed(line, "expected WORD followed by phones");
      auto& word = fields.front();
      if (word.back() == ')') continue;  // alternate pronunciation "WORD(2)"
      for (char& c : word) {
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '\'') {
          malformed(line, "bad word '" + fields.front() + "'");
        }
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      std::vector<std::string> phones(fields.begin() + 1, fields.end());
      for (const auto& p : phones) {
        if (!is_phone(p)) malformed(line, "bad phone '" + p + "'");
      }
      if (std::none_of(phones.begin(), phones.end(), [](const auto& p) { return is_vowel_phone(p); })) {
        malformed(line, "pronunciation has no stressed vowel");
      }
      insert(b.english_pron_, std::move(word), std::move(phones));
    }
  }

  void load_pos(LexiconBundle& b) {
    for (const auto& line : read(resource_files::kPos)) {
      auto [word, tag] = two_fields(line);
      const auto parsed = parse_pos_tag(tag);
      if (!parsed) malformed(line, "tag '" + tag + "' outside the tagset");
      insert(b.pos_table_, std::move(word), *parsed);
    }
  }

  std::filesystem::path dir_;
  std::string file_;
};

const std::vector<std::string>* LexiconBundle::char_readings(std::string_view ch) const {
  const auto it = mandarin_char_pron_.find(ch);
  return it == mandarin_char_pron_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* LexiconBundle::word_reading(std::string_view word) const {
  const auto it = mandarin_word_pron_.find(word);
  return it == mandarin_word_pron_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* LexiconBundle::english_phones(std::string_view lower_word) const {
  const auto it = english_pron_.find(lower_word);
  return it == english_pron_.end() ? nullptr : &it->second;
}

std::optional<PosTag> LexiconBundle::pos(std::string_view word) const {
  const auto it = pos_table_.find(word);
  if (it == pos_table_.end()) return std::nullopt;
  return it->second;
}

std::string strip_stress(std::string_view phone) {
  if (!phone.empty() && phone.back() >= '0' && phone.back() <= '9') phone.remove_suffix(1);
  return std::string(phone);
}

bool is_vowel_phone(std::string_view phone) {
  return !phone.empty() && phone.back() >= '0' && phone.back() <= '2';
}

LexiconBundle load_resources(const std::filesystem::path& dir, LoadMode mode) {
  auto bundle = BundleLoader(dir).load();
  if (mode == LoadMode::Validated) {
    const auto findings = validate_bundle(bundle);
    if (!findings.empty()) {
      const auto& f = findings.front();
      throw Error(ErrorCode::DanglingReference, f.reference, f.describe());
    }
  }
  return bundle;
}

std::string Finding::describe() const {
  const char* what = kind == Kind::UnmappedPinyin ? "pinyin syllable" : "ARPAbet phone";
  return std::string(what) + " '" + reference + "' used by '" + key + "' in " + table +
         " has no IPA mapping";
}

std::vector<Finding> validate_bundle(const LexiconBundle& bundle) {
  std::vector<Finding> findings;
  std::set<std::string, std::less<>> seen_pinyin;
  std::set<std::string, std::less<>> seen_phone;

  auto check_pinyin = [&](std::string_view table, const std::string& key,
                          const std::vector<std::string>& readings) {
    for (const auto& r : readings) {
      auto base = strip_tone(r);
      if (bundle.pinyin_to_ipa().contains(base) || seen_pinyin.contains(base)) continue;
      seen_pinyin.insert(base);
      findings.push_back({Finding::Kind::UnmappedPinyin, std::string(table), key, std::move(base)});
    }
  };
  for (const auto& [ch, readings] : bundle.mandarin_char_pron()) {
    check_pinyin(resource_files::kMandarinChar, ch, readings);
  }
  for (const auto& [word, readings] : bundle.mandarin_word_pron()) {
    check_pinyin(resource_files::kMandarinWord, word, readings);
  }
  for (const auto& [word, phones] : bundle.english_pron()) {
    for (const auto& p : phones) {
      auto bare = strip_stress(p);
      if (bundle.arpabet_to_ipa().contains(bare) || seen_phone.contains(bare)) continue;
      seen_phone.insert(bare);
      findings.push_back({Finding::Kind::UnmappedPhone, std::string(resource_files::kEnglish), word,
                          std::move(bare)});
    }
  }
  return findings;
}

namespace {

void join(std::ostream& out, const std::vector<std::string>& items, char sep) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << sep;
    out << items[i];
  }
}

}  // namespace

void write_canonical(const LexiconBundle& bundle, std::ostream& out) {
  out << "[" << resource_files::kMandarinChar << "]\n";
  for (const auto& [k, v] : bundle.mandarin_char_pron()) {
    out << k << '\t';
    join(out, v, ',');
    out << '\n';
  }
  out << "[" << resource_files::kMandarinWord << "]\n";
  for (const auto& [k, v] : bundle.mandarin_word_pron()) {
    out << k << '\t';
    join(out, v, ' ');
    out << '\n';
  }
  out << "[" << resource_files::kEnglish << "]\n";
  for (const auto& [k, v] : bundle.english_pron()) {
    out << k << '\t';
    join(out, v, ' ');
    out << '\n';
  }
  out << "[" << resource_files::kPinyinIpa << "]\n";
  for (const auto& [k, v] : bundle.pinyin_to_ipa()) out << k << '\t' << v << '\n';
  out << "[" << resource_files::kArpabetIpa << "]\n";
  for (const auto& [k, v] : bundle.arpabet_to_ipa()) out << k << '\t' << v << '\n';
  out << "[" << resource_files::kPos << "]\n";
  for (const auto& [k, v] : bundle.pos_table()) out << k << '\t' << pos_tag_name(v) << '\n';
}

}  // namespace csfe
