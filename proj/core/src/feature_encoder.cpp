#include "csfe/feature_encoder.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace csfe {

std::uint16_t Frame::get(Column c) const noexcept {
  switch (c) {
    case Column::PhonemeTonal:
    case Column::IpaTonal:
    case Column::Phoneme:
    case Column::Ipa: return segmental;
    case Column::Tone: return tone;
    case Column::ToneDesc1: return tone_desc[0];
    case Column::ToneDesc2: return tone_desc[1];
    case Column::ToneDesc3: return tone_desc[2];
    case Column::Boundary: return boundary;
    case Column::WordLen: return word_len;
    case Column::Pos: return pos_id;
    case Column::CharPosInWord: return char_pos_in_word;
    case Column::CharPosInSentence: return char_pos_in_sentence;
    case Column::WordPosInSentence: return word_pos_in_sentence;
  }
  return 0;
}

void Frame::set(Column c, std::uint16_t value) noexcept {
  switch (c) {
    case Column::PhonemeTonal:
    case Column::IpaTonal:
    case Column::Phoneme:
    case Column::Ipa: segmental = value; break;
    case Column::Tone: tone = value; break;
    case Column::ToneDesc1: tone_desc[0] = value; break;
    case Column::ToneDesc2: tone_desc[1] = value; break;
    case Column::ToneDesc3: tone_desc[2] = value; break;
    case Column::Boundary: boundary = value; break;
    case Column::WordLen: word_len = value; break;
    case Column::Pos: pos_id = value; break;
    case Column::CharPosInWord: char_pos_in_word = value; break;
    case Column::CharPosInSentence: char_pos_in_sentence = value; break;
    case Column::WordPosInSentence: word_pos_in_sentence = value; break;
  }
}

bool FrameMatrix::has(Column c) const { return std::find(columns.begin(), columns.end(), c) != columns.end(); }

namespace {

Frame project(const Frame& f, std::span<const Column> columns) {
  Frame out;
  for (const Column c : columns) out.set(c, f.get(c));
  return out;
}

std::size_t mode_slot(SegmentalMode mode) { return static_cast<std::size_t>(mode); }

}  // namespace

Encoder::Encoder(std::shared_ptr<const LexiconBundle> bundle, EncoderOptions options)
    : bundle_(std::move(bundle)), options_(std::move(options)) {
  predictor_ = options_.predictor ? options_.predictor
                                  : std::make_shared<RuleBoundaryPredictor>(options_.pph_threshold);
}

const SymbolTables& Encoder::tables(SegmentalMode mode) const {
  const auto slot = mode_slot(mode);
  std::call_once(tables_once_[slot], [&] { tables_[slot] = build_symbol_tables(*bundle_, superset_config(mode)); });
  return *tables_[slot];
}

SymbolTables Encoder::tables_for(const SystemConfig& config) const {
  const auto& all = tables(config.mode);
  SymbolTables out;
  for (const Column c : config.columns()) out.add(c, all.at(c));
  return out;
}

std::vector<FrameDraft> Encoder::draft(std::string_view text, const SystemConfig& config) const {
  const auto spans = segment_scripts(text);
  auto segmented = segment_words(spans, *bundle_);
  auto tokens = tag_pos(std::move(segmented.tokens), *bundle_);

  std::vector<std::vector<Syllable>> per_token;
  per_token.reserve(tokens.size());
  for (auto& t : tokens) {
    try {
      per_token.push_back(token_g2p(t, *bundle_));
    } catch (const Error& e) {
      if (e.offset()) throw;
      throw e.at(t.offset);
    }
    t.syllable_count = per_token.back().size();
  }

  if (options_.tone_sandhi) {
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t j = i;
      std::vector<Syllable> sentence;
      while (j < tokens.size() && tokens[j].sentence_index == tokens[i].sentence_index) {
        sentence.insert(sentence.end(), per_token[j].begin(), per_token[j].end());
        ++j;
      }
      options_.tone_sandhi(sentence);
      auto it = sentence.begin();
      for (std::size_t k = i; k < j; ++k) {
        for (auto& s : per_token[k]) s = *it++;
      }
      i = j;
    }
  }

  std::vector<FrameDraft> frames;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    for (const auto& syl : per_token[k]) {
      const auto desc = tone_description_of(syl);
      const auto cls = tone_class(syl);
      const auto unit = syl.language == Language::Mandarin ? syl.unit_index_in_word : 0;
      for (auto& symbol : segmental_symbols(syl, config.mode)) {
        FrameDraft f;
        f.symbol = std::move(symbol);
        f.tone = cls;
        f.tone_desc = desc;
        f.token_ordinal = tokens[k].ordinal;
        f.unit_in_word = unit;
        frames.push_back(std::move(f));
      }
    }
  }

  const auto words = word_context(tokens, frames);
  const auto sentences = sentence_context(tokens, frames);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    auto& c = frames[i].context;
    c.word_len = words[i].word_len;
    c.pos_id = words[i].pos_id;
    c.char_pos_in_word = words[i].char_pos_in_word;
    c.char_pos_in_sentence = sentences[i].char_pos_in_sentence;
    c.word_pos_in_sentence = sentences[i].word_pos_in_sentence;
  }

  if (config.boundary) {
    const auto annotations = predictor_->predict(tokens, segmented.punct);
    frames = insert_boundary_frames(std::move(frames), annotations);
  }

  // Strict mode: report unknown symbols at the owning token's offset.
  if (options_.strictness == Strictness::Strict) {
    const auto& table = tables(config.mode).at(segmental_column(config.mode));
    for (const auto& f : frames) {
      if (!table.contains(f.symbol)) {
        throw Error(ErrorCode::UnknownSymbol, f.symbol, "not in layer '" + table.name() + "'",
                    tokens[f.token_ordinal].offset);
      }
    }
  }
  return frames;
}

FrameMatrix Encoder::encode(std::string_view text, const SystemConfig& config) const {
  const auto drafts = draft(text, config);
  const auto& segmental = tables(config.mode).at(segmental_column(config.mode));

  FrameMatrix m;
  m.config_name = config.name;
  m.text = std::string(text);
  m.columns = config.columns();
  m.frames.reserve(drafts.size());
  for (const auto& d : drafts) {
    Frame f;
    f.segmental = segmental.encode(d.symbol, options_.strictness);
    f.tone = d.tone;
    for (std::size_t i = 0; i < 3; ++i) f.tone_desc[i] = d.tone_desc.contour[i];
    f.boundary = static_cast<std::uint16_t>(d.boundary);
    f.word_len = d.context.word_len;
    f.pos_id = d.context.pos_id;
    f.char_pos_in_word = d.context.char_pos_in_word;
    f.char_pos_in_sentence = d.context.char_pos_in_sentence;
    f.word_pos_in_sentence = d.context.word_pos_in_sentence;
    m.frames.push_back(project(f, m.columns));
  }
  return m;
}

FrameMatrix Encoder::encode_superset(std::string_view text, SegmentalMode mode) const {
  return encode(text, superset_config(mode));
}

std::vector<EncodeResult> Encoder::encode_batch(std::span<const std::string> lines, const SystemConfig& config,
                                                unsigned threads) const {
  std::vector<EncodeResult> results(lines.size());
  auto work = [&](std::size_t i) {
    try {
      results[i].matrix = encode(lines[i], config);
    } catch (const Error& e) {
      results[i].error = e;
    }
  };
  tables(config.mode);  // build before fanning out

  if (threads <= 1 || lines.size() < 2) {
    for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const auto n = std::min<std::size_t>(threads, lines.size());
  for (std::size_t t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < lines.size(); i = next++) work(i);
    });
  }
  pool.clear();  // joins
  return results;
}

FrameMatrix encode_utterance(std::string_view text, const LexiconBundle& bundle, const SystemConfig& config) {
  // Non-owning: the caller's bundle outlives this call.
  const Encoder encoder(std::shared_ptr<const LexiconBundle>(std::shared_ptr<void>(), &bundle));
  return encoder.encode(text, config);
}

FrameMatrix apply_config(const FrameMatrix& full, const SystemConfig& config) {
  const auto wanted = config.columns();
  for (const Column c : wanted) {
    if (!full.has(c)) {
      throw Error(ErrorCode::IncompatibleConfig, config.name,
                  "source matrix '" + full.config_name + "' has no column '" + std::string(column_name(c)) + "'");
    }
  }
  FrameMatrix out;
  out.config_name = config.name;
  out.text = full.text;
  out.columns = wanted;
  out.frames.reserve(full.frames.size());
  const bool drop_boundaries = !config.boundary && full.has(Column::Boundary);
  for (const auto& f : full.frames) {
    if (drop_boundaries && f.boundary != static_cast<std::uint16_t>(BoundaryKind::None)) continue;
    out.frames.push_back(project(f, wanted));
  }
  return out;
}

}  // namespace csfe
