#include "csfe/text_enhancement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "csfe/error.hpp"
#include "csfe/utf8.hpp"

namespace csfe {

std::string_view boundary_kind_name(BoundaryKind kind) noexcept {
  switch (kind) {
    case BoundaryKind::None: return "None";
    case BoundaryKind::PW: return "PW";
    case BoundaryKind::PPH: return "PPH";
    case BoundaryKind::IPH: return "IPH";
  }
  return "None";
}

std::uint16_t clip(std::size_t value, std::uint16_t lo, std::uint16_t hi) noexcept {
  return static_cast<std::uint16_t>(std::clamp<std::size_t>(value, lo, hi));
}

RuleBoundaryPredictor::RuleBoundaryPredictor(int pph_threshold) : pph_threshold_(pph_threshold) {
  if (pph_threshold < 2) throw std::invalid_argument("pph threshold must be at least 2");
}

std::vector<BoundaryAnnotation> RuleBoundaryPredictor::predict(std::span<const Token> tokens,
                                                               std::span<const Span> punct) const {
  std::vector<BoundaryAnnotation> out;
  if (tokens.empty()) return out;

  // Punctuation evidence, attributed to the gap after the last token that
  // starts before it.
  std::vector<BoundaryKind> evidence(tokens.size(), BoundaryKind::None);
  for (const auto& span : punct) {
    const auto after = std::partition_point(tokens.begin(), tokens.end(),
                                            [&](const Token& t) { return t.offset < span.offset; });
    if (after == tokens.begin()) continue;
    const auto gap = static_cast<std::size_t>(std::distance(tokens.begin(), after) - 1);
    auto kind = BoundaryKind::None;
    for (const auto& cp : utf8::decode(span.text)) {
      if (is_sentence_final_punct(cp.value)) kind = std::max(kind, BoundaryKind::IPH);
      else if (is_phrase_punct(cp.value)) kind = std::max(kind, BoundaryKind::PPH);
    }
    evidence[gap] = std::max(evidence[gap], kind);
  }

  std::size_t accumulated = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    accumulated += tokens[i].syllable_count;
    auto kind = evidence[i];
    const bool sentence_end = i + 1 == tokens.size() ||
                              tokens[i + 1].sentence_index != tokens[i].sentence_index;
    if (sentence_end) kind = BoundaryKind::IPH;
    if (kind < BoundaryKind::PPH && accumulated >= static_cast<std::size_t>(pph_threshold_)) {
      kind = BoundaryKind::PPH;
    }
    if (kind == BoundaryKind::None) kind = BoundaryKind::PW;
    if (kind >= BoundaryKind::PPH) accumulated = 0;
    out.push_back({tokens[i].ordinal, kind});
  }
  return out;
}

std::vector<BoundaryAnnotation> predict_boundaries(std::span<const Token> tokens,
                                                   std::span<const Span> punct, int pph_threshold) {
  return RuleBoundaryPredictor(pph_threshold).predict(tokens, punct);
}

std::vector<FrameDraft> insert_boundary_frames(std::vector<FrameDraft> frames,
                                               std::span<const BoundaryAnnotation> annotations) {
  if (annotations.empty()) return frames;

  std::map<std::size_t, BoundaryKind> at_gap;
  for (const auto& a : annotations) {
    auto& k = at_gap[a.position];
    k = std::max(k, a.kind);
  }
  std::set<std::size_t> present;
  for (const auto& f : frames) present.insert(f.token_ordinal);
  for (const auto& [pos, _] : at_gap) {
    if (!present.contains(pos)) {
      throw Error(ErrorCode::AnnotationOutOfRange, std::to_string(pos), "no frames for token");
    }
  }

  std::vector<FrameDraft> out;
  out.reserve(frames.size() + at_gap.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    out.push_back(frames[i]);
    const bool last_of_token = i + 1 == frames.size() || frames[i + 1].token_ordinal != frames[i].token_ordinal;
    if (!last_of_token) continue;
    const auto it = at_gap.find(frames[i].token_ordinal);
    if (it == at_gap.end() || it->second == BoundaryKind::None) continue;
    FrameDraft b;
    b.symbol = std::string(kBoundarySymbols[static_cast<std::size_t>(it->second) - 1]);
    b.boundary = it->second;
    b.context = frames[i].context;
    b.token_ordinal = frames[i].token_ordinal;
    b.unit_in_word = frames[i].unit_in_word;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<ContextFeatures> word_context(std::span<const Token> tokens, std::span<const FrameDraft> frames) {
  std::vector<ContextFeatures> out;
  out.reserve(frames.size());
  for (const auto& f : frames) {
    const auto& t = tokens[f.token_ordinal];
    ContextFeatures c;
    c.word_len = clip(t.char_count, 1, kWordLenMax);
    c.pos_id = static_cast<std::uint16_t>(static_cast<std::uint16_t>(t.pos) + 1);
    c.char_pos_in_word = clip(f.unit_in_word, 0, kCharPosInWordLimit - 1);
    out.push_back(c);
  }
  return out;
}

std::vector<ContextFeatures> sentence_context(std::span<const Token> tokens, std::span<const FrameDraft> frames) {
  // units preceding each token within its sentence
  std::vector<std::size_t> units_before(tokens.size(), 0);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].sentence_index == tokens[i - 1].sentence_index) {
      units_before[i] = units_before[i - 1] + tokens[i - 1].char_count;
    }
  }
  std::vector<ContextFeatures> out;
  out.reserve(frames.size());
  for (const auto& f : frames) {
    const auto& t = tokens[f.token_ordinal];
    ContextFeatures c;
    c.char_pos_in_sentence = clip(units_before[f.token_ordinal] + f.unit_in_word, 0, kCharPosInSentenceLimit - 1);
    c.word_pos_in_sentence = clip(t.word_index, 0, kWordPosInSentenceLimit - 1);
    out.push_back(c);
  }
  return out;
}

}  // namespace csfe
