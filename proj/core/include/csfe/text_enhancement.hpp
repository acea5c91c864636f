#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "csfe/embedding_schema.hpp"
#include "csfe/segmentation.hpp"

namespace csfe {

/// Prosodic boundary strength, weakest to strongest. The value is also the
/// boundary-layer index.
enum class BoundaryKind : std::uint8_t { None = 0, PW = 1, PPH = 2, IPH = 3 };

std::string_view boundary_kind_name(BoundaryKind kind) noexcept;

struct BoundaryAnnotation {
  std::size_t position;  // the gap after token `position` (Token::ordinal)
  BoundaryKind kind;
  friend bool operator==(const BoundaryAnnotation&, const BoundaryAnnotation&) = default;
};

/// (tokens, punctuation evidence) -> annotations. Implementations must emit
/// at most one annotation per gap and an IPH after the last token of every
/// sentence.
class BoundaryPredictor {
 public:
  virtual ~BoundaryPredictor() = default;
  virtual std::vector<BoundaryAnnotation> predict(std::span<const Token> tokens,
                                                  std::span<const Span> punct) const = 0;
};

/// IPH at sentence-final punctuation, sentence ends and end of input; PPH at
/// phrase punctuation or once `pph_threshold` syllables have accumulated
/// since the last PPH/IPH; PW at every other word gap.
class RuleBoundaryPredictor final : public BoundaryPredictor {
 public:
  static constexpr int kDefaultPphThreshold = 7;

  explicit RuleBoundaryPredictor(int pph_threshold = kDefaultPphThreshold);

  std::vector<BoundaryAnnotation> predict(std::span<const Token> tokens,
                                          std::span<const Span> punct) const override;

  int pph_threshold() const { return pph_threshold_; }

 private:
  int pph_threshold_;
};

std::vector<BoundaryAnnotation> predict_boundaries(std::span<const Token> tokens,
                                                   std::span<const Span> punct,
                                                   int pph_threshold = RuleBoundaryPredictor::kDefaultPphThreshold);

struct ContextFeatures {
  std::uint16_t word_len = 0;  // 1..8 once set
  std::uint16_t pos_id = 0;    // 1 + PosTag
  std::uint16_t char_pos_in_word = 0;
  std::uint16_t char_pos_in_sentence = 0;
  std::uint16_t word_pos_in_sentence = 0;
  friend bool operator==(const ContextFeatures&, const ContextFeatures&) = default;
};

/// A frame before index encoding: the segmental symbol in text form plus
/// every feature value and the owning token.
struct FrameDraft {
  std::string symbol;
  std::uint16_t tone = 0;  // tone class, see tone_class()
  ToneDescription tone_desc;
  BoundaryKind boundary = BoundaryKind::None;
  ContextFeatures context;
  std::size_t token_ordinal = 0;
  std::size_t unit_in_word = 0;  // pronounceable unit within the token

  friend bool operator==(const FrameDraft&, const FrameDraft&) = default;
};

/// Inserts one boundary frame after the last frame of each annotated token.
/// Boundary frames copy the preceding frame's context and carry no tone.
/// Throws AnnotationOutOfRange when an annotation names a token with no
/// frames.
std::vector<FrameDraft> insert_boundary_frames(std::vector<FrameDraft> frames,
                                               std::span<const BoundaryAnnotation> annotations);

/// Word-level fields per frame: clipped word length, POS id and clipped
/// position of the unit within its word. Tokens are indexed by ordinal.
std::vector<ContextFeatures> word_context(std::span<const Token> tokens,
                                          std::span<const FrameDraft> frames);

/// Sentence-level fields per frame: units since sentence start and the
/// owning token's word index, both clipped.
std::vector<ContextFeatures> sentence_context(std::span<const Token> tokens,
                                              std::span<const FrameDraft> frames);

std::uint16_t clip(std::size_t value, std::uint16_t lo, std::uint16_t hi) noexcept;

}  // namespace csfe
