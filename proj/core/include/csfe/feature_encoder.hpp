#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csfe/embedding_schema.hpp"
#include "csfe/error.hpp"
#include "csfe/g2p.hpp"
#include "csfe/resources.hpp"
#include "csfe/text_enhancement.hpp"

namespace csfe {

/// One encoder timestep: one segmental symbol plus every feature index.
/// Fields of columns inactive under the matrix's config are zero.
struct Frame {
  std::uint16_t segmental = 0;
  std::uint16_t tone = 0;
  std::array<std::uint16_t, 3> tone_desc{};
  std::uint16_t boundary = 0;
  std::uint16_t word_len = 0;
  std::uint16_t pos_id = 0;
  std::uint16_t char_pos_in_word = 0;
  std::uint16_t char_pos_in_sentence = 0;
  std::uint16_t word_pos_in_sentence = 0;

  std::uint16_t get(Column c) const noexcept;
  void set(Column c, std::uint16_t value) noexcept;

  friend bool operator==(const Frame&, const Frame&) = default;
};

struct FrameMatrix {
  std::string config_name;
  std::string text;
  std::vector<Column> columns;  // manifest, in output order
  std::vector<Frame> frames;

  bool has(Column c) const;
  friend bool operator==(const FrameMatrix&, const FrameMatrix&) = default;
};

struct EncoderOptions {
  int pph_threshold = RuleBoundaryPredictor::kDefaultPphThreshold;
  Strictness strictness = Strictness::Strict;
  /// Replaces the rule predictor when set.
  std::shared_ptr<const BoundaryPredictor> predictor;
  /// Applied to each sentence's syllables; unset means no sandhi.
  ToneSandhiHook tone_sandhi;
};

struct EncodeResult {
  std::optional<FrameMatrix> matrix;
  std::optional<Error> error;
};

/// Runs segmentation, G2P, boundary prediction and context features and
/// encodes the result against per-mode symbol tables. Tables are built
/// lazily once per segmental mode; encode() is safe to call concurrently.
class Encoder {
 public:
  explicit Encoder(std::shared_ptr<const LexiconBundle> bundle, EncoderOptions options = {});

  /// Throws csfe::Error; errors tied to a token carry its byte offset.
  FrameMatrix encode(std::string_view text, const SystemConfig& config) const;

  /// Every layer for `mode`, including tone description.
  FrameMatrix encode_superset(std::string_view text, SegmentalMode mode) const;

  /// Per-line results in input order. `threads` <= 1 runs inline.
  std::vector<EncodeResult> encode_batch(std::span<const std::string> lines, const SystemConfig& config,
                                         unsigned threads = 1) const;

  /// Tables for every column of `mode`.
  const SymbolTables& tables(SegmentalMode mode) const;
  /// The subset of tables active under `config`.
  SymbolTables tables_for(const SystemConfig& config) const;

  const LexiconBundle& bundle() const { return *bundle_; }
  const EncoderOptions& options() const { return options_; }

  /// Unencoded frames (symbols in text form) for inspection and tests.
  std::vector<FrameDraft> draft(std::string_view text, const SystemConfig& config) const;

 private:
  std::shared_ptr<const LexiconBundle> bundle_;
  EncoderOptions options_;
  std::shared_ptr<const BoundaryPredictor> predictor_;
  mutable std::array<std::once_flag, 4> tables_once_;
  mutable std::array<std::optional<SymbolTables>, 4> tables_;
};

/// Convenience wrapper over a temporary Encoder; rebuilds tables per call.
FrameMatrix encode_utterance(std::string_view text, const LexiconBundle& bundle, const SystemConfig& config);

/// Reduces a matrix to `config`: drops inactive columns and, when the
/// boundary layer is off, the boundary frames. Throws IncompatibleConfig
/// when the matrix lacks a requested column or uses another segmental layer.
FrameMatrix apply_config(const FrameMatrix& full, const SystemConfig& config);

}  // namespace csfe
