#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csfe {

enum class ErrorCode {
  // resources
  MissingResource,
  MalformedLine,
  DuplicateKey,
  DanglingReference,
  // segmentation
  UnsupportedCharacter,
  // g2p
  UnknownCharacter,
  OutOfVocabulary,
  UnknownPinyin,
  MalformedPinyin,
  // embedding schema
  EmptyInput,
  InvalidTone,
  UnknownSymbol,
  UnknownConfig,
  // text enhancement
  AnnotationOutOfRange,
  // feature encoder
  IncompatibleConfig,
  DimensionZero,
  MalformedStream,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `subject()` names the offending
/// file, key, symbol or character; `offset()` is a byte offset into the
/// source text when the failure is tied to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, std::string detail = {},
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

  /// Same error, re-anchored at `offset` (used when an upstream failure is
  /// attributed to a position in the utterance).
  Error at(std::size_t offset) const;

 private:
  ErrorCode code_;
  std::string subject_;
  std::string detail_;
  std::optional<std::size_t> offset_;
};

}  // namespace csfe
