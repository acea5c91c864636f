#include "csfe/error.hpp"

namespace csfe {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingResource: return "MissingResource";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::UnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::OutOfVocabulary: return "OutOfVocabulary";
    case ErrorCode::UnknownPinyin: return "UnknownPinyin";
    case ErrorCode::MalformedPinyin: return "MalformedPinyin";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidTone: return "InvalidTone";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownConfig: return "UnknownConfig";
    case ErrorCode::AnnotationOutOfRange: return "AnnotationOutOfRange";
    case ErrorCode::IncompatibleConfig: return "IncompatibleConfig";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::MalformedStream: return "MalformedStream";
  }
  return "Unknown";
}

namespace {

std::string render(ErrorCode code, const std::string& subject, const std::string& detail,
                   std::optional<std::size_t> offset) {
  std::string msg(error_code_name(code));
  msg += "(" + subject + ")";
  if (offset) msg += " at byte " + std::to_string(*offset);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string subject, std::string detail,
             std::optional<std::size_t> offset)
    : std::runtime_error(render(code, subject, detail, offset)),
      code_(code),
      subject_(std::move(subject)),
      detail_(std::move(detail)),
      offset_(offset) {}

Error Error::at(std::size_t offset) const { return Error(code_, subject_, detail_, offset); }

}  // namespace csfe
