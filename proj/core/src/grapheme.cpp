#include <memory>

#include <unicode/brkiter.h>
#include <unicode/locid.h>
#include <unicode/utext.h>

#include "csfe/embedding_schema.hpp"
#include "csfe/error.hpp"

namespace csfe {

namespace {

icu::BreakIterator& character_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> iter = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
    if (U_FAILURE(status) || !it) {
      throw std::runtime_error(std::string("ICU character break iterator: ") + u_errorName(status));
    }
    return it;
  }();
  return *iter;
}

}  // namespace

std::vector<std::string> split_ipa(std::string_view ipa) {
  if (ipa.empty()) throw Error(ErrorCode::EmptyInput, "split_ipa");

  UErrorCode status = U_ZERO_ERROR;
  icu::LocalUTextPointer text(
      utext_openUTF8(nullptr, ipa.data(), static_cast<int64_t>(ipa.size()), &status));
  auto& iter = character_iterator();
  iter.setText(text.getAlias(), status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU setText: ") + u_errorName(status));
  }

  std::vector<std::string> clusters;
  std::int32_t start = iter.first();
  for (std::int32_t end = iter.next(); end != icu::BreakIterator::DONE; start = end, end = iter.next()) {
    clusters.emplace_back(ipa.substr(static_cast<std::size_t>(start),
                                     static_cast<std::size_t>(end - start)));
  }
  return clusters;
}

}  // namespace csfe
