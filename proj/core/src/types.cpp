#include "csfe/types.hpp"

namespace csfe {

std::string_view language_name(Language lang) noexcept {
  return lang == Language::Mandarin ? "Mandarin" : "English";
}

std::string_view pos_tag_name(PosTag tag) noexcept {
  static constexpr std::string_view kNames[] = {"a", "c", "d", "m", "n", "p",
                                                "q", "r", "u", "v", "x"};
  return kNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) noexcept {
  for (PosTag tag : kAllPosTags) {
    if (pos_tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

}  // namespace csfe
