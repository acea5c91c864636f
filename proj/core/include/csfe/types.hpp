#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace csfe {

enum class Language : std::uint8_t { Mandarin, English };

std::string_view language_name(Language lang) noexcept;

/// Part-of-speech tagset. Enumerators are in codepoint order of their tag
/// letters, which is also the order of the pos symbol table (after PAD).
enum class PosTag : std::uint8_t { A, C, D, M, N, P, Q, R, U, V, X };

inline constexpr std::array<PosTag, 11> kAllPosTags = {
    PosTag::A, PosTag::C, PosTag::D, PosTag::M, PosTag::N, PosTag::P,
    PosTag::Q, PosTag::R, PosTag::U, PosTag::V, PosTag::X};

std::string_view pos_tag_name(PosTag tag) noexcept;
std::optional<PosTag> parse_pos_tag(std::string_view name) noexcept;

}  // namespace csfe
