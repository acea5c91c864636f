#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "csfe/embedding.hpp"
#include "csfe/feature_encoder.hpp"

namespace csfe {

enum class Format { Jsonl, Tsv, Bin };

std::optional<Format> parse_format(std::string_view name) noexcept;
std::string_view format_name(Format f) noexcept;

/// Frame-matrix wire formats. Several matrices may be written back to back
/// on one stream.
///
/// jsonl: a header object {"record":"header","config","text","columns","frames"}
///        followed by one object per frame keyed by column name.
/// tsv:   "# config=<name>\tframes=<n>\ttext=<escaped>", a column-name header
///        row, then one row per frame. Text escapes: \\ \t \n \r.
/// bin:   "CSFE1", u32 frame count, u32 column count, one length-prefixed
///        (u32) string per column, then config name and text the same way,
///        then row-major u16 indices. All integers little-endian.
void serialize(const FrameMatrix& matrix, Format format, std::ostream& out);
std::string serialize(const FrameMatrix& matrix, Format format);

/// Reads the next matrix; std::nullopt at a clean end of stream. Throws
/// MalformedStream on anything else that does not parse.
std::optional<FrameMatrix> deserialize(std::istream& in, Format format);

/// Embedding matrices: jsonl header + one array per row, tsv comment line +
/// rows, or bin "CSFX1", u32 rows, u32 cols, row-major f32 little-endian.
void serialize_embeddings(const EmbeddingMatrix& matrix, const FrameMatrix& source, Format format,
                          std::ostream& out);

}  // namespace csfe
