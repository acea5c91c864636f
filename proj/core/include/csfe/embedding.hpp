#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "csfe/embedding_schema.hpp"
#include "csfe/feature_encoder.hpp"

namespace csfe {

/// Per-column embedding width. Columns without an entry use the default:
/// segmental 256, tone 16, each tone-description channel 4, boundary 8,
/// each context column 8.
struct LayerDims {
  std::map<Column, std::size_t> dims;

  static std::size_t default_dim(Column c) noexcept;
  std::size_t dim(Column c) const;
  std::size_t total(std::span<const Column> columns) const;
};

struct EmbeddingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> values;  // row-major

  float at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  friend bool operator==(const EmbeddingMatrix&, const EmbeddingMatrix&) = default;
};

/// Deterministic (vocab x dim) lookup table for one layer, uniform in
/// [-0.1, 0.1), keyed by (seed, layer name).
std::vector<float> layer_table(std::string_view layer, std::size_t vocab, std::size_t dim, std::uint64_t seed);

/// Concatenates each frame's per-layer rows in manifest order. Throws
/// DimensionZero when an active column has width 0.
EmbeddingMatrix assemble_embeddings(const FrameMatrix& matrix, const SymbolTables& tables,
                                    const LayerDims& dims, std::uint64_t seed);

}  // namespace csfe
