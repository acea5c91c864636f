#include "csfe/embedding.hpp"

#include <random>

#include "csfe/error.hpp"

namespace csfe {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::size_t LayerDims::default_dim(Column c) noexcept {
  if (is_segmental(c)) return 256;
  switch (c) {
    case Column::Tone: return 16;
    case Column::ToneDesc1:
    case Column::ToneDesc2:
    case Column::ToneDesc3: return 4;
    default: return 8;
  }
}

std::size_t LayerDims::dim(Column c) const {
  const auto it = dims.find(c);
  return it == dims.end() ? default_dim(c) : it->second;
}

std::size_t LayerDims::total(std::span<const Column> columns) const {
  std::size_t sum = 0;
  for (const Column c : columns) sum += dim(c);
  return sum;
}

std::vector<float> layer_table(std::string_view layer, std::size_t vocab, std::size_t dim, std::uint64_t seed) {
  // mt19937_64's output sequence is fixed by the standard; the distribution
  // step is done by hand because std::uniform_real_distribution is not.
  std::mt19937_64 rng(seed ^ fnv1a(layer));
  std::vector<float> table(vocab * dim);
  for (auto& v : table) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = static_cast<float>(unit * 0.2 - 0.1);
  }
  return table;
}

EmbeddingMatrix assemble_embeddings(const FrameMatrix& matrix, const SymbolTables& tables,
                                    const LayerDims& dims, std::uint64_t seed) {
  struct Layer {
    Column column;
    std::size_t dim;
    std::vector<float> table;
  };
  std::vector<Layer> layers;
  EmbeddingMatrix out;
  for (const Column c : matrix.columns) {
    const auto d = dims.dim(c);
    if (d == 0) throw Error(ErrorCode::DimensionZero, std::string(column_name(c)));
    const auto& t = tables.at(c);
    layers.push_back({c, d, layer_table(t.name(), t.size(), d, seed)});
    out.cols += d;
  }
  out.rows = matrix.frames.size();
  out.values.reserve(out.rows * out.cols);
  for (const auto& f : matrix.frames) {
    for (const auto& l : layers) {
      const auto row = f.get(l.column);
      if (row >= l.table.size() / l.dim) {
        throw Error(ErrorCode::UnknownSymbol, std::to_string(row),
                    "index outside layer '" + std::string(column_name(l.column)) + "'");
      }
      const auto* begin = l.table.data() + static_cast<std::size_t>(row) * l.dim;
      out.values.insert(out.values.end(), begin, begin + l.dim);
    }
  }
  return out;
}

}  // namespace csfe
