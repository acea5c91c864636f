#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>

#include "csfe/embedding.hpp"
#include "csfe/feature_encoder.hpp"
#include "csfe/serialization.hpp"

namespace {

using namespace csfe;

std::shared_ptr<const LexiconBundle> bundle() {
  static const auto b = std::make_shared<const LexiconBundle>(load_resources(CSFE_DATA_DIR));
  return b;
}

const Encoder& encoder() {
  static const Encoder e(bundle());
  return e;
}

const std::vector<std::string>& corpus() {
  static const auto lines = [] {
    std::vector<std::string> out;
    std::ifstream in(std::filesystem::path(CSFE_FIXTURES_DIR) / "sentences50.txt");
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
  }();
  return lines;
}

void BM_LoadResources(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_resources(CSFE_DATA_DIR));
}
BENCHMARK(BM_LoadResources)->Unit(benchmark::kMillisecond);

void BM_BuildTables(benchmark::State& state) {
  const auto& config = presets()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(build_symbol_tables(*bundle(), config));
  state.SetLabel(config.name);
}
BENCHMARK(BM_BuildTables)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_Encode(benchmark::State& state) {
  const auto& config = presets()[static_cast<std::size_t>(state.range(0))];
  const auto& lines = corpus();
  encoder().encode(lines[0], config);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(encoder().encode(lines[i++ % lines.size()], config));
  state.SetItemsProcessed(state.iterations());
  state.SetLabel(config.name);
}
BENCHMARK(BM_Encode)->DenseRange(0, 7);

void BM_EncodeBatch(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  std::vector<std::string> lines;
  for (int k = 0; k < 20; ++k) lines.insert(lines.end(), corpus().begin(), corpus().end());
  const auto& config = preset("ITE-BWS");
  encoder().encode(lines[0], config);
  for (auto _ : state) benchmark::DoNotOptimize(encoder().encode_batch(lines, config, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lines.size()));
}
BENCHMARK(BM_EncodeBatch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Serialize(benchmark::State& state) {
  const auto format = static_cast<Format>(state.range(0));
  const auto m = encoder().encode(corpus()[1], preset("ITE-BWS"));
  for (auto _ : state) benchmark::DoNotOptimize(serialize(m, format));
  state.SetLabel(std::string(format_name(format)));
}
BENCHMARK(BM_Serialize)->DenseRange(0, 2);

void BM_SplitIpa(benchmark::State& state) {
  const auto& table = bundle()->pinyin_to_ipa();
  for (auto _ : state) {
    for (const auto& [_, ipa] : table) benchmark::DoNotOptimize(split_ipa(ipa));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table.size()));
}
BENCHMARK(BM_SplitIpa);

void BM_AssembleEmbeddings(benchmark::State& state) {
  const auto& config = preset("ITE-BWS");
  const auto m = encoder().encode(corpus()[1], config);
  const auto tables = encoder().tables_for(config);
  const LayerDims dims;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_embeddings(m, tables, dims, 1));
}
BENCHMARK(BM_AssembleEmbeddings)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
