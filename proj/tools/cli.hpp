#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csfe/serialization.hpp"

namespace csfe::cli {

enum class Emit { Frames, Symbols, Embeddings };

struct CliOptions {
  std::filesystem::path resources_dir;
  std::string config_name;
  Format output_format = Format::Jsonl;
  Emit emit = Emit::Frames;
  std::uint64_t seed = 0;
  int pph_threshold = RuleBoundaryPredictor::kDefaultPphThreshold;
  bool strict = true;
  unsigned threads = 1;
  /// Read from here instead of the input stream when set.
  std::optional<std::filesystem::path> input_file;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitLineFailed = 1;
inline constexpr int kExitUsage = 2;

/// Encodes one utterance per input line. Returns 0 when every line encoded,
/// 1 when some line failed (reported on `err`, other lines still written),
/// 2 on resource or usage errors.
int run(const CliOptions& options, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and calls run(). Usage errors
/// return 2 before any input is read.
int main_with_args(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace csfe::cli
