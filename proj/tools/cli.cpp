#include "cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "CLI11.hpp"
#include "csfe/embedding.hpp"
#include "csfe/feature_encoder.hpp"
#include "csfe/resources.hpp"

namespace csfe::cli {

namespace {

#ifndef CSFE_DEFAULT_RESOURCES
#define CSFE_DEFAULT_RESOURCES "data"
#endif

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

}  // namespace

int run(const CliOptions& options, std::istream& in, std::ostream& out, std::ostream& err) {
  const SystemConfig* config = nullptr;
  std::shared_ptr<const LexiconBundle> bundle;
  try {
    config = &preset(options.config_name);
    bundle = std::make_shared<const LexiconBundle>(load_resources(options.resources_dir, LoadMode::Validated));
  } catch (const Error& e) {
    err << "csfe: " << e.what() << '\n';
    return kExitUsage;
  }

  EncoderOptions encoder_options;
  encoder_options.pph_threshold = options.pph_threshold;
  encoder_options.strictness = options.strict ? Strictness::Strict : Strictness::Lenient;
  const Encoder encoder(bundle, encoder_options);

  if (options.emit == Emit::Symbols) {
    encoder.tables_for(*config).write_manifest(out);
    return kExitOk;
  }

  std::vector<std::string> lines;
  if (options.input_file) {
    std::ifstream file(*options.input_file, std::ios::binary);
    if (!file) {
      err << "csfe: cannot open input file " << options.input_file->string() << '\n';
      return kExitUsage;
    }
    lines = read_lines(file);
  } else {
    lines = read_lines(in);
  }

  const auto results = encoder.encode_batch(lines, *config, options.threads);
  const auto tables = options.emit == Emit::Embeddings ? encoder.tables_for(*config) : SymbolTables{};
  const LayerDims dims;

  int status = kExitOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.error) {
      err << "csfe: line " << i + 1 << ": " << r.error->what() << '\n';
      status = kExitLineFailed;
      continue;
    }
    if (options.emit == Emit::Embeddings) {
      serialize_embeddings(assemble_embeddings(*r.matrix, tables, dims, options.seed), *r.matrix,
                           options.output_format, out);
    } else {
      serialize(*r.matrix, options.output_format, out);
    }
  }
  out.flush();
  return status;
}

int main_with_args(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliOptions options;
  options.resources_dir = CSFE_DEFAULT_RESOURCES;
  std::string format = "jsonl";
  std::string emit = "frames";
  std::string input;

  CLI::App app{"Mixed Mandarin/English text to per-frame linguistic feature indices", "csfe"};
  app.add_option("--resources", options.resources_dir, "Lexicon resource directory")
      ->capture_default_str();
  app.add_option("--config", options.config_name, "System configuration")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"jsonl", "tsv", "bin"}))
      ->capture_default_str();
  app.add_option("--emit", emit, "What to write")
      ->check(CLI::IsMember({"frames", "symbols", "embeddings"}))
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Embedding table seed")->capture_default_str();
  app.add_option("--pph-threshold", options.pph_threshold, "Syllables before a forced phrase break")
      ->check(CLI::Range(2, 1 << 16))
      ->capture_default_str();
  app.add_flag("--strict,!--lenient", options.strict,
               "Fail lines with symbols outside the tables (--lenient maps them to <UNK>)");
  app.add_option("--threads", options.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("input", input, "Input file, one utterance per line (default: stdin)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "csfe: " << e.what() << '\n';
    return kExitUsage;
  }

  options.output_format = *parse_format(format);
  options.emit = emit == "symbols" ? Emit::Symbols : emit == "embeddings" ? Emit::Embeddings : Emit::Frames;
  if (!input.empty()) options.input_file = input;
  return run(options, in, out, err);
}

}  // namespace csfe::cli
