#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "csfe/error.hpp"
#include "csfe/feature_encoder.hpp"
#include "csfe/resources.hpp"
#include "doctest.h"

namespace test {

namespace fs = std::filesystem;

inline fs::path mini_dir() { return fs::path(CSFE_FIXTURES_DIR) / "mini"; }
inline fs::path fixtures_dir() { return CSFE_FIXTURES_DIR; }
inline fs::path data_dir() { return CSFE_DATA_DIR; }
inline fs::path golden_dir() { return CSFE_GOLDEN_DIR; }

inline std::shared_ptr<const csfe::LexiconBundle> mini_bundle() {
  static const auto b = std::make_shared<const csfe::LexiconBundle>(csfe::load_resources(mini_dir()));
  return b;
}

inline std::shared_ptr<const csfe::LexiconBundle> shipped_bundle() {
  static const auto b = std::make_shared<const csfe::LexiconBundle>(csfe::load_resources(data_dir()));
  return b;
}

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) lines.push_back(l);
  }
  return lines;
}

/// A scratch directory removed on destruction; optionally seeded with a copy
/// of another directory.
class TempDir {
 public:
  explicit TempDir(const fs::path& copy_from = {}) {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("csfe-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
    if (!copy_from.empty()) {
      for (const auto& e : fs::directory_iterator(copy_from)) fs::copy(e.path(), path_ / e.path().filename());
    }
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// Runs `f` and returns the csfe::Error it throws; fails the test if it
/// throws nothing.
template <class F>
csfe::Error capture_error(F&& f) {
  try {
    f();
  } catch (const csfe::Error& e) {
    return e;
  }
  FAIL("expected csfe::Error");
  return csfe::Error(csfe::ErrorCode::MalformedStream, "unreachable");
}

}  // namespace test
