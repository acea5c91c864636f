#include "csfe/serialization.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "csfe/error.hpp"

namespace csfe {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kFrameMagic = "CSFE1";
constexpr std::string_view kEmbeddingMagic = "CSFX1";

[[noreturn]] void malformed(std::string_view format, std::string why) {
  throw Error(ErrorCode::MalformedStream, std::string(format), std::move(why));
}

// --- little-endian primitives ----------------------------------------------

void put_u16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                     static_cast<char>((v >> 16) & 0xFF), static_cast<char>(v >> 24)};
  out.write(b, 4);
}

void put_string(std::ostream& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void read_exact(std::istream& in, char* dst, std::size_t n) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) malformed("bin", "truncated stream");
}

std::uint16_t get_u16(std::istream& in) {
  unsigned char b[2];
  read_exact(in, reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  read_exact(in, reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::string get_string(std::istream& in) {
  const auto n = get_u32(in);
  if (n > (1u << 28)) malformed("bin", "string length out of range");
  std::string s(n, '\0');
  if (n) read_exact(in, s.data(), n);
  return s;
}

// --- tsv escaping -------------------------------------------------------------

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) malformed("tsv", "dangling escape");
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: malformed("tsv", "unknown escape");
    }
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::uint16_t parse_index(std::string_view s, std::string_view format) {
  if (s.empty() || s.size() > 5) malformed(format, "bad index '" + std::string(s) + "'");
  std::uint32_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') malformed(format, "bad index '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint32_t>(c - '0');
  }
  if (v > 0xFFFF) malformed(format, "index overflows u16");
  return static_cast<std::uint16_t>(v);
}

Column column_or_throw(std::string_view name, std::string_view format) {
  const auto c = parse_column(name);
  if (!c) malformed(format, "unknown column '" + std::string(name) + "'");
  return *c;
}

bool getline_nonempty(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

// --- writers ------------------------------------------------------------------

void write_jsonl(const FrameMatrix& m, std::ostream& out) {
  ordered_json header;
  header["record"] = "header";
  header["config"] = m.config_name;
  header["text"] = m.text;
  header["columns"] = ordered_json::array();
  for (const Column c : m.columns) header["columns"].push_back(std::string(column_name(c)));
  header["frames"] = m.frames.size();
  out << header.dump() << '\n';
  for (const auto& f : m.frames) {
    ordered_json row = ordered_json::object();
    for (const Column c : m.columns) row[std::string(column_name(c))] = f.get(c);
    out << row.dump() << '\n';
  }
}

void write_tsv(const FrameMatrix& m, std::ostream& out) {
  out << "# config=" << escape(m.config_name) << "\tframes=" << m.frames.size() << "\ttext=" << escape(m.text)
      << '\n';
  for (std::size_t i = 0; i < m.columns.size(); ++i) out << (i ? "\t" : "") << column_name(m.columns[i]);
  out << '\n';
  for (const auto& f : m.frames) {
    for (std::size_t i = 0; i < m.columns.size(); ++i) out << (i ? "\t" : "") << f.get(m.columns[i]);
    out << '\n';
  }
}

void write_bin(const FrameMatrix& m, std::ostream& out) {
  out.write(kFrameMagic.data(), static_cast<std::streamsize>(kFrameMagic.size()));
  put_u32(out, static_cast<std::uint32_t>(m.frames.size()));
  put_u32(out, static_cast<std::uint32_t>(m.columns.size()));
  for (const Column c : m.columns) put_string(out, column_name(c));
  put_string(out, m.config_name);
  put_string(out, m.text);
  for (const auto& f : m.frames) {
    for (const Column c : m.columns) put_u16(out, f.get(c));
  }
}

// --- readers ------------------------------------------------------------------

std::optional<FrameMatrix> read_jsonl(std::istream& in) {
  std::string line;
  if (!getline_nonempty(in, line)) return std::nullopt;
  FrameMatrix m;
  std::size_t n = 0;
  try {
    const auto header = nlohmann::json::parse(line);
    if (header.value("record", "") != "header") malformed("jsonl", "expected header record");
    m.config_name = header.at("config").get<std::string>();
    m.text = header.at("text").get<std::string>();
    for (const auto& c : header.at("columns")) m.columns.push_back(column_or_throw(c.get<std::string>(), "jsonl"));
    n = header.at("frames").get<std::size_t>();
    m.frames.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!getline_nonempty(in, line)) malformed("jsonl", "missing frame records");
      const auto row = nlohmann::json::parse(line);
      if (row.size() != m.columns.size()) malformed("jsonl", "frame has wrong field count");
      Frame f;
      for (const Column c : m.columns) f.set(c, row.at(std::string(column_name(c))).get<std::uint16_t>());
      m.frames.push_back(f);
    }
  } catch (const nlohmann::json::exception& e) {
    malformed("jsonl", e.what());
  }
  return m;
}

std::optional<FrameMatrix> read_tsv(std::istream& in) {
  std::string line;
  if (!getline_nonempty(in, line)) return std::nullopt;
  if (line.rfind("# ", 0) != 0) malformed("tsv", "expected '# config=' line");
  FrameMatrix m;
  std::optional<std::size_t> n;
  for (auto field : split_tabs(std::string_view(line).substr(2))) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) malformed("tsv", "bad metadata field");
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    if (key == "config") m.config_name = unescape(value);
    else if (key == "text") m.text = unescape(value);
    else if (key == "frames") n = std::stoul(std::string(value));
  }
  if (!n) malformed("tsv", "missing frame count");
  if (!std::getline(in, line)) malformed("tsv", "missing column header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  for (auto name : split_tabs(line)) m.columns.push_back(column_or_throw(name, "tsv"));
  m.frames.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) {
    if (!std::getline(in, line)) malformed("tsv", "missing frame rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto cells = split_tabs(line);
    if (cells.size() != m.columns.size()) malformed("tsv", "row has wrong cell count");
    Frame f;
    for (std::size_t k = 0; k < cells.size(); ++k) f.set(m.columns[k], parse_index(cells[k], "tsv"));
    m.frames.push_back(f);
  }
  return m;
}

std::optional<FrameMatrix> read_bin(std::istream& in) {
  std::array<char, 5> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() == 0) return std::nullopt;
  if (static_cast<std::size_t>(in.gcount()) != magic.size() ||
      std::string_view(magic.data(), magic.size()) != kFrameMagic) {
    malformed("bin", "bad magic");
  }
  FrameMatrix m;
  const auto n = get_u32(in);
  const auto cols = get_u32(in);
  if (cols > kColumnCount) malformed("bin", "too many columns");
  for (std::uint32_t i = 0; i < cols; ++i) m.columns.push_back(column_or_throw(get_string(in), "bin"));
  m.config_name = get_string(in);
  m.text = get_string(in);
  m.frames.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Frame f;
    for (const Column c : m.columns) f.set(c, get_u16(in));
    m.frames.push_back(f);
  }
  return m;
}

std::string format_float(float v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v));
  return buf;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "jsonl") return Format::Jsonl;
  if (name == "tsv") return Format::Tsv;
  if (name == "bin") return Format::Bin;
  return std::nullopt;
}

std::string_view format_name(Format f) noexcept {
  switch (f) {
    case Format::Jsonl: return "jsonl";
    case Format::Tsv: return "tsv";
    case Format::Bin: return "bin";
  }
  return "jsonl";
}

void serialize(const FrameMatrix& matrix, Format format, std::ostream& out) {
  switch (format) {
    case Format::Jsonl: write_jsonl(matrix, out); break;
    case Format::Tsv: write_tsv(matrix, out); break;
    case Format::Bin: write_bin(matrix, out); break;
  }
}

std::string serialize(const FrameMatrix& matrix, Format format) {
  std::ostringstream out;
  serialize(matrix, format, out);
  return std::move(out).str();
}

std::optional<FrameMatrix> deserialize(std::istream& in, Format format) {
  switch (format) {
    case Format::Jsonl: return read_jsonl(in);
    case Format::Tsv: return read_tsv(in);
    case Format::Bin: return read_bin(in);
  }
  return std::nullopt;
}

void serialize_embeddings(const EmbeddingMatrix& matrix, const FrameMatrix& source, Format format,
                          std::ostream& out) {
  switch (format) {
    case Format::Jsonl: {
      ordered_json header;
      header["record"] = "embeddings";
      header["config"] = source.config_name;
      header["text"] = source.text;
      header["rows"] = matrix.rows;
      header["cols"] = matrix.cols;
      out << header.dump() << '\n';
      for (std::size_t r = 0; r < matrix.rows; ++r) {
        out << '[';
        for (std::size_t c = 0; c < matrix.cols; ++c) out << (c ? "," : "") << format_float(matrix.at(r, c));
        out << "]\n";
      }
      break;
    }
    case Format::Tsv:
      out << "# config=" << escape(source.config_name) << "\trows=" << matrix.rows << "\tcols=" << matrix.cols
          << "\ttext=" << escape(source.text) << '\n';
      for (std::size_t r = 0; r < matrix.rows; ++r) {
        for (std::size_t c = 0; c < matrix.cols; ++c) out << (c ? "\t" : "") << format_float(matrix.at(r, c));
        out << '\n';
      }
      break;
    case Format::Bin:
      out.write(kEmbeddingMagic.data(), static_cast<std::streamsize>(kEmbeddingMagic.size()));
      put_u32(out, static_cast<std::uint32_t>(matrix.rows));
      put_u32(out, static_cast<std::uint32_t>(matrix.cols));
      for (float v : matrix.values) put_u32(out, std::bit_cast<std::uint32_t>(v));
      break;
  }
}

}  // namespace csfe
