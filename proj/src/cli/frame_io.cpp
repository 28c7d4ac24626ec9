#include <fstream>
#include <json.hpp>
#include <sstream>

#include "entif/errors.hpp"
#include "entif/frame_io.hpp"

namespace entif {

namespace {

using nlohmann::json;

mpz_class parse_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("empty integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("not a decimal integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_json(const FrameFile& file) {
  const FrameMatrix& a = file.matrix;
  json entries = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.count(); ++j) row.push_back(a(i, j).get_str());
    entries.push_back(std::move(row));
  }
  json doc = {{"format", kFrameFormat}, {"dim", a.dim()}, {"count", a.count()}, {"entries", std::move(entries)}};
  if (file.metadata) {
    doc["metadata"] = {{"recipe", file.metadata->recipe},
                       {"parameters", file.metadata->parameters},
                       {"scale", file.metadata->scale.get_str()}};
  }
  return doc.dump(2) + "\n";
}

FrameFile from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != kFrameFormat) {
      throw ParseError(std::string("missing or wrong format tag (expected ") + kFrameFormat + ")");
    }
    const auto dim = doc.at("dim").get<std::size_t>();
    const auto count = doc.at("count").get<std::size_t>();
    const json& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != dim) throw ParseError("entries do not have dim rows");
    FrameFile out;
    out.matrix = FrameMatrix(dim, count);
    for (std::size_t i = 0; i < dim; ++i) {
      const json& row = entries[i];
      if (!row.is_array() || row.size() != count) throw ParseError("row " + std::to_string(i) + " does not have count entries");
      for (std::size_t j = 0; j < count; ++j) {
        if (!row[j].is_string()) throw ParseError("entries must be decimal strings");
        out.matrix(i, j) = parse_integer(row[j].get<std::string>());
      }
    }
    if (doc.contains("metadata")) {
      const json& m = doc["metadata"];
      FrameMetadata meta;
      meta.recipe = m.value("recipe", "");
      if (m.contains("parameters")) meta.parameters = m["parameters"].get<std::map<std::string, std::string>>();
      if (m.contains("scale")) meta.scale = parse_integer(m["scale"].get<std::string>());
      out.metadata = std::move(meta);
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed frame file: ") + e.what());
  }
}

std::string to_csv(const FrameMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.count(); ++j) {
      if (j) out += ',';
      out += a(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

FrameMatrix from_csv(std::string_view text) {
  std::vector<std::vector<mpz_class>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<mpz_class> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_integer(trim(cell)));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("CSV rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV input is empty");
  FrameMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  return out;
}

FrameFile parse_frame(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return from_json(t);
  return FrameFile{from_csv(t), std::nullopt};
}

FrameFile read_frame_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_frame(buf.str());
}

void write_frame_file(const std::filesystem::path& path, const FrameFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << (path.extension() == ".csv" ? to_csv(file.matrix) : to_json(file));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace entif
