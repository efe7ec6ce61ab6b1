#include "invop/spec_text.hpp"

#include <regex>
#include <stdexcept>

namespace invop {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

SpecText parse_spec_text(std::string_view text) {
  SpecText spec;
  auto colon = text.find(':');
  spec.tag = trim(text.substr(0, colon));
  if (spec.tag.empty()) throw std::invalid_argument("spec without a family tag: '" + std::string(text) + "'");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string item = trim(rest.substr(start, end - start));
    start = end + 1;
    if (item.empty()) return;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("spec parameter without '=': '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (!spec.params.emplace(key, trim(item.substr(eq + 1))).second)
      throw std::invalid_argument("repeated spec parameter: " + key);
  };
  for (std::size_t i = 0; i < rest.size(); ++i) {
    char c = rest[i];
    if (c == '[') ++depth;
    else if (c == ']') --depth;
    else if ((c == ',' || c == ';') && depth == 0) flush(i);
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in spec");
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in spec");
  flush(rest.size());
  return spec;
}

int SpecText::integer(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument(tag + ": missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(tag + ": parameter '" + key + "' is not an integer");
  }
}

std::optional<int> SpecText::integer_or(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return integer(key);
}

Rational SpecText::rational(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument(tag + ": missing parameter '" + key + "'");
  return parse_rational(it->second);
}

QMatrix SpecText::matrix(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument(tag + ": missing parameter '" + key + "'");
  return parse_matrix(it->second);
}

std::string SpecText::text() const {
  std::string out = tag;
  std::string scalars, matrices;
  for (const auto& [k, v] : params) {
    std::string& dst = v.starts_with("[") ? matrices : scalars;
    dst += (dst.empty() ? "" : ",") + k + "=" + v;
  }
  if (!scalars.empty() || !matrices.empty()) out += ":";
  out += scalars;
  if (!matrices.empty()) out += (scalars.empty() ? "" : ";") + matrices;
  return out;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  if (j.empty()) return QMatrix();
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& e = j[i][k];
      if (e.is_string()) m(i, k) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(i, k) = Rational(e.get<long>());
      else throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix parse_matrix(std::string_view text) {
  // Bare fractions such as [[1/2]] are accepted and quoted before JSON parsing.
  static const std::regex fraction(R"((-?\d+/\d+))");
  std::string quoted(text);
  if (quoted.find('"') == std::string::npos) quoted = std::regex_replace(quoted, fraction, "\"$1\"");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(quoted);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed matrix '" + std::string(text) + "': " + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace invop
