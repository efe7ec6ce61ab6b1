#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "invop/matrix.hpp"

namespace invop {

/// "Tag:key=value,key=value;S=[[1,0],[0,1]]" as used for operator and
/// polynomial specs on the command line.
struct SpecText {
  std::string tag;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  int integer(const std::string& key) const;
  std::optional<int> integer_or(const std::string& key) const;
  Rational rational(const std::string& key) const;
  QMatrix matrix(const std::string& key) const;
  std::string text() const;  // canonical form
};

SpecText parse_spec_text(std::string_view text);

/// JSON arrays of exact entries; entries may be integers or "p/q" strings.
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix parse_matrix(std::string_view text);

}  // namespace invop
