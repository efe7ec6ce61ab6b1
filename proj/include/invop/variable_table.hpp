#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invop {

enum class VarRole {
  coordinate_y,
  coordinate_v,
  algebra_x,
  algebra_z,
  exp_parameter,
  formal_parameter,
  jet_symbol,
};

struct Variable {
  std::string name;
  VarRole role;
  // Matrix position for coordinate and algebra variables (1-based), 0 otherwise.
  int row = 0;
  int col = 0;

  bool operator==(const Variable&) const = default;
};

class VariableTable;
using TablePtr = std::shared_ptr<const VariableTable>;

/// Ordered, immutable list of named variables. The order is the monomial
/// order's variable order: index 0 is the most significant variable.
class VariableTable {
 public:
  explicit VariableTable(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws on unknown name

  /// New table with `extra` appended; this table is a prefix of the result.
  TablePtr extend(std::vector<Variable> extra) const;

  bool is_prefix_of(const VariableTable& other) const;

 private:
  std::vector<Variable> vars_;
};

/// Picks the table an operation between values over `a` and `b` should use.
/// nullptr means "constants only" and is compatible with everything. Throws
/// std::invalid_argument when neither table is a prefix of the other.
TablePtr unify_tables(const TablePtr& a, const TablePtr& b);

/// Coordinates of P_{n,m}: y_ij (i <= j, row-major), v_kl, then the formal
/// parameters pi, A, B.
TablePtr coordinate_table(int n, int m);

/// Coordinates (x_ij, z_kl) on the algebra p*.
TablePtr algebra_table(int n, int m);

std::string y_name(int i, int j);
std::string v_name(int k, int l);
std::string x_name(int i, int j);
std::string z_name(int k, int l);

/// Number of coordinates n(n+1)/2 + mn.
inline int coordinate_count(int n, int m) { return n * (n + 1) / 2 + m * n; }

}  // namespace invop
