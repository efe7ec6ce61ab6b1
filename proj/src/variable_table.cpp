#include "invop/variable_table.hpp"

#include <stdexcept>
#include <unordered_set>

namespace invop {

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("variable with empty name");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable name: " + v.name);
  }
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableTable::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
  return *i;
}

TablePtr VariableTable::extend(std::vector<Variable> extra) const {
  std::vector<Variable> all = vars_;
  all.insert(all.end(), extra.begin(), extra.end());
  return std::make_shared<const VariableTable>(std::move(all));
}

bool VariableTable::is_prefix_of(const VariableTable& other) const {
  if (vars_.size() > other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!(vars_[i] == other.vars_[i])) return false;
  return true;
}

TablePtr unify_tables(const TablePtr& a, const TablePtr& b) {
  if (a == b || !b) return a;
  if (!a) return b;
  if (a->size() >= b->size()) {
    if (b->is_prefix_of(*a)) return a;
  } else if (a->is_prefix_of(*b)) {
    return b;
  }
  throw std::invalid_argument("variable table mismatch");
}

std::string y_name(int i, int j) { return "y" + std::to_string(i) + std::to_string(j); }
std::string v_name(int k, int l) { return "v" + std::to_string(k) + std::to_string(l); }
std::string x_name(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }
std::string z_name(int k, int l) { return "z" + std::to_string(k) + std::to_string(l); }

TablePtr coordinate_table(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("coordinate_table: need n >= 1, m >= 0");
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) vars.push_back({y_name(i, j), VarRole::coordinate_y, i, j});
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) vars.push_back({v_name(k, l), VarRole::coordinate_v, k, l});
  for (const char* p : {"pi", "A", "B"}) vars.push_back({p, VarRole::formal_parameter, 0, 0});
  return std::make_shared<const VariableTable>(std::move(vars));
}

TablePtr algebra_table(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("algebra_table: need n >= 1, m >= 0");
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) vars.push_back({x_name(i, j), VarRole::algebra_x, i, j});
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) vars.push_back({z_name(k, l), VarRole::algebra_z, k, l});
  return std::make_shared<const VariableTable>(std::move(vars));
}

}  // namespace invop
