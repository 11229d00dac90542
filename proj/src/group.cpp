#include "bilax/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace bilax {

namespace {

using Table = std::vector<std::vector<int>>;

Table cyclic(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Multiplication table of a set of permutations closed under composition.
// (p * q)(x) = p(q(x)). Elements are sorted so the identity comes first.
Table permutation_table(std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  for (size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<int>(k);
  const size_t n = perms.size();
  Table t(n, std::vector<int>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<int> c(perms[a].size());
      for (size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return t;
}

std::vector<std::vector<int>> closure(const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(gens.front().size());
  for (size_t x = 0; x < id.size(); ++x) id[x] = static_cast<int>(x);
  std::vector<std::vector<int>> elems{id};
  for (size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      std::vector<int> c(id.size());
      for (size_t x = 0; x < c.size(); ++x) c[x] = g[elems[k][x]];
      if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
    }
  return elems;
}

// Quaternion units +-1, +-i, +-j, +-k encoded as (sign, unit) with unit in {1,i,j,k}.
Table quaternion_table() {
  // unit products: u*v = sign * w
  static const int prod_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto code = [](int sign, int unit) { return unit * 2 + (sign < 0 ? 1 : 0); };
  Table t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * prod_sign[ua][ub];
      t[a][b] = code(sign, prod_unit[ua][ub]);
    }
  return t;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, Table table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::InvalidTable, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidTable, "table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error(ErrorCode::InvalidTable, "entry out of range");
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.table_ = std::move(table);

  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.table_[a][x] == x && g.table_[x][a] == x;
    if (ok) e = a;
  }
  if (e < 0) throw Error(ErrorCode::InvalidTable, "no identity element");
  g.identity_ = e;

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == e && g.table_[b][a] == e) g.inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse_[a] < 0) throw Error(ErrorCode::InvalidTable, "element " + std::to_string(a) + " has no inverse");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          std::ostringstream os;
          os << "not associative at (" << a << "," << b << "," << c << ")";
          throw Error(ErrorCode::InvalidTable, os.str());
        }

  g.class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.class_of_[a] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) cls.push_back(g.table_[g.table_[h][a]][g.inverse_[h]]);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int x : cls) g.class_of_[x] = static_cast<int>(g.classes_.size());
    g.classes_.push_back(std::move(cls));
  }
  return g;
}

FiniteGroup FiniteGroup::from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidTable, std::string("group spec is not valid JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw Error(ErrorCode::InvalidTable, "group spec needs a \"table\" array");
  Table table;
  try {
    table = j["table"].get<Table>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::InvalidTable, "table must be an array of integer arrays");
  }
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(table.size()))
    throw Error(ErrorCode::InvalidTable, "order does not match table size");
  std::string name = j.value("name", std::string("custom"));
  return from_table(std::move(name), std::move(table));
}

FiniteGroup FiniteGroup::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open group spec " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<std::string> FiniteGroup::builtin_names() {
  return {"z2", "z3", "z4", "z2xz2", "s3", "d4", "q8"};
}

FiniteGroup FiniteGroup::builtin(std::string_view name) {
  if (name == "z2") return from_table("z2", cyclic(2));
  if (name == "z3") return from_table("z3", cyclic(3));
  if (name == "z4") return from_table("z4", cyclic(4));
  if (name == "z2xz2") {
    Table t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table("z2xz2", t);
  }
  if (name == "s3") return from_table("s3", permutation_table(closure({{1, 0, 2}, {1, 2, 0}})));
  if (name == "d4") return from_table("d4", permutation_table(closure({{1, 2, 3, 0}, {0, 3, 2, 1}})));
  if (name == "q8") return from_table("q8", quaternion_table());
  throw Error(ErrorCode::InvalidConfig, "unknown builtin group '" + std::string(name) + "'");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> out;
  for (int h = 0; h < order(); ++h)
    if (table_[g][h] == table_[h][g]) out.push_back(h);
  return out;
}

}  // namespace bilax
