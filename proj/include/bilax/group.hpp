#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bilax/linalg.hpp"

namespace bilax {

// A finite group given by its multiplication table: table[a][b] = a * b.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity; throws InvalidTable.
  static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table);
  // Accepts the JSON text {"name": ..., "order": n, "table": [[...], ...]}.
  static FiniteGroup from_json(std::string_view json_text);
  static FiniteGroup from_json_file(const std::string& path);
  // One of builtin_names().
  static FiniteGroup builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

  // Classes are ordered by their smallest element; each class lists its elements ascending.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  std::vector<int> centralizer(int g) const;

 private:
  FiniteGroup() = default;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  int identity_ = 0;
};

struct Irrep {
  int dim = 0;
  std::vector<Matrix> matrices;      // unitary, indexed by group element
  std::vector<Complex> character;    // indexed by conjugacy class
  int twist = 1;                     // ribbon twist; +1 throughout Rep(G)
  int dual = -1;                     // index of the irrep with conjugate character
};

// All irreducible unitary representations, up to isomorphism. The trivial
// irrep comes first, the rest are sorted by dimension and then by character,
// so the order does not depend on the seed (the matrix realisations do).
// Throws ConvergenceFailure if the random commutant search does not settle.
std::vector<Irrep> compute_irreps(const FiniteGroup& g, std::uint64_t seed);

// Character realisation of the dual: complex-conjugate matrices and character.
Irrep dual_irrep(const Irrep& i);

// Multiplicity of k in i (x) j from characters. Throws NonIntegral.
int fusion_mult(const FiniteGroup& g, const Irrep& i, const Irrep& j, const Irrep& k);

// sum_i d_i^2
int global_dimension(const std::vector<Irrep>& irreps);

// <chi, chi> for a character given per group element.
double character_norm(const FiniteGroup& g, const std::vector<Complex>& chi_by_element);

}  // namespace bilax
