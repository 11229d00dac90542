#pragma once

#include <array>
#include <memory>
#include <vector>

#include "bilax/repcat.hpp"

namespace bilax {

// An object of the Drinfeld centre Z(Rep G): a representation V together with
// half-braidings beta_i: i (x) V -> V (x) i for every simple i. Flattening of
// beta_i: row index v' * d_i + a', column index a * dim V + v.
class CentreObject {
 public:
  CentreObject() = default;
  CentreObject(RepObject underlying, std::vector<Matrix> beta);

  const RepObject& underlying() const { return data_->underlying; }
  Index dim() const { return data_ ? data_->underlying.dim() : 0; }
  const Matrix& beta(int i) const { return data_->beta[i]; }
  const std::vector<Matrix>& betas() const { return data_->beta; }
  bool valid() const { return data_ != nullptr; }
  // Copies of one object share this key.
  const void* key() const { return data_.get(); }

 private:
  struct Data {
    RepObject underlying;
    std::vector<Matrix> beta;
  };
  std::shared_ptr<const Data> data_;
};

// Half-braiding of a centre object against an object of dimension k, viewed
// as a k x k grid of dim V x dim V blocks: beta(e_a (x) v) = sum_a' (B[a' * k + a] v) (x) e_a'.
using BraidBlocks = std::vector<Matrix>;

// x (x)_s y with its splitting: inclusion * projection is the idempotent on
// x (x) y, projection * inclusion = id.
struct SymProduct {
  CentreObject object;
  Matrix inclusion;
  Matrix projection;
};

struct CentreObjectReport {
  double equivariance = 0;      // beta_i commutes with the G-action
  double invertibility = 0;     // smallest singular value over all beta_i
  double unit_law = 0;          // beta_1 = id
  double multiplicativity = 0;  // beta_{i (x) j} = (beta_i (x) id)(id (x) beta_j)
  bool ok(const Tolerance& tol) const {
    return equivariance <= tol.equality && unit_law <= tol.equality && multiplicativity <= tol.equality &&
           invertibility > tol.rank;
  }
};

class Centre {
 public:
  explicit Centre(std::shared_ptr<const RepCategory> cat);

  const RepCategory& category() const { return *cat_; }
  std::shared_ptr<const RepCategory> category_ptr() const { return cat_; }
  const Tolerance& tolerance() const { return cat_->tolerance(); }

  // The embedding Rep G -> Z: half-braiding by the symmetry.
  CentreObject from_rep(const RepObject& x) const;
  CentreObject conv_unit() const { return conv_unit_; }
  // Unit of the symmetric product: the sum of i (x) i* over simples.
  CentreObject sym_unit() const { return sym_unit_; }
  // Offset of the i (x) i* summand inside sym_unit().
  Index sym_unit_offset(int i) const { return unit_offsets_[i]; }
  CentreObject zero() const;
  CentreObject direct_sum(const CentreObject& c, const CentreObject& d) const;

  BraidBlocks blocks(const CentreObject& c, int i) const;
  // Half-braiding against an arbitrary representation, through its decomposition.
  BraidBlocks blocks(const CentreObject& c, const RepObject& x) const;
  Matrix half_braiding(const CentreObject& c, const RepObject& x) const;
  // Inverse half-braiding  V (x) i -> i (x) V  in block form: beta^-1(v (x) e_a') = sum_a e_a (x) C[a * k + a'] v.
  BraidBlocks inverse_blocks(const CentreObject& c, int i) const;

  CentreObjectReport validate(const CentreObject& c) const;
  // Largest violation of equivariance or half-braiding compatibility for f: s -> t.
  double morphism_deviation(const CentreObject& s, const CentreObject& t, const Matrix& f) const;
  // Trace-orthonormal basis of Hom_Z(s, t).
  std::vector<Matrix> hom_basis(const CentreObject& s, const CentreObject& t) const;

  // Convolution (Drinfeld) product and braiding.
  CentreObject conv_tensor(const CentreObject& c, const CentreObject& d) const;
  Matrix conv_tensor_mor(const Matrix& f, const Matrix& g) const { return tensor(f, g); }
  // c (x)_c d -> d (x)_c c
  Matrix braiding(const CentreObject& c, const CentreObject& d) const;

  // Idempotent on c (x) d whose image is c (x)_s d.
  Matrix idempotent(const CentreObject& c, const CentreObject& d) const;
  SymProduct sym_tensor(const CentreObject& c, const CentreObject& d) const;
  Matrix sym_tensor_mor(const SymProduct& src, const SymProduct& tgt, const Matrix& f, const Matrix& g) const;
  // c (x)_s d -> d (x)_s c
  Matrix sym_symmetry(const CentreObject& c, const CentreObject& d, const SymProduct& cd,
                      const SymProduct& dc) const;
  // Unitors for (x)_s. `is_c` is sym_tensor(sym_unit(), c), `c_is` is sym_tensor(c, sym_unit()).
  Matrix left_unitor(const SymProduct& is_c, const CentreObject& c) const;
  Matrix left_unitor_inverse(const SymProduct& is_c, const CentreObject& c) const;
  Matrix right_unitor(const SymProduct& c_is, const CentreObject& c) const;
  Matrix right_unitor_inverse(const SymProduct& c_is, const CentreObject& c) const;
  // The unweighted loop I_s (x) c -> c and its weighted inverse on the full tensor product.
  Matrix unit_contraction_left(const CentreObject& c) const;
  Matrix unit_expansion_left(const CentreObject& c) const;
  Matrix unit_contraction_right(const CentreObject& c) const;
  Matrix unit_expansion_right(const CentreObject& c) const;

  // Half-braiding of c (x)_s d computed through d instead of c; compared
  // against the stored one this measures whether both routes agree.
  double half_braiding_route_defect(const SymProduct& cd, const CentreObject& c, const CentreObject& d) const;
  // X_c (id_a (x) Pi) = (Pi (x) id_a) X_d for a simple a.
  double cloaking_defect(const CentreObject& c, const CentreObject& d, int a) const;
  // The four ways of absorbing inclusion/projection into a crossing strand.
  std::array<double, 4> slicing_defects(const SymProduct& cd, const CentreObject& c, const CentreObject& d,
                                        int a) const;
  // Pi_{I_s, c} equals expansion after contraction.
  double snapping_defect(const CentreObject& c) const;
  // Double crossing of two Rep G objects is the identity.
  double transparency_defect(const RepObject& x, const RepObject& y) const;

  // For each group element g, the rank of the degree-g part of c read off its
  // half-braidings: tr sum_i d_i/|G| sum_{a,a'} rho_i(g)_{a a'} B_i[a'][a].
  std::vector<double> degree_dimensions(const CentreObject& c) const;

 private:
  CentreObject build_sym_unit();

  std::shared_ptr<const RepCategory> cat_;
  CentreObject conv_unit_;
  std::vector<Index> unit_offsets_;
  CentreObject sym_unit_;
};

}  // namespace bilax
