#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "bilax/group.hpp"

namespace bilax {

// An isometric equivariant embedding of a simple object into a representation.
struct Component {
  int irrep = 0;
  Matrix embedding;  // dim(X) x d_irrep
};

// A finite-dimensional unitary representation. Copies share the action
// matrices and the lazily computed decomposition into simples.
class RepObject {
 public:
  RepObject() = default;
  explicit RepObject(std::vector<Matrix> action);

  Index dim() const { return data_ ? data_->dim : 0; }
  int group_order() const { return data_ ? static_cast<int>(data_->action.size()) : 0; }
  const Matrix& action(int g) const { return data_->action[g]; }
  const std::vector<Matrix>& actions() const { return data_->action; }
  bool valid() const { return data_ != nullptr; }

 private:
  friend class RepCategory;
  struct Data {
    std::vector<Matrix> action;
    Index dim = 0;
    std::once_flag once;
    std::vector<Component> components;
  };
  std::shared_ptr<Data> data_;
};

// phi: X -> k together with its transpose phi_t: k -> X, normalised so that
// phi_a * phi_t_b = delta_ab id_k within a basis.
struct FusionVertex {
  int k = 0;
  Matrix phi;
  Matrix phi_t;
};

// Rep(G) as a symmetric ribbon fusion category: simples, duality, symmetry,
// hom spaces and the trivalent vertex bases used to build the centre.
class RepCategory {
 public:
  RepCategory(FiniteGroup group, std::uint64_t seed, Tolerance tol = {});

  const FiniteGroup& group() const { return group_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Tolerance& tolerance() const { return tol_; }
  int num_simples() const { return static_cast<int>(irreps_.size()); }
  int dim(int i) const { return irreps_[i].dim; }
  int twist(int i) const { return irreps_[i].twist; }
  int dual(int i) const { return irreps_[i].dual; }
  // D = sum_i d_i^2
  double global_dim() const { return static_cast<double>(global_dimension(irreps_)); }

  const RepObject& simple(int i) const { return simples_[i]; }
  // The conjugate realisation of i*, with the same basis as i.
  const RepObject& dual_object(int i) const { return duals_[i]; }
  // Unitary U: i* -> dual(i) with U conj(rho_i(g)) = rho_dual(i)(g) U.
  const Matrix& dual_intertwiner(int i) const { return dual_maps_[i]; }

  RepObject unit() const;
  RepObject zero() const;
  RepObject regular() const;
  RepObject tensor(const RepObject& x, const RepObject& y) const;
  RepObject direct_sum(const RepObject& x, const RepObject& y) const;
  RepObject conjugate(const RepObject& x) const;

  // Isotypic decomposition. Embeddings are isometric with orthogonal images
  // that span X. Computed once per object and shared between copies.
  const std::vector<Component>& decompose(const RepObject& x) const;

  // Trace-orthonormal basis of Hom_G(x, y).
  std::vector<Matrix> hom_basis(const RepObject& x, const RepObject& y) const;
  // max_g ||rho_y(g) f - f rho_x(g)||
  double equivariance_deviation(const RepObject& x, const RepObject& y, const Matrix& f) const;

  // ev_i: i* (x) i -> 1 and coev_i: 1 -> i (x) i*. The right-handed versions
  // have the same matrices since the pivotal structure is trivial.
  Matrix ev(int i) const { return pairing(dim(i)); }
  Matrix coev(int i) const { return copairing(dim(i)); }
  Matrix ev_right(int i) const { return pairing(dim(i)); }
  Matrix coev_right(int i) const { return copairing(dim(i)); }
  Matrix symmetry(const RepObject& x, const RepObject& y) const { return flip(x.dim(), y.dim()); }

  // Basis of Hom(x, k) with transposes. Throws SingularPairing.
  std::vector<FusionVertex> vertices(const RepObject& x, int k) const;
  // All vertices x -> k over every simple k.
  std::vector<FusionVertex> vertices(const RepObject& x) const;

  // For phi: a (x) i -> j, the dual vertex phi*: i* (x) a* -> j*.
  static Matrix phi_star(const FusionVertex& v, Index dim_a, Index dim_i);

  // || sum_k sum_phi phi_t phi - id ||  on  i (x) j.
  double resolution_defect(int i, int j) const;
  // The identity on k* (x) i resolved through the duals j* of all i (x) j -> k vertices.
  double other_direct_sum_defect(int i, int k) const;
  // Twists act by scalars compatible with every vertex i (x) j -> k.
  double twist_defect(int i, int j, int k) const;

 private:
  FiniteGroup group_;
  std::vector<Irrep> irreps_;
  Tolerance tol_;
  std::vector<RepObject> simples_;
  std::vector<RepObject> duals_;
  std::vector<Matrix> dual_maps_;
};

}  // namespace bilax
