#include "bilax/repcat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bilax {

RepObject::RepObject(std::vector<Matrix> action) : data_(std::make_shared<Data>()) {
  if (action.empty()) throw Error(ErrorCode::DimensionMismatch, "representation needs one matrix per group element");
  data_->dim = action.front().rows();
  for (const auto& m : action)
    if (m.rows() != data_->dim || m.cols() != data_->dim)
      throw Error(ErrorCode::DimensionMismatch, "action matrices must be square and of equal size");
  data_->action = std::move(action);
}

RepCategory::RepCategory(FiniteGroup group, std::uint64_t seed, Tolerance tol)
    : group_(std::move(group)), irreps_(compute_irreps(group_, seed)), tol_(tol) {
  for (int i = 0; i < num_simples(); ++i) {
    RepObject s(irreps_[i].matrices);
    // A simple object decomposes as itself with the identity embedding.
    std::call_once(s.data_->once, [&] { s.data_->components = {Component{i, identity(dim(i))}}; });
    simples_.push_back(s);
    duals_.push_back(conjugate(s));
  }
  for (int i = 0; i < num_simples(); ++i) {
    const auto& comps = decompose(duals_[i]);
    if (comps.size() != 1 || comps.front().irrep != dual(i))
      throw Error(ErrorCode::ConvergenceFailure, "conjugate of a simple is not simple");
    dual_maps_.push_back(comps.front().embedding.adjoint());
  }
}

RepObject RepCategory::unit() const { return simples_.front(); }

RepObject RepCategory::zero() const { return RepObject(std::vector<Matrix>(group_.order(), Matrix(0, 0))); }

RepObject RepCategory::regular() const {
  const int n = group_.order();
  std::vector<Matrix> action(n, Matrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) action[a](group_.multiply(a, h), h) = 1.0;
  return RepObject(std::move(action));
}

RepObject RepCategory::tensor(const RepObject& x, const RepObject& y) const {
  std::vector<Matrix> action(group_.order());
  for (int g = 0; g < group_.order(); ++g) action[g] = bilax::tensor(x.action(g), y.action(g));
  return RepObject(std::move(action));
}

RepObject RepCategory::direct_sum(const RepObject& x, const RepObject& y) const {
  std::vector<Matrix> action(group_.order());
  for (int g = 0; g < group_.order(); ++g) action[g] = bilax::direct_sum(x.action(g), y.action(g));
  return RepObject(std::move(action));
}

RepObject RepCategory::conjugate(const RepObject& x) const {
  std::vector<Matrix> action(group_.order());
  for (int g = 0; g < group_.order(); ++g) action[g] = x.action(g).conjugate();
  return RepObject(std::move(action));
}

const std::vector<Component>& RepCategory::decompose(const RepObject& x) const {
  if (!x.valid()) throw Error(ErrorCode::DimensionMismatch, "decompose of an empty handle");
  std::call_once(x.data_->once, [&] {
    const int n = group_.order();
    const double scale = 1.0 / n;
    std::vector<Component> comps;
    Index covered = 0;
    for (int i = 0; i < num_simples(); ++i) {
      const auto& rho = irreps_[i].matrices;
      const int d = dim(i);
      // E_ab = d/|G| sum_g conj(rho_i(g)_ab) rho_x(g); E_a0 maps the top of each copy to its a-th basis vector.
      std::vector<Matrix> e_a0(d, Matrix::Zero(x.dim(), x.dim()));
      for (int g = 0; g < n; ++g)
        for (int a = 0; a < d; ++a) e_a0[a] += std::conj(rho[g](a, 0)) * x.action(g);
      for (auto& m : e_a0) m *= d * scale;
      const Matrix tops = range_basis(e_a0[0], tol_.rank);
      for (Index w = 0; w < tops.cols(); ++w) {
        Matrix emb(x.dim(), d);
        for (int a = 0; a < d; ++a) emb.col(a) = e_a0[a] * tops.col(w);
        comps.push_back(Component{i, emb});
        covered += d;
      }
    }
    if (covered != x.dim()) {
      std::ostringstream os;
      os << "isotypic pieces cover " << covered << " of " << x.dim() << " dimensions";
      throw Error(ErrorCode::RankUnstable, os.str());
    }
    x.data_->components = std::move(comps);
  });
  return x.data_->components;
}

std::vector<Matrix> RepCategory::hom_basis(const RepObject& x, const RepObject& y) const {
  const auto& cx = decompose(x);
  const auto& cy = decompose(y);
  std::vector<Matrix> out;
  for (const auto& a : cx)
    for (const auto& b : cy)
      if (a.irrep == b.irrep) out.push_back(b.embedding * a.embedding.adjoint() / std::sqrt(double(dim(a.irrep))));
  return out;
}

double RepCategory::equivariance_deviation(const RepObject& x, const RepObject& y, const Matrix& f) const {
  if (f.rows() != y.dim() || f.cols() != x.dim())
    throw Error(ErrorCode::DimensionMismatch, "morphism shape does not match its objects");
  double dev = 0;
  for (int g = 0; g < group_.order(); ++g) dev = std::max(dev, max_abs(y.action(g) * f - f * x.action(g)));
  return dev;
}

std::vector<FusionVertex> RepCategory::vertices(const RepObject& x, int k) const {
  const auto basis = hom_basis(x, simple(k));
  const Index m = static_cast<Index>(basis.size());
  std::vector<FusionVertex> out;
  if (m == 0) return out;
  // phi_a phi_b^dagger = G_ab id_k by Schur's lemma.
  Matrix gram(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) gram(a, b) = (basis[a] * basis[b].adjoint()).trace() / double(dim(k));
  Eigen::JacobiSVD<Matrix> svd(gram);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < tol_.rank * std::max(1.0, sv(0)))
    throw Error(ErrorCode::SingularPairing, "vertex pairing matrix is singular");
  const Matrix inv = gram.inverse();
  for (Index b = 0; b < m; ++b) {
    FusionVertex v;
    v.k = k;
    v.phi = basis[b];
    v.phi_t = Matrix::Zero(x.dim(), dim(k));
    for (Index c = 0; c < m; ++c) v.phi_t += basis[c].adjoint() * inv(c, b);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FusionVertex> RepCategory::vertices(const RepObject& x) const {
  std::vector<FusionVertex> out;
  for (int k = 0; k < num_simples(); ++k) {
    auto vs = vertices(x, k);
    out.insert(out.end(), vs.begin(), vs.end());
  }
  return out;
}

Matrix RepCategory::phi_star(const FusionVertex& v, Index dim_a, Index dim_i) {
  const Index dj = v.phi.rows();
  if (v.phi.cols() != dim_a * dim_i) throw Error(ErrorCode::DimensionMismatch, "vertex source is not a (x) i");
  Matrix out(dj, dim_i * dim_a);
  for (Index r = 0; r < dj; ++r)
    for (Index p = 0; p < dim_i; ++p)
      for (Index q = 0; q < dim_a; ++q) out(r, p * dim_a + q) = v.phi_t(q * dim_i + p, r);
  return out;
}

double RepCategory::resolution_defect(int i, int j) const {
  const RepObject ij = tensor(simple(i), simple(j));
  Matrix sum = Matrix::Zero(ij.dim(), ij.dim());
  for (const auto& v : vertices(ij)) sum += v.phi_t * v.phi;
  return max_abs(sum - identity(ij.dim()));
}

double RepCategory::other_direct_sum_defect(int i, int k) const {
  const Index di = dim(i), dk = dim(k);
  Matrix sum = Matrix::Zero(dk * di, dk * di);
  for (int j = 0; j < num_simples(); ++j) {
    const Index dj = dim(j);
    for (const auto& v : vertices(tensor(simple(i), simple(j)), k)) {
      Matrix a(dj, dk * di), b(dk * di, dj);
      for (Index kap = 0; kap < dk; ++kap)
        for (Index x = 0; x < di; ++x)
          for (Index y = 0; y < dj; ++y) {
            a(y, kap * di + x) = v.phi(kap, x * dj + y);
            b(kap * di + x, y) = v.phi_t(x * dj + y, kap);
          }
      sum += (double(dj) / double(dk)) * (b * a);
    }
  }
  return max_abs(sum - identity(dk * di));
}

double RepCategory::twist_defect(int i, int j, int k) const {
  const Index di = dim(i), dj = dim(j);
  const Matrix double_braid = flip(dj, di) * flip(di, dj);
  double dev = 0;
  for (const auto& v : vertices(tensor(simple(i), simple(j)), k)) {
    const Matrix lhs = double(twist(k)) * v.phi;
    const Matrix rhs = double(twist(i) * twist(j)) * (v.phi * double_braid);
    dev = std::max(dev, max_abs(lhs - rhs));
  }
  return dev;
}

}  // namespace bilax
