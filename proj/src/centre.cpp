#include "bilax/centre.hpp"

#include <algorithm>
#include <cmath>

namespace bilax {

namespace {

BraidBlocks split_blocks(const Matrix& beta, Index n, Index k) {
  BraidBlocks out(k * k, Matrix(n, n));
  for (Index a2 = 0; a2 < k; ++a2)
    for (Index a = 0; a < k; ++a) {
      Matrix& blk = out[a2 * k + a];
      for (Index v2 = 0; v2 < n; ++v2)
        for (Index v = 0; v < n; ++v) blk(v2, v) = beta(v2 * k + a2, a * n + v);
    }
  return out;
}

Matrix join_blocks(const BraidBlocks& blocks, Index n, Index k) {
  Matrix out(n * k, k * n);
  for (Index a2 = 0; a2 < k; ++a2)
    for (Index a = 0; a < k; ++a) {
      const Matrix& blk = blocks[a2 * k + a];
      for (Index v2 = 0; v2 < n; ++v2)
        for (Index v = 0; v < n; ++v) out(v2 * k + a2, a * n + v) = blk(v2, v);
    }
  return out;
}

// X_c: a (x) V (x) W -> V (x) W (x) a, crossing V by c's half-braiding and W by the symmetry.
Matrix crossing_through_left(const BraidBlocks& bc, Index k, Index m) {
  BraidBlocks out(k * k);
  for (size_t t = 0; t < bc.size(); ++t) out[t] = tensor(bc[t], identity(m));
  return join_blocks(out, bc.empty() ? 0 : bc.front().rows() * m, k);
}

// X_d: crossing V by the symmetry and W by d's half-braiding.
Matrix crossing_through_right(const BraidBlocks& bd, Index k, Index n) {
  BraidBlocks out(k * k);
  for (size_t t = 0; t < bd.size(); ++t) out[t] = tensor(identity(n), bd[t]);
  return join_blocks(out, bd.empty() ? 0 : n * bd.front().rows(), k);
}

}  // namespace

CentreObject::CentreObject(RepObject underlying, std::vector<Matrix> beta)
    : data_(std::make_shared<Data>(Data{std::move(underlying), std::move(beta)})) {}

Centre::Centre(std::shared_ptr<const RepCategory> cat) : cat_(std::move(cat)) {
  conv_unit_ = from_rep(cat_->unit());
  sym_unit_ = build_sym_unit();
}

CentreObject Centre::from_rep(const RepObject& x) const {
  std::vector<Matrix> beta;
  for (int i = 0; i < cat_->num_simples(); ++i) beta.push_back(flip(cat_->dim(i), x.dim()));
  return CentreObject(x, std::move(beta));
}

CentreObject Centre::zero() const { return from_rep(cat_->zero()); }

CentreObject Centre::direct_sum(const CentreObject& c, const CentreObject& d) const {
  std::vector<Matrix> beta;
  const Index n = c.dim() + d.dim();
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index k = cat_->dim(i);
    const auto bc = blocks(c, i), bd = blocks(d, i);
    BraidBlocks out(k * k);
    for (Index t = 0; t < k * k; ++t) out[t] = bilax::direct_sum(bc[t], bd[t]);
    beta.push_back(join_blocks(out, n, k));
  }
  return CentreObject(cat_->direct_sum(c.underlying(), d.underlying()), std::move(beta));
}

BraidBlocks Centre::blocks(const CentreObject& c, int i) const {
  return split_blocks(c.beta(i), c.dim(), cat_->dim(i));
}

BraidBlocks Centre::blocks(const CentreObject& c, const RepObject& x) const {
  const Index n = c.dim(), k = x.dim();
  BraidBlocks out(k * k, Matrix::Zero(n, n));
  // beta_X = sum over components (id_V (x) iota) beta_i (iota^dagger (x) id_V)
  for (const auto& comp : cat_->decompose(x)) {
    const Index d = cat_->dim(comp.irrep);
    const auto bi = blocks(c, comp.irrep);
    const Matrix& iota = comp.embedding;
    for (Index x2 = 0; x2 < k; ++x2)
      for (Index x1 = 0; x1 < k; ++x1) {
        Matrix& acc = out[x2 * k + x1];
        for (Index a2 = 0; a2 < d; ++a2) {
          if (iota(x2, a2) == 0.0) continue;
          for (Index a1 = 0; a1 < d; ++a1) {
            const Complex w = iota(x2, a2) * std::conj(iota(x1, a1));
            if (w != 0.0) acc += w * bi[a2 * d + a1];
          }
        }
      }
  }
  return out;
}

Matrix Centre::half_braiding(const CentreObject& c, const RepObject& x) const {
  return join_blocks(blocks(c, x), c.dim(), x.dim());
}

BraidBlocks Centre::inverse_blocks(const CentreObject& c, int i) const {
  const Index n = c.dim(), k = cat_->dim(i);
  const Matrix inv = c.beta(i).inverse();  // V (x) i -> i (x) V
  BraidBlocks out(k * k, Matrix(n, n));
  for (Index a = 0; a < k; ++a)
    for (Index a2 = 0; a2 < k; ++a2) {
      Matrix& blk = out[a * k + a2];
      for (Index v = 0; v < n; ++v)
        for (Index v2 = 0; v2 < n; ++v2) blk(v, v2) = inv(a * n + v, v2 * k + a2);
    }
  return out;
}

CentreObjectReport Centre::validate(const CentreObject& c) const {
  const auto& cat = *cat_;
  const Index n = c.dim();
  if (static_cast<int>(c.betas().size()) != cat.num_simples())
    throw Error(ErrorCode::DimensionMismatch, "one half-braiding per simple is required");
  CentreObjectReport r;
  r.invertibility = n == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  for (int i = 0; i < cat.num_simples(); ++i) {
    const Index d = cat.dim(i);
    const Matrix& b = c.beta(i);
    if (b.rows() != n * d || b.cols() != n * d) throw Error(ErrorCode::DimensionMismatch, "half-braiding shape");
    for (int g = 0; g < cat.group().order(); ++g) {
      const Matrix& rv = c.underlying().action(g);
      const Matrix& ri = cat.irreps()[i].matrices[g];
      r.equivariance = std::max(r.equivariance, max_abs(b * tensor(ri, rv) - tensor(rv, ri) * b));
    }
    if (n > 0) {
      Eigen::JacobiSVD<Matrix> svd(b);
      r.invertibility = std::min(r.invertibility, svd.singularValues()(n * d - 1));
    }
  }
  r.unit_law = max_abs(c.beta(0) - identity(n));

  for (int i = 0; i < cat.num_simples(); ++i)
    for (int j = 0; j < cat.num_simples(); ++j) {
      const Index di = cat.dim(i), dj = cat.dim(j), k = di * dj;
      const auto lhs = blocks(c, cat.tensor(cat.simple(i), cat.simple(j)));
      const auto bi = blocks(c, i), bj = blocks(c, j);
      for (Index a2 = 0; a2 < di; ++a2)
        for (Index b2 = 0; b2 < dj; ++b2)
          for (Index a = 0; a < di; ++a)
            for (Index b = 0; b < dj; ++b) {
              const Matrix rhs = bi[a2 * di + a] * bj[b2 * dj + b];
              const Matrix& l = lhs[(a2 * dj + b2) * k + (a * dj + b)];
              r.multiplicativity = std::max(r.multiplicativity, max_abs(l - rhs));
            }
    }
  return r;
}

double Centre::morphism_deviation(const CentreObject& s, const CentreObject& t, const Matrix& f) const {
  double dev = cat_->equivariance_deviation(s.underlying(), t.underlying(), f);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const auto bs = blocks(s, i), bt = blocks(t, i);
    for (size_t q = 0; q < bs.size(); ++q) dev = std::max(dev, max_abs(f * bs[q] - bt[q] * f));
  }
  return dev;
}

std::vector<Matrix> Centre::hom_basis(const CentreObject& s, const CentreObject& t) const {
  const auto rep_basis = cat_->hom_basis(s.underlying(), t.underlying());
  const Index h = static_cast<Index>(rep_basis.size());
  if (h == 0) return {};
  std::vector<BraidBlocks> bs, bt;
  Index rows = 0;
  for (int i = 0; i < cat_->num_simples(); ++i) {
    bs.push_back(blocks(s, i));
    bt.push_back(blocks(t, i));
    rows += static_cast<Index>(bs.back().size()) * t.dim() * s.dim();
  }
  Matrix system(rows, h);
  for (Index col = 0; col < h; ++col) {
    const Matrix& f = rep_basis[col];
    Index off = 0;
    for (size_t i = 0; i < bs.size(); ++i)
      for (size_t q = 0; q < bs[i].size(); ++q) {
        const Matrix diff = f * bs[i][q] - bt[i][q] * f;
        system.col(col).segment(off, diff.size()) = diff.reshaped();
        off += diff.size();
      }
  }
  const Matrix coeffs = kernel_basis(system, tolerance().rank);
  std::vector<Matrix> out;
  for (Index r = 0; r < coeffs.cols(); ++r) {
    Matrix f = Matrix::Zero(t.dim(), s.dim());
    for (Index col = 0; col < h; ++col) f += coeffs(col, r) * rep_basis[col];
    out.push_back(std::move(f));
  }
  return out;
}

CentreObject Centre::conv_tensor(const CentreObject& c, const CentreObject& d) const {
  std::vector<Matrix> beta;
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index k = cat_->dim(i);
    const auto bc = blocks(c, i), bd = blocks(d, i);
    BraidBlocks out(k * k);
    // Cross V first, then W: B[a'][a] = sum_b Bc[b][a] (x) Bd[a'][b].
    for (Index a2 = 0; a2 < k; ++a2)
      for (Index a = 0; a < k; ++a) {
        Matrix acc = Matrix::Zero(c.dim() * d.dim(), c.dim() * d.dim());
        for (Index b = 0; b < k; ++b) acc += tensor(bc[b * k + a], bd[a2 * k + b]);
        out[a2 * k + a] = std::move(acc);
      }
    beta.push_back(join_blocks(out, c.dim() * d.dim(), k));
  }
  return CentreObject(cat_->tensor(c.underlying(), d.underlying()), std::move(beta));
}

Matrix Centre::braiding(const CentreObject& c, const CentreObject& d) const {
  return half_braiding(d, c.underlying());
}

Matrix Centre::idempotent(const CentreObject& c, const CentreObject& d) const {
  const Index n = c.dim(), m = d.dim();
  Matrix pi = Matrix::Zero(n * m, n * m);
  const double big_d = cat_->global_dim();
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index k = cat_->dim(i);
    const auto bc = blocks(c, i);
    const auto bd = blocks(d, cat_->dual_object(i));
    // Loop of i around c (x) d: i crosses V by c's half-braiding, i* crosses W by d's.
    Matrix acc = Matrix::Zero(n * m, n * m);
    for (Index a = 0; a < k; ++a)
      for (Index q = 0; q < k; ++q) acc += tensor(bc[a * k + q], bd[a * k + q]);
    pi += (double(k) / big_d) * acc;
  }
  return pi;
}

SymProduct Centre::sym_tensor(const CentreObject& c, const CentreObject& d) const {
  const Index m = d.dim();
  const SplitPair split = split_idempotent(idempotent(c, d), tolerance());
  SymProduct out;
  out.inclusion = split.inclusion;
  out.projection = split.projection;
  std::vector<Matrix> action(cat_->group().order());
  for (size_t g = 0; g < action.size(); ++g)
    action[g] = split.projection * tensor(c.underlying().action(g), d.underlying().action(g)) * split.inclusion;
  std::vector<Matrix> beta;
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index k = cat_->dim(i);
    const auto bc = blocks(c, i);
    BraidBlocks out_blocks(k * k);
    for (Index t = 0; t < k * k; ++t)
      out_blocks[t] = split.projection * tensor(bc[t], identity(m)) * split.inclusion;
    beta.push_back(join_blocks(out_blocks, split.rank, k));
  }
  out.object = CentreObject(RepObject(std::move(action)), std::move(beta));
  return out;
}

Matrix Centre::sym_tensor_mor(const SymProduct& src, const SymProduct& tgt, const Matrix& f, const Matrix& g) const {
  return compose(tgt.projection, compose(tensor(f, g), src.inclusion));
}

Matrix Centre::sym_symmetry(const CentreObject& c, const CentreObject& d, const SymProduct& cd,
                            const SymProduct& dc) const {
  return compose(dc.projection, compose(flip(c.dim(), d.dim()), cd.inclusion));
}

Matrix Centre::unit_contraction_left(const CentreObject& c) const {
  const Index n = c.dim();
  const Index big_n = sym_unit_.dim();
  Matrix out = Matrix::Zero(n, big_n * n);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index d = cat_->dim(i);
    const auto b = blocks(c, i);
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q)
        out.middleCols((unit_offsets_[i] + p * d + q) * n, n) = b[q * d + p];
  }
  return out;
}

Matrix Centre::unit_expansion_left(const CentreObject& c) const {
  const Index n = c.dim();
  const Index big_n = sym_unit_.dim();
  const double big_d = cat_->global_dim();
  Matrix out = Matrix::Zero(big_n * n, n);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index d = cat_->dim(i);
    const auto inv = inverse_blocks(c, i);
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q)
        out.middleRows((unit_offsets_[i] + p * d + q) * n, n) = (double(d) / big_d) * inv[p * d + q];
  }
  return out;
}

Matrix Centre::unit_contraction_right(const CentreObject& c) const {
  const Index n = c.dim();
  const Index big_n = sym_unit_.dim();
  Matrix out = Matrix::Zero(n, n * big_n);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index d = cat_->dim(i);
    const auto b = blocks(c, i);
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q) {
        const Index s = unit_offsets_[i] + p * d + q;
        for (Index v = 0; v < n; ++v) out.col(v * big_n + s) = b[q * d + p].col(v);
      }
  }
  return out;
}

Matrix Centre::unit_expansion_right(const CentreObject& c) const {
  const Index n = c.dim();
  const Index big_n = sym_unit_.dim();
  const double big_d = cat_->global_dim();
  Matrix out = Matrix::Zero(n * big_n, n);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index d = cat_->dim(i);
    const auto inv = inverse_blocks(c, i);
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q) {
        const Index s = unit_offsets_[i] + p * d + q;
        for (Index v = 0; v < n; ++v) out.row(v * big_n + s) = (double(d) / big_d) * inv[p * d + q].row(v);
      }
  }
  return out;
}

Matrix Centre::left_unitor(const SymProduct& is_c, const CentreObject& c) const {
  return compose(unit_contraction_left(c), is_c.inclusion);
}

Matrix Centre::left_unitor_inverse(const SymProduct& is_c, const CentreObject& c) const {
  return compose(is_c.projection, unit_expansion_left(c));
}

Matrix Centre::right_unitor(const SymProduct& c_is, const CentreObject& c) const {
  return compose(unit_contraction_right(c), c_is.inclusion);
}

Matrix Centre::right_unitor_inverse(const SymProduct& c_is, const CentreObject& c) const {
  return compose(c_is.projection, unit_expansion_right(c));
}

CentreObject Centre::build_sym_unit() {
  const auto& cat = *cat_;
  const int r = cat.num_simples();
  RepObject under = cat.tensor(cat.simple(0), cat.dual_object(0));
  unit_offsets_.assign(r, 0);
  Index total = 1;
  for (int i = 1; i < r; ++i) {
    unit_offsets_[i] = total;
    under = cat.direct_sum(under, cat.tensor(cat.simple(i), cat.dual_object(i)));
    total += cat.dim(i) * cat.dim(i);
  }

  std::vector<Matrix> beta;
  for (int a = 0; a < r; ++a) {
    const Index da = cat.dim(a);
    Matrix b = Matrix::Zero(total * da, da * total);
    for (int i = 0; i < r; ++i) {
      const Index di = cat.dim(i);
      for (const auto& v : cat.vertices(cat.tensor(cat.simple(a), cat.simple(i)))) {
        const int j = v.k;
        const Index dj = cat.dim(j);
        const Matrix star = RepCategory::phi_star(v, da, di);
        // a (x) i (x) i*  --phi (x) id-->  j (x) i*  --id (x) K-->  j (x) j* (x) a
        Matrix kmap(dj * da, di);
        for (Index rr = 0; rr < dj; ++rr)
          for (Index q = 0; q < da; ++q)
            for (Index p = 0; p < di; ++p) kmap(rr * da + q, p) = star(rr, p * da + q);
        const Matrix t = tensor(identity(dj), kmap) * tensor(v.phi, identity(di));
        for (Index row = 0; row < t.rows(); ++row) {
          // row = (y * dj + rr) * da + q  lands in  I_s (x) a
          const Index yr = row / da, q = row % da;
          const Index out_row = (unit_offsets_[j] + yr) * da + q;
          for (Index col = 0; col < t.cols(); ++col) {
            // col = (alpha * di + x) * di + p  comes from  a (x) I_s
            const Index alpha = col / (di * di), xp = col % (di * di);
            const Index in_col = alpha * total + unit_offsets_[i] + xp;
            b(out_row, in_col) += t(row, col);
          }
        }
      }
    }
    beta.push_back(std::move(b));
  }
  return CentreObject(under, std::move(beta));
}

double Centre::half_braiding_route_defect(const SymProduct& cd, const CentreObject& c,
                                          const CentreObject& d) const {
  double dev = 0;
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const auto stored = blocks(cd.object, i);
    const auto bd = blocks(d, i);
    for (size_t t = 0; t < bd.size(); ++t) {
      const Matrix other = cd.projection * tensor(identity(c.dim()), bd[t]) * cd.inclusion;
      dev = std::max(dev, max_abs(stored[t] - other));
    }
  }
  return dev;
}

double Centre::cloaking_defect(const CentreObject& c, const CentreObject& d, int a) const {
  const Index k = cat_->dim(a);
  const Matrix pi = idempotent(c, d);
  const Matrix xc = crossing_through_left(blocks(c, a), k, d.dim());
  const Matrix xd = crossing_through_right(blocks(d, a), k, c.dim());
  return relative_deviation(xc * tensor(identity(k), pi), tensor(pi, identity(k)) * xd);
}

std::array<double, 4> Centre::slicing_defects(const SymProduct& cd, const CentreObject& c, const CentreObject& d,
                                              int a) const {
  const Index k = cat_->dim(a);
  const Matrix xc = crossing_through_left(blocks(c, a), k, d.dim());
  const Matrix xd = crossing_through_right(blocks(d, a), k, c.dim());
  const Matrix& bs = cd.object.beta(a);
  const Matrix id_k = identity(k);
  const Matrix top = bs * tensor(id_k, cd.projection);
  const Matrix bottom = tensor(cd.inclusion, id_k) * bs;
  return {relative_deviation(top, tensor(cd.projection, id_k) * xc),
          relative_deviation(top, tensor(cd.projection, id_k) * xd),
          relative_deviation(bottom, xc * tensor(id_k, cd.inclusion)),
          relative_deviation(bottom, xd * tensor(id_k, cd.inclusion))};
}

double Centre::snapping_defect(const CentreObject& c) const {
  const Matrix pi = idempotent(sym_unit_, c);
  return relative_deviation(pi, unit_expansion_left(c) * unit_contraction_left(c));
}

double Centre::transparency_defect(const RepObject& x, const RepObject& y) const {
  const CentreObject cx = from_rep(x), cy = from_rep(y);
  const Matrix twice = braiding(cy, cx) * braiding(cx, cy);
  return relative_deviation(twice, identity(x.dim() * y.dim()));
}

std::vector<double> Centre::degree_dimensions(const CentreObject& c) const {
  const FiniteGroup& g = cat_->group();
  std::vector<double> out(g.order(), 0.0);
  for (int i = 0; i < cat_->num_simples(); ++i) {
    const Index k = cat_->dim(i);
    const auto b = blocks(c, i);
    std::vector<Complex> traces(k * k);
    for (Index t = 0; t < k * k; ++t) traces[t] = b[t].trace();
    for (int h = 0; h < g.order(); ++h) {
      const Matrix& rho = cat_->irreps()[i].matrices[h];
      Complex acc = 0;
      for (Index a = 0; a < k; ++a)
        for (Index a2 = 0; a2 < k; ++a2) acc += rho(a, a2) * traces[a2 * k + a];
      out[h] += double(k) / g.order() * acc.real();
    }
  }
  return out;
}

}  // namespace bilax
