#include "tannaka.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>

namespace bilax::oracle {

namespace {

Matrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix out(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) out(r, c) = Complex(gauss(rng), gauss(rng));
  return out;
}

Matrix random_unitary(Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(n, n, rng));
  return qr.householderQ();
}

}  // namespace

double yd_defect(const FiniteGroup& g, const YDModule& m) {
  const Index n = m.dim();
  const int order = g.order();
  if (static_cast<int>(m.action.size()) != order || static_cast<int>(m.grading.size()) != order) return 1.0;
  double dev = 0;
  Matrix sum = Matrix::Zero(n, n);
  for (int a = 0; a < order; ++a) {
    sum += m.grading[a];
    for (int b = 0; b < order; ++b) {
      const Matrix expect = a == b ? m.grading[a] : Matrix::Zero(n, n);
      dev = std::max(dev, max_abs(m.grading[a] * m.grading[b] - expect));
      dev = std::max(dev, max_abs(m.action[a] * m.action[b] - m.action[g.multiply(a, b)]));
    }
  }
  dev = std::max(dev, max_abs(sum - identity(n)));
  for (int h = 0; h < order; ++h)
    for (int x = 0; x < order; ++x) {
      const int conj = g.multiply(g.multiply(h, x), g.inverse(h));
      dev = std::max(dev, max_abs(m.action[h] * m.grading[x] * m.action[g.inverse(h)] - m.grading[conj]));
    }
  return dev;
}

std::vector<Index> fibre_dims(const YDModule& m) {
  std::vector<Index> out;
  for (const auto& p : m.grading) out.push_back(static_cast<Index>(std::lround(p.trace().real())));
  return out;
}

YDModule to_yd(const Centre& z, const CentreObject& c) {
  const RepCategory& cat = z.category();
  const FiniteGroup& g = cat.group();
  const Index k = g.order();
  const auto blocks = z.blocks(c, cat.regular());
  YDModule m;
  m.action = c.underlying().actions();
  for (int x = 0; x < g.order(); ++x) m.grading.push_back(blocks[g.inverse(x) * k + g.identity()]);
  const double dev = yd_defect(g, m);
  if (dev > 1e-8)
    throw Error(ErrorCode::ConversionFailure, "extracted grading violates the YD axioms by " + std::to_string(dev));
  return m;
}

CentreObject from_yd(const Centre& z, const YDModule& m) {
  const RepCategory& cat = z.category();
  const FiniteGroup& g = cat.group();
  const Index n = m.dim();
  std::vector<Matrix> beta;
  for (int i = 0; i < cat.num_simples(); ++i) {
    const Index d = cat.dim(i);
    Matrix b = Matrix::Zero(n * d, n * d);
    for (int x = 0; x < g.order(); ++x) b += tensor(m.grading[x], cat.irreps()[i].matrices[g.inverse(x)]);
    beta.push_back(b * flip(d, n));
  }
  return CentreObject(RepObject(m.action), std::move(beta));
}

Embedded fibrewise(const FiniteGroup& g, const YDModule& m, const YDModule& n) {
  const Index dim = m.dim() * n.dim();
  Matrix e = Matrix::Zero(dim, dim);
  for (int x = 0; x < g.order(); ++x) e += tensor(m.grading[x], n.grading[x]);
  Embedded out;
  out.inclusion = range_basis(e, 1e-7);
  out.projection = out.inclusion.adjoint() * e;
  for (int x = 0; x < g.order(); ++x) {
    out.module.action.push_back(out.projection * tensor(m.action[x], n.action[x]) * out.inclusion);
    out.module.grading.push_back(out.projection * tensor(m.grading[x], n.grading[x]) * out.inclusion);
  }
  return out;
}

YDModule convolution(const FiniteGroup& g, const YDModule& m, const YDModule& n) {
  YDModule out;
  const Index dim = m.dim() * n.dim();
  for (int x = 0; x < g.order(); ++x) {
    out.action.push_back(tensor(m.action[x], n.action[x]));
    out.grading.push_back(Matrix::Zero(dim, dim));
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) out.grading[g.multiply(a, b)] += tensor(m.grading[a], n.grading[b]);
  return out;
}

Index fibrewise_dimension(const YDModule& m, const YDModule& n) {
  const auto dm = fibre_dims(m), dn = fibre_dims(n);
  Index out = 0;
  for (size_t x = 0; x < dm.size(); ++x) out += dm[x] * dn[x];
  return out;
}

Matrix random_intertwiner(const FiniteGroup& g, const YDModule& m, const YDModule& n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix x = random_complex(n.dim(), m.dim(), rng);
  Matrix graded = Matrix::Zero(n.dim(), m.dim());
  for (int h = 0; h < g.order(); ++h) graded += n.grading[h] * x * m.grading[h];
  Matrix out = Matrix::Zero(n.dim(), m.dim());
  for (int h = 0; h < g.order(); ++h) out += n.action[h] * graded * m.action[g.inverse(h)];
  return out / double(g.order());
}

double isomorphism_defect(const FiniteGroup& g, const YDModule& m, const YDModule& n, const Matrix& u) {
  if (m.dim() != n.dim() || u.rows() != n.dim() || u.cols() != m.dim()) return 1.0;
  if (m.dim() == 0) return 0.0;
  double dev = 0;
  for (int h = 0; h < g.order(); ++h) {
    dev = std::max(dev, max_abs(u * m.action[h] - n.action[h] * u));
    dev = std::max(dev, max_abs(u * m.grading[h] - n.grading[h] * u));
  }
  dev /= std::max(1.0, max_abs(u));
  Eigen::JacobiSVD<Matrix> svd(u);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < 1e-6 * sv(0)) return std::max(dev, 1.0);
  return dev;
}

double inclusion_relation_check(const FiniteGroup& g, const YDModule& m, const YDModule& m2, const YDModule& n,
                                const YDModule& n2) {
  const Embedded f1 = fibrewise(g, m, n), f2 = fibrewise(g, m2, n2);
  const YDModule src = convolution(g, f1.module, f2.module);
  const YDModule c1 = convolution(g, m, m2), c2 = convolution(g, n, n2);
  const Embedded tgt = fibrewise(g, c1, c2);

  const std::array<Index, 4> dims{m.dim(), n.dim(), m2.dim(), n2.dim()};
  const std::array<int, 4> perm{0, 2, 1, 3};
  const Matrix a = tgt.projection * permute_legs(dims, perm) * tensor(f1.inclusion, f2.inclusion);

  double dev = max_abs(a.adjoint() * a - identity(a.cols()));
  for (int h = 0; h < g.order(); ++h) {
    dev = std::max(dev, max_abs(a * src.action[h] - tgt.module.action[h] * a));
    dev = std::max(dev, max_abs(a * src.grading[h] - tgt.module.grading[h] * a));
  }
  return dev;
}

YDModule class_bundle(const FiniteGroup& g, int x, const std::vector<Matrix>& w_action) {
  const auto& cls = g.classes()[g.class_of(x)];
  const Index c = static_cast<Index>(cls.size());
  const Index dw = w_action.front().rows();
  auto pos = [&](int y) { return static_cast<Index>(std::find(cls.begin(), cls.end(), y) - cls.begin()); };
  YDModule out;
  for (int h = 0; h < g.order(); ++h) {
    Matrix perm = Matrix::Zero(c, c);
    for (int y : cls) perm(pos(g.multiply(g.multiply(h, y), g.inverse(h))), pos(y)) = 1.0;
    out.action.push_back(tensor(perm, w_action[h]));
    Matrix p = Matrix::Zero(c * dw, c * dw);
    if (g.class_of(h) == g.class_of(x)) p.block(pos(h) * dw, pos(h) * dw, dw, dw) = identity(dw);
    out.grading.push_back(std::move(p));
  }
  return out;
}

YDModule trivial(const FiniteGroup& g) {
  return class_bundle(g, g.identity(), std::vector<Matrix>(g.order(), identity(1)));
}

YDModule direct_sum(const YDModule& a, const YDModule& b) {
  YDModule out;
  for (size_t h = 0; h < a.action.size(); ++h) {
    out.action.push_back(bilax::direct_sum(a.action[h], b.action[h]));
    out.grading.push_back(bilax::direct_sum(a.grading[h], b.grading[h]));
  }
  return out;
}

YDModule random_yd(const FiniteGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> elem(0, g.order() - 1);
  const int pieces = 1 + static_cast<int>(rng() % 2);
  YDModule out;
  for (int piece = 0; piece < pieces; ++piece) {
    // W is trivial or the conjugation permutation representation on a random class.
    std::vector<Matrix> w(g.order(), identity(1));
    if (rng() % 2) {
      const YDModule perm = class_bundle(g, elem(rng), w);
      w = perm.action;
    }
    YDModule b = class_bundle(g, elem(rng), w);
    out = piece == 0 ? b : direct_sum(out, b);
  }
  const Matrix u = random_unitary(out.dim(), rng);
  for (int h = 0; h < g.order(); ++h) {
    out.action[h] = u * out.action[h] * u.adjoint();
    out.grading[h] = u * out.grading[h] * u.adjoint();
  }
  return out;
}

std::vector<SimpleYD> abelian_simple_yd(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::InvalidConfig, "brute-force enumeration needs an abelian group");
  const int n = g.order();

  // Greedy generating set.
  std::vector<int> gens;
  std::vector<bool> reached(n, false);
  reached[g.identity()] = true;
  auto close = [&] {
    for (bool grew = true; grew;) {
      grew = false;
      for (int y = 0; y < n; ++y)
        if (reached[y])
          for (int s : gens)
            if (!reached[g.multiply(y, s)]) reached[g.multiply(y, s)] = grew = true;
    }
  };
  for (int x = 0; x < n; ++x)
    if (!reached[x]) {
      gens.push_back(x);
      close();
    }

  // Try every assignment of n-th roots of unity to the generators.
  std::vector<std::vector<Complex>> characters;
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    std::vector<Complex> chi(n, Complex(0, 0));
    std::vector<bool> set(n, false);
    chi[g.identity()] = 1.0;
    set[g.identity()] = true;
    bool consistent = true;
    std::deque<int> queue{g.identity()};
    while (!queue.empty() && consistent) {
      const int y = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < gens.size(); ++j) {
        const Complex root = std::polar(1.0, 2 * std::numbers::pi * choice[j] / n);
        const int zz = g.multiply(y, gens[j]);
        const Complex val = chi[y] * root;
        if (!set[zz]) {
          chi[zz] = val;
          set[zz] = true;
          queue.push_back(zz);
        } else if (std::abs(chi[zz] - val) > 1e-9) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) characters.push_back(chi);
    size_t j = 0;
    while (j < choice.size() && ++choice[j] == n) choice[j++] = 0;
    if (j == choice.size()) break;
  }

  std::vector<SimpleYD> out;
  for (int x = 0; x < n; ++x)
    for (const auto& chi : characters) {
      SimpleYD s;
      s.degree = x;
      s.character = chi;
      for (int h = 0; h < n; ++h) {
        s.module.action.push_back(Matrix::Constant(1, 1, chi[h]));
        s.module.grading.push_back(Matrix::Constant(1, 1, h == x ? 1.0 : 0.0));
      }
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace bilax::oracle
