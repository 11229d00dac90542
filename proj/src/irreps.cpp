#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bilax/group.hpp"

namespace bilax {

namespace {

constexpr int kMaxAttempts = 32;

std::vector<Matrix> regular_representation(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Matrix> out(n, Matrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) out[a](g.multiply(a, h), h) = 1.0;
  return out;
}

std::vector<Complex> character_of(const std::vector<Matrix>& rho) {
  std::vector<Complex> chi(rho.size());
  for (size_t k = 0; k < rho.size(); ++k) chi[k] = rho[k].trace();
  return chi;
}

Matrix random_hermitian(Index k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix h(k, k);
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c) h(r, c) = Complex(normal(rng), normal(rng));
  return (h + h.adjoint()) * 0.5;
}

struct Search {
  const FiniteGroup& group;
  const std::vector<Matrix>& regular;
  std::mt19937_64& rng;
  std::vector<std::vector<Matrix>> found;
  std::vector<std::vector<Complex>> found_chars;
  int covered = 0;  // sum of d^2 over distinct irreps found so far

  bool already_have(const std::vector<Complex>& chi) const {
    for (const auto& other : found_chars) {
      double diff = 0;
      for (size_t k = 0; k < chi.size(); ++k) diff = std::max(diff, std::abs(chi[k] - other[k]));
      if (diff < 1e-6) return true;
    }
    return false;
  }

  // basis: orthonormal columns spanning an invariant subspace of the regular representation.
  void run(const Matrix& basis) {
    if (covered == group.order()) return;
    const int n = group.order();
    const Index k = basis.cols();
    std::vector<Matrix> rho(n);
    for (int a = 0; a < n; ++a) rho[a] = basis.adjoint() * regular[a] * basis;
    const auto chi = character_of(rho);
    if (std::abs(character_norm(group, chi) - 1.0) < 1e-6) {
      if (!already_have(chi)) {
        found.push_back(rho);
        found_chars.push_back(chi);
        covered += static_cast<int>(k * k);
      }
      return;
    }
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Matrix h = random_hermitian(k, rng);
      Matrix avg = Matrix::Zero(k, k);
      for (int a = 0; a < n; ++a) avg += rho[a] * h * rho[a].adjoint();
      avg /= static_cast<double>(n);
      Eigen::SelfAdjointEigenSolver<Matrix> eig(avg);
      const auto& vals = eig.eigenvalues();
      const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
      std::vector<std::pair<Index, Index>> clusters;  // [start, end)
      Index start = 0;
      for (Index j = 1; j <= k; ++j)
        if (j == k || vals(j) - vals(j - 1) > 1e-6 * scale) {
          clusters.emplace_back(start, j);
          start = j;
        }
      if (clusters.size() < 2) continue;
      for (const auto& [s, e] : clusters) {
        Matrix sub = basis * eig.eigenvectors().middleCols(s, e - s);
        run(sub);
      }
      return;
    }
    throw Error(ErrorCode::ConvergenceFailure, "commutant search did not split a reducible subspace");
  }
};

bool character_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto rounded = [](double x) { return std::round(x * 1e6) / 1e6; };
  for (size_t k = 0; k < a.size(); ++k) {
    double ar = rounded(a[k].real()), br = rounded(b[k].real());
    if (ar != br) return ar > br;
    double ai = rounded(a[k].imag()), bi = rounded(b[k].imag());
    if (ai != bi) return ai > bi;
  }
  return false;
}

}  // namespace

double character_norm(const FiniteGroup& g, const std::vector<Complex>& chi) {
  double s = 0;
  for (const auto& x : chi) s += std::norm(x);
  return s / g.order();
}

std::vector<Irrep> compute_irreps(const FiniteGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto regular = regular_representation(g);
  Search search{g, regular, rng, {}, {}, 0};
  search.run(identity(g.order()));
  if (search.covered != g.order()) {
    std::ostringstream os;
    os << "found irreps with sum d^2 = " << search.covered << ", expected " << g.order();
    throw Error(ErrorCode::ConvergenceFailure, os.str());
  }

  std::vector<Irrep> irreps;
  for (auto& rho : search.found) {
    Irrep ir;
    ir.dim = static_cast<int>(rho.front().rows());
    for (const auto& cls : g.classes()) ir.character.push_back(rho[cls.front()].trace());
    ir.matrices = std::move(rho);
    irreps.push_back(std::move(ir));
  }
  auto is_trivial = [](const Irrep& ir) {
    if (ir.dim != 1) return false;
    for (const auto& c : ir.character)
      if (std::abs(c - 1.0) > 1e-6) return false;
    return true;
  };
  std::sort(irreps.begin(), irreps.end(), [&](const Irrep& a, const Irrep& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.dim != b.dim) return a.dim < b.dim;
    return character_less(a.character, b.character);
  });
  // Pin the trivial irrep to exactly 1 so unit identifications are exact.
  for (auto& m : irreps.front().matrices) m = identity(1);
  irreps.front().character.assign(g.classes().size(), Complex(1.0, 0.0));

  for (auto& ir : irreps) {
    for (size_t j = 0; j < irreps.size(); ++j) {
      double diff = 0;
      for (size_t k = 0; k < ir.character.size(); ++k)
        diff = std::max(diff, std::abs(std::conj(ir.character[k]) - irreps[j].character[k]));
      if (diff < 1e-6) ir.dual = static_cast<int>(j);
    }
    if (ir.dual < 0) throw Error(ErrorCode::ConvergenceFailure, "dual irrep not found");
  }
  return irreps;
}

Irrep dual_irrep(const Irrep& i) {
  Irrep out;
  out.dim = i.dim;
  out.twist = i.twist;
  for (const auto& m : i.matrices) out.matrices.push_back(m.conjugate());
  for (const auto& c : i.character) out.character.push_back(std::conj(c));
  return out;
}

int fusion_mult(const FiniteGroup& g, const Irrep& i, const Irrep& j, const Irrep& k) {
  Complex s = 0;
  for (size_t c = 0; c < g.classes().size(); ++c)
    s += static_cast<double>(g.classes()[c].size()) * i.character[c] * j.character[c] * std::conj(k.character[c]);
  s /= static_cast<double>(g.order());
  const double r = std::round(s.real());
  if (std::abs(s - Complex(r, 0.0)) > 1e-6) {
    std::ostringstream os;
    os << "fusion multiplicity " << s << " is not an integer";
    throw Error(ErrorCode::NonIntegral, os.str());
  }
  return static_cast<int>(r);
}

int global_dimension(const std::vector<Irrep>& irreps) {
  int s = 0;
  for (const auto& ir : irreps) s += ir.dim * ir.dim;
  return s;
}

}  // namespace bilax
