#include "bilax/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bilax {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::RankUnstable: return "RankUnstable";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::SingularPairing: return "SingularPairing";
    case ErrorCode::ConversionFailure: return "ConversionFailure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NotInCentre: return "NotInCentre";
  }
  return "Unknown";
}

namespace {

std::string shape(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix zeros(Index rows, Index cols) { return Matrix::Zero(rows, cols); }

Matrix compose(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.rows())
    throw Error(ErrorCode::DimensionMismatch, "compose " + shape(f) + " after " + shape(g));
  return f * g;
}

Matrix compose(std::initializer_list<const Matrix*> chain) {
  // Leftmost is applied last; evaluate right to left so intermediate products stay narrow.
  std::vector<const Matrix*> fs(chain);
  if (fs.empty()) throw Error(ErrorCode::DimensionMismatch, "empty composition");
  Matrix acc = *fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = compose(**it, acc);
  return acc;
}

Matrix tensor(const Matrix& f, const Matrix& g) {
  Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (Index i = 0; i < f.rows(); ++i)
    for (Index j = 0; j < f.cols(); ++j)
      out.block(i * g.rows(), j * g.cols(), g.rows(), g.cols()) = f(i, j) * g;
  return out;
}

Matrix tensor(const Matrix& f, const Matrix& g, const Matrix& h) { return tensor(tensor(f, g), h); }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "compare " + shape(a) + " with " + shape(b));
  return max_abs(a - b);
}

double relative_deviation(const Matrix& lhs, const Matrix& rhs) {
  return max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(lhs));
}

bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol.equality;
}

Matrix flip(Index m, Index n) {
  Matrix out = Matrix::Zero(m * n, m * n);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < n; ++b) out(b * m + a, a * n + b) = 1.0;
  return out;
}

Matrix permute_legs(std::span<const Index> dims, std::span<const int> perm) {
  const size_t k = dims.size();
  if (perm.size() != k) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  Index total = 1;
  for (Index d : dims) total *= d;
  std::vector<Index> out_dims(k);
  for (size_t j = 0; j < k; ++j) out_dims[j] = dims[perm[j]];

  Matrix out = Matrix::Zero(total, total);
  std::vector<Index> digits(k, 0);
  for (Index src = 0; src < total; ++src) {
    Index rem = src;
    for (size_t j = k; j-- > 0;) {
      digits[j] = rem % dims[j];
      rem /= dims[j];
    }
    Index dst = 0;
    for (size_t j = 0; j < k; ++j) dst = dst * out_dims[j] + digits[perm[j]];
    out(dst, src) = 1.0;
  }
  return out;
}

Matrix pairing(Index n) {
  Matrix out = Matrix::Zero(1, n * n);
  for (Index a = 0; a < n; ++a) out(0, a * n + a) = 1.0;
  return out;
}

Matrix copairing(Index n) { return pairing(n).transpose(); }

SplitPair split_idempotent(const Matrix& e, const Tolerance& tol) {
  if (e.rows() != e.cols()) throw Error(ErrorCode::DimensionMismatch, "idempotent must be square");
  const Index n = e.rows();
  SplitPair out;
  if (n == 0) {
    out.inclusion = Matrix(0, 0);
    out.projection = Matrix(0, 0);
    return out;
  }
  const double defect = max_abs(e * e - e) / std::max(1.0, max_abs(e));
  if (defect > std::max(tol.equality, 1e-9)) {
    std::ostringstream os;
    os << "||e^2 - e|| = " << defect;
    throw Error(ErrorCode::NotIdempotent, os.str());
  }

  // Column-pivoted QR: |R_kk| is non-increasing and the leading columns of Q span the range.
  Eigen::ColPivHouseholderQR<Matrix> qr(e);
  const Matrix r = qr.matrixR().template triangularView<Eigen::Upper>();
  Index rank = 0;
  for (Index k = 0; k < n; ++k) {
    const double diag = std::abs(r(k, k));
    if (diag > 0.1 * tol.rank && diag < 10.0 * tol.rank) {
      std::ostringstream os;
      os << "pivot " << diag << " near threshold " << tol.rank;
      throw Error(ErrorCode::RankUnstable, os.str());
    }
    if (diag > tol.rank) ++rank;
  }
  const double tr = e.trace().real();
  if (std::abs(tr - static_cast<double>(rank)) > 1e-6) {
    std::ostringstream os;
    os << "rank " << rank << " disagrees with trace " << tr;
    throw Error(ErrorCode::RankUnstable, os.str());
  }
  out.rank = rank;
  const Matrix q = qr.householderQ();
  out.inclusion = q.leftCols(rank);
  out.projection = out.inclusion.adjoint() * e;
  return out;
}

Matrix kernel_basis(const Matrix& a, double threshold) {
  const Index n = a.cols();
  if (n == 0) return Matrix(0, 0);
  if (a.rows() == 0) return identity(n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  for (Index k = 0; k < sv.size(); ++k)
    if (sv(k) > threshold) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

Matrix range_basis(const Matrix& a, double threshold) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  const Matrix r = qr.matrixR().template triangularView<Eigen::Upper>();
  Index rank = 0;
  for (Index k = 0; k < std::min(a.rows(), a.cols()); ++k)
    if (std::abs(r(k, k)) > threshold) ++rank;
  const Matrix q = qr.householderQ();
  return q.leftCols(rank);
}

Index rank(const Matrix& a, double threshold) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return (svd.singularValues().array() > threshold).count();
}

Matrix solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "solve: " + std::to_string(a.rows()) + " rows against " + std::to_string(b.rows()));
  if (a.cols() == 0) return Matrix(0, b.cols());
  return a.completeOrthogonalDecomposition().solve(b);
}

}  // namespace bilax
