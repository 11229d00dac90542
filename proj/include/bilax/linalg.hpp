#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bilax/errors.hpp"

namespace bilax {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Tensor products flatten row-major: for e_a in a space of dimension m and
// e_b in one of dimension n, e_a (x) e_b has index a * n + b.
struct Tolerance {
  double equality = 1e-9;
  // Singular values below this are treated as zero when splitting idempotents.
  double rank = 1e-7;
};

Matrix identity(Index n);
Matrix zeros(Index rows, Index cols);

// f after g. Throws DimensionMismatch if the inner dimensions disagree.
Matrix compose(const Matrix& f, const Matrix& g);
Matrix compose(std::initializer_list<const Matrix*> chain);
Matrix tensor(const Matrix& f, const Matrix& g);
Matrix tensor(const Matrix& f, const Matrix& g, const Matrix& h);
Matrix direct_sum(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
// ||lhs - rhs||_max / max(1, ||lhs||_max)
double relative_deviation(const Matrix& lhs, const Matrix& rhs);
bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

// Swap map  C^m (x) C^n -> C^n (x) C^m.
Matrix flip(Index m, Index n);

// Permutation of tensor legs. Leg k of the output is leg perm[k] of the input.
Matrix permute_legs(std::span<const Index> dims, std::span<const int> perm);

// Row vector  C^n (x) C^n -> C  sending e_a (x) e_b to delta_ab.
Matrix pairing(Index n);
// Column vector  C -> C^n (x) C^n,  1 |-> sum_a e_a (x) e_a.
Matrix copairing(Index n);

struct SplitPair {
  Index rank = 0;
  Matrix inclusion;   // ambient <- image, orthonormal columns
  Matrix projection;  // image <- ambient, projection * inclusion = id
};

// Splits an idempotent e = inclusion * projection. Throws NotIdempotent if
// e*e != e and RankUnstable if the numerical rank is ambiguous.
SplitPair split_idempotent(const Matrix& e, const Tolerance& tol = {});

// Orthonormal basis (columns) of ker(a), using singular values below threshold.
Matrix kernel_basis(const Matrix& a, double threshold);
// Orthonormal basis (columns) of the column space of a.
Matrix range_basis(const Matrix& a, double threshold);

// Number of singular values above threshold.
Index rank(const Matrix& a, double threshold);
// Least-squares x with a x = b. Throws DimensionMismatch if the row counts differ.
Matrix solve_linear(const Matrix& a, const Matrix& b);

}  // namespace bilax
