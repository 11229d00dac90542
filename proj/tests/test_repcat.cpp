#include <doctest.h>

#include "bilax/repcat.hpp"

using namespace bilax;

TEST_CASE("regular representation contains each irrep d_i times") {
  for (const char* name : {"z3", "s3", "q8"}) {
    CAPTURE(name);
    RepCategory cat(FiniteGroup::builtin(name), 3);
    const RepObject reg = cat.regular();
    CHECK(reg.dim() == cat.group().order());
    std::vector<int> mult(cat.num_simples(), 0);
    Matrix span = Matrix::Zero(reg.dim(), reg.dim());
    for (const auto& c : cat.decompose(reg)) {
      ++mult[c.irrep];
      span += c.embedding * c.embedding.adjoint();
      CHECK(cat.equivariance_deviation(cat.simple(c.irrep), reg, c.embedding) < 1e-9);
    }
    for (int i = 0; i < cat.num_simples(); ++i) CHECK(mult[i] == cat.dim(i));
    CHECK(max_abs_diff(span, identity(reg.dim())) < 1e-9);
  }
}

TEST_CASE("hom spaces have the dimension predicted by fusion") {
  RepCategory cat(FiniteGroup::builtin("s3"), 0);
  const int two = cat.num_simples() - 1;
  const RepObject vv = cat.tensor(cat.simple(two), cat.simple(two));
  CHECK(cat.hom_basis(vv, vv).size() == 3);
  CHECK(cat.hom_basis(cat.unit(), vv).size() == 1);
  const RepObject reg = cat.regular();
  CHECK(cat.hom_basis(reg, reg).size() == 6);
  for (const auto& f : cat.hom_basis(vv, reg)) CHECK(cat.equivariance_deviation(vv, reg, f) < 1e-9);
  CHECK_THROWS_AS(cat.equivariance_deviation(vv, reg, identity(2)), Error);
}

TEST_CASE("duality maps") {
  RepCategory cat(FiniteGroup::builtin("q8"), 0);
  for (int i = 0; i < cat.num_simples(); ++i) {
    const Index d = cat.dim(i);
    const RepObject ii = cat.tensor(cat.dual_object(i), cat.simple(i));
    CHECK(cat.equivariance_deviation(ii, cat.unit(), cat.ev(i)) < 1e-9);
    const RepObject ij = cat.tensor(cat.simple(i), cat.dual_object(i));
    CHECK(cat.equivariance_deviation(cat.unit(), ij, cat.coev(i)) < 1e-9);
    const Matrix zig = tensor(identity(d), cat.ev(i)) * tensor(cat.coev(i), identity(d));
    CHECK(max_abs_diff(zig, identity(d)) < 1e-12);
    const Matrix& u = cat.dual_intertwiner(i);
    CHECK(cat.equivariance_deviation(cat.dual_object(i), cat.simple(cat.dual(i)), u) < 1e-9);
  }
}

TEST_CASE("vertex bases resolve the identity") {
  for (const char* name : {"z2", "s3", "d4", "q8"}) {
    CAPTURE(name);
    RepCategory cat(FiniteGroup::builtin(name), 11);
    for (int i = 0; i < cat.num_simples(); ++i)
      for (int j = 0; j < cat.num_simples(); ++j) {
        CHECK(cat.resolution_defect(i, j) < 1e-9);
        CHECK(cat.other_direct_sum_defect(i, j) < 1e-9);
        for (int k = 0; k < cat.num_simples(); ++k) CHECK(cat.twist_defect(i, j, k) < 1e-9);
      }
  }
}

TEST_CASE("vertices are dual bases") {
  RepCategory cat(FiniteGroup::builtin("s3"), 0);
  const int two = cat.num_simples() - 1;
  const RepObject vv = cat.tensor(cat.simple(two), cat.simple(two));
  const auto vs = cat.vertices(vv);
  CHECK(vs.size() == 3);
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = 0; b < vs.size(); ++b) {
      if (vs[a].k != vs[b].k) continue;
      const Matrix p = vs[a].phi * vs[b].phi_t;
      CHECK(max_abs_diff(p, a == b ? identity(cat.dim(vs[a].k)) : zeros(p.rows(), p.cols())) < 1e-10);
    }
}

TEST_CASE("symmetry squares to the identity") {
  RepCategory cat(FiniteGroup::builtin("d4"), 0);
  const RepObject x = cat.regular(), y = cat.simple(cat.num_simples() - 1);
  const Matrix c = cat.symmetry(x, y), c2 = cat.symmetry(y, x);
  CHECK(max_abs_diff(c2 * c, identity(x.dim() * y.dim())) < 1e-14);
  CHECK(cat.equivariance_deviation(cat.tensor(x, y), cat.tensor(y, x), c) < 1e-9);
}
