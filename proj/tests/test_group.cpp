#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bilax/group.hpp"

using namespace bilax;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidConfig;
}

std::vector<int> sorted_dims(const std::vector<Irrep>& irreps) {
  std::vector<int> d;
  for (const auto& i : irreps) d.push_back(i.dim);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("builtin groups have valid tables") {
  const std::vector<std::pair<std::string, int>> expected{{"z2", 2}, {"z3", 3}, {"z4", 4}, {"z2xz2", 4},
                                                          {"s3", 6}, {"d4", 8}, {"q8", 8}};
  CHECK(FiniteGroup::builtin_names().size() == expected.size());
  for (const auto& [name, order] : expected) {
    const FiniteGroup g = FiniteGroup::builtin(name);
    CHECK(g.order() == order);
    CHECK(g.name() == name);
    for (int a = 0; a < order; ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      CHECK(g.multiply(g.identity(), a) == a);
    }
    int total = 0;
    for (const auto& c : g.classes()) total += static_cast<int>(c.size());
    CHECK(total == order);
  }
  CHECK(code_of([] { FiniteGroup::builtin("a5"); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("class structure") {
  CHECK(FiniteGroup::builtin("z4").classes().size() == 4);
  CHECK(FiniteGroup::builtin("s3").classes().size() == 3);
  CHECK(FiniteGroup::builtin("d4").classes().size() == 5);
  CHECK(FiniteGroup::builtin("q8").classes().size() == 5);
  CHECK(FiniteGroup::builtin("z2xz2").is_abelian());
  CHECK_FALSE(FiniteGroup::builtin("s3").is_abelian());

  const FiniteGroup s3 = FiniteGroup::builtin("s3");
  for (int g = 0; g < s3.order(); ++g)
    CHECK(s3.centralizer(g).size() * s3.classes()[s3.class_of(g)].size() == 6);
}

TEST_CASE("invalid tables are rejected") {
  CHECK(code_of([] { FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}); }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { FiniteGroup::from_table("bad", {{0, 1}, {1}}); }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { FiniteGroup::from_table("bad", {{0, 2}, {1, 0}}); }) == ErrorCode::InvalidTable);
  // Latin square with identity but not associative.
  CHECK(code_of([] {
          FiniteGroup::from_table("bad", {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}});
        }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { FiniteGroup::from_json("{\"order\": 3, \"table\": [[0,1],[1,0]]}"); }) ==
        ErrorCode::InvalidTable);
  CHECK(code_of([] { FiniteGroup::from_json("not json"); }) == ErrorCode::InvalidTable);
}

TEST_CASE("group from JSON") {
  const FiniteGroup g = FiniteGroup::from_json(R"({"name": "c3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})");
  CHECK(g.name() == "c3");
  CHECK(g.order() == 3);
  CHECK(g.multiply(2, 2) == 1);
}

TEST_CASE("irreps of the builtin groups") {
  CHECK(sorted_dims(compute_irreps(FiniteGroup::builtin("s3"), 0)) == std::vector<int>{1, 1, 2});
  CHECK(sorted_dims(compute_irreps(FiniteGroup::builtin("q8"), 0)) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(sorted_dims(compute_irreps(FiniteGroup::builtin("d4"), 0)) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(sorted_dims(compute_irreps(FiniteGroup::builtin("z4"), 0)) == std::vector<int>{1, 1, 1, 1});

  for (const auto& name : FiniteGroup::builtin_names()) {
    CAPTURE(name);
    const FiniteGroup g = FiniteGroup::builtin(name);
    const auto irreps = compute_irreps(g, 7);
    CHECK(global_dimension(irreps) == g.order());
    CHECK(irreps.size() == g.classes().size());
    CHECK(irreps.front().dim == 1);
    for (size_t i = 0; i < irreps.size(); ++i) {
      const Irrep& r = irreps[i];
      for (int a = 0; a < g.order(); ++a) {
        CHECK(max_abs_diff(r.matrices[a].adjoint() * r.matrices[a], identity(r.dim)) < 1e-10);
        for (int b = 0; b < g.order(); ++b)
          CHECK(max_abs_diff(r.matrices[a] * r.matrices[b], r.matrices[g.multiply(a, b)]) < 1e-10);
      }
      std::vector<Complex> chi(g.order());
      for (int a = 0; a < g.order(); ++a) chi[a] = r.matrices[a].trace();
      CHECK(character_norm(g, chi) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(irreps[r.dual].dual == static_cast<int>(i));
    }
  }
}

TEST_CASE("fusion multiplicities") {
  const FiniteGroup s3 = FiniteGroup::builtin("s3");
  const auto irreps = compute_irreps(s3, 0);
  const Irrep& two = irreps.back();
  REQUIRE(two.dim == 2);
  int total = 0;
  for (const auto& k : irreps) total += fusion_mult(s3, two, two, k) * k.dim;
  CHECK(total == 4);
  for (const auto& k : irreps) CHECK(fusion_mult(s3, two, two, k) == 1);
  CHECK(fusion_mult(s3, irreps[0], two, two) == 1);
}

TEST_CASE("irrep order does not depend on the seed") {
  const FiniteGroup d4 = FiniteGroup::builtin("d4");
  const auto a = compute_irreps(d4, 1), b = compute_irreps(d4, 99);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t c = 0; c < a[i].character.size(); ++c)
      CHECK(std::abs(a[i].character[c] - b[i].character[c]) < 1e-9);
}
