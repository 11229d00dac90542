#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bilax/pool.hpp"
#include "bilax/report.hpp"

namespace bilax {

enum Suite : unsigned {
  kSuiteLax = 1,
  kSuiteOplax = 2,
  kSuiteBraided = 4,
  kSuiteLemmas = 8,
  kSuiteAll = 15,
};

struct CheckConfig {
  PoolConfig pool;
  // Tuples drawn per diagram family; tuples whose plain tensor product
  // exceeds ambient_cap dimensions are redrawn.
  int samples = 4;
  Index ambient_cap = 256;
  double tolerance = 1e-9;
};

// The convolution product (x)_c, the symmetric product (x)_s, the
// interchange maps eta and zeta, the unit maps, and the diagram checks.
class CoherenceChecker {
 public:
  CoherenceChecker(std::shared_ptr<const Centre> z, CheckConfig cfg);

  const Centre& centre() const { return *z_; }
  const Monoidal& conv() const { return conv_; }
  const Monoidal& sym() const { return sym_; }
  const UnitMaps& units() const { return units_; }
  const std::vector<PoolObject>& pool() const { return pool_; }
  const CheckConfig& config() const { return cfg_; }

  // (c (x)_c c2) (x)_s (d (x)_c d2) -> (c (x)_s d) (x)_c (c2 (x)_s d2)
  Matrix eta(const CentreObject& c, const CentreObject& c2, const CentreObject& d, const CentreObject& d2) const;
  // (c (x)_s d) (x)_c (c2 (x)_s d2) -> (c (x)_c c2) (x)_s (d (x)_c d2)
  Matrix zeta(const CentreObject& c, const CentreObject& d, const CentreObject& c2, const CentreObject& d2) const;

  void check_lax(CoherenceReport& report) const;
  void check_oplax_and_inclusive(CoherenceReport& report) const;
  void check_braided(CoherenceReport& report) const;
  void check_lemmas(CoherenceReport& report) const;

  // Runs the selected suites and returns a sorted report.
  CoherenceReport run(unsigned suites, const std::string& group_name) const;

  struct TwoFold;

 private:
  using Tuple = std::vector<size_t>;
  std::vector<Tuple> sample(const char* family, size_t arity, Index extra_factor) const;
  std::string names(const Tuple& t) const;
  const CentreObject& obj(size_t i) const { return pool_[i].object; }
  Matrix random_endomorphism(const CentreObject& x, std::uint64_t stream) const;

  void lax_diagrams(const TwoFold& t, CoherenceReport& report) const;
  void braided_diagrams(const TwoFold& t, CoherenceReport& report) const;

  std::shared_ptr<const Centre> z_;
  CheckConfig cfg_;
  Monoidal conv_;
  Monoidal sym_;
  UnitMaps units_;
  std::vector<PoolObject> pool_;
  mutable std::mutex hom_mutex_;
  mutable std::map<const void*, std::vector<Matrix>> endo_cache_;
};

}  // namespace bilax
