#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilax/monoidal.hpp"

namespace bilax {

struct PoolObject {
  std::string name;
  CentreObject object;
};

struct PoolConfig {
  Index cap = 16;             // largest dimension of a pool object
  int random_products = 4;    // how many (x)_s products to draw
  std::uint64_t seed = 0;
};

// Test objects: every simple of Rep G (named V0, V1, ...), I_s, the pairwise
// convolution products of those, then random symmetric products of earlier
// pool members. Objects above the cap and zero products are skipped.
std::vector<PoolObject> build_pool(const Monoidal& conv, const Monoidal& sym, const PoolConfig& cfg);

}  // namespace bilax
