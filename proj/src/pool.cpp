#include "bilax/pool.hpp"

#include <random>
#include <set>

namespace bilax {

std::vector<PoolObject> build_pool(const Monoidal& conv, const Monoidal& sym, const PoolConfig& cfg) {
  const Centre& z = conv.centre();
  const RepCategory& cat = z.category();
  std::vector<PoolObject> pool;
  for (int i = 0; i < cat.num_simples(); ++i)
    if (cat.dim(i) <= cfg.cap) pool.push_back({"V" + std::to_string(i), z.from_rep(cat.simple(i))});
  if (z.sym_unit().dim() <= cfg.cap) pool.push_back({"Is", z.sym_unit()});

  const size_t base = pool.size();
  for (size_t a = 0; a < base; ++a)
    for (size_t b = a; b < base; ++b) {
      if (pool[a].object.dim() * pool[b].object.dim() > cfg.cap) continue;
      const auto& p = conv.product(pool[a].object, pool[b].object);
      pool.push_back({"(" + pool[a].name + " c " + pool[b].name + ")", p.object});
    }

  std::mt19937_64 rng(cfg.seed);
  std::set<std::pair<size_t, size_t>> seen;
  const int max_draws = 16 * std::max(cfg.random_products, 1);
  int added = 0;
  for (int draw = 0; draw < max_draws && added < cfg.random_products; ++draw) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    const size_t a = pick(rng), b = pick(rng);
    if (!seen.insert({a, b}).second) continue;
    if (pool[a].object.dim() * pool[b].object.dim() > cfg.cap * cfg.cap) continue;
    const auto& p = sym.product(pool[a].object, pool[b].object);
    if (p.object.dim() == 0 || p.object.dim() > cfg.cap) continue;
    pool.push_back({"(" + pool[a].name + " s " + pool[b].name + ")", p.object});
    ++added;
  }
  return pool;
}

}  // namespace bilax
