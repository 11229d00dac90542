#include "bilax/coherence.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace bilax {

// A lax 2-fold structure: interchange (x 1 x2) 2 (y 1 y2) -> (x 2 y) 1 (x2 2 y2)
// and unit maps u0: I2 -> I1, u1: I1 2 I1 -> I1, u2: I2 -> I2 1 I2. The oplax
// structure of the centre is the lax structure with the two products swapped.
struct CoherenceChecker::TwoFold {
  std::string name;
  std::string eta_name;
  const Monoidal& one;
  const Monoidal& two;
  const Matrix& u0;
  const Matrix& u1;
  const Matrix& u2;
  std::string n0, n1, n2;

  Matrix eta(const CentreObject& x, const CentreObject& x2, const CentreObject& y, const CentreObject& y2) const {
    return interchange(one, two, x, x2, y, y2);
  }
};

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Matrix chain(std::initializer_list<Matrix> fs) {
  std::vector<Matrix> v(fs);
  Matrix acc = v.back();
  for (auto it = v.rbegin() + 1; it != v.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

constexpr double kFailed = std::numeric_limits<double>::quiet_NaN();

// Evaluates a diagram and records it; evaluation errors become failing entries.
template <class F>
void record(CoherenceReport& report, const std::string& id, const std::string& ref, const std::string& objects,
            F&& eval) {
  double dev = kFailed;
  try {
    dev = eval();
  } catch (const Error&) {
  }
  report.add(id, ref, objects, dev);
}

double morphism_dev(const Centre& z, const CentreObject& s, const CentreObject& t, const Matrix& f) {
  return z.morphism_deviation(s, t, f) / std::max(1.0, max_abs(f));
}

}  // namespace

CoherenceChecker::CoherenceChecker(std::shared_ptr<const Centre> z, CheckConfig cfg)
    : z_(std::move(z)),
      cfg_(cfg),
      conv_(*z_, Monoidal::Kind::Convolution),
      sym_(*z_, Monoidal::Kind::Symmetric),
      units_(unit_maps(conv_, sym_)),
      pool_(build_pool(conv_, sym_, cfg_.pool)) {}

Matrix CoherenceChecker::eta(const CentreObject& c, const CentreObject& c2, const CentreObject& d,
                             const CentreObject& d2) const {
  return interchange(conv_, sym_, c, c2, d, d2);
}

Matrix CoherenceChecker::zeta(const CentreObject& c, const CentreObject& d, const CentreObject& c2,
                              const CentreObject& d2) const {
  return interchange(sym_, conv_, c, d, c2, d2);
}

std::vector<CoherenceChecker::Tuple> CoherenceChecker::sample(const char* family, size_t arity,
                                                              Index extra_factor) const {
  std::vector<Tuple> out;
  if (pool_.empty()) return out;
  std::mt19937_64 rng(cfg_.pool.seed ^ fnv1a(family));
  std::uniform_int_distribution<size_t> pick(0, pool_.size() - 1);
  std::set<Tuple> seen;
  const int max_draws = 64 * std::max(cfg_.samples, 1);
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < cfg_.samples; ++draw) {
    Tuple t(arity);
    Index ambient = extra_factor;
    for (auto& i : t) {
      i = pick(rng);
      ambient *= obj(i).dim();
    }
    if (ambient > cfg_.ambient_cap || !seen.insert(t).second) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::string CoherenceChecker::names(const Tuple& t) const {
  std::string out;
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) out += ", ";
    out += pool_[t[k]].name;
  }
  return out;
}

Matrix CoherenceChecker::random_endomorphism(const CentreObject& x, std::uint64_t stream) const {
  std::vector<Matrix> basis;
  {
    std::lock_guard<std::mutex> lock(hom_mutex_);
    auto it = endo_cache_.find(x.key());
    if (it != endo_cache_.end()) basis = it->second;
  }
  if (basis.empty()) {
    basis = z_->hom_basis(x, x);
    std::lock_guard<std::mutex> lock(hom_mutex_);
    endo_cache_.emplace(x.key(), basis);
  }
  std::mt19937_64 rng(cfg_.pool.seed ^ stream);
  std::normal_distribution<double> gauss;
  Matrix f = Matrix::Zero(x.dim(), x.dim());
  for (const auto& b : basis) f += Complex(gauss(rng), gauss(rng)) * b;
  return f;
}

void CoherenceChecker::lax_diagrams(const TwoFold& t, CoherenceReport& report) const {
  const Monoidal& one = t.one;
  const Monoidal& two = t.two;
  const CentreObject& i1 = one.unit();
  const CentreObject& i2 = two.unit();
  const std::string& n = t.name;
  const std::string unit_names = std::string("I") + one.symbol() + ", I" + two.symbol();

  auto p = [&](const CentreObject& a, const CentreObject& b) -> const CentreObject& {
    return one.product(a, b).object;
  };
  auto q = [&](const CentreObject& a, const CentreObject& b) -> const CentreObject& {
    return two.product(a, b).object;
  };
  // f (x)_1 g with f: a -> a2, g: b -> b2, and likewise for the second product.
  auto t1 = [&](const CentreObject& a, const CentreObject& b, const CentreObject& a2, const CentreObject& b2,
                const Matrix& f, const Matrix& g) {
    return one.product_mor(one.product(a, b), one.product(a2, b2), f, g);
  };
  auto t2 = [&](const CentreObject& a, const CentreObject& b, const CentreObject& a2, const CentreObject& b2,
                const Matrix& f, const Matrix& g) {
    return two.product_mor(two.product(a, b), two.product(a2, b2), f, g);
  };
  auto id = [](const CentreObject& a) { return identity(a.dim()); };

  // (a) u0 against the four unitors.
  record(report, n + ".a.right1", t.n0 + " commutes with the right unitor of the first product", unit_names, [&] {
    return relative_deviation(chain({one.right_unitor(i1), t1(i2, i1, i1, i1, t.u0, id(i1))}),
                              chain({t.u0, one.right_unitor(i2)}));
  });
  record(report, n + ".a.left1", t.n0 + " commutes with the left unitor of the first product", unit_names, [&] {
    return relative_deviation(chain({one.left_unitor(i1), t1(i1, i2, i1, i1, id(i1), t.u0)}),
                              chain({t.u0, one.left_unitor(i2)}));
  });
  record(report, n + ".a.right2", t.n0 + " commutes with the right unitor of the second product", unit_names, [&] {
    return relative_deviation(chain({two.right_unitor(i1), t2(i2, i2, i1, i2, t.u0, id(i2))}),
                              chain({t.u0, two.right_unitor(i2)}));
  });
  record(report, n + ".a.left2", t.n0 + " commutes with the left unitor of the second product", unit_names, [&] {
    return relative_deviation(chain({two.left_unitor(i1), t2(i2, i2, i2, i1, id(i2), t.u0)}),
                              chain({t.u0, two.left_unitor(i2)}));
  });

  // (b) the second unitor through the interchange and u2.
  const std::string fam = n + "." + t.eta_name;
  for (const auto& tup : sample((fam + ".b").c_str(), 2, i2.dim() * i2.dim())) {
    const CentreObject& d = obj(tup[0]);
    const CentreObject& d2 = obj(tup[1]);
    record(report, n + ".b.left", "left unitor of the second product splits through " + t.n2 + " and the interchange",
           names(tup), [&] {
             const CentreObject& dd = p(d, d2);
             const CentreObject& uu = p(i2, i2);
             const Matrix rhs = chain({t1(q(i2, d), q(i2, d2), d, d2, two.left_unitor(d), two.left_unitor(d2)),
                                       t.eta(i2, i2, d, d2), t2(i2, dd, uu, dd, t.u2, id(dd))});
             return relative_deviation(two.left_unitor(dd), rhs);
           });
    record(report, n + ".b.right", "right unitor of the second product splits through " + t.n2 + " and the interchange",
           names(tup), [&] {
             const CentreObject& dd = p(d, d2);
             const CentreObject& uu = p(i2, i2);
             const Matrix rhs = chain({t1(q(d, i2), q(d2, i2), d, d2, two.right_unitor(d), two.right_unitor(d2)),
                                       t.eta(d, d2, i2, i2), t2(dd, i2, dd, uu, id(dd), t.u2)});
             return relative_deviation(two.right_unitor(dd), rhs);
           });
  }

  // (c) the first unitor through the interchange and u1.
  for (const auto& tup : sample((fam + ".c").c_str(), 2, i1.dim() * i1.dim())) {
    const CentreObject& c = obj(tup[0]);
    const CentreObject& d = obj(tup[1]);
    record(report, n + ".c.left", "left unitor of the first product passes through " + t.n1 + " and the interchange",
           names(tup), [&] {
             const CentreObject& cd = q(c, d);
             const CentreObject& uu = q(i1, i1);
             const Matrix lhs = chain({one.left_unitor(cd), t1(uu, cd, i1, cd, t.u1, id(cd)), t.eta(i1, c, i1, d)});
             const Matrix rhs = t2(p(i1, c), p(i1, d), c, d, one.left_unitor(c), one.left_unitor(d));
             return relative_deviation(lhs, rhs);
           });
    record(report, n + ".c.right", "right unitor of the first product passes through " + t.n1 + " and the interchange",
           names(tup), [&] {
             const CentreObject& cd = q(c, d);
             const CentreObject& uu = q(i1, i1);
             const Matrix lhs = chain({one.right_unitor(cd), t1(cd, uu, cd, i1, id(cd), t.u1), t.eta(c, i1, d, i1)});
             const Matrix rhs = t2(p(c, i1), p(d, i1), c, d, one.right_unitor(c), one.right_unitor(d));
             return relative_deviation(lhs, rhs);
           });
  }

  // (d) u1 is associative and u2 coassociative.
  record(report, n + ".d." + t.n1, t.n1 + " is associative", unit_names, [&] {
    const CentreObject& uu = q(i1, i1);
    return relative_deviation(chain({t.u1, t2(uu, i1, i1, i1, t.u1, id(i1))}),
                              chain({t.u1, t2(i1, uu, i1, i1, id(i1), t.u1), two.associator(i1, i1, i1)}));
  });
  record(report, n + ".d." + t.n2, t.n2 + " is coassociative", unit_names, [&] {
    const CentreObject& uu = p(i2, i2);
    return relative_deviation(chain({one.associator(i2, i2, i2), t1(i2, i2, uu, i2, t.u2, id(i2)), t.u2}),
                              chain({t1(i2, i2, i2, uu, id(i2), t.u2), t.u2}));
  });

  // (e) the interchange against the associator of the second product.
  for (const auto& tup : sample((fam + ".e").c_str(), 6, 1)) {
    record(report, n + ".e", "interchange is compatible with the associator of the second product", names(tup), [&] {
      const CentreObject &x = obj(tup[0]), &x2 = obj(tup[1]), &y = obj(tup[2]), &y2 = obj(tup[3]),
                         &w = obj(tup[4]), &w2 = obj(tup[5]);
      const CentreObject &pxx = p(x, x2), &pyy = p(y, y2), &pww = p(w, w2);
      const CentreObject &qxy = q(x, y), &qxy2 = q(x2, y2), &qyw = q(y, w), &qyw2 = q(y2, w2);
      const Matrix lhs = chain({t1(q(qxy, w), q(qxy2, w2), q(x, qyw), q(x2, qyw2), two.associator(x, y, w),
                                   two.associator(x2, y2, w2)),
                                t.eta(qxy, qxy2, w, w2), t2(q(pxx, pyy), pww, p(qxy, qxy2), pww, t.eta(x, x2, y, y2), id(pww))});
      const Matrix rhs = chain({t.eta(x, x2, qyw, qyw2), t2(pxx, q(pyy, pww), pxx, p(qyw, qyw2), id(pxx), t.eta(y, y2, w, w2)),
                                two.associator(pxx, pyy, pww)});
      return relative_deviation(lhs, rhs);
    });
  }

  // (f) the interchange against the associator of the first product.
  for (const auto& tup : sample((fam + ".f").c_str(), 6, 1)) {
    record(report, n + ".f", "interchange is compatible with the associator of the first product", names(tup), [&] {
      const CentreObject &x = obj(tup[0]), &x2 = obj(tup[1]), &x3 = obj(tup[2]), &y = obj(tup[3]),
                         &y2 = obj(tup[4]), &y3 = obj(tup[5]);
      const CentreObject &pxx = p(x, x2), &pyy = p(y, y2), &pxx3 = p(x2, x3), &pyy3 = p(y2, y3);
      const CentreObject &qxy = q(x, y), &qxy2 = q(x2, y2), &qxy3 = q(x3, y3);
      const Matrix lhs = chain({one.associator(qxy, qxy2, qxy3),
                                t1(q(pxx, pyy), qxy3, p(qxy, qxy2), qxy3, t.eta(x, x2, y, y2), id(qxy3)),
                                t.eta(pxx, x3, pyy, y3)});
      const Matrix rhs = chain({t1(qxy, q(pxx3, pyy3), qxy, p(qxy2, qxy3), id(qxy), t.eta(x2, x3, y2, y3)),
                                t.eta(x, pxx3, y, pyy3),
                                t2(p(pxx, x3), p(pyy, y3), p(x, pxx3), p(y, pyy3), one.associator(x, x2, x3),
                                   one.associator(y, y2, y3))});
      return relative_deviation(lhs, rhs);
    });
  }

  // Every structure map is a morphism of the centre.
  const Centre& z = *z_;
  record(report, "morphism." + t.n0, t.n0 + " commutes with half-braidings", unit_names,
         [&] { return morphism_dev(z, i2, i1, t.u0); });
  record(report, "morphism." + t.n1, t.n1 + " commutes with half-braidings", unit_names,
         [&] { return morphism_dev(z, q(i1, i1), i1, t.u1); });
  record(report, "morphism." + t.n2, t.n2 + " commutes with half-braidings", unit_names,
         [&] { return morphism_dev(z, i2, p(i2, i2), t.u2); });
  for (const auto& tup : sample(("morphism." + t.eta_name).c_str(), 4, 1)) {
    record(report, "morphism." + t.eta_name, "the interchange commutes with half-braidings", names(tup), [&] {
      const CentreObject &x = obj(tup[0]), &x2 = obj(tup[1]), &y = obj(tup[2]), &y2 = obj(tup[3]);
      return morphism_dev(z, q(p(x, x2), p(y, y2)), p(q(x, y), q(x2, y2)), t.eta(x, x2, y, y2));
    });
  }

  // Naturality of the interchange in all four arguments.
  std::uint64_t stream = fnv1a("natural." + t.eta_name);
  for (const auto& tup : sample(("natural." + t.eta_name).c_str(), 4, 1)) {
    ++stream;
    record(report, "natural." + t.eta_name, "the interchange is natural", names(tup), [&] {
      const CentreObject &x = obj(tup[0]), &x2 = obj(tup[1]), &y = obj(tup[2]), &y2 = obj(tup[3]);
      const Matrix f = random_endomorphism(x, stream * 4), f2 = random_endomorphism(x2, stream * 4 + 1);
      const Matrix g = random_endomorphism(y, stream * 4 + 2), g2 = random_endomorphism(y2, stream * 4 + 3);
      const CentreObject &pxx = p(x, x2), &pyy = p(y, y2), &qxy = q(x, y), &qxy2 = q(x2, y2);
      const Matrix lhs = chain({t.eta(x, x2, y, y2), t2(pxx, pyy, pxx, pyy, t1(x, x2, x, x2, f, f2), t1(y, y2, y, y2, g, g2))});
      const Matrix rhs = chain({t1(qxy, qxy2, qxy, qxy2, t2(x, y, x, y, f, g), t2(x2, y2, x2, y2, f2, g2)), t.eta(x, x2, y, y2)});
      return relative_deviation(lhs, rhs);
    });
  }
}

void CoherenceChecker::braided_diagrams(const TwoFold& t, CoherenceReport& report) const {
  const Monoidal& one = t.one;
  const Monoidal& two = t.two;
  const CentreObject& i1 = one.unit();
  const CentreObject& i2 = two.unit();
  const std::string unit_names = std::string("I") + one.symbol() + ", I" + two.symbol();
  // The convolution braiding is called horizontal and the symmetry of (x)_s vertical, whichever role they play.
  const std::string h1 = one.kind() == Monoidal::Kind::Convolution ? "horizontal" : "vertical";
  const std::string h2 = two.kind() == Monoidal::Kind::Convolution ? "horizontal" : "vertical";
  auto p = [&](const CentreObject& a, const CentreObject& b) -> const CentreObject& {
    return one.product(a, b).object;
  };
  auto q = [&](const CentreObject& a, const CentreObject& b) -> const CentreObject& {
    return two.product(a, b).object;
  };

  record(report, "braided." + t.name + "." + h1 + ".unit", "braiding of the first product fixes " + t.n2, unit_names,
         [&] { return relative_deviation(chain({one.braiding(i2, i2), t.u2}), t.u2); });
  record(report, "braided." + t.name + "." + h2 + ".unit", t.n1 + " absorbs the braiding of the second product",
         unit_names, [&] { return relative_deviation(chain({t.u1, two.braiding(i1, i1)}), t.u1); });

  for (const auto& tup : sample(("braided." + t.name + ".square").c_str(), 4, 1)) {
    const CentreObject &x = obj(tup[0]), &x2 = obj(tup[1]), &y = obj(tup[2]), &y2 = obj(tup[3]);
    record(report, "braided." + t.name + "." + h1 + "." + t.eta_name,
           "braiding of the first product commutes with the interchange", names(tup), [&] {
             const Matrix lhs = chain({one.braiding(q(x, y), q(x2, y2)), t.eta(x, x2, y, y2)});
             const Matrix swap = two.product_mor(two.product(p(x, x2), p(y, y2)), two.product(p(x2, x), p(y2, y)),
                                                 one.braiding(x, x2), one.braiding(y, y2));
             return relative_deviation(lhs, chain({t.eta(x2, x, y2, y), swap}));
           });
    record(report, "braided." + t.name + "." + h2 + "." + t.eta_name,
           "braiding of the second product commutes with the interchange", names(tup), [&] {
             const Matrix lhs = chain({t.eta(y, y2, x, x2), two.braiding(p(x, x2), p(y, y2))});
             const Matrix swap = one.product_mor(one.product(q(x, y), q(x2, y2)), one.product(q(y, x), q(y2, x2)),
                                                 two.braiding(x, y), two.braiding(x2, y2));
             return relative_deviation(lhs, chain({swap, t.eta(x, x2, y, y2)}));
           });
  }
}

void CoherenceChecker::check_lax(CoherenceReport& report) const {
  const TwoFold t{"lax", "eta", conv_, sym_, units_.u0, units_.u1, units_.u2, "u0", "u1", "u2"};
  lax_diagrams(t, report);
}

void CoherenceChecker::check_oplax_and_inclusive(CoherenceReport& report) const {
  const TwoFold t{"oplax", "zeta", sym_, conv_, units_.v0, units_.v1, units_.v2, "v0", "v1", "v2"};
  lax_diagrams(t, report);

  const CentreObject& ic = conv_.unit();
  const CentreObject& is = sym_.unit();
  record(report, "inclusive.u0v0", "u0 after v0 is the identity of Ic", "Ic",
         [&] { return relative_deviation(chain({units_.u0, units_.v0}), identity(ic.dim())); });
  record(report, "inclusive.u1v2", "u1 after v2 is the identity of Ic", "Ic",
         [&] { return relative_deviation(chain({units_.u1, units_.v2}), identity(ic.dim())); });
  record(report, "inclusive.v1u2", "v1 after u2 is the identity of Is", "Is",
         [&] { return relative_deviation(chain({units_.v1, units_.u2}), identity(is.dim())); });
  record(report, "inclusive.v2u1", "v2 after u1 is the identity of Ic (s) Ic", "Ic",
         [&] { return relative_deviation(chain({units_.v2, units_.u1}), identity(units_.u1.cols())); });
  for (const auto& tup : sample("inclusive.eta_zeta", 4, 1)) {
    record(report, "inclusive.eta_zeta", "eta after zeta is the identity", names(tup), [&] {
      const CentreObject &c = obj(tup[0]), &d = obj(tup[1]), &c2 = obj(tup[2]), &d2 = obj(tup[3]);
      const Matrix both = chain({eta(c, c2, d, d2), zeta(c, d, c2, d2)});
      return relative_deviation(both, identity(both.rows()));
    });
  }
}

void CoherenceChecker::check_braided(CoherenceReport& report) const {
  braided_diagrams(TwoFold{"lax", "eta", conv_, sym_, units_.u0, units_.u1, units_.u2, "u0", "u1", "u2"}, report);
  braided_diagrams(TwoFold{"oplax", "zeta", sym_, conv_, units_.v0, units_.v1, units_.v2, "v0", "v1", "v2"}, report);
  for (const auto& tup : sample("braided.vertical.symmetric", 2, 1)) {
    record(report, "braided.vertical.symmetric", "the symmetry of (x)_s squares to the identity", names(tup), [&] {
      const CentreObject &x = obj(tup[0]), &y = obj(tup[1]);
      const Matrix twice = chain({sym_.braiding(y, x), sym_.braiding(x, y)});
      return relative_deviation(twice, identity(twice.rows()));
    });
  }
}

void CoherenceChecker::check_lemmas(CoherenceReport& report) const {
  const Centre& z = *z_;
  const RepCategory& cat = z.category();
  const int r = cat.num_simples();
  const std::string v = "V";

  for (size_t k = 0; k < pool_.size(); ++k) {
    record(report, "lemma.half_braiding", "half-braidings are equivariant, unital and multiplicative", pool_[k].name,
           [&] {
             const auto rep = z.validate(obj(k));
             return std::max({rep.equivariance, rep.unit_law, rep.multiplicativity});
           });
    record(report, "lemma.snapping", "the idempotent for Is (x) c is expansion after contraction", pool_[k].name,
           [&] { return z.snapping_defect(obj(k)); });
  }

  for (const auto& tup : sample("lemma.pairs", 2, 1)) {
    const CentreObject &c = obj(tup[0]), &d = obj(tup[1]);
    record(report, "lemma.idempotent", "the loop idempotent squares to itself", names(tup), [&] {
      const Matrix pi = z.idempotent(c, d);
      return relative_deviation(pi * pi, pi);
    });
    record(report, "lemma.route", "both routes for the half-braiding of the symmetric product agree", names(tup),
           [&] {
             const auto& s = sym_.product(c, d);
             return z.half_braiding_route_defect(SymProduct{s.object, s.inclusion, s.projection}, c, d);
           });
    for (int a = 0; a < r; ++a) {
      const std::string objs = names(tup) + "; " + v + std::to_string(a);
      record(report, "lemma.cloaking", "a strand crosses the loop idempotent", objs,
             [&] { return z.cloaking_defect(c, d, a); });
      const auto& s = sym_.product(c, d);
      std::array<double, 4> slices{kFailed, kFailed, kFailed, kFailed};
      try {
        slices = z.slicing_defects(SymProduct{s.object, s.inclusion, s.projection}, c, d, a);
      } catch (const Error&) {
      }
      for (int k = 0; k < 4; ++k)
        report.add("lemma.slicing." + std::to_string(k + 1), "inclusion and projection slide through a crossing",
                   objs, slices[k]);
    }
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const std::string ij = v + std::to_string(i) + ", " + v + std::to_string(j);
      record(report, "lemma.resolution", "vertices and their transposes resolve the identity", ij,
             [&] { return cat.resolution_defect(i, j); });
      record(report, "lemma.other_sum", "the identity of k* (x) i resolves through duals of vertices", ij,
             [&] { return cat.other_direct_sum_defect(i, j); });
      record(report, "lemma.transparency", "the double crossing of two representations is trivial", ij,
             [&] { return z.transparency_defect(cat.simple(i), cat.simple(j)); });
      for (int k = 0; k < r; ++k)
        record(report, "lemma.twist", "twists are compatible with every vertex", ij + ", " + v + std::to_string(k),
               [&] { return cat.twist_defect(i, j, k); });
    }

  // Both products are bilinear on morphisms.
  std::uint64_t stream = fnv1a("bilinear");
  for (const auto& tup : sample("bilinear", 2, 1)) {
    ++stream;
    const CentreObject &x = obj(tup[0]), &y = obj(tup[1]);
    const Matrix f = random_endomorphism(x, stream * 3), f2 = random_endomorphism(x, stream * 3 + 1);
    const Matrix g = random_endomorphism(y, stream * 3 + 2);
    for (const Monoidal* m : {&conv_, &sym_}) {
      record(report, std::string("bilinear.") + m->symbol(), "the product of morphisms is additive in each slot",
             names(tup), [&] {
               const auto& pr = m->product(x, y);
               const Matrix lhs = m->product_mor(pr, pr, f + f2, g);
               const Matrix rhs = m->product_mor(pr, pr, f, g) + m->product_mor(pr, pr, f2, g);
               return relative_deviation(lhs, rhs);
             });
    }
  }
}

CoherenceReport CoherenceChecker::run(unsigned suites, const std::string& group_name) const {
  CoherenceReport report;
  report.group = group_name;
  report.tolerance = cfg_.tolerance;
  report.seed = cfg_.pool.seed;
  if (suites & kSuiteLax) check_lax(report);
  if (suites & kSuiteOplax) check_oplax_and_inclusive(report);
  if (suites & kSuiteBraided) check_braided(report);
  if (suites & kSuiteLemmas) check_lemmas(report);
  report.sort();
  return report;
}

}  // namespace bilax
