#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "bilax/centre.hpp"

namespace bilax {

// x (x) y for one of the two monoidal structures on the centre. The object
// sits inside the plain tensor product of the underlying spaces through
// `inclusion`; `projection` is a left inverse. For the convolution product
// both are identities.
struct Product {
  CentreObject left;
  CentreObject right;
  CentreObject object;
  Matrix inclusion;
  Matrix projection;
};

class Monoidal {
 public:
  enum class Kind { Convolution, Symmetric };

  Monoidal(const Centre& z, Kind kind);

  Kind kind() const { return kind_; }
  // "c" or "s", used in object names and report ids.
  const char* symbol() const { return kind_ == Kind::Convolution ? "c" : "s"; }
  const Centre& centre() const { return z_; }
  const CentreObject& unit() const { return unit_; }

  // Cached per (x, y); the reference stays valid for the lifetime of this object.
  const Product& product(const CentreObject& x, const CentreObject& y) const;
  // f (x) g from src to tgt, where src and tgt are products of the sources and targets.
  Matrix product_mor(const Product& src, const Product& tgt, const Matrix& f, const Matrix& g) const;

  Matrix left_unitor(const CentreObject& x) const;
  Matrix left_unitor_inverse(const CentreObject& x) const;
  Matrix right_unitor(const CentreObject& x) const;
  Matrix right_unitor_inverse(const CentreObject& x) const;
  // (x y) z -> x (y z)
  Matrix associator(const CentreObject& x, const CentreObject& y, const CentreObject& z) const;
  // x y -> y x
  Matrix braiding(const CentreObject& x, const CentreObject& y) const;

 private:
  const Centre& z_;
  Kind kind_;
  CentreObject unit_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<const void*, const void*>, Product> cache_;
};

// (x (x)_1 x2) (x)_2 (y (x)_1 y2) -> (x (x)_2 y) (x)_1 (x2 (x)_2 y2): split
// both factors, swap the middle legs by the symmetry of Rep G, and project.
Matrix interchange(const Monoidal& one, const Monoidal& two, const CentreObject& x, const CentreObject& x2,
                   const CentreObject& y, const CentreObject& y2);

// The six unit comparison maps between I_c and I_s.
struct UnitMaps {
  Matrix u0;  // I_s -> I_c
  Matrix v0;  // I_c -> I_s
  Matrix u1;  // I_c (x)_s I_c -> I_c
  Matrix v2;  // I_c -> I_c (x)_s I_c
  Matrix u2;  // I_s -> I_s (x)_c I_s
  Matrix v1;  // I_s (x)_c I_s -> I_s
};

UnitMaps unit_maps(const Monoidal& conv, const Monoidal& sym);

}  // namespace bilax
