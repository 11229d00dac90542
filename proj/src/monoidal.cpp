#include "bilax/monoidal.hpp"

#include <array>

namespace bilax {

Monoidal::Monoidal(const Centre& z, Kind kind)
    : z_(z), kind_(kind), unit_(kind == Kind::Convolution ? z.conv_unit() : z.sym_unit()) {}

const Product& Monoidal::product(const CentreObject& x, const CentreObject& y) const {
  const auto key = std::make_pair(x.key(), y.key());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Product p;
  p.left = x;
  p.right = y;
  if (kind_ == Kind::Convolution) {
    p.object = z_.conv_tensor(x, y);
    p.inclusion = identity(p.object.dim());
    p.projection = p.inclusion;
  } else {
    SymProduct s = z_.sym_tensor(x, y);
    p.object = std::move(s.object);
    p.inclusion = std::move(s.inclusion);
    p.projection = std::move(s.projection);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(p)).first->second;
}

Matrix Monoidal::product_mor(const Product& src, const Product& tgt, const Matrix& f, const Matrix& g) const {
  const Matrix fg = tensor(f, g);
  return compose({&tgt.projection, &fg, &src.inclusion});
}

Matrix Monoidal::left_unitor(const CentreObject& x) const {
  if (kind_ == Kind::Convolution) return identity(x.dim());
  const auto& p = product(unit_, x);
  return z_.left_unitor(SymProduct{p.object, p.inclusion, p.projection}, x);
}

Matrix Monoidal::left_unitor_inverse(const CentreObject& x) const {
  if (kind_ == Kind::Convolution) return identity(x.dim());
  const auto& p = product(unit_, x);
  return z_.left_unitor_inverse(SymProduct{p.object, p.inclusion, p.projection}, x);
}

Matrix Monoidal::right_unitor(const CentreObject& x) const {
  if (kind_ == Kind::Convolution) return identity(x.dim());
  const auto& p = product(x, unit_);
  return z_.right_unitor(SymProduct{p.object, p.inclusion, p.projection}, x);
}

Matrix Monoidal::right_unitor_inverse(const CentreObject& x) const {
  if (kind_ == Kind::Convolution) return identity(x.dim());
  const auto& p = product(x, unit_);
  return z_.right_unitor_inverse(SymProduct{p.object, p.inclusion, p.projection}, x);
}

Matrix Monoidal::associator(const CentreObject& x, const CentreObject& y, const CentreObject& z) const {
  const auto& xy = product(x, y);
  const auto& xy_z = product(xy.object, z);
  const auto& yz = product(y, z);
  const auto& x_yz = product(x, yz.object);
  // Flattening makes the associator of the underlying tensor product trivial.
  const Matrix up = tensor(xy.inclusion, identity(z.dim()));
  const Matrix down = tensor(identity(x.dim()), yz.projection);
  return compose({&x_yz.projection, &down, &up, &xy_z.inclusion});
}

Matrix Monoidal::braiding(const CentreObject& x, const CentreObject& y) const {
  if (kind_ == Kind::Convolution) return z_.braiding(x, y);
  const auto& xy = product(x, y);
  const auto& yx = product(y, x);
  return z_.sym_symmetry(x, y, SymProduct{xy.object, xy.inclusion, xy.projection},
                         SymProduct{yx.object, yx.inclusion, yx.projection});
}

Matrix interchange(const Monoidal& one, const Monoidal& two, const CentreObject& x, const CentreObject& x2,
                   const CentreObject& y, const CentreObject& y2) {
  const auto& p1 = one.product(x, x2);
  const auto& p2 = one.product(y, y2);
  const auto& src = two.product(p1.object, p2.object);
  const auto& q1 = two.product(x, y);
  const auto& q2 = two.product(x2, y2);
  const auto& tgt = one.product(q1.object, q2.object);

  const std::array<Index, 4> dims{x.dim(), x2.dim(), y.dim(), y2.dim()};
  const std::array<int, 4> perm{0, 2, 1, 3};
  const Matrix swap = permute_legs(dims, perm);
  const Matrix open = tensor(p1.inclusion, p2.inclusion);
  const Matrix close = tensor(q1.projection, q2.projection);
  return compose({&tgt.projection, &close, &swap, &open, &src.inclusion});
}

UnitMaps unit_maps(const Monoidal& conv, const Monoidal& sym) {
  const Centre& z = conv.centre();
  const RepCategory& cat = z.category();
  const Index n = z.sym_unit().dim();
  const double big_d = cat.global_dim();

  UnitMaps out;
  out.u0 = Matrix::Zero(1, n);
  out.v0 = Matrix::Zero(n, 1);
  out.u2 = Matrix::Zero(n * n, n);
  out.v1 = Matrix::Zero(n, n * n);
  for (int i = 0; i < cat.num_simples(); ++i) {
    const Index d = cat.dim(i);
    const Index o = z.sym_unit_offset(i);
    const double t = cat.twist(i);
    for (Index p = 0; p < d; ++p) {
      out.u0(0, o + p * d + p) = 1.0;
      out.v0(o + p * d + p, 0) = t * double(d) / big_d;
    }
    // e_p (x) e^q  ->  e_p (x) e^k (x) e_k (x) e^q, and the cap back with weight D / d_i. These are the
    // weights the unit diagrams for the interchange force; v1 u2 is then D times the identity.
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q)
        for (Index k = 0; k < d; ++k) {
          const Index big = (o + p * d + k) * n + (o + k * d + q);
          out.u2(big, o + p * d + q) = t;
          out.v1(o + p * d + q, big) = t * big_d / double(d);
        }
  }
  const auto& cc = sym.product(conv.unit(), conv.unit());
  out.u1 = cc.inclusion;
  out.v2 = cc.projection;
  return out;
}

}  // namespace bilax
