#include <ctec/oracle.hpp>

#include <ctec/error.hpp>
#include <ctec/hex.hpp>

namespace ctec::oracle {

mpz_class to_mpz(std::span<const std::uint8_t> be) {
   mpz_class v;
   if(!be.empty()) {
      mpz_import(v.get_mpz_t(), be.size(), 1, 1, 1, 0, be.data());
   }
   return v;
}

Bytes to_bytes(const mpz_class& v) {
   if(v < 0) {
      throw_error(ErrorCode::InvalidArgument, "negative integer has no octet encoding");
   }
   Bytes out((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
   if(v != 0) {
      std::size_t n = 0;
      mpz_export(out.data(), &n, 1, 1, 1, 0, v.get_mpz_t());
      out.resize(n);
   } else {
      out.clear();
   }
   return out;
}

Bytes to_bytes(const mpz_class& v, std::size_t len) {
   return pad_left(to_bytes(v), len);
}

mpz_class from_hex(std::string_view hex) {
   return to_mpz(ctec::from_hex(hex));
}

std::string to_hex(const mpz_class& v) {
   return v.get_str(16);
}

bool is_probable_prime(const mpz_class& n) {
   return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Curve::Curve(const CurveDescriptor& desc) :
      m_p(to_mpz(desc.p)),
      m_a(to_mpz(desc.a)),
      m_b(to_mpz(desc.b)),
      m_q(to_mpz(desc.q)),
      m_h(desc.h),
      m_field_bytes((mpz_sizeinbase(m_p.get_mpz_t(), 2) + 7) / 8),
      m_order_bytes((mpz_sizeinbase(m_q.get_mpz_t(), 2) + 7) / 8),
      m_g(Point::affine(to_mpz(desc.gx), to_mpz(desc.gy))) {
   if(desc.full_order) {
      m_full = Point::affine(to_mpz(desc.full_order->x), to_mpz(desc.full_order->y));
   }
   if(desc.edwards) {
      m_has_edwards = true;
      m_e = to_mpz(desc.edwards->e);
      m_d = to_mpz(desc.edwards->d);
      mpz_class inv4, inv6;
      const mpz_class four = 4, six = 6;
      if(mpz_invert(inv4.get_mpz_t(), four.get_mpz_t(), m_p.get_mpz_t()) == 0 ||
         mpz_invert(inv6.get_mpz_t(), six.get_mpz_t(), m_p.get_mpz_t()) == 0) {
         throw_error(ErrorCode::InvalidArgument, desc.name + ": 4 or 6 not invertible mod p");
      }
      m_s = mod((m_e - m_d) * inv4);
      m_t = mod((m_e + m_d) * inv6);
   }
}

mpz_class Curve::mod(const mpz_class& v) const {
   mpz_class r;
   mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m_p.get_mpz_t());
   return r;
}

mpz_class Curve::inv_mod_p(const mpz_class& x) const {
   mpz_class r;
   const mpz_class xr = mod(x);
   if(mpz_invert(r.get_mpz_t(), xr.get_mpz_t(), m_p.get_mpz_t()) == 0) {
      throw_error(ErrorCode::ZeroInverse, "oracle: no inverse mod p");
   }
   return r;
}

bool Curve::on_curve(const Point& P) const {
   if(P.infinity) {
      return true;
   }
   if(P.x < 0 || P.x >= m_p || P.y < 0 || P.y >= m_p) {
      return false;
   }
   return mod(P.y * P.y - (P.x * P.x * P.x + m_a * P.x + m_b)) == 0;
}

void Curve::check(const Point& P) const {
   if(!on_curve(P)) {
      throw_error(ErrorCode::InvalidPoint, "oracle: point not on curve");
   }
}

Point Curve::neg(const Point& P) const {
   if(P.infinity) {
      return P;
   }
   return Point::affine(P.x, mod(-P.y));
}

Point Curve::add(const Point& P, const Point& Q) const {
   if(P.infinity) {
      return Q;
   }
   if(Q.infinity) {
      return P;
   }
   mpz_class lambda;
   if(P.x == Q.x) {
      if(mod(P.y + Q.y) == 0) {
         return Point::identity();
      }
      lambda = mod((3 * P.x * P.x + m_a) * inv_mod_p(2 * P.y));
   } else {
      lambda = mod((Q.y - P.y) * inv_mod_p(Q.x - P.x));
   }
   const mpz_class x3 = mod(lambda * lambda - P.x - Q.x);
   const mpz_class y3 = mod(lambda * (P.x - x3) - P.y);
   return Point::affine(x3, y3);
}

Point Curve::mul(const mpz_class& k, const Point& P) const {
   if(k < 0) {
      throw_error(ErrorCode::InvalidArgument, "oracle: negative scalar");
   }
   check(P);
   Point acc = Point::identity();
   for(std::size_t i = mpz_sizeinbase(k.get_mpz_t(), 2); i-- > 0;) {
      acc = dbl(acc);
      if(mpz_tstbit(k.get_mpz_t(), i) != 0) {
         acc = add(acc, P);
      }
   }
   return acc;
}

std::optional<mpz_class> Curve::sqrt(const mpz_class& x) const {
   const mpz_class a = mod(x);
   if(a == 0) {
      return mpz_class(0);
   }
   if(mpz_legendre(a.get_mpz_t(), m_p.get_mpz_t()) != 1) {
      return std::nullopt;
   }
   // Tonelli-Shanks.
   mpz_class q = m_p - 1;
   unsigned long s = 0;
   while(mpz_even_p(q.get_mpz_t()) != 0) {
      q /= 2;
      ++s;
   }
   mpz_class z = 2;
   while(mpz_legendre(z.get_mpz_t(), m_p.get_mpz_t()) != -1) {
      ++z;
   }
   mpz_class c, r, t;
   mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), m_p.get_mpz_t());
   const mpz_class e = (q + 1) / 2;
   mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m_p.get_mpz_t());
   mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), m_p.get_mpz_t());
   unsigned long m = s;
   while(t != 1) {
      unsigned long i = 0;
      mpz_class tt = t;
      while(tt != 1) {
         tt = mod(tt * tt);
         ++i;
      }
      mpz_class b = c;
      for(unsigned long j = 0; j + 1 < m - i; ++j) {
         b = mod(b * b);
      }
      r = mod(r * b);
      c = mod(b * b);
      t = mod(t * c);
      m = i;
   }
   return r;
}

Point Curve::full_order_generator() const {
   if(m_h == 1) {
      throw_error(ErrorCode::Unsupported, "cofactor 1: the generator already spans the group");
   }
   if(!m_full) {
      throw_error(ErrorCode::NotFound, "no full-order generator stored");
   }
   return *m_full;
}

bool Curve::on_edwards(const EdPoint& P) const {
   const mpz_class u2 = P.u * P.u, v2 = P.v * P.v;
   return mod(m_e * u2 + v2 - 1 - m_d * u2 * v2) == 0;
}

EdPoint Curve::to_edwards(const Point& P) const {
   if(!m_has_edwards) {
      throw_error(ErrorCode::Unsupported, "curve has no Edwards form");
   }
   if(P.infinity) {
      return EdPoint{0, 1};
   }
   const mpz_class xt = mod(P.x - m_t);
   if(P.y == 0 || mod(xt + m_s) == 0) {
      throw_error(ErrorCode::ExceptionalPoint, "oracle: point outside the domain of the map");
   }
   return EdPoint{mod(xt * inv_mod_p(P.y)), mod((xt - m_s) * inv_mod_p(xt + m_s))};
}

Point Curve::from_edwards(const EdPoint& P) const {
   if(!m_has_edwards) {
      throw_error(ErrorCode::Unsupported, "curve has no Edwards form");
   }
   if(mod(P.u) == 0 && mod(P.v - 1) == 0) {
      return Point::identity();
   }
   if(mod(P.v - 1) == 0 || mod(P.u) == 0) {
      throw_error(ErrorCode::ExceptionalPoint, "oracle: point outside the domain of the map");
   }
   const mpz_class w = mod(m_s * (1 + P.v) * inv_mod_p(1 - P.v));
   return Point::affine(mod(w + m_t), mod(w * inv_mod_p(P.u)));
}

EdPoint Curve::ed_add(const EdPoint& P, const EdPoint& Q) const {
   const mpz_class k = mod(m_d * P.u * Q.u * P.v * Q.v);
   const mpz_class u = mod((P.u * Q.v + P.v * Q.u) * inv_mod_p(1 + k));
   const mpz_class v = mod((P.v * Q.v - m_e * P.u * Q.u) * inv_mod_p(1 - k));
   return EdPoint{u, v};
}

Point find_small_subgroup_point(const CurveDescriptor& desc) {
   const Curve c(desc);
   const Point G = c.full_order_generator();
   Point P = G;
   for(int i = 0; i != 64; ++i) {
      const Point S = c.mul(c.q(), P);
      if(!S.infinity) {
         return S;
      }
      P = c.add(P, G);
   }
   throw_error(ErrorCode::NotFound, desc.name + ": no small-subgroup point found");
}

}  // namespace ctec::oracle
