#pragma once

#include <ctec/curves.hpp>

#include <gmpxx.h>

#include <optional>
#include <utility>

/// Slow reference arithmetic on GMP integers. Textbook affine formulas with
/// explicit branches; shares no code with the field and point layers.
namespace ctec::oracle {

mpz_class to_mpz(std::span<const std::uint8_t> be);

/// Fixed-width big-endian; throws Error(BadLength) if v does not fit.
Bytes to_bytes(const mpz_class& v, std::size_t len);

/// Minimal big-endian (zero encodes as the empty string).
Bytes to_bytes(const mpz_class& v);

mpz_class from_hex(std::string_view hex);

std::string to_hex(const mpz_class& v);

bool is_probable_prime(const mpz_class& n);

struct Point {
      mpz_class x;
      mpz_class y;
      bool infinity = true;

      static Point identity() { return Point{}; }

      static Point affine(mpz_class x, mpz_class y) { return Point{std::move(x), std::move(y), false}; }

      bool operator==(const Point& o) const {
         if(infinity || o.infinity) {
            return infinity == o.infinity;
         }
         return x == o.x && y == o.y;
      }
};

/// Edwards affine coordinates (u, v).
struct EdPoint {
      mpz_class u;
      mpz_class v;

      bool operator==(const EdPoint&) const = default;
};

class Curve {
   public:
      explicit Curve(const CurveDescriptor& desc);

      const mpz_class& p() const { return m_p; }

      const mpz_class& a() const { return m_a; }

      const mpz_class& b() const { return m_b; }

      const mpz_class& q() const { return m_q; }

      unsigned h() const { return m_h; }

      std::size_t field_bytes() const { return m_field_bytes; }

      std::size_t order_bytes() const { return m_order_bytes; }

      Point generator() const { return m_g; }

      bool on_curve(const Point& P) const;

      /// Throw Error(InvalidPoint) unless P is the identity or on the curve.
      void check(const Point& P) const;

      Point neg(const Point& P) const;

      Point add(const Point& P, const Point& Q) const;

      Point dbl(const Point& P) const { return add(P, P); }

      /// [k]P by left-to-right double-and-add; k >= 0.
      Point mul(const mpz_class& k, const Point& P) const;

      mpz_class inv_mod_p(const mpz_class& x) const;

      /// Square root mod p, if one exists.
      std::optional<mpz_class> sqrt(const mpz_class& x) const;

      /// Stored generator of the whole group. Throws Error(Unsupported) for
      /// h = 1 and Error(NotFound) if the database has none.
      Point full_order_generator() const;

      bool has_edwards() const { return m_has_edwards; }

      const mpz_class& e() const { return m_e; }

      const mpz_class& d() const { return m_d; }

      const mpz_class& s() const { return m_s; }

      const mpz_class& t() const { return m_t; }

      bool on_edwards(const EdPoint& P) const;

      /// (x, y) -> ((x-t)/y, (x-t-s)/(x-t+s)). Identity goes to (0, 1).
      /// Throws Error(ExceptionalPoint) where the map is undefined.
      EdPoint to_edwards(const Point& P) const;

      /// (u, v) -> (s(1+v)/(1-v) + t, s(1+v)/((1-v)u)). (0, 1) goes to the
      /// identity; throws Error(ExceptionalPoint) elsewhere it is undefined.
      Point from_edwards(const EdPoint& P) const;

      /// Edwards group law, textbook affine.
      EdPoint ed_add(const EdPoint& P, const EdPoint& Q) const;

   private:
      mpz_class mod(const mpz_class& v) const;

      mpz_class m_p, m_a, m_b, m_q;
      unsigned m_h = 1;
      std::size_t m_field_bytes = 0;
      std::size_t m_order_bytes = 0;
      Point m_g;
      std::optional<Point> m_full;
      bool m_has_edwards = false;
      mpz_class m_e, m_d, m_s, m_t;
};

/// A non-identity S with [h]S = identity, found as [q]G for the stored
/// full-order generator and small multiples of it.
/// Throws Error(Unsupported) for h = 1 and Error(NotFound) otherwise.
Point find_small_subgroup_point(const CurveDescriptor& desc);

}  // namespace ctec::oracle
