#pragma once

#include <ctec/hex.hpp>
#include <ctec/oracle.hpp>
#include <ctec/scalarmul.hpp>

#include <random>
#include <string>
#include <vector>

namespace ctec::test {

inline oracle::Point to_oracle(const Curve& c, const AffinePoint& P) {
   const Field& F = c.field();
   if(F.is_zero(P.x) && F.is_zero(P.y)) {
      return oracle::Point::identity();
   }
   return oracle::Point::affine(oracle::to_mpz(F.encode(P.x)), oracle::to_mpz(F.encode(P.y)));
}

inline oracle::Point to_oracle(const Curve& c, const ProjPointW& P) {
   return to_oracle(c, w_normalize(c.weierstrass(), P));
}

inline AffinePoint from_oracle(const Curve& c, const oracle::Point& P) {
   if(P.infinity) {
      return AffinePoint{c.field().zero(), c.field().zero()};
   }
   const std::size_t fb = c.field().byte_length();
   return AffinePoint{c.fe(oracle::to_bytes(P.x, fb)), c.fe(oracle::to_bytes(P.y, fb))};
}

inline Scalar scalar_of(const Curve& c, const mpz_class& k) {
   return c.scalars().reduce(oracle::to_bytes(k));
}

inline mpz_class mpz_of(const Curve& c, const Scalar& k) {
   return oracle::to_mpz(c.scalars().encode(k));
}

/// Uniform-ish scalar in [1, q-1] from a seeded generator.
inline mpz_class random_scalar(std::mt19937_64& rng, const mpz_class& q) {
   Bytes buf(oracle::to_bytes(q).size() + 8);
   for(auto& b : buf) {
      b = static_cast<std::uint8_t>(rng());
   }
   return oracle::to_mpz(buf) % (q - 1) + 1;
}

inline std::vector<std::string> curve_names() {
   std::vector<std::string> out;
   for(const auto& d : bundled_database().curves()) {
      out.push_back(d.name);
   }
   return out;
}

inline Bytes bytes_of(std::string_view s) {
   return Bytes(s.begin(), s.end());
}

}  // namespace ctec::test
