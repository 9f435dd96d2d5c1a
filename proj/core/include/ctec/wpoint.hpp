#pragma once

#include <ctec/curves.hpp>
#include <ctec/fp.hpp>

namespace ctec {

/// Affine point; (0, 0) stands for the identity.
struct AffinePoint {
      FieldElement x;
      FieldElement y;

      bool operator==(const AffinePoint&) const = default;
};

/// Homogeneous projective point on y^2 = x^3 + ax + b; identity (0:1:0).
struct ProjPointW {
      FieldElement X;
      FieldElement Y;
      FieldElement Z;
};

/// Weierstrass coefficients in Montgomery form plus the formula family.
struct WCurve {
      const Field* field = nullptr;
      CoefficientClass cls = CoefficientClass::GeneralA;
      FieldElement a;
      FieldElement b;
      FieldElement b3;  // 3b

      WCurve(const Field& f, CoefficientClass c, std::span<const std::uint8_t> a_be, std::span<const std::uint8_t> b_be);

      const Field& F() const { return *field; }
};

ProjPointW w_identity(const WCurve& c);

/// (x : y : 1), or the identity for (0, 0). Constant time.
ProjPointW w_lift(const WCurve& c, const AffinePoint& P);

/// Complete addition (Renes-Costello-Batina), dispatched on the class.
ProjPointW w_add(const WCurve& c, const ProjPointW& P, const ProjPointW& Q);

/// Complete mixed addition. Q = (0, 0) yields P via a final conditional copy.
ProjPointW w_add_mixed(const WCurve& c, const ProjPointW& P, const AffinePoint& Q);

ProjPointW w_dbl(const WCurve& c, const ProjPointW& P);

ProjPointW w_neg(const WCurve& c, const ProjPointW& P);

AffinePoint w_neg(const WCurve& c, const AffinePoint& P);

/// flag ? -P : P.
ProjPointW w_cneg(const WCurve& c, const ProjPointW& P, limb_t flag);

AffinePoint w_cneg(const WCurve& c, const AffinePoint& P, limb_t flag);

/// flag ? P : Q.
ProjPointW w_select(const WCurve& c, limb_t flag, const ProjPointW& P, const ProjPointW& Q);

/// 1 if Z = 0.
limb_t w_is_identity(const WCurve& c, const ProjPointW& P);

/// (X/Z, Y/Z) with one inversion; the identity goes to (0, 0).
AffinePoint w_normalize(const WCurve& c, const ProjPointW& P);

/// Z Y^2 = X^3 + a X Z^2 + b Z^3, excluding (0:0:0).
bool w_on_curve(const WCurve& c, const ProjPointW& P);

/// On the curve or (0, 0).
bool w_on_curve(const WCurve& c, const AffinePoint& P);

/// Projective equality (variable time, for tests and public values).
bool w_equal(const WCurve& c, const ProjPointW& P, const ProjPointW& Q);

/// table[index], optionally negated, reading every entry.
AffinePoint w_table_lookup(const WCurve& c, std::span<const AffinePoint> table, std::size_t index, limb_t negate);

ProjPointW w_table_lookup(const WCurve& c, std::span<const ProjPointW> table, std::size_t index, limb_t negate);

}  // namespace ctec
