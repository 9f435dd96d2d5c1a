#pragma once

#include <ctec/wpoint.hpp>

namespace ctec {

/// Extended twisted Edwards point (X:Y:T:Z), T Z = X Y; identity (0:1:0:1).
struct ExtPointTE {
      FieldElement X;
      FieldElement Y;
      FieldElement T;
      FieldElement Z;
};

/// Affine Edwards point with the product t = u v cached, the form used by
/// the mixed addition and the comb tables.
struct AffinePointTE {
      FieldElement u;
      FieldElement v;
      FieldElement t;

      bool operator==(const AffinePointTE&) const = default;
};

/// e u^2 + v^2 = 1 + d u^2 v^2 together with the (s, t) constants linking it
/// to the Weierstrass model.
struct TECurve {
      enum class EKind {
         One,
         MinusOne,
         Other,
      };

      const Field* field = nullptr;
      FieldElement e;
      FieldElement d;
      FieldElement d2;  // 2d
      FieldElement s;
      FieldElement t;
      EKind kind = EKind::Other;

      /// Throws like derive_edwards() if the descriptor has no valid Edwards data.
      TECurve(const Field& f, const CurveDescriptor& desc);

      const Field& F() const { return *field; }
};

ExtPointTE te_identity(const TECurve& c);

/// Extended coordinates of an affine (u, v).
ExtPointTE te_lift(const TECurve& c, const AffinePointTE& P);

AffinePointTE te_make_affine(const TECurve& c, const FieldElement& u, const FieldElement& v);

/// Unified addition of Hisil-Wong-Carter-Dawson (2008), with the
/// 8M variant when e = -1.
ExtPointTE te_add(const TECurve& c, const ExtPointTE& P, const ExtPointTE& Q);

ExtPointTE te_add_mixed(const TECurve& c, const ExtPointTE& P, const AffinePointTE& Q);

ExtPointTE te_dbl(const TECurve& c, const ExtPointTE& P);

ExtPointTE te_neg(const TECurve& c, const ExtPointTE& P);

ExtPointTE te_cneg(const TECurve& c, const ExtPointTE& P, limb_t flag);

AffinePointTE te_cneg(const TECurve& c, const AffinePointTE& P, limb_t flag);

ExtPointTE te_select(const TECurve& c, limb_t flag, const ExtPointTE& P, const ExtPointTE& Q);

/// 1 if P is (0:1:0:1) projectively.
limb_t te_is_identity(const TECurve& c, const ExtPointTE& P);

AffinePointTE te_normalize(const TECurve& c, const ExtPointTE& P);

/// Curve equation and T Z = X Y, Z != 0.
bool te_on_curve(const TECurve& c, const ExtPointTE& P);

bool te_equal(const TECurve& c, const ExtPointTE& P, const ExtPointTE& Q);

AffinePointTE te_table_lookup(const TECurve& c, std::span<const AffinePointTE> table, std::size_t index, limb_t negate);

ExtPointTE te_table_lookup(const TECurve& c, std::span<const ExtPointTE> table, std::size_t index, limb_t negate);

/// Projective form of (x, y) -> ((x-t)/y, (x-t-s)/(x-t+s)); no inversion.
/// The identity maps to (0:1:0:1). Throws Error(ExceptionalPoint) for
/// points where the map is undefined (y = 0 or x-t+s = 0).
ExtPointTE map_w_to_te(const TECurve& c, const ProjPointW& P);

ExtPointTE map_w_to_te(const TECurve& c, const WCurve& w, const AffinePoint& P);

/// Projective form of (u, v) -> (s(1+v)/(1-v) + t, s(1+v)/((1-v)u)).
/// The identity maps to (0:*:0). Throws Error(ExceptionalPoint) for the
/// order-2 point (0, -1).
ProjPointW map_te_to_w(const TECurve& c, const ExtPointTE& P);

}  // namespace ctec
